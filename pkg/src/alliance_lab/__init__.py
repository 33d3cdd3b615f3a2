"""Exact computation, bounds and constructions for global offensive alliances
in Cartesian products of graphs."""

from __future__ import annotations

__version__ = "0.1.0"

from .errors import (AllianceLabError, BudgetExceeded, ConvergenceError,
                     InconsistencyError, InvalidInput)
from .graph import (FamilySpec, Graph, ProductGraph, ProductSpec, VertexSet, build_family,
                    cartesian_product, parse_edge_list, parse_family, serialize_edge_list)
from .verify import (Certificate, check_partition, check_square_lemma, is_dominating_set,
                     is_efficient_dominating_set, is_global_offensive_alliance,
                     is_global_strong_offensive_alliance)
from .exact import (Budget, SolveResult, bipartite_number, domination_number,
                    find_efficient_dominating_set, global_offensive_alliance_number,
                    independence_number, radius, star_characterization)
from .spectral import laplacian_spectral_radius, spectral_lower_bound
from .formulas import BoundResult, applicable_bounds, bound_envelope, closed_formula
from .constructions import Construction, cylinder_goa, grid_goa, product_partition_goa
from .conjecture import SweepConfig, VizingReport, check_vizing_like, random_graph, sweep
