from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from alliance_lab import exact, spectral
from alliance_lab.errors import ConvergenceError, InvalidInput
from alliance_lab.graph import Graph, build_family, parse_family

import oracles


def fam(expr: str) -> Graph:
    return build_family(parse_family(expr))


@pytest.mark.parametrize("name, lam", [("K4", 4.0), ("Q3", 6.0), ("K2", 2.0),
                                       ("C4", 4.0), ("S4", 5.0)])
def test_known_spectral_radii(name, lam):
    assert spectral.laplacian_spectral_radius(fam(name)).lam == pytest.approx(lam, abs=1e-6)


def test_single_vertex():
    assert spectral.laplacian_spectral_radius(Graph(1)).lam == 0.0


@pytest.mark.parametrize("name, bound", [("Q3", 3), ("K4xK4", 8), ("K2", 1)])
def test_lower_bound_examples(name, bound):
    assert spectral.spectral_lower_bound(fam(name)) == bound


def test_lower_bound_needs_connected():
    with pytest.raises(InvalidInput):
        spectral.spectral_lower_bound(Graph(4, [(0, 1), (2, 3)]))


def test_iteration_cap_reports_estimate():
    with pytest.raises(ConvergenceError) as exc:
        spectral.laplacian_spectral_radius(fam("P7"), max_iter=2)
    assert exc.value.estimate > 0 and exc.value.residual > 0


def test_snap_ceil():
    assert spectral.snap_ceil(7.9999999) == 8
    assert spectral.snap_ceil(8.0000001) == 8
    assert spectral.snap_ceil(8.01) == 9
    assert spectral.snap_ceil(3.0) == 3


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 14), st.floats(0.05, 0.9), st.integers(0, 10**6))
def test_power_iteration_matches_eigvalsh(n, p, seed):
    g = oracles.random_connected(random.Random(seed), n, p)
    res = spectral.laplacian_spectral_radius(g)
    assert res.lam == pytest.approx(oracles.laplacian_max(g), abs=1e-6)
    assert g.max_degree + 1 - 1e-6 <= res.lam <= 2 * g.max_degree + 1e-6


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 11), st.floats(0.1, 0.8), st.integers(0, 10**6))
def test_lower_bound_below_exact(n, p, seed):
    g = oracles.random_connected(random.Random(seed), n, p)
    assert spectral.spectral_lower_bound(g) <= exact.global_offensive_alliance_number(g).value


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_hypercube_radius(k):
    assert spectral.laplacian_spectral_radius(fam(f"Q{k}")).lam == pytest.approx(2 * k, abs=1e-6)
