"""Largest Laplacian eigenvalue by power iteration, and the spectral lower bound
``gamma_o(G) >= ceil(n / lambda * ceil((delta + 1) / 2))``."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, InconsistencyError, InvalidInput
from .graph import Graph

TOLERANCE = 1e-9
MAX_ITERATIONS = 100_000
SNAP = 1e-6

_SEED = 20240611


@dataclass(frozen=True)
class SpectralResult:
    lam: float
    residual: float
    iterations: int

    def to_dict(self) -> dict:
        return {"lambda": self.lam, "residual": self.residual, "iterations": self.iterations}


def laplacian(g: Graph) -> np.ndarray:
    lap = np.zeros((g.n, g.n))
    for u, v in g.edges:
        lap[u, v] = lap[v, u] = -1.0
    lap[np.diag_indices(g.n)] = g.degrees()
    return lap


def _seed(n: int) -> np.ndarray:
    # Gaussian start from a fixed PCG64 stream: reproducible, and not orthogonal
    # to the structured eigenvectors of symmetric graphs (a golden-ratio ramp is,
    # e.g. to the parity vector of Q_3)
    return np.random.default_rng(_SEED).standard_normal(n)


def laplacian_spectral_radius(g: Graph, *, tol: float = TOLERANCE,
                              max_iter: int = MAX_ITERATIONS) -> SpectralResult:
    """Power iteration on ``L = D - A`` with the constant vector projected out.

    ``L`` is positive semidefinite, so the dominant eigenvalue is the largest
    one.  Stops when ``||Lx - lambda x|| / ||x|| <= tol * max(lambda, 1)``.
    """
    if g.n < 1:
        raise InvalidInput("graph must have at least one vertex")
    if g.m == 0:
        return SpectralResult(0.0, 0.0, 0)
    lap = laplacian(g)
    x = _seed(g.n)
    x -= x.mean()
    x /= np.linalg.norm(x)
    lam = residual = 0.0
    for it in range(1, max_iter + 1):
        y = lap @ x
        y -= y.mean()
        lam = float(x @ y)
        residual = float(np.linalg.norm(y - lam * x))
        if residual <= tol * max(lam, 1.0):
            break
        x = y / np.linalg.norm(y)
    else:
        raise ConvergenceError(f"power iteration did not converge in {max_iter} steps",
                               lam, residual)
    delta = g.max_degree
    if not (delta + 1 - SNAP <= lam <= 2 * delta + SNAP):
        raise InconsistencyError(f"lambda={lam} outside [{delta + 1}, {2 * delta}]")
    return SpectralResult(lam, residual, it)


def snap_ceil(value: float, eps: float = SNAP) -> int:
    """Ceiling that treats values within ``eps`` of an integer as that integer."""
    nearest = round(value)
    if abs(value - nearest) <= eps:
        return int(nearest)
    return math.ceil(value)


def spectral_lower_bound(g: Graph) -> int:
    if g.n < 2 or not g.is_connected():
        raise InvalidInput("spectral bound needs a connected graph with n >= 2")
    lam = laplacian_spectral_radius(g).lam
    need = (g.min_degree + 2) // 2
    return snap_ceil(g.n / lam * need)
