"""Spectrum of the normalized adjacency matrix and the expansion parameter."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import Graph, GraphError

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class SpectralProfile:
    """Eigenvalues (descending) of D^{-1/2} A D^{-1/2} plus derived scalars."""

    eigenvalues: np.ndarray
    sigma: float
    gamma: float
    tolerance: float
    disconnected: bool = field(default=False)

    @property
    def lambda2(self) -> float:
        return float(self.eigenvalues[1])

    @property
    def lambda_min(self) -> float:
        return float(self.eigenvalues[-1])


def normalized_adjacency(g: Graph) -> np.ndarray:
    if g.min_degree < 1:
        raise GraphError("graph has an isolated node; normalized adjacency "
                         "is undefined")
    a = np.zeros((g.n, g.n))
    for u in range(g.n):
        a[u, list(g.neighbors[u])] = 1.0
    inv_sqrt_d = 1.0 / np.sqrt(np.asarray(g.degrees, dtype=float))
    return a * np.outer(inv_sqrt_d, inv_sqrt_d)


def normalized_spectrum(g: Graph, tol: float = DEFAULT_TOL) -> SpectralProfile:
    """Full symmetric eigendecomposition; desk scale (n up to a few thousand)."""
    if g.n == 1:
        raise GraphError("single-node graph has an isolated node")
    m = normalized_adjacency(g)
    w = np.linalg.eigvalsh(m)[::-1]  # descending
    sig = float(max(abs(w[1]), abs(w[-1])))
    gam = g.min_degree / g.max_degree
    return SpectralProfile(eigenvalues=w, sigma=sig, gamma=gam, tolerance=tol,
                           disconnected=not g.is_connected())


def sigma(g: Graph) -> float:
    return normalized_spectrum(g).sigma


def gamma(g: Graph) -> float:
    if g.max_degree == 0:
        raise GraphError("gamma undefined for an edgeless graph")
    return g.min_degree / g.max_degree
