"""Ground-truth effective resistances through the Laplacian pseudoinverse.

For a connected network on ``n`` vertices the pseudoinverse is obtained from
the rank-completed matrix::

    L+ = (L + J/n)^-1 - J/n

with ``J`` the all-ones matrix, and ``r(p, q) = L+[p,p] + L+[q,q] - 2 L+[p,q]``.
Everything here is float64; exact values live on the closed-form path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .network import ResistorNetwork, build_laplacian, is_connected

__all__ = [
    "DisconnectedNetworkError",
    "PseudoInverse",
    "pseudo_inverse",
    "effective_resistance",
    "resistance_matrix",
    "kirchhoff_index",
]


class DisconnectedNetworkError(ValueError):
    """Effective resistance is undefined between components."""


@dataclass(frozen=True)
class PseudoInverse:
    matrix: np.ndarray
    backend: str = "lapack-dense"

    def resistance(self, p: int, q: int) -> float:
        if p == q:
            return 0.0
        m = self.matrix
        return float(m[p, p] + m[q, q] - 2.0 * m[p, q])

    def resistances(self) -> np.ndarray:
        d = np.diag(self.matrix)
        r = d[:, None] + d[None, :] - 2.0 * self.matrix
        r = 0.5 * (r + r.T)
        np.fill_diagonal(r, 0.0)
        return r


def _require_connected(net: ResistorNetwork) -> None:
    if not is_connected(net):
        raise DisconnectedNetworkError("network is disconnected; effective resistance undefined")


def pseudo_inverse(lap: np.ndarray) -> PseudoInverse:
    """Moore-Penrose inverse of a connected graph's Laplacian by rank completion."""
    lap = np.asarray(lap, dtype=float)
    n = lap.shape[0]
    if n == 0:
        return PseudoInverse(np.zeros((0, 0)))
    off = lap != 0
    np.fill_diagonal(off, False)
    ncomp, _ = connected_components(csr_matrix(off), directed=False)
    if ncomp != 1:
        raise DisconnectedNetworkError(f"Laplacian has {ncomp} zero eigenvalues (graph has {ncomp} components)")
    shift = np.full((n, n), 1.0 / n)
    inv = scipy.linalg.solve(lap + shift, np.eye(n), assume_a="sym")
    m = inv - shift
    return PseudoInverse(0.5 * (m + m.T))


def _pinv_of(net: ResistorNetwork) -> PseudoInverse:
    _require_connected(net)
    return pseudo_inverse(build_laplacian(net))


def effective_resistance(net: ResistorNetwork, p: int, q: int) -> float:
    n = net.vertex_count
    for v in (p, q):
        if not 0 <= v < n:
            raise IndexError(f"vertex {v} out of range for {n} vertices")
    if p == q:
        return 0.0
    return _pinv_of(net).resistance(p, q)


def resistance_matrix(net: ResistorNetwork) -> np.ndarray:
    return _pinv_of(net).resistances()


def kirchhoff_index(net: ResistorNetwork) -> float:
    """Sum of effective resistances over unordered vertex pairs."""
    r = resistance_matrix(net)
    return float(np.triu(r, 1).sum())
