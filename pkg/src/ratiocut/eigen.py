"""Dense symmetric eigendecomposition (cyclic Jacobi) and the Laplacian eigenmap.

The solver is a row-cyclic Jacobi iteration: rotations are applied in a fixed
pivot order, convergence is declared when the off-diagonal Frobenius mass
drops below ``1e-12`` of the input norm, and eigenvector signs follow a fixed
convention (largest-magnitude entry positive, ties broken by lowest index).
Output is therefore bit-reproducible for a fixed input on a fixed build.

The sweep kernel is JIT-compiled with numba when available; otherwise a
vectorized numpy twin with the same pivot order and rotation formulas is used.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .graphs import WeightedGraph, laplacian
from .tolerances import DEFAULT as TOL

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    _HAVE_NUMBA = False


def _sweep_python(a, vt):
    """One row-cyclic Jacobi sweep over ``a`` (symmetric, modified in place).

    ``vt`` accumulates the transposed eigenvector matrix: rows of ``vt`` are
    the eigenvector candidates, which keeps every update contiguous.
    """
    n = a.shape[0]
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            if apq == 0.0:
                continue
            app = a[p, p]
            aqq = a[q, q]
            tau = (aqq - app) / (2.0 * apq)
            if tau >= 0.0:
                t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
            else:
                t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
            c = 1.0 / math.sqrt(1.0 + t * t)
            s = t * c
            for i in range(n):
                api = a[p, i]
                aqi = a[q, i]
                a[p, i] = c * api - s * aqi
                a[q, i] = s * api + c * aqi
            for i in range(n):
                a[i, p] = a[p, i]
                a[i, q] = a[q, i]
            a[p, p] = app - t * apq
            a[q, q] = aqq + t * apq
            a[p, q] = 0.0
            a[q, p] = 0.0
            for i in range(n):
                vpi = vt[p, i]
                vqi = vt[q, i]
                vt[p, i] = c * vpi - s * vqi
                vt[q, i] = s * vpi + c * vqi


def _sweep_numpy(a, vt):
    # same pivot order and rotation formulas as _sweep_python, but with the
    # three inner loops replaced by vectorized row operations
    n = a.shape[0]
    for p in range(n - 1):
        for q in range(p + 1, n):
            apq = a[p, q]
            if apq == 0.0:
                continue
            app = a[p, p]
            aqq = a[q, q]
            tau = (aqq - app) / (2.0 * apq)
            if tau >= 0.0:
                t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
            else:
                t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
            c = 1.0 / math.sqrt(1.0 + t * t)
            s = t * c
            row_p = a[p, :].copy()
            row_q = a[q, :].copy()
            a[p, :] = c * row_p - s * row_q
            a[q, :] = s * row_p + c * row_q
            a[:, p] = a[p, :]
            a[:, q] = a[q, :]
            a[p, p] = app - t * apq
            a[q, q] = aqq + t * apq
            a[p, q] = 0.0
            a[q, p] = 0.0
            row_p = vt[p, :].copy()
            row_q = vt[q, :].copy()
            vt[p, :] = c * row_p - s * row_q
            vt[q, :] = s * row_p + c * row_q


if _HAVE_NUMBA:
    _sweep_fast = njit(cache=True)(_sweep_python)
else:  # pragma: no cover
    _sweep_fast = _sweep_numpy


def _off_diagonal_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def _jacobi(a: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
    """Run Jacobi sweeps until convergence; returns (diag, vt, sweeps)."""
    n = a.shape[0]
    vt = np.eye(n)
    target = TOL.jacobi_off * np.linalg.norm(a)
    sweeps = 0
    while sweeps < TOL.jacobi_max_sweeps:
        if _off_diagonal_norm(a) <= target:
            break
        _sweep_fast(a, vt)
        sweeps += 1
    else:
        warnings.warn(
            f"Jacobi iteration did not converge in {TOL.jacobi_max_sweeps} sweeps",
            RuntimeWarning,
        )
    return np.diag(a).copy(), vt, sweeps


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    """Flip columns so the largest-magnitude entry (lowest index on ties) is positive."""
    lead = np.argmax(np.abs(vectors), axis=0)
    signs = np.where(vectors[lead, np.arange(vectors.shape[1])] < 0.0, -1.0, 1.0)
    return vectors * signs


def sym_eig(a) -> tuple[np.ndarray, np.ndarray]:
    """Full eigendecomposition of a symmetric matrix.

    Parameters
    ----------
    a : (n, n) array_like
        Symmetric up to ``1e-10``; symmetrized exactly before iterating.

    Returns
    -------
    values : (n,) ndarray
        Eigenvalues in ascending order (stable order on ties).
    vectors : (n, n) ndarray
        Orthonormal eigenvectors as columns, deterministic signs.
    """
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError(f"expected a square matrix, got shape {a.shape}")
    if np.max(np.abs(a - a.T), initial=0.0) > TOL.symmetry:
        raise InputError("matrix is not symmetric")
    a = 0.5 * (a + a.T)
    diag, vt, _ = _jacobi(a)
    order = np.argsort(diag, kind="stable")
    values = diag[order]
    vectors = _fix_signs(vt[order].T.copy())
    return values, vectors


@dataclass(frozen=True)
class Eigenmap:
    """Columns of ``U`` span the invariant subspace of the k smallest eigenvalues.

    Row ``i`` of ``U`` is the k-dimensional spectral embedding of vertex ``i``.
    """

    U: np.ndarray
    values: np.ndarray

    @property
    def n(self) -> int:
        return self.U.shape[0]

    @property
    def k(self) -> int:
        return self.U.shape[1]


def eigenmap(g: WeightedGraph, k: int) -> Eigenmap:
    """Embedding by the eigenvectors of the k smallest Laplacian eigenvalues."""
    if not 1 <= k <= g.n:
        raise InputError(f"k must be in [1, {g.n}], got {k}")
    values, vectors = sym_eig(laplacian(g))
    return Eigenmap(U=vectors[:, :k], values=values[:k])


def lambda2(g: WeightedGraph) -> float:
    """Algebraic connectivity: second-smallest Laplacian eigenvalue.

    Zero (within tolerance) exactly when the graph is disconnected.
    """
    if g.n < 2:
        raise InputError("algebraic connectivity needs at least 2 vertices")
    values, _ = sym_eig(laplacian(g))
    return float(values[1])


def fiedler(g: WeightedGraph) -> np.ndarray:
    """Unit-norm eigenvector of the second-smallest Laplacian eigenvalue."""
    if g.n < 2:
        raise InputError("Fiedler vector needs at least 2 vertices")
    _, vectors = sym_eig(laplacian(g))
    return vectors[:, 1]
