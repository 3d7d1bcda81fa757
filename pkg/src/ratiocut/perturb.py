"""Subspace perturbation analysis for the Laplacian eigenmap.

Splits a partitioned graph into its intra-cluster part and the cross-cluster
remainder, aligns the computed eigenmap with the ideal block-indicator
embedding by an orthogonal Procrustes rotation, and evaluates the
two-to-infinity error bound

    ||U V~ - U_iso||_{2,inf} <= 32 sqrt(c) (r^2 + r ln n) / sqrt(n)

which holds whenever the perturbation/eigengap ratio r is at most
1/(16 (1+c) ln n), with c the unbalanceness max_i n/|V_i|.

Also provides the l-infinity eigengap estimates: the spectral lower bound
lambda2/(2 ln n), the 4M/D upper bound for unweighted connected graphs, and
the exact infimum computed by a family of small linear programs.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .certify import boundary_degrees, intra_connectivities
from .eigen import lambda2, sym_eig
from .errors import DegenerateAlignmentWarning, HypothesisViolation, InputError, SizeError
from .graphs import (
    Partition,
    WeightedGraph,
    diameter,
    induced_subgraph,
    is_connected,
    laplacian,
)
from .simplex import OPTIMAL, solve_lp
from .tolerances import DEFAULT as TOL

GAP_EXACT_MAX_N = 200


@dataclass(frozen=True)
class IsoDelta:
    """Intra-cluster weights plus the Laplacian of the cross-cluster rest.

    ``w_iso`` keeps only edges inside blocks (block-diagonal weight matrix);
    ``l_delta`` is the Laplacian of everything removed, so the full graph
    Laplacian equals laplacian(w_iso) + l_delta.
    """

    w_iso: WeightedGraph
    l_delta: np.ndarray

    @property
    def w_delta(self) -> np.ndarray:
        deg = np.diag(self.l_delta).copy()
        return np.diag(deg) - self.l_delta


def split_iso_delta(g: WeightedGraph, p: Partition) -> IsoDelta:
    """Decompose ``g`` into intra-block weights and the cross-block Laplacian."""
    same_block = p.labels[:, None] == p.labels[None, :]
    w_iso = np.where(same_block, g.weights, 0.0)
    w_delta = g.weights - w_iso
    l_delta = np.diag(w_delta.sum(axis=1)) - w_delta
    return IsoDelta(w_iso=WeightedGraph(w_iso), l_delta=l_delta)


def canonical_uiso(p: Partition) -> np.ndarray:
    """Ideal embedding: column j is the indicator of block j over sqrt(size)."""
    sizes = p.sizes()
    u = np.zeros((len(p.labels), p.k))
    u[np.arange(len(p.labels)), p.labels] = 1.0 / np.sqrt(sizes[p.labels])
    return u


def two_to_inf_norm(m) -> float:
    """Largest Euclidean row norm."""
    m = np.asarray(m, dtype=float)
    if m.size == 0:
        return 0.0
    return float(np.sqrt((m * m).sum(axis=1)).max())


def _check_orthonormal(u: np.ndarray, name: str) -> None:
    gram = u.T @ u
    if np.max(np.abs(gram - np.eye(u.shape[1]))) > 1e-6:
        raise InputError(f"{name} does not have orthonormal columns")


def procrustes_align(u: np.ndarray, u_iso: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Best orthogonal rotation of ``u`` onto ``u_iso`` (Frobenius sense).

    Returns (v_tilde, aligned) with aligned = u @ v_tilde, where v_tilde is
    the product of the singular-vector factors of u.T @ u_iso. Warns when
    the cross-product is nearly rank-deficient (subspaces close to
    orthogonal), in which case the rotation is still returned but barely
    constrained in the deficient directions.
    """
    u = np.asarray(u, dtype=float)
    u_iso = np.asarray(u_iso, dtype=float)
    if u.shape != u_iso.shape:
        raise InputError(f"shape mismatch: {u.shape} vs {u_iso.shape}")
    if u.ndim != 2 or u.shape[0] < u.shape[1]:
        raise InputError("expected tall matrices with orthonormal columns")
    _check_orthonormal(u, "first factor")
    _check_orthonormal(u_iso, "second factor")
    v1, sigma, v2t = np.linalg.svd(u.T @ u_iso)
    if sigma.size and sigma.min() < 1e-8:
        warnings.warn(
            "subspaces are nearly orthogonal; alignment is ill-determined",
            DegenerateAlignmentWarning,
        )
    v_tilde = v1 @ v2t
    return v_tilde, u @ v_tilde


def two_to_inf_error(u: np.ndarray, u_iso: np.ndarray) -> float:
    """Worst per-row displacement of the aligned embedding from the ideal one."""
    _, aligned = procrustes_align(u, u_iso)
    return two_to_inf_norm(aligned - u_iso)


@dataclass(frozen=True)
class PerturbationReport:
    """Quantities of the eigenmap perturbation theorem for one instance.

    ``bound`` is None when the precondition on r fails (the theorem is
    silent there); ``measured`` is always filled so the two can be compared
    when both exist.
    """

    c: float
    r: float
    precondition_ok: bool
    bound: float | None
    measured: float
    gap_lower: float
    mu: float

    def to_dict(self) -> dict:
        return {
            "c": self.c,
            "r": self.r,
            "precondition_ok": self.precondition_ok,
            "bound": self.bound,
            "measured": self.measured,
            "gap_lower": self.gap_lower,
            "mu": self.mu,
        }


def theoretical_bound(g: WeightedGraph, p: Partition) -> PerturbationReport:
    """Evaluate the two-to-infinity theorem on a partitioned graph.

    Computes the unbalanceness c, the perturbation/eigengap ratio r, the
    theoretical bound when r is small enough, and the measured aligned
    error of the k-dimensional eigenmap against the block indicators.

    Raises HypothesisViolation when a block has fewer than 3 vertices (the
    theorem assumes |V_i| >= 3) or when the spectral gap between the k-th
    and (k+1)-th eigenvalue is numerically zero, leaving the eigenmap
    subspace undefined.
    """
    n = g.n
    if n < 3:
        raise HypothesisViolation("theorem needs at least 3 vertices")
    sizes = p.sizes()
    if sizes.min() < 3:
        raise HypothesisViolation(
            f"every block must have at least 3 vertices, smallest has {sizes.min()}"
        )

    c = float(n / sizes.min())
    d_delta = boundary_degrees(g, p)
    lam = intra_connectivities(g, p)
    max_d = float(d_delta.max())
    min_l = float(lam.min())
    log_n = math.log(n)

    if min_l <= TOL.zero_eigenvalue:
        r = math.inf
        precondition_ok = False
    else:
        r = max_d / min_l
        precondition_ok = r <= 1.0 / (16.0 * (1.0 + c) * log_n)

    values, vectors = sym_eig(laplacian(g))
    k = p.k
    if k < n and values[k] - values[k - 1] < 1e-9:
        raise HypothesisViolation("eigengap at k is numerically zero")
    u = vectors[:, :k]
    measured = two_to_inf_error(u, canonical_uiso(p))

    bound = None
    if precondition_ok:
        bound = 32.0 * math.sqrt(c) * (r * r + r * log_n) / math.sqrt(n)
    gap_lower = min_l / (2.0 * log_n)
    return PerturbationReport(
        c=c,
        r=r,
        precondition_ok=precondition_ok,
        bound=bound,
        measured=measured,
        gap_lower=gap_lower,
        mu=math.sqrt(c),
    )


def gap_lower_bound(g: WeightedGraph) -> float:
    """Spectral lower bound lambda2/(2 ln n) on the l-infinity gap."""
    if g.n < 3:
        raise InputError("lower bound needs at least 3 vertices")
    values, _ = sym_eig(laplacian(g))
    return float(values[1]) / (2.0 * math.log(g.n))


def gap_lower_per_block(g: WeightedGraph, p: Partition) -> np.ndarray:
    """Per-block variant lambda2(L_i)/(2 ln |V_i|), a sharper diagnostic.

    Singleton blocks carry no constraint and report +inf.
    """
    out = np.empty(p.k)
    for j, members in enumerate(p.blocks()):
        if len(members) < 2:
            out[j] = math.inf
        else:
            out[j] = lambda2(induced_subgraph(g, members)) / (2.0 * math.log(len(members)))
    return out


def gap_upper_bound_unweighted(g: WeightedGraph) -> float:
    """Upper bound 4 * max_degree / diameter, valid for unweighted connected graphs."""
    if not g.is_unweighted():
        raise InputError("upper bound requires an unweighted graph")
    if not is_connected(g):
        raise InputError("upper bound requires a connected graph")
    return 4.0 * float(g.degrees().max()) / diameter(g)


def _gap_lp(l: np.ndarray, i: int) -> float:
    """Exact min of ||Lx||_inf over x perp 1 with x_i = 1, |x_j| <= 1.

    Shifted variables y_j = x_j + 1 in [0, 2] for j != i keep the program in
    nonnegative standard form; L @ 1 = 0 turns the pinned column into the
    constant 2 L[:, i].
    """
    n = l.shape[0]
    others = np.delete(np.arange(n), i)
    lj = l[:, others]
    li = l[:, i]

    nvar = n  # n-1 shifted coordinates plus the bound variable t
    c = np.zeros(nvar)
    c[-1] = 1.0

    a_ub = np.zeros((2 * n + (n - 1), nvar))
    b_ub = np.zeros(2 * n + (n - 1))
    a_ub[:n, :-1] = lj
    a_ub[:n, -1] = -1.0
    b_ub[:n] = -2.0 * li
    a_ub[n : 2 * n, :-1] = -lj
    a_ub[n : 2 * n, -1] = -1.0
    b_ub[n : 2 * n] = 2.0 * li
    a_ub[2 * n :, :-1] = np.eye(n - 1)
    b_ub[2 * n :] = 2.0

    a_eq = np.ones((1, nvar))
    a_eq[0, -1] = 0.0
    b_eq = np.array([float(n - 2)])

    res = solve_lp(c, a_ub, b_ub, a_eq, b_eq)
    if res.status != OPTIMAL:
        raise RuntimeError(f"gap LP unexpectedly {res.status} at pinned coordinate {i}")
    return float(res.objective)


def gap_exact(g: WeightedGraph) -> float:
    """Exact l-infinity gap inf_{x perp 1} ||Lx||_inf / ||x||_inf.

    Solved by n linear programs, one per coordinate pinned at the sup-norm
    value 1 (pinning at -1 is covered by sign symmetry). Capped at n <= 200
    since the dense simplex underneath is a desk-scale tool.
    """
    if g.n < 2:
        raise InputError("gap needs at least 2 vertices")
    if g.n > GAP_EXACT_MAX_N:
        raise SizeError(f"exact gap is capped at n <= {GAP_EXACT_MAX_N}, got {g.n}")
    l = laplacian(g)
    return min(_gap_lp(l, i) for i in range(g.n))
