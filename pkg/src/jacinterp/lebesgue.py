"""Lebesgue functions, Lebesgue constants and sup-norms of Lagrange bases."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .barycentric import NODE_TOL, basis_matrix
from .errors import DomainError, PreconditionError
from .pointsystems import NodeSet

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class MaximizationResult:
    value: float
    argmax: float
    refined: bool


def lebesgue_function(nodeset: NodeSet, x):
    """lambda_n(x) = sum_k |l_k(x)|."""
    vals = np.abs(basis_matrix(nodeset, x)).sum(axis=1)
    return float(vals[0]) if np.ndim(x) == 0 else vals.reshape(np.shape(x))


def coarse_grid(nodeset: NodeSet, per_gap: int = 10):
    """Breakpoints {-1, nodes, 1} plus ``per_gap`` interior points per gap.

    Returns (grid, gap_index, breakpoints); gap_index[i] is the gap whose
    interior holds grid[i], or -1 for breakpoints.
    """
    b = np.unique(np.concatenate([[-1.0], nodeset.nodes, [1.0]]))
    frac = np.arange(1, per_gap + 1) / (per_gap + 1.0)
    inner = b[:-1, None] + np.diff(b)[:, None] * frac[None, :]
    grid = np.concatenate([b, inner.ravel()])
    gap = np.concatenate([np.full(b.size, -1), np.repeat(np.arange(b.size - 1), per_gap)])
    order = np.argsort(grid, kind="stable")
    return grid[order], gap[order], b


def golden_max(f, lo, hi, tol: float = 1e-12, maxiter: int = 200):
    """Vectorised golden-section maximisation of f on the intervals [lo, hi].

    ``f`` maps an array of abscissae (same shape as lo) to values.
    Returns (argmax, value, converged).
    """
    a = np.array(lo, dtype=float)
    b = np.array(hi, dtype=float)
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(maxiter):
        if np.all(b - a <= tol):
            break
        left = fc >= fd
        # left: maximum lies in [a, d]; otherwise in [c, b]
        a, b = np.where(left, a, c), np.where(left, d, b)
        c, d, fc, fd = (np.where(left, b - _INV_PHI * (b - a), d),
                        np.where(left, c, a + _INV_PHI * (b - a)),
                        np.where(left, 0.0, fd), np.where(left, fc, 0.0))
        fresh = np.where(left, c, d)
        fv = f(fresh)
        fc = np.where(left, fv, fc)
        fd = np.where(left, fd, fv)
    converged = bool(np.all(b - a <= tol))
    x = 0.5 * (a + b)
    return x, f(x), converged


class _PairFunction:
    """|l_j(x)| for paired (j, x) arrays."""

    def __init__(self, nodeset, cols):
        self.ns = nodeset
        self.cols = np.asarray(cols)

    def _eval(self, x, cols):
        diff = x[:, None] - self.ns.nodes[None, :]
        hit = np.abs(diff) < NODE_TOL
        diff[hit] = 1.0
        c = self.ns.bary_weights / diff
        vals = np.abs(c[np.arange(x.size), cols] / c.sum(axis=1))
        rows = np.nonzero(hit.any(axis=1))[0]
        if rows.size:
            vals[rows] = hit[rows, cols[rows]].astype(float)
        return vals

    def __call__(self, x):
        return self._eval(np.asarray(x, dtype=float), self.cols)


class _LebesgueFunction:
    def __init__(self, nodeset):
        self.ns = nodeset

    def __call__(self, x):
        return np.abs(basis_matrix(self.ns, x)).sum(axis=1)


def _brackets(grid, gap, idx, b):
    """Golden-section bracket [grid[idx-1], grid[idx+1]] clipped to the gap."""
    lo = grid[np.maximum(idx - 1, 0)]
    hi = grid[np.minimum(idx + 1, grid.size - 1)]
    g = gap[idx]
    inside = g >= 0
    lo = np.where(inside, np.maximum(lo, b[np.maximum(g, 0)]), lo)
    hi = np.where(inside, np.minimum(hi, b[np.minimum(np.maximum(g, 0) + 1, b.size - 1)]), hi)
    return lo, hi


def _pick(values, abscissae):
    """Global max with ties broken toward the smaller abscissa."""
    best = np.max(values)
    tied = abscissae[values == best]
    return float(best), float(np.min(tied))


def lebesgue_constant(nodeset: NodeSet, per_gap: int = 10) -> MaximizationResult:
    """Lambda_n = max over [-1, 1] of the Lebesgue function."""
    if nodeset.n == 1:
        return MaximizationResult(1.0, -1.0, True)
    grid, gap, b = coarse_grid(nodeset, per_gap)
    fun = _LebesgueFunction(nodeset)
    vals = fun(grid)
    # one coarse local max per gap: the best grid point within each closed gap
    ngaps = b.size - 1
    pos = np.searchsorted(grid, b)
    idx = np.empty(ngaps, dtype=int)
    for i in range(ngaps):
        seg = slice(pos[i], pos[i + 1] + 1)
        idx[i] = pos[i] + int(np.argmax(vals[seg]))
    lo, hi = _brackets(grid, gap, idx, b)
    xr, vr, ok = golden_max(fun, lo, hi)
    value, arg = _pick(np.concatenate([vals, vr]), np.concatenate([grid, xr]))
    return MaximizationResult(value, arg, ok)


def basis_norms(nodeset: NodeSet, per_gap: int = 10, keep: float = 0.9):
    """Sup-norms ||l_j||_inf for every basis function, with their argmax.

    Every coarse local maximum of |l_j| that reaches ``keep`` times the
    coarse maximum of that j is refined by golden section.
    """
    n = nodeset.n
    if n == 1:
        return np.ones(1), np.array([-1.0]), True
    grid, gap, b = coarse_grid(nodeset, per_gap)
    B = np.abs(basis_matrix(nodeset, grid))
    coarse_max = B.max(axis=0)
    padded = np.vstack([np.full((1, n), -np.inf), B, np.full((1, n), -np.inf)])
    is_peak = (B >= padded[:-2]) & (B >= padded[2:]) & (B >= keep * coarse_max[None, :])
    rows, cols = np.nonzero(is_peak)
    lo, hi = _brackets(grid, gap, rows, b)
    fun = _PairFunction(nodeset, cols)
    xr, vr, ok = golden_max(fun, lo, hi)
    norms = coarse_max.copy()
    arg = grid[np.argmax(B, axis=0)]
    # per column: best refined candidate, ties toward smaller x
    order = np.lexsort((xr, -vr, cols))
    first = np.ones(order.size, dtype=bool)
    first[1:] = cols[order][1:] != cols[order][:-1]
    sel = order[first]
    better = vr[sel] > norms[cols[sel]]
    norms[cols[sel][better]] = vr[sel][better]
    arg[cols[sel][better]] = xr[sel][better]
    return norms, arg, ok


def max_basis_norm(nodeset: NodeSet, per_gap: int = 10) -> MaximizationResult:
    """max_j ||l_j||_inf."""
    norms, arg, ok = basis_norms(nodeset, per_gap)
    value, x = _pick(norms, arg)
    return MaximizationResult(value, x, ok)


def growth_exponent(values_by_n) -> float:
    """Least-squares slope of log(value) against log(n)."""
    data = np.asarray(values_by_n, dtype=float)
    if data.ndim != 2 or data.shape[1] != 2 or data.shape[0] < 3:
        raise PreconditionError("need at least three (n, value) pairs")
    n, v = data[:, 0], data[:, 1]
    if np.any(np.diff(n) <= 0):
        raise PreconditionError("n must be strictly increasing")
    if np.any(v <= 0) or np.any(n <= 0):
        raise DomainError("values and n must be positive for a log-log fit")
    slope, _ = np.polyfit(np.log(n), np.log(v), 1)
    return float(slope)
