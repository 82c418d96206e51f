"""Hermite-Fejer quantities: v_k, strong normality and Wainerman partial sums."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .barycentric import basis_matrix
from .errors import PreconditionError
from .pointsystems import NodeSet

#: min_v at or above this counts as strongly normal
STRONG_MARGIN = 1e-6
WAINERMAN_SLACK = 1e-12


@dataclass(frozen=True)
class NormalityReport:
    min_v: float
    is_strongly_normal: bool
    per_k_min: np.ndarray


def log_derivative_ratio(nodeset: NodeSet) -> np.ndarray:
    """omega''(x_k) / omega'(x_k) = sum_{j != k} 2 / (x_k - x_j) for every k."""
    x = nodeset.nodes
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, np.inf)
    return np.sum(2.0 / diff, axis=1)


def v_function(nodeset: NodeSet, k: int, t):
    """v_k(t) = 1 - (t - x_k) omega''(x_k) / omega'(x_k)."""
    if not 0 <= k < nodeset.n:
        raise PreconditionError(f"index {k} out of range for {nodeset.n} nodes")
    ratio = log_derivative_ratio(nodeset)[k]
    return 1.0 - (np.asarray(t, dtype=float) - nodeset.nodes[k]) * ratio


def v_matrix(nodeset: NodeSet, t) -> np.ndarray:
    """V[i, k] = v_k(t_i)."""
    t = np.atleast_1d(np.asarray(t, dtype=float)).ravel()
    ratio = log_derivative_ratio(nodeset)
    return 1.0 - (t[:, None] - nodeset.nodes[None, :]) * ratio[None, :]


def normality_report(nodeset: NodeSet, grid_points: int = 2001) -> NormalityReport:
    """Minimum of v_k over all k and a uniform t-grid on [-1, 1].

    v_k is linear in t, so its minimum sits at t = -1 or t = 1; both are
    grid points and the grid minimum is exact.
    """
    if grid_points < 100:
        raise PreconditionError("grid_points must be at least 100")
    t = np.linspace(-1.0, 1.0, grid_points)
    per_k = v_matrix(nodeset, t).min(axis=0)
    min_v = float(per_k.min())
    return NormalityReport(min_v, min_v >= STRONG_MARGIN, per_k)


def hermite_fejer_basis(nodeset: NodeSet, t):
    """(h, b) matrices: h_k = v_k l_k^2 and b_k = (t - x_k) l_k^2 at the points t."""
    t = np.atleast_1d(np.asarray(t, dtype=float)).ravel()
    l2 = basis_matrix(nodeset, t) ** 2
    h = v_matrix(nodeset, t) * l2
    b = (t[:, None] - nodeset.nodes[None, :]) * l2
    return h, b


def hermite_fejer_eval(nodeset: NodeSet, values, derivs, t):
    """H_{2n-1}(f, t) = sum f(x_k) h_k(t) + sum d_k b_k(t)."""
    values = np.asarray(values, dtype=float)
    derivs = np.asarray(derivs, dtype=float)
    if values.shape != (nodeset.n,) or derivs.shape != (nodeset.n,):
        raise PreconditionError("values and derivs must have one entry per node")
    h, b = hermite_fejer_basis(nodeset, t)
    out = h @ values + b @ derivs
    return float(out[0]) if np.ndim(t) == 0 else out.reshape(np.shape(t))


def _gap_of(nodeset: NodeSet, x: float) -> int:
    nodes = nodeset.nodes
    if np.min(np.abs(nodes - x)) < 1e-13:
        raise PreconditionError("x coincides with a node; the sign pattern lives on open gaps")
    if not nodes[0] < x < nodes[-1]:
        raise PreconditionError("x must lie strictly between two adjacent nodes")
    return int(np.searchsorted(nodes, x)) - 1


def wainerman_sums(nodeset: NodeSet, x: float):
    """Partial basis sums a_i(x) and their expected signs for the gap holding x.

    With x between nodes g and g + 1 (ascending), a_i = sum_{j <= i} l_j for
    i <= g and a_i = sum_{j >= i} l_j for i > g.  Returns (a, l, signs).
    """
    g = _gap_of(nodeset, float(x))
    ell = basis_matrix(nodeset, np.array([float(x)]))[0]
    n = ell.size
    a = np.empty(n)
    a[: g + 1] = np.cumsum(ell[: g + 1])
    a[g + 1:] = np.cumsum(ell[g + 1:][::-1])[::-1]
    i = np.arange(n)
    signs = np.where(i <= g, (-1.0) ** (g - i), (-1.0) ** (i - g - 1))
    return a, ell, signs


def wainerman_check(nodeset: NodeSet, x: float) -> bool:
    """Sign alternation and domination |a_i(x)| <= |l_i(x)| of the partial sums."""
    a, ell, signs = wainerman_sums(nodeset, x)
    sign_ok = np.all(np.sign(a) == signs)
    dom_ok = np.all(np.abs(a) <= np.abs(ell) + WAINERMAN_SLACK)
    return bool(sign_ok and dom_ok)
