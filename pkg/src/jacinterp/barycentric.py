"""Barycentric evaluation of interpolants, Lagrange bases and derivatives."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError
from .pointsystems import NodeSet

#: absolute distance below which an evaluation point is treated as a node
NODE_TOL = 1e-14

# rows per block when forming (points x nodes) matrices
_BLOCK_ENTRIES = 4_000_000


@dataclass(frozen=True)
class Interpolant:
    nodeset: NodeSet
    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=float)
        if v.shape != self.nodeset.nodes.shape:
            raise PreconditionError("values length must equal node count")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @classmethod
    def from_function(cls, nodeset: NodeSet, f) -> "Interpolant":
        return cls(nodeset, np.asarray(f(nodeset.nodes), dtype=float))

    def __call__(self, x):
        return eval_interpolant(self, x)


def _blocks(m, n):
    step = max(1, _BLOCK_ENTRIES // max(n, 1))
    for start in range(0, m, step):
        yield slice(start, min(m, start + step))


def _scalar_or_array(x, out):
    return float(out[0]) if np.ndim(x) == 0 else out.reshape(np.shape(x))


def eval_interpolant(interp: Interpolant, x):
    """L_n[f](x) by the second barycentric formula."""
    ns = interp.nodeset
    xs = np.atleast_1d(np.asarray(x, dtype=float)).ravel()
    out = np.empty(xs.size)
    for blk in _blocks(xs.size, ns.n):
        diff = xs[blk, None] - ns.nodes[None, :]
        hit = np.abs(diff) < NODE_TOL
        diff[hit] = 1.0
        c = ns.bary_weights / diff
        res = (c @ interp.values) / c.sum(axis=1)
        rows, cols = np.nonzero(hit)
        res[rows] = interp.values[cols]
        out[blk] = res
    return _scalar_or_array(x, out)


def basis_matrix(nodeset: NodeSet, x) -> np.ndarray:
    """Matrix B[i, k] = l_k(x_i) for all basis functions at the points x."""
    xs = np.atleast_1d(np.asarray(x, dtype=float)).ravel()
    out = np.empty((xs.size, nodeset.n))
    for blk in _blocks(xs.size, nodeset.n):
        diff = xs[blk, None] - nodeset.nodes[None, :]
        hit = np.abs(diff) < NODE_TOL
        diff[hit] = 1.0
        c = nodeset.bary_weights / diff
        b = c / c.sum(axis=1, keepdims=True)
        rows = np.nonzero(hit.any(axis=1))[0]
        b[rows] = hit[rows].astype(float)
        out[blk] = b
    return out


def eval_basis(nodeset: NodeSet, k: int, x):
    """The k-th Lagrange basis function (ascending node order) at x."""
    if not 0 <= k < nodeset.n:
        raise PreconditionError(f"basis index {k} out of range for {nodeset.n} nodes")
    return _scalar_or_array(x, basis_matrix(nodeset, x)[:, k])


def _anchored_derivatives(nodeset, values, xs, order):
    """First and (optionally) second derivative of the barycentric interpolant.

    The nested divided-difference sums are written relative to the nearest
    node x_k so that nothing cancels when x approaches x_k; at x = x_k they
    reduce to the differentiation-matrix rows.
    """
    x_nodes, w = nodeset.nodes, nodeset.bary_weights
    m, n = xs.size, x_nodes.size
    d1 = np.empty(m)
    d2 = np.empty(m) if order == 2 else None
    for blk in _blocks(m, n):
        x = xs[blk]
        diff = x[:, None] - x_nodes[None, :]
        k = np.argmin(np.abs(diff), axis=1)
        rows = np.arange(x.size)
        delta = diff[rows, k].copy()
        diff[rows, k] = 1.0
        c = w / diff
        c[rows, k] = 0.0
        fk = values[k]
        fd = values[None, :] - fk[:, None]
        s = w[k] + delta * c.sum(axis=1)
        a = (c * fd).sum(axis=1)
        p_minus_fk = delta * a / s
        qk = a / s
        q = (p_minus_fk[:, None] - fd) / diff
        dq = q - qk[:, None]
        r = (c * dq).sum(axis=1) / s
        dp = qk + delta * r
        d1[blk] = dp
        if order == 2:
            h = (dp[:, None] - q) / diff
            d2[blk] = 2.0 * (w[k] * r + delta * (c * h).sum(axis=1)) / s
    return d1, d2


def eval_derivative(interp: Interpolant, x, order: int = 1):
    """Derivative of order 1 or 2 of the interpolating polynomial at x."""
    if order not in (1, 2):
        raise PreconditionError("derivative order must be 1 or 2")
    ns = interp.nodeset
    if ns.n < order + 1:
        raise PreconditionError(f"order-{order} derivative needs at least {order + 1} nodes")
    xs = np.atleast_1d(np.asarray(x, dtype=float)).ravel()
    d1, d2 = _anchored_derivatives(ns, interp.values, xs, order)
    return _scalar_or_array(x, d1 if order == 1 else d2)


def differentiation_matrix(nodeset: NodeSet, order: int = 1) -> np.ndarray:
    """Dense barycentric differentiation matrix at the nodes (order 1 or 2)."""
    x, w = nodeset.nodes, nodeset.bary_weights
    dx = x[:, None] - x[None, :]
    np.fill_diagonal(dx, 1.0)
    d = (w[None, :] / w[:, None]) / dx
    np.fill_diagonal(d, 0.0)
    np.fill_diagonal(d, -d.sum(axis=1))
    if order == 1:
        return d
    d2 = 2.0 * d * (np.diag(d)[:, None] - 1.0 / dx)
    np.fill_diagonal(d2, 0.0)
    np.fill_diagonal(d2, -d2.sum(axis=1))
    return d2


def uniform_grid(step: float = 0.001) -> np.ndarray:
    """Points -1, -1 + h, ..., 1; ``step`` must split [-1, 1] evenly."""
    count = round(2.0 / step)
    if count < 1 or abs(count * step - 2.0) > 1e-9:
        raise PreconditionError(f"grid step {step} does not divide [-1, 1] evenly")
    return np.linspace(-1.0, 1.0, count + 1)


def evaluate(interp: Interpolant, x, deriv_order: int = 0):
    if deriv_order == 0:
        return eval_interpolant(interp, x)
    return eval_derivative(interp, x, deriv_order)


def max_grid_error(interp: Interpolant, f, grid_step: float = 0.001, deriv_order: int = 0) -> float:
    """max |f^(m)(x) - L_n^(m)[f](x)| over the uniform grid of spacing grid_step.

    ``f`` is either an object with a ``derivative(m)`` method (see
    :mod:`jacinterp.functions`) or a callable giving f^(m) directly.
    """
    grid = uniform_grid(grid_step)
    exact = f.derivative(deriv_order) if hasattr(f, "derivative") else f
    approx = evaluate(interp, grid, deriv_order)
    return float(np.max(np.abs(np.asarray(exact(grid), dtype=float) - approx)))
