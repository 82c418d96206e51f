"""Peano kernels of the interpolation error functional and the resulting error bounds."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .barycentric import basis_matrix, eval_interpolant, Interpolant
from .errors import PreconditionError
from .lebesgue import max_basis_norm
from .pointsystems import NodeSet

_GL_POINTS, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)


@dataclass(frozen=True)
class RegularityClass:
    """f^(r-1) absolutely continuous with f^(r) of total variation V_r."""
    r: int
    V_r: float

    def __post_init__(self):
        if int(self.r) != self.r or self.r < 1:
            raise PreconditionError("r must be a positive integer")
        if not self.V_r >= 0:
            raise PreconditionError("V_r must be non-negative")


@dataclass(frozen=True)
class PeanoKernel:
    nodeset: NodeSet
    x: float
    order: int

    def __post_init__(self):
        if not -1.0 <= self.x <= 1.0:
            raise PreconditionError("x must lie in [-1, 1]")
        if int(self.order) != self.order or not 1 <= self.order <= self.nodeset.n:
            raise PreconditionError("kernel order must satisfy 1 <= s <= n")

    @property
    def basis_at_x(self) -> np.ndarray:
        return basis_matrix(self.nodeset, np.array([self.x]))[0]

    def __call__(self, t):
        return kernel_eval(self, t)


def truncated_power(u, p: int):
    """(u)_+^p, with (u)_+^0 = 1 for u >= 0."""
    u = np.asarray(u, dtype=float)
    if p == 0:
        return (u >= 0.0).astype(float)
    return np.where(u >= 0.0, u, 0.0) ** p


def kernel_eval(kernel: PeanoKernel, t):
    """K_s(t) = [(x - t)_+^{s-1} - sum_j (x_j - t)_+^{s-1} l_j(x)] / (s - 1)!."""
    s = kernel.order
    ts = np.atleast_1d(np.asarray(t, dtype=float)).ravel()
    ell = kernel.basis_at_x
    nodes = kernel.nodeset.nodes
    own = truncated_power(kernel.x - ts, s - 1)
    interp = truncated_power(nodes[None, :] - ts[:, None], s - 1) @ ell
    out = (own - interp) / math.factorial(s - 1)
    return float(out[0]) if np.ndim(t) == 0 else out.reshape(np.shape(t))


def _pieces(kernel: PeanoKernel, lo: float, hi: float):
    cuts = np.concatenate([[lo, hi], kernel.nodeset.nodes, [kernel.x]])
    cuts = np.unique(cuts[(cuts >= lo) & (cuts <= hi)])
    return cuts[:-1], cuts[1:]


def piecewise_integral(kernel: PeanoKernel, g, lo: float = -1.0, hi: float = 1.0) -> float:
    """int_lo^hi g(t) K_s(t) dt, split at the nodes and at x.

    K_s is a polynomial on every piece, so 16-point Gauss-Legendre is exact
    to rounding whenever g is a polynomial of low degree.
    """
    if hi <= lo:
        return 0.0
    a, b = _pieces(kernel, lo, hi)
    half = 0.5 * (b - a)
    t = (0.5 * (a + b))[:, None] + half[:, None] * _GL_POINTS[None, :]
    vals = np.asarray(g(t.ravel()), dtype=float) * kernel_eval(kernel, t.ravel())
    return float(np.sum(half[:, None] * _GL_WEIGHTS[None, :] * vals.reshape(t.shape)))


def kernel_recursion_check(nodeset: NodeSet, x: float, s: int, t: float) -> float:
    """|K_s(t) - int_t^1 K_{s-1}(u) du|."""
    if s < 2:
        raise PreconditionError("recursion needs s >= 2")
    upper = PeanoKernel(nodeset, x, s)
    lower = PeanoKernel(nodeset, x, s - 1)
    integral = piecewise_integral(lower, np.ones_like, t, 1.0)
    return abs(kernel_eval(upper, t) - integral)


def interpolation_error_at(nodeset: NodeSet, f, x: float) -> float:
    """E_n[f](x) = f(x) - L_n[f](x), evaluated directly."""
    interp = Interpolant.from_function(nodeset, f)
    return float(f(np.array([x]))[0]) - eval_interpolant(interp, float(x))


def peano_identity(nodeset: NodeSet, fs, x: float, s: int) -> float:
    """int_{-1}^1 f^(s)(t) K_s(t) dt, which equals E_n[f](x) for n >= s."""
    return piecewise_integral(PeanoKernel(nodeset, x, s), fs)


def _falling(n: int, r: int) -> float:
    return float(np.prod(np.arange(n - r, n, dtype=float)))


def error_bound(nodeset: NodeSet, reg: RegularityClass, basis_norm: float | None = None) -> float:
    """pi^r V_r / ((n-1)(n-2)...(n-r)) * max_j ||l_j||_inf."""
    n, r = nodeset.n, reg.r
    if n <= r:
        raise PreconditionError(f"bound needs n >= r + 1 (n={n}, r={r})")
    if reg.V_r == 0:
        return 0.0
    if basis_norm is None:
        basis_norm = max_basis_norm(nodeset).value
    return math.pi ** r * reg.V_r / _falling(n, r) * basis_norm


def strongly_normal_bound(nodeset: NodeSet, reg: RegularityClass, c: float) -> float:
    """pi^r V_r / (sqrt(c) (n-1)...(n-r)) for a strongly normal system with v_k >= c."""
    n, r = nodeset.n, reg.r
    if not c > 0:
        raise PreconditionError("c must be positive; the pointsystem is not strongly normal")
    if n <= r:
        raise PreconditionError(f"bound needs n >= r + 1 (n={n}, r={r})")
    return math.pi ** r * reg.V_r / (math.sqrt(c) * _falling(n, r))
