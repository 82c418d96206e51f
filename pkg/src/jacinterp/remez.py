"""Best uniform polynomial approximation on [-1, 1] by single-point Remez exchange."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConvergenceError, PreconditionError
from .lebesgue import golden_max

SEARCH_POINTS = 4001


def clenshaw(coeffs, x):
    """Evaluate sum_k c_k T_k(x) by backward recurrence."""
    x = np.asarray(x, dtype=float)
    b1 = np.zeros_like(x)
    b2 = np.zeros_like(x)
    for c in coeffs[:0:-1]:
        b1, b2 = 2.0 * x * b1 - b2 + c, b1
    return x * b1 - b2 + coeffs[0]


def cheb_derivative(coeffs):
    """Chebyshev coefficients of the derivative."""
    c = np.asarray(coeffs, dtype=float)
    n = c.size - 1
    if n == 0:
        return np.zeros(1)
    d = np.zeros(n + 1)
    for k in range(n, 0, -1):
        d[k - 1] = d[k + 1] + 2.0 * k * c[k] if k + 1 <= n else 2.0 * k * c[k]
    d[0] *= 0.5
    return d[:n]


def chebyshev_vander(x, degree):
    x = np.asarray(x, dtype=float)
    v = np.empty((x.size, degree + 1))
    v[:, 0] = 1.0
    if degree >= 1:
        v[:, 1] = x
    for k in range(2, degree + 1):
        v[:, k] = 2.0 * x * v[:, k - 1] - v[:, k - 2]
    return v


@dataclass
class RemezResult:
    coeffs: np.ndarray
    error: float
    alternation_points: np.ndarray
    levelled_error: float = 0.0
    iterations: int = 0
    converged: bool = True
    history: list = field(default_factory=list)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def __call__(self, x, deriv: int = 0):
        c = self.coeffs
        for _ in range(deriv):
            c = cheb_derivative(c)
        out = clenshaw(c, np.asarray(x, dtype=float))
        return float(out) if np.ndim(x) == 0 else out

    def residual(self, f, x):
        return np.asarray(f(x), dtype=float) - self(np.asarray(x, dtype=float))


def _initial_reference(degree):
    # d + 2 of the d + 3 extreme points of T_{d+2}; a symmetric reference
    # makes the levelled error vanish for even f and even degree
    m = degree + 2
    k = np.arange(m + 1)
    pts = np.sin(math.pi * (2 * k - m) / (2 * m))
    return pts[1:]


def _solve_reference(f, ref, degree):
    a = np.empty((ref.size, degree + 2))
    a[:, :-1] = chebyshev_vander(ref, degree)
    a[:, -1] = (-1.0) ** np.arange(ref.size)
    sol = np.linalg.solve(a, np.asarray(f(ref), dtype=float))
    return sol[:-1], sol[-1]


def _exchange(ref, r_ref, x_new, r_new):
    """Single-point exchange keeping sign alternation of the residual."""
    ref = ref.copy()
    r_ref = r_ref.copy()
    s_new = np.sign(r_new)
    if x_new < ref[0]:
        if np.sign(r_ref[0]) == s_new:
            ref[0] = x_new
        else:
            ref = np.concatenate([[x_new], ref[:-1]])
    elif x_new > ref[-1]:
        if np.sign(r_ref[-1]) == s_new:
            ref[-1] = x_new
        else:
            ref = np.concatenate([ref[1:], [x_new]])
    else:
        i = int(np.searchsorted(ref, x_new)) - 1
        i = min(max(i, 0), ref.size - 2)
        if x_new in (ref[i], ref[i + 1]):
            j = i if x_new == ref[i] else i + 1
        else:
            j = i if np.sign(r_ref[i]) == s_new else i + 1
        ref[j] = x_new
    return np.sort(ref)


def _global_extremum(f, coeffs, grid):
    """Abscissa and signed residual of the largest |f - p| on [-1, 1].

    Every local maximum of |r| on the grid that comes within 1e-3 of the
    grid maximum is refined by golden section; an unrefined peak can be
    off by ~1e-5 relative, enough to pick the wrong one.
    """
    def absres(x):
        return np.abs(np.asarray(f(x), dtype=float) - clenshaw(coeffs, x))

    ar = absres(grid)
    padded = np.concatenate([[-np.inf], ar, [-np.inf]])
    peak = (ar >= padded[:-2]) & (ar >= padded[2:]) & (ar >= (1.0 - 1e-3) * ar.max())
    idx = np.nonzero(peak)[0]
    lo = grid[np.maximum(idx - 1, 0)]
    hi = grid[np.minimum(idx + 1, grid.size - 1)]
    xr, vr, _ = golden_max(absres, lo, hi, tol=1e-14)
    cand_x = np.concatenate([grid[idx], xr])
    cand_v = np.concatenate([ar[idx], vr])
    x = float(cand_x[int(np.argmax(cand_v))])
    res = float(np.asarray(f(np.array([x])), dtype=float)[0] - clenshaw(coeffs, np.array([x]))[0])
    return x, res


def default_maxiter(degree: int) -> int:
    # single exchange moves one reference point per step; kink functions
    # need roughly 4 * degree steps from the Chebyshev start
    return max(100, 8 * (degree + 2))


def remez(f, degree: int, tol: float = 1e-10, maxiter: int | None = None) -> RemezResult:
    """Minimax polynomial of the given degree for a vectorised callable f.

    Iterates single-point exchanges until the sup-norm of the residual and
    the levelled reference error agree to relative ``tol`` (or to rounding
    level, when the residual maximum already sits on the reference).
    """
    if degree < 0 or int(degree) != degree:
        raise PreconditionError("degree must be a non-negative integer")
    if tol < 1e-12:
        raise PreconditionError("tol must be at least 1e-12")
    j = np.arange(SEARCH_POINTS)
    grid = np.sin(math.pi * (2 * j - (SEARCH_POINTS - 1)) / (2 * (SEARCH_POINTS - 1)))
    scale = max(1.0, float(np.max(np.abs(f(grid)))))
    if maxiter is None:
        maxiter = default_maxiter(degree)
    ref = _initial_reference(degree)
    history = []
    result = None
    for it in range(1, maxiter + 1):
        coeffs, h = _solve_reference(f, ref, degree)
        grid_all = np.union1d(grid, ref)
        x_new, r_new = _global_extremum(f, coeffs, grid_all)
        r_ref = np.asarray(f(ref), dtype=float) - clenshaw(coeffs, ref)
        lower, upper = float(np.min(np.abs(r_ref))), abs(r_new)
        history.append((lower, upper))
        result = RemezResult(coeffs, upper, ref.copy(), abs(h), it, False, history)
        noise = 16.0 * np.finfo(float).eps * (scale + np.sum(np.abs(coeffs)))
        if upper - abs(h) <= tol * upper + noise or np.any(ref == x_new):
            result.converged = True
            return result
        ref = _exchange(ref, r_ref, x_new, r_new)
    raise ConvergenceError(
        f"Remez exchange did not converge in {maxiter} iterations "
        f"(levelled {abs(h):.3e}, sup {result.error:.3e})", last=result)


def best_error_sweep(f, degrees, tol: float = 1e-10, maxiter: int | None = None):
    """Minimax errors for each degree, as a list of (degree, error)."""
    degrees = list(degrees)
    if any(b <= a for a, b in zip(degrees, degrees[1:])):
        raise PreconditionError("degrees must be increasing")
    return [(d, remez(f, d, tol, maxiter).error) for d in degrees]
