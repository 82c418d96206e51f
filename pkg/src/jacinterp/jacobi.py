"""Jacobi polynomials P_n^(alpha, beta) by the three-term recurrence.

All evaluators accept scalars or arrays for ``x`` and return the same shape.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError


@dataclass(frozen=True)
class JacobiParams:
    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > -1.0 and self.beta > -1.0):
            raise ParameterError(
                f"Jacobi parameters need alpha, beta > -1; got ({self.alpha}, {self.beta})"
            )

    @property
    def gamma(self) -> float:
        return max(self.alpha, self.beta)

    def swapped(self) -> "JacobiParams":
        return JacobiParams(self.beta, self.alpha)

    def shifted(self, k: int = 1) -> "JacobiParams":
        return JacobiParams(self.alpha + k, self.beta + k)


def _as_params(params) -> JacobiParams:
    if isinstance(params, JacobiParams):
        return params
    alpha, beta = params
    return JacobiParams(float(alpha), float(beta))


def _jacobi_pair(n: int, a: float, b: float, x: np.ndarray):
    """Return (P_n, P_{n-1}) at x; P_{-1} is taken as 0."""
    p_prev = np.zeros_like(x)
    p = np.ones_like(x)
    if n == 0:
        return p, p_prev
    ab = a + b
    p_prev, p = p, (a + 1.0) + 0.5 * (ab + 2.0) * (x - 1.0)
    for k in range(2, n + 1):
        c = 2.0 * k + ab
        a1 = 2.0 * k * (k + ab) * (c - 2.0)
        a2 = (c - 1.0) * (a * a - b * b)
        a3 = (c - 1.0) * c * (c - 2.0)
        a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c
        p_prev, p = p, ((a2 + a3 * x) * p - a4 * p_prev) / a1
    return p, p_prev


def _wrap(x, value):
    if np.ndim(x) == 0:
        return float(value)
    return value


def eval_jacobi(n: int, params, x):
    """Evaluate P_n^(alpha, beta)(x)."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    pr = _as_params(params)
    xa = np.asarray(x, dtype=float)
    p, _ = _jacobi_pair(int(n), pr.alpha, pr.beta, xa)
    return _wrap(x, p)


def eval_jacobi_derivative(n: int, params, x, order: int = 1):
    """Derivative of P_n^(alpha, beta) of the given order (1 or 2).

    Uses d/dx P_n^(a,b) = (n + a + b + 1)/2 * P_{n-1}^(a+1,b+1), applied
    ``order`` times.
    """
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    pr = _as_params(params)
    xa = np.asarray(x, dtype=float)
    if n < order:
        return _wrap(x, np.zeros_like(xa))
    scale = 1.0
    a, b, m = pr.alpha, pr.beta, int(n)
    for _ in range(order):
        scale *= 0.5 * (m + a + b + 1.0)
        a, b, m = a + 1.0, b + 1.0, m - 1
    p, _ = _jacobi_pair(m, a, b, xa)
    return _wrap(x, scale * p)


def jacobi_at_one(n: int, params) -> float:
    """P_n^(alpha, beta)(1) = binom(n + alpha, n), computed through log-gamma."""
    pr = _as_params(params)
    a = pr.alpha
    return math.exp(math.lgamma(n + a + 1.0) - math.lgamma(n + 1.0) - math.lgamma(a + 1.0))


def check_symmetry(n: int, params, x: float) -> bool:
    """Test P_n^(a,b)(x) == (-1)^n P_n^(b,a)(-x) to 1e-12 relative."""
    pr = _as_params(params)
    lhs = eval_jacobi(n, pr, x)
    rhs = (-1) ** n * eval_jacobi(n, pr.swapped(), -x)
    return bool(abs(lhs - rhs) <= 1e-12 * (1.0 + abs(lhs)))
