"""Interpolation pointsystems on [-1, 1] and their barycentric weights.

Every family is parametrised by the *total* number of points ``n``.
Lobatto sets use the interior roots of P_{n-2}^(alpha, beta) plus both
endpoints; Radau sets use the roots of P_{n-1}^(alpha, beta) plus one
endpoint.  Nodes are always stored in ascending order.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateInputError, NumericalError, PreconditionError
from .jacobi import JacobiParams, eval_jacobi, eval_jacobi_derivative


class Family(str, enum.Enum):
    GAUSS_JACOBI = "GaussJacobi"
    LOBATTO = "JacobiGaussLobatto"
    RADAU_PLUS1 = "JacobiGaussRadauPlus1"
    RADAU_MINUS1 = "JacobiGaussRadauMinus1"
    CHEBYSHEV_FIRST = "ChebyshevFirst"
    CHEBYSHEV_SECOND = "ChebyshevSecond"
    EQUISPACED = "Equispaced"

    @property
    def is_jacobi(self) -> bool:
        return self in (Family.GAUSS_JACOBI, Family.LOBATTO,
                        Family.RADAU_PLUS1, Family.RADAU_MINUS1)

    @classmethod
    def parse(cls, name) -> "Family":
        if isinstance(name, cls):
            return name
        key = str(name).replace("-", "").replace("_", "").lower()
        for fam in cls:
            if fam.value.lower() == key or fam.name.replace("_", "").lower() == key:
                return fam
        aliases = {"gauss": cls.GAUSS_JACOBI, "lobatto": cls.LOBATTO,
                   "radauplus": cls.RADAU_PLUS1, "radauminus": cls.RADAU_MINUS1,
                   "cheb1": cls.CHEBYSHEV_FIRST, "cheb2": cls.CHEBYSHEV_SECOND,
                   "equi": cls.EQUISPACED}
        if key in aliases:
            return aliases[key]
        raise PreconditionError(f"unknown pointsystem family {name!r}")


@dataclass(frozen=True)
class PointSystemSpec:
    family: Family
    n: int
    params: JacobiParams = field(default_factory=lambda: JacobiParams(0.0, 0.0))

    def __post_init__(self):
        object.__setattr__(self, "family", Family.parse(self.family))
        if not isinstance(self.params, JacobiParams):
            object.__setattr__(self, "params", JacobiParams(*self.params))
        two_point = (Family.LOBATTO, Family.CHEBYSHEV_SECOND, Family.EQUISPACED)
        min_n = 2 if self.family in two_point else 1
        if int(self.n) != self.n or self.n < min_n:
            raise PreconditionError(f"{self.family.value} needs n >= {min_n}, got {self.n}")

    def with_n(self, n: int) -> "PointSystemSpec":
        return PointSystemSpec(self.family, n, self.params)

    def label(self) -> str:
        if self.family.is_jacobi:
            return f"{self.family.value}({self.params.alpha:g},{self.params.beta:g})"
        return self.family.value


@dataclass(frozen=True)
class NodeSet:
    nodes: np.ndarray
    bary_weights: np.ndarray
    spec: PointSystemSpec | None = None

    def __post_init__(self):
        for name in ("nodes", "bary_weights"):
            arr = np.array(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        if self.nodes.shape != self.bary_weights.shape:
            raise PreconditionError("nodes and weights differ in length")

    @classmethod
    def from_nodes(cls, nodes, spec=None) -> "NodeSet":
        x = np.sort(np.asarray(nodes, dtype=float))
        return cls(x, barycentric_weights(x), spec)

    def __len__(self):
        return self.nodes.size

    @property
    def n(self) -> int:
        return self.nodes.size


def barycentric_weights(nodes) -> np.ndarray:
    """Weights 1/prod_{k != j}(x_j - x_k), scaled so that max |w| = 1.

    The product is accumulated in the log domain, so no intermediate over-
    or underflows even for a few thousand nodes.
    """
    x = np.asarray(nodes, dtype=float).ravel()
    n = x.size
    if n == 0:
        raise DegenerateInputError("need at least one node")
    if n == 1:
        return np.ones(1)
    diff = x[:, None] - x[None, :]
    np.fill_diagonal(diff, 1.0)
    if np.any(diff == 0.0):
        raise DegenerateInputError("duplicate nodes")
    logmag = -np.sum(np.log(np.abs(diff)), axis=1)
    negatives = np.sum(diff < 0.0, axis=1)
    sign = np.where(negatives % 2 == 0, 1.0, -1.0)
    return sign * np.exp(logmag - logmag.max())


# -- Jacobi roots ------------------------------------------------------------

def _newton(n, pr, x, maxiter=100):
    for _ in range(maxiter):
        p = eval_jacobi(n, pr, x)
        dp = eval_jacobi_derivative(n, pr, x, 1)
        dx = p / dp
        x = np.clip(x - dx, -1.0, 1.0)
        if np.all(np.abs(dx) < 1e-15 * 4):
            break
    else:
        return x, False
    # one polishing step after the step size has stagnated
    x = x - eval_jacobi(n, pr, x) / eval_jacobi_derivative(n, pr, x, 1)
    return x, True


def _roots_ok(n, x):
    if x.size != n or not np.all(np.isfinite(x)):
        return False
    if np.any(np.abs(x) >= 1.0):
        return False
    xs = np.sort(x)
    return n == 1 or np.min(np.diff(xs)) > 1e-13


def _bracket_roots(n, pr):
    """Fallback: sign changes on a fine angular grid, then safeguarded Newton."""
    m = 8 * n + 16
    for _ in range(4):
        theta = np.linspace(0.0, math.pi, m + 1)
        grid = np.cos(theta)[::-1]
        vals = eval_jacobi(n, pr, grid)
        idx = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]
        if idx.size == n:
            break
        m *= 4
    else:
        raise NumericalError(f"could not bracket the {n} roots of P_{n}{(pr.alpha, pr.beta)}")
    lo = grid[idx].copy()
    hi = grid[idx + 1].copy()
    plo = vals[idx].copy()
    x = 0.5 * (lo + hi)
    for _ in range(200):
        p = eval_jacobi(n, pr, x)
        same = np.sign(p) == np.sign(plo)
        lo = np.where(same, x, lo)
        plo = np.where(same, p, plo)
        hi = np.where(same, hi, x)
        step = x - p / eval_jacobi_derivative(n, pr, x, 1)
        inside = (step > lo) & (step < hi)
        new = np.where(inside, step, 0.5 * (lo + hi))
        if np.all(np.abs(new - x) < 1e-15 * 4):
            x = new
            break
        x = new
    else:
        raise NumericalError("bisection fallback did not converge")
    return x


def jacobi_roots(n: int, params) -> np.ndarray:
    """Ascending roots of P_n^(alpha, beta) by vectorised Newton iteration."""
    pr = params if isinstance(params, JacobiParams) else JacobiParams(*params)
    if n == 0:
        return np.empty(0)
    if n == 1:
        return np.array([(pr.beta - pr.alpha) / (pr.alpha + pr.beta + 2.0)])
    k = np.arange(1, n + 1)
    # reduces to (k - 1/4) pi / (n + 1/2) for Legendre
    x0 = np.cos((k + 0.5 * pr.alpha - 0.25) * math.pi / (n + 0.5 * (pr.alpha + pr.beta + 1.0)))
    x, converged = _newton(n, pr, x0)
    if not (converged and _roots_ok(n, x)):
        x = _bracket_roots(n, pr)
    x = np.sort(x)
    if pr.alpha == pr.beta:
        x = 0.5 * (x - x[::-1])
    return x


def _ascending_sin(num, den):
    # sin form keeps the set exactly antisymmetric
    return np.sin(math.pi * num / den)


def generate_nodes(spec: PointSystemSpec) -> NodeSet:
    """Build the NodeSet for ``spec``."""
    fam, n, pr = spec.family, spec.n, spec.params
    if fam is Family.GAUSS_JACOBI:
        x = jacobi_roots(n, pr)
    elif fam is Family.LOBATTO:
        x = np.concatenate([[-1.0], jacobi_roots(n - 2, pr), [1.0]])
    elif fam is Family.RADAU_PLUS1:
        x = np.concatenate([jacobi_roots(n - 1, pr), [1.0]])
    elif fam is Family.RADAU_MINUS1:
        x = np.concatenate([[-1.0], jacobi_roots(n - 1, pr)])
    elif fam is Family.CHEBYSHEV_FIRST:
        j = np.arange(n)
        x = _ascending_sin(2 * j + 1 - n, 2 * n)
    elif fam is Family.CHEBYSHEV_SECOND:
        j = np.arange(n)
        x = _ascending_sin(2 * j - (n - 1), 2 * (n - 1))
    elif fam is Family.EQUISPACED:
        x = np.linspace(-1.0, 1.0, n)
    else:  # pragma: no cover
        raise PreconditionError(f"unsupported family {fam}")
    if n > 1 and not np.all(np.diff(x) > 0):
        raise NumericalError(f"generated nodes for {spec.label()} n={n} are not strictly increasing")
    return NodeSet(x, barycentric_weights(x), spec)


def defining_residual(nodeset: NodeSet) -> np.ndarray:
    """|P(x_j)| / (|P'(x_j)| h_j) at the interior Jacobi roots of ``nodeset``.

    h_j is the distance to the nearest other node.  Endpoints appended
    exactly and non-Jacobi families report zeros.
    """
    spec = nodeset.spec
    x = nodeset.nodes
    out = np.zeros(x.size)
    if spec is None or not spec.family.is_jacobi or x.size < 2:
        return out
    deg = {Family.GAUSS_JACOBI: spec.n, Family.LOBATTO: spec.n - 2,
           Family.RADAU_PLUS1: spec.n - 1, Family.RADAU_MINUS1: spec.n - 1}[spec.family]
    if deg == 0:
        return out
    interior = np.abs(x) < 1.0
    xi = x[interior]
    h = np.minimum(np.abs(np.diff(x, prepend=-np.inf)), np.abs(np.diff(x, append=np.inf)))[interior]
    p = eval_jacobi(deg, spec.params, xi)
    dp = eval_jacobi_derivative(deg, spec.params, xi, 1)
    out[interior] = np.abs(p) / (np.abs(dp) * h)
    return out


def arcsine_cdf(t):
    return 0.5 + np.arcsin(np.clip(t, -1.0, 1.0)) / math.pi


def node_density_check(nodeset: NodeSet) -> float:
    """Sup distance between the empirical node CDF and the arcsine CDF.

    Both are compared on 1001 equispaced points of [-1, 1].
    """
    if nodeset.n < 10:
        raise PreconditionError("density check needs at least 10 nodes")
    t = np.linspace(-1.0, 1.0, 1001)
    empirical = np.searchsorted(nodeset.nodes, t, side="right") / nodeset.n
    return float(np.max(np.abs(empirical - arcsine_cdf(t))))
