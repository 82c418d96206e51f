"""Registry of test functions with exact derivatives and regularity data."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import PreconditionError
from .peano import RegularityClass


@dataclass(frozen=True)
class TestFunction:
    name: str
    derivatives: tuple          # f, f', f'' (as many as are defined)
    regularity: RegularityClass | None = None
    aliases: tuple = field(default=())

    __test__ = False  # not a pytest class

    def __call__(self, x):
        return self.derivatives[0](np.asarray(x, dtype=float))

    @property
    def max_order(self) -> int:
        return len(self.derivatives) - 1

    def derivative(self, m: int):
        if not 0 <= m <= self.max_order:
            raise PreconditionError(f"{self.name}: derivative of order {m} not available")
        return self.derivatives[m]


def _abs_power(p: int) -> TestFunction:
    # derivatives of |x|^p that are still continuous: orders m < p, at most 2
    ders = [lambda x, p=p: np.abs(x) ** p]
    if p > 1:
        ders.append(lambda x, p=p: p * np.abs(x) ** (p - 1) * np.sign(x))
    if p > 2:
        ders.append(lambda x, p=p: p * (p - 1) * np.abs(x) ** (p - 2))
    # f^(p) = p! sgn(x) jumps by 2 p! at the origin
    reg = RegularityClass(p, 2.0 * math.factorial(p))
    name = "abs" if p == 1 else f"abs{p}"
    return TestFunction(name, tuple(ders), reg, (f"|x|^{p}", f"|x|{p}") if p > 1 else ("|x|",))


def _runge(x):
    return 1.0 / (1.0 + 25.0 * x * x)


def _runge1(x):
    return -50.0 * x / (1.0 + 25.0 * x * x) ** 2


def _runge2(x):
    return (3750.0 * x * x - 50.0) / (1.0 + 25.0 * x * x) ** 3


def _flat(x, m=0):
    # exp(-1/x^2) and its derivatives, continued by 0 at the origin
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    nz = x != 0.0
    xn = x[nz]
    e = np.exp(-1.0 / xn ** 2)
    if m == 0:
        out[nz] = e
    elif m == 1:
        out[nz] = 2.0 / xn ** 3 * e
    else:
        out[nz] = (4.0 / xn ** 6 - 6.0 / xn ** 4) * e
    return out


REGISTRY = {f.name: f for f in [
    _abs_power(1), _abs_power(3), _abs_power(5), _abs_power(7),
    TestFunction("exp", (np.exp, np.exp, np.exp), aliases=("e^x",)),
    TestFunction("runge", (_runge, _runge1, _runge2), aliases=("1/(1+25x^2)",)),
    TestFunction("flat", (_flat, lambda x: _flat(x, 1), lambda x: _flat(x, 2)),
                 aliases=("exp(-1/x^2)", "e^{-1/x^2}")),
    TestFunction("x2", (lambda x: x * x, lambda x: 2.0 * x, lambda x: 2.0 + 0.0 * x), aliases=("x^2",)),
    TestFunction("x3", (lambda x: x ** 3, lambda x: 3.0 * x * x, lambda x: 6.0 * x), aliases=("x^3",)),
]}


def get_function(name: str) -> TestFunction:
    key = str(name).strip()
    if key in REGISTRY:
        return REGISTRY[key]
    for f in REGISTRY.values():
        if key in f.aliases:
            return f
    raise PreconditionError(f"unknown test function {name!r}; known: {', '.join(REGISTRY)}")
