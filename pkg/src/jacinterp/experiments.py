"""Convergence sweeps, slope fits and predicted rates."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .barycentric import Interpolant, max_grid_error, uniform_grid
from .errors import PreconditionError
from .functions import get_function
from .lebesgue import growth_exponent
from .peano import RegularityClass, error_bound
from .pointsystems import Family, PointSystemSpec, generate_nodes
from .remez import remez

SLOPE_TOL = 0.2
FIT_POINTS = 5
EXACT_LEVEL = 1e-11


def _lobatto_extra(a, b):
    if a <= 1.5 and b <= 1.5:
        return min(0.0, a + 0.5, b + 0.5)
    if a <= 1.5:
        return min(0.0, a + 0.5, 2.0 + a - b, 2.5 - b)
    if b <= 1.5:
        return min(0.0, b + 0.5, 2.0 + b - a, 2.5 - a)
    return min(0.0, 2.0 + a - b, 2.0 + b - a, 2.5 - a, 2.5 - b)


def _radau_plus_extra(a, b):
    # nodes include +1
    if a <= 0.5:
        return min(0.0, a + 0.5, a - b)
    return min(0.0, 0.5 - b, 2.5 - a, a - b)


def predicted_exponent(spec: PointSystemSpec, reg: RegularityClass) -> float:
    """Exponent p in ||f - L_n f|| = O(n^p) for f of regularity ``reg``."""
    fam, r = spec.family, reg.r
    a, b = spec.params.alpha, spec.params.beta
    if fam is Family.CHEBYSHEV_FIRST:
        fam, a, b = Family.GAUSS_JACOBI, -0.5, -0.5
    elif fam is Family.CHEBYSHEV_SECOND:
        fam, a, b = Family.LOBATTO, 0.5, 0.5
    if fam is Family.GAUSS_JACOBI:
        return -r + max(0.0, max(a, b) - 0.5)
    if fam is Family.LOBATTO:
        return -r - _lobatto_extra(a, b)
    if fam is Family.RADAU_PLUS1:
        return -r - _radau_plus_extra(a, b)
    if fam is Family.RADAU_MINUS1:
        return -r - _radau_plus_extra(b, a)
    raise PreconditionError(f"no rate prediction for {fam.value} points")


def fit_slope(ns, errors, last: int = FIT_POINTS) -> float:
    ns = np.asarray(ns, dtype=float)[-last:]
    errors = np.asarray(errors, dtype=float)[-last:]
    return growth_exponent(np.column_stack([ns, errors]))


@dataclass
class RateReport:
    spec: PointSystemSpec
    fn_name: str
    deriv_order: int
    rows: list                      # (n, error, bound or nan)
    fitted_slope: float | None
    predicted_slope: float | None
    tolerance: float = SLOPE_TOL
    exact: bool = False
    notes: list = field(default_factory=list)

    @property
    def verdict(self) -> str | None:
        if self.exact:
            return "exact"
        if self.fitted_slope is None or self.predicted_slope is None:
            return None
        return "pass" if abs(self.fitted_slope - self.predicted_slope) <= self.tolerance else "fail"

    @property
    def ns(self):
        return np.array([r[0] for r in self.rows])

    @property
    def errors(self):
        return np.array([r[1] for r in self.rows])

    @property
    def bounds(self):
        return np.array([r[2] for r in self.rows])


def _check_n_list(n_list):
    n_list = [int(n) for n in n_list]
    if not n_list or any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise PreconditionError("n_list must be non-empty and strictly increasing")
    return n_list


def run_convergence(spec: PointSystemSpec, fn_name: str, n_list, deriv_order: int = 0,
                    grid_step: float = 0.001, tolerance: float = SLOPE_TOL,
                    with_bound: bool = True) -> RateReport:
    """Max grid errors of L_n^(m)[f] over n_list, a slope fit and a verdict.

    The slope is fitted on the last five sizes.  The a priori bound column
    is filled for m = 0 and functions of known regularity.
    """
    fn = get_function(fn_name)
    n_list = _check_n_list(n_list)
    fn.derivative(deriv_order)
    reg = fn.regularity
    rows = []
    for n in n_list:
        ns = generate_nodes(spec.with_n(n))
        err = max_grid_error(Interpolant.from_function(ns, fn), fn, grid_step, deriv_order)
        bound = float("nan")
        if with_bound and reg is not None and deriv_order == 0 and n >= reg.r + 1:
            bound = error_bound(ns, reg)
        rows.append((n, err, bound))
    report = RateReport(spec, fn.name, deriv_order, rows, None, None, tolerance)
    errs = report.errors
    if np.all(errs < EXACT_LEVEL):
        report.exact = True
        return report
    if len(rows) >= 3 and np.all(errs > 0):
        report.fitted_slope = fit_slope(n_list, errs)
    if reg is not None and deriv_order == 0:
        try:
            report.predicted_slope = predicted_exponent(spec, reg)
        except PreconditionError as exc:
            report.notes.append(str(exc))
    return report


@dataclass
class DerivativeTable:
    spec: PointSystemSpec
    fn_name: str
    orders: tuple
    rows: list                      # (n, m, interp_error, remez_error)
    interp_slopes: dict
    remez_slopes: dict


def run_derivative_comparison(spec: PointSystemSpec, fn_name: str, n_list, orders=(0, 1, 2),
                              grid_step: float = 0.001, remez_tol: float = 1e-10) -> DerivativeTable:
    """Errors of L_n^(m)[f] next to those of the derivatives of the best
    approximation of the same degree n - 1, for every m in ``orders``."""
    fn = get_function(fn_name)
    n_list = _check_n_list(n_list)
    orders = tuple(int(m) for m in orders)
    for m in orders:
        fn.derivative(m)
        if n_list[0] < m + 1:
            raise PreconditionError(f"order-{m} derivatives need n >= {m + 1}")
    grid = uniform_grid(grid_step)
    rows = []
    for n in n_list:
        interp = Interpolant.from_function(generate_nodes(spec.with_n(n)), fn)
        best = remez(fn, n - 1, remez_tol)
        for m in orders:
            e_int = max_grid_error(interp, fn, grid_step, m)
            e_best = float(np.max(np.abs(fn.derivative(m)(grid) - best(grid, m))))
            rows.append((n, m, e_int, e_best))
    slopes_i, slopes_b = {}, {}
    for m in orders:
        sel = [r for r in rows if r[1] == m]
        if len(sel) >= 3:
            ns = [r[0] for r in sel]
            slopes_i[m] = fit_slope(ns, [r[2] for r in sel])
            slopes_b[m] = fit_slope(ns, [r[3] for r in sel])
    return DerivativeTable(spec, fn.name, orders, rows, slopes_i, slopes_b)
