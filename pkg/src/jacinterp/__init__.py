"""Polynomial interpolation at Jacobi-type pointsystems for functions of limited regularity.

Nodes, barycentric interpolation and derivatives, Lebesgue constants and
basis norms, Hermite-Fejer normality, Peano kernels with error bounds, a
Remez baseline, and convergence-rate experiments.
"""
from .errors import (ConvergenceError, DegenerateInputError, DomainError, NumericalError,
                     ParameterError, PreconditionError)
from .jacobi import JacobiParams, eval_jacobi, eval_jacobi_derivative, jacobi_at_one
from .pointsystems import (Family, NodeSet, PointSystemSpec, barycentric_weights,
                           generate_nodes, jacobi_roots)
from .barycentric import (Interpolant, differentiation_matrix, eval_basis, eval_derivative,
                          eval_interpolant, max_grid_error, uniform_grid)
from .lebesgue import (basis_norms, growth_exponent, lebesgue_constant, lebesgue_function,
                       max_basis_norm)
from .normality import (NormalityReport, hermite_fejer_eval, normality_report, v_function,
                        wainerman_check)
from .peano import (PeanoKernel, RegularityClass, error_bound, kernel_eval,
                    kernel_recursion_check, strongly_normal_bound)
from .remez import RemezResult, best_error_sweep, remez
from .functions import REGISTRY, TestFunction, get_function
from .experiments import (RateReport, predicted_exponent, run_convergence,
                          run_derivative_comparison)

__version__ = "0.1.0"
