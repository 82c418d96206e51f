"""Peano kernels of the interpolation error.

E_n[f](x) = f(x) - L_n[f](x) annihilates polynomials of degree < n, so for
s <= n it can be written as an integral of f^(s) against a kernel K_s(t).
This script tabulates K_1 and K_2 for five Legendre-Gauss-Lobatto points
and checks the integral representation against the direct error for exp.
"""
import numpy as np

from jacinterp import JacobiParams, PeanoKernel, PointSystemSpec, generate_nodes
from jacinterp.peano import interpolation_error_at, kernel_recursion_check, peano_identity

ns = generate_nodes(PointSystemSpec("JacobiGaussLobatto", 5, JacobiParams(1.0, 1.0)))
x = 0.3
print("nodes:", np.round(ns.nodes, 6))
print(f"x = {x}")
t = np.linspace(-1, 1, 11)
for s in (1, 2):
    print(f"K_{s}:", np.round(PeanoKernel(ns, x, s)(t), 5))

print()
direct = interpolation_error_at(ns, np.exp, x)
for s in (1, 2, 3, 5):
    print(f"s={s}: integral {peano_identity(ns, np.exp, x, s):+.15e}  direct {direct:+.15e}")
print("recursion residual K_3 vs int K_2:", kernel_recursion_check(ns, x, 3, -0.4))
