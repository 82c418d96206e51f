"""How well conditioned is interpolation at Jacobi-type points?

Prints Lebesgue constants for the two Chebyshev families next to the
logarithmic bounds, then the largest basis-function norm for a few Jacobi
parameters.  Gauss-Jacobi points with max(alpha, beta) > 1/2 have basis
functions that grow like n^(gamma - 1/2).
"""
import math

from jacinterp import JacobiParams, PointSystemSpec, generate_nodes, lebesgue_constant, max_basis_norm


def nodes(family, n, a=0.0, b=0.0):
    return generate_nodes(PointSystemSpec(family, n, JacobiParams(a, b)))


print("n     Lambda(T_n)  Lambda(U_n)  1 + (2/pi) log n")
for n in (8, 32, 128, 512):
    t = lebesgue_constant(nodes("ChebyshevFirst", n)).value
    u = lebesgue_constant(nodes("ChebyshevSecond", n)).value
    print(f"{n:<5d} {t:11.6f}  {u:11.6f}  {1 + 2 / math.pi * math.log(n):11.6f}")

print()
print("max_k ||l_k|| at Gauss-Jacobi points")
print("(alpha, beta)     n=64        n=256       n=1024")
for a, b in [(0.0, 0.0), (0.5, 0.5), (1.5, 0.0), (2.5, 0.0)]:
    vals = [max_basis_norm(nodes("GaussJacobi", n, a, b)).value for n in (64, 256, 1024)]
    print(f"({a:3.1f}, {b:3.1f})   " + "  ".join(f"{v:10.4g}" for v in vals))
# for gamma = 2.5 each factor of 4 in n multiplies the norm by about 16
