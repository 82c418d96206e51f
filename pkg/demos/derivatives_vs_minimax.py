"""Derivatives of the interpolant against derivatives of the best approximation.

f = |x|^7 has six continuous derivatives.  At Chebyshev extreme points each
derivative of the interpolant loses one power of n; the minimax polynomial
of the same degree is a far better approximant of f itself but its
derivatives lose two powers per order, so the interpolant wins for m >= 1.
"""
from jacinterp import JacobiParams, PointSystemSpec, run_derivative_comparison

# slopes use the last five sizes; below n ~ 75 the second-derivative error
# is still dominated by the endpoints rather than the kink
tab = run_derivative_comparison(PointSystemSpec("ChebyshevSecond", 10, JacobiParams(0, 0)),
                                "abs7", list(range(10, 131, 10)), orders=(0, 1, 2))
print("  n  m   interpolant      minimax")
for n, m, ei, eb in tab.rows:
    print(f"{n:3d}  {m}  {ei:12.4e}  {eb:12.4e}")
for m in tab.orders:
    print(f"m={m}: slopes interpolant {tab.interp_slopes[m]:+.2f}, minimax {tab.remez_slopes[m]:+.2f}")
