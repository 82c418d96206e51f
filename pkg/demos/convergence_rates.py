"""Convergence of L_n[|x|] and L_n[|x|^3] at Gauss-Jacobi points.

For f with r - 1 absolutely continuous derivatives the maximum error decays
like n^(-r + max(0, gamma - 1/2)), gamma = max(alpha, beta).  The fitted
log-log slope is compared against that value, together with the a priori
bound built from the largest basis norm.
"""
from jacinterp import JacobiParams, PointSystemSpec, run_convergence

NS = [32, 64, 128, 256, 512, 1024]

for fn in ("abs", "abs3"):
    for a, b in [(0.0, 0.0), (-0.5, -0.5), (1.5, 0.0), (2.5, 0.0)]:
        rep = run_convergence(PointSystemSpec("GaussJacobi", NS[0], JacobiParams(a, b)), fn, NS)
        print(f"{fn:5s} alpha={a:4.1f} beta={b:4.1f}  fitted {rep.fitted_slope:+.3f}  "
              f"predicted {rep.predicted_slope:+.1f}  [{rep.verdict}]")
        worst = max(e / bd for _, e, bd in rep.rows)
        print(f"      error / bound at most {worst:.3f}")
