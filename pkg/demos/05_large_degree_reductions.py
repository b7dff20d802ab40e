"""How fast do the frozen-coordinate reductions approach the full forms?

Each reduction g pins its scaled coordinate (u, t, theta, s) and lets the
degree grow.  The lower-zone pair converges like 1/n; the Airy-layer and
oscillatory pairs only like n^(-1/3) with coefficients of order sqrt(a),
which is why they still sit tens of percent away at degree 200.
"""
import math

from charlier import Params, f7, f9, f10, f11, g7, g9, g10, g11
from charlier.asym import x_from_s, x_from_t

A = 2.165184

print(f"{'n':>5} {'g7 vs F7':>10} {'g9 vs F9':>10} {'g10 vs F10':>11} {'g11 vs F11':>11}")
for n in (100, 200, 400, 800, 1600):
    p = Params(n=n, a=A)
    gap7 = abs(g7(p, 0.2) / f7(p, 0.2 * n) - 1)
    gap9 = abs(g9(p, 0.5) / f9(p, x_from_t(p, 0.5)) - 1)
    x10 = n + A + 2 * math.sin(0.2) * math.sqrt(A * n)
    gap10 = abs(g10(p, 0.2) / f10(p, x10) - 1)
    gap11 = abs(g11(p, 1.0) / f11(p, x_from_s(p, 1.0)) - 1)
    print(f"{n:>5} {float(gap7):>10.5f} {float(gap9):>10.5f} "
          f"{float(gap10):>11.5f} {float(gap11):>11.5f}")

print("\nthe oscillatory pair also feels its phase error through a tangent")
print("factor, so its column shrinks unevenly on top of the n^(-1/3) trend.")
