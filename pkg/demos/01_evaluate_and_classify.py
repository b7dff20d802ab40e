"""Evaluate a Charlier polynomial three ways and watch the region map.

The exact value comes from the extended-precision oracle; the asymptotic
value comes from whichever approximation the classifier recommends at each
point.  Sweeping x across the parameter plane shows the eleven regions
light up in order: near-zero forms, the lower exponential zone, the Airy
layer, the oscillatory band, the second Airy layer, and the upper zone.
"""
import mpmath

from charlier import Params, charlier_sum, evaluate_auto, turning_points

params = Params(n=30, a=2.165184)
tp = turning_points(params)
print(f"degree n = {params.n}, parameter a = {params.a}")
print(f"turning points: X- = {tp.x_minus:.4f}, X+ = {tp.x_plus:.4f}\n")

print(f"{'x':>8} {'region':>7} {'formula':>8} {'approximation':>15} {'oracle':>15} {'rel err':>9}")
for x in (-2.0, 0.5, 1.5, 6.0, 11.5, 15.5, 25.0, 32.1, 47.5, 55.0, 70.0):
    region, name, value = evaluate_auto(params, x)
    oracle = charlier_sum(params, x).value
    rel = abs(value - oracle) / abs(oracle)
    print(f"{x:>8.2f} {region.value:>7} {name:>8} "
          f"{mpmath.nstr(value, 6):>15} {mpmath.nstr(oracle, 6):>15} "
          f"{mpmath.nstr(rel, 2):>9}")

print("\nNote: near-integer x inside (0, X-) the polynomial is within an")
print("exponentially small distance of a zero, so pointwise relative errors")
print("there say more about zero placement than about the formulas.")
