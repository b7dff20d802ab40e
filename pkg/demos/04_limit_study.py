"""Watch Krawtchouk polynomials converge to a Charlier polynomial.

Setting the success probability to a/N couples the two families; the gap
shrinks like 1/N, which the halving error ratios below make visible.
"""
from charlier import Params, charlier_sum, krawtchouk, limit_error

n, a, x = 5, 2.0, 3.7
params = Params(n=n, a=a)
target = charlier_sum(params, x).value
print(f"C_{n}({x}) at a = {a}: {float(target):.12f}\n")

print(f"{'N':>7} {'K_n(x, a/N, N)':>18} {'abs err':>12} {'ratio':>8}")
prev = None
for k in range(7):
    N = 500 * 2 ** k
    kval = float(krawtchouk(n, x, a / N, N).value)
    err = limit_error(n, x, a, N)
    ratio = "" if prev is None else f"{err / prev:.4f}"
    print(f"{N:>7} {kval:>18.12f} {err:>12.3e} {ratio:>8}")
    prev = err

print("\nratios settle at 1/2: first-order convergence in 1/N.")
