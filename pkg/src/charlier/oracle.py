"""Ground-truth evaluation of Charlier and Krawtchouk polynomials.

All evaluations run in extended precision (mpmath) because the defining
sum cancels catastrophically in double precision: at n = 25 and a near
2.17 the intermediate terms reach ~1e20 while the smallest zero sits near
1e-17.  Every asymptotic formula in this package is tested against these
evaluators.
"""
import math
from dataclasses import dataclass

from ._util import context, to_global_mpf
from .errors import DomainError

DEFAULT_DIGITS = 60
MIN_DIGITS = 50


@dataclass(frozen=True)
class Params:
    """Degree n and Charlier parameter a of C_n(x; a)."""

    n: int
    a: float

    def __post_init__(self):
        if not (isinstance(self.n, int) and self.n >= 0):
            raise DomainError("degree n must be a non-negative integer")
        if not self.a > 0:
            raise DomainError("parameter a must be positive")


@dataclass(frozen=True)
class BigReal:
    """An extended-precision real scalar tagged with its working precision."""

    value: object            # mpmath.mpf
    precision_digits: int

    def __post_init__(self):
        if self.precision_digits < MIN_DIGITS:
            raise DomainError("precision_digits must be at least %d" % MIN_DIGITS)

    def __float__(self):
        return float(self.value)

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class KrawtchoukScaling:
    """Snapshot of the scaled variables attached to one Krawtchouk configuration.

    epsilon = 1/N, q = 1 - p, y = x*epsilon, z = n*epsilon.
    """

    N: int
    p: float
    q: float
    epsilon: float
    y: float
    z: float

    @classmethod
    def from_point(cls, N, p, x, n):
        if N <= 0:
            raise DomainError("N must be positive")
        if not 0.0 < p < 1.0:
            raise DomainError("p must lie in (0, 1)")
        eps = 1.0 / N
        return cls(N=N, p=p, q=1.0 - p, epsilon=eps, y=x * eps, z=n * eps)

    def __post_init__(self):
        if self.q != 1.0 - self.p:
            raise DomainError("q must equal 1 - p exactly")
        if self.epsilon * self.N != 1.0:
            raise DomainError("epsilon must equal 1/N")


def _require_digits(digits):
    if digits < MIN_DIGITS:
        raise DomainError("working precision must be at least %d digits" % MIN_DIGITS)


def _charlier_sum_ctx(ctx, n, am, xm):
    """Terminating hypergeometric sum for C_n(x); k-th term updated in place."""
    s = term = ctx.mpf(1)
    for k in range(1, n + 1):
        term = term * (-(n - k + 1)) * (xm - k + 1) / (k * am)
        s += term
    return s


def _charlier_rec_ctx(ctx, n, am, xm):
    """Three-term recurrence a C_{k+1} = (k + a - x) C_k - k C_{k-1}."""
    if n == 0:
        return ctx.mpf(1)
    cm, c = ctx.mpf(1), 1 - xm / am
    for k in range(1, n):
        cm, c = c, ((k + am - xm) * c - k * cm) / am
    return c


def charlier_sum(params, x, digits=DEFAULT_DIGITS):
    """C_n(x; a) by the terminating series definition."""
    _require_digits(digits)
    ctx = context(digits)
    v = _charlier_sum_ctx(ctx, params.n, ctx.mpf(params.a), ctx.mpf(x))
    return BigReal(to_global_mpf(v), digits)


def charlier_recurrence(params, x, digits=DEFAULT_DIGITS):
    """C_n(x; a) by the three-term recurrence; independent of charlier_sum."""
    _require_digits(digits)
    ctx = context(digits)
    v = _charlier_rec_ctx(ctx, params.n, ctx.mpf(params.a), ctx.mpf(x))
    return BigReal(to_global_mpf(v), digits)


def krawtchouk(n, x, p, N, digits=DEFAULT_DIGITS):
    """Krawtchouk polynomial K_n(x; p, N) by its terminating sum."""
    _require_digits(digits)
    if not 0 <= n <= N:
        raise DomainError("krawtchouk requires 0 <= n <= N")
    if not 0.0 < float(p) < 1.0:
        raise DomainError("krawtchouk requires 0 < p < 1")
    ctx = context(digits)
    xm, pm = ctx.mpf(x), ctx.mpf(p)
    s = term = ctx.mpf(1)
    for k in range(n):
        term = term * (-(n - k)) * (-(xm - k)) / ((-(N - k)) * (k + 1)) / pm
        s += term
    return BigReal(to_global_mpf(s), digits)


def scaled_krawtchouk(n, x, p, N, digits=DEFAULT_DIGITS):
    """(-p)^n binom(N, n) K_n(x; p, N), binomial taken exactly."""
    _require_digits(digits)
    kn = krawtchouk(n, x, p, N, digits)
    ctx = context(digits)
    v = (-ctx.mpf(p)) ** n * math.comb(N, n) * ctx.mpf(kn.value._mpf_)
    return BigReal(to_global_mpf(v), digits)


def orthogonality_defect(n, m, a, j_max=200, digits=DEFAULT_DIGITS):
    """Relative defect of the Poisson-weighted orthogonality sum.

    Returns |sum_{j<=j_max} (a^j/j!) C_n(j) C_m(j) - delta_{nm} a^{-n} e^a n!|
    normalised by a^{-n} e^a n!.
    """
    _require_digits(digits)
    if n < 0 or m < 0:
        raise DomainError("degrees must be non-negative")
    ctx = context(digits)
    am = ctx.mpf(a)
    top = max(n, m)
    total = ctx.mpf(0)
    w = ctx.mpf(1)                      # a^j / j!
    for j in range(j_max + 1):
        xj = ctx.mpf(j)
        if top == 0:
            cn = cm = ctx.mpf(1)
        else:
            cs = [ctx.mpf(1), 1 - xj / am]
            for k in range(1, top):
                cs.append(((k + am - xj) * cs[k] - k * cs[k - 1]) / am)
            cn, cm = cs[n], cs[m]
        total += w * cn * cm
        w = w * am / (j + 1)
    norm = am ** (-n) * ctx.exp(am) * ctx.factorial(n)
    target = norm if n == m else ctx.mpf(0)
    return float(abs(total - target) / norm)


def limit_error(n, x, a, N, digits=DEFAULT_DIGITS):
    """|K_n(x, a/N, N) - C_n(x; a)|: the binomial-to-Poisson limit gap."""
    _require_digits(digits)
    if N < 10 * n:
        raise DomainError("limit_error requires N >= 10 n")
    ctx = context(digits)
    am, xm = ctx.mpf(a), ctx.mpf(x)
    pm = am / N
    s = term = ctx.mpf(1)
    for k in range(n):
        term = term * (-(n - k)) * (-(xm - k)) / ((-(N - k)) * (k + 1)) / pm
        s += term
    c = _charlier_sum_ctx(ctx, n, am, xm)
    return float(abs(s - c))
