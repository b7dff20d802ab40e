"""Zeros of Charlier polynomials: exact (extended precision) and approximate.

For n > a the n real zeros on (0, inf) split into three groups:

* one exponentially small first zero,
* zeros exponentially close to the integers 1 .. floor(X-),
* the nontrivial zeros inside the oscillatory zone (X-, X+), located by a
  phase condition in the angle theta with x = n + a + 2 sin(theta) sqrt(an).

Exact zeros come from a sign-change scan of the extended-precision oracle
(geometric grid near 0 to catch the ~1e-17-scale first zero, uniform grid
beyond) followed by bisection.
"""
import enum
import math
from dataclasses import dataclass

from ._util import context, to_global_mpf
from .errors import BracketError, DomainError, PairingError, ZeroCountError
from .oracle import MIN_DIGITS, BigReal, _charlier_rec_ctx
from .asym import turning_points

DEFAULT_DIGITS = 60

#: sign-change scan: geometric leg from an adaptive floor up to GRID_KNEE,
#: then a uniform leg of step GRID_STEP up to GRID_SPAN * X+.
GRID_TINY = 1e-25
GRID_FLOOR_MIN = 1e-290
GRID_POINTS_PER_DECADE = 4
GRID_KNEE = 0.5
GRID_STEP = 0.05
GRID_SPAN = 1.2


class ZeroKind(enum.Enum):
    FIRST = "first"
    NEAR_INTEGER = "near_integer"
    NONTRIVIAL = "nontrivial"
    EXACT_ONLY = "exact"


@dataclass(frozen=True)
class ZeroRecord:
    """One table row: an approximate zero paired with its exact partner."""

    kind: ZeroKind
    index: object            # j for near-integer rows, l for nontrivial, else None
    exact: object            # BigReal or None
    approx: object           # float or None
    rel_err: object          # float or None


@dataclass(frozen=True)
class ThetaSolution:
    """Root of the phase condition for one admissible integer l."""

    l: int
    theta: float
    x: float


# ----------------------------------------------------------------------
# exact zeros
# ----------------------------------------------------------------------

def _scan_grid(params):
    """Geometric-then-uniform scan grid.

    The geometric floor adapts to the analytic first-zero estimate (the
    first zero shrinks like e^{-n ln(n/a)}, e.g. ~1e-75 already at n = 60),
    staying three decades below it.  Degrees whose first zero drops under
    the double-precision floor are out of range and will surface as a
    ZeroCountError.
    """
    floor = GRID_TINY
    if params.n > params.a:
        approx = first_zero_approx(params)
        if approx > 0.0:
            floor = min(GRID_TINY, max(approx * 1e-3, GRID_FLOOR_MIN))
    decades = math.log10(GRID_KNEE / floor)
    npts = max(60, int(math.ceil(decades * GRID_POINTS_PER_DECADE)))
    grid = [floor * (GRID_KNEE / floor) ** (i / (npts - 1.0)) for i in range(npts)]
    x = GRID_KNEE + GRID_STEP
    top = GRID_SPAN * turning_points(params).x_plus
    while x <= top:
        grid.append(x)
        x += GRID_STEP
    return grid


def exact_zeros(params, digits=DEFAULT_DIGITS):
    """All n zeros of C_n on (0, inf), bisected to 10^(-digits/2) relative.

    Raises ZeroCountError when the scan does not isolate exactly n sign
    changes (for instance when the working precision is too low for the
    cancellation in the oracle).
    """
    if digits < MIN_DIGITS:
        raise DomainError("digits must be at least %d" % MIN_DIGITS)
    n = params.n
    if n == 0:
        return []
    ctx = context(digits)
    am = ctx.mpf(params.a)
    grid = _scan_grid(params)
    values = [_charlier_rec_ctx(ctx, n, am, ctx.mpf(g)) for g in grid]

    brackets = []
    for i in range(len(grid) - 1):
        vi, vj = values[i], values[i + 1]
        if vi == 0:
            continue                     # grid point exactly on a root: right bracket catches it
        if vj == 0 or (vi > 0) != (vj > 0):
            brackets.append(i)
    if len(brackets) != n:
        raise ZeroCountError(
            "expected %d sign changes, found %d (n=%d, a=%g, digits=%d)"
            % (n, len(brackets), n, params.a, digits))

    rel_tol = ctx.mpf(10) ** (-(digits // 2))
    roots = []
    for i in brackets:
        lo, hi = ctx.mpf(grid[i]), ctx.mpf(grid[i + 1])
        flo = values[i]
        for _ in range(20 * digits):
            mid = (lo + hi) / 2
            fm = _charlier_rec_ctx(ctx, n, am, mid)
            if fm == 0:
                lo = hi = mid
                break
            if (fm > 0) == (flo > 0):
                lo, flo = mid, fm
            else:
                hi = mid
            if hi - lo <= rel_tol * abs(mid):
                break
        roots.append(BigReal(to_global_mpf((lo + hi) / 2), digits))
    return roots


# ----------------------------------------------------------------------
# approximate zeros
# ----------------------------------------------------------------------

def first_zero_approx(params):
    """The exponentially small first zero, from the slope of the polynomial
    at the origin: x0 = 1/(S - ln(n/a - 1)) with
    S = sqrt(2 pi n)/(n - a) * a^(-n) n^n e^(a-n)."""
    n, a = params.n, params.a
    if n <= a:
        raise DomainError("the first-zero form requires n > a")
    slope = math.sqrt(2.0 * math.pi * n) / (n - a) * math.exp(n * math.log(n / a) + a - n)
    return 1.0 / (slope - math.log(n / a - 1.0))


def first_zero_asymptotic(params):
    """Large-n simplification of first_zero_approx (logarithmic accuracy only)."""
    n, a = params.n, params.a
    if n <= a:
        raise DomainError("the first-zero form requires n > a")
    return math.exp(n - a + n * math.log(a / n)) / math.sqrt(2.0 * math.pi * n)


def near_integer_zeros(params):
    """Zeros exponentially close to j = 1 .. floor(X-), as (j, approx) pairs.

    The offset is exp[-(4/3) a^(-1/4) n^(-1/4) (X- - j)^(3/2)] / (2 pi); it
    decays doubly fast in the distance to the lower turning point.
    """
    n, a = params.n, params.a
    if n <= a:
        raise DomainError("near-integer zeros require n > a")
    x_minus = turning_points(params).x_minus
    out = []
    for j in range(1, int(math.floor(x_minus)) + 1):
        w = (4.0 / 3.0) * a ** -0.25 * n ** -0.25 * (x_minus - j) ** 1.5
        out.append((j, j + math.exp(-w) / (2.0 * math.pi)))
    return out


def admissible_l_max(params):
    """Largest integer l for which the phase condition brackets a root."""
    n, a = params.n, params.a
    return int(math.floor(2.0 * math.sqrt(a * n) - a - 0.75))


def theta_equation(params, theta, l):
    """Residual of the phase condition for the l-th nontrivial zero.

    Monotone decreasing in theta on (-pi/2, pi/2) for n > a.
    """
    n, a = params.n, params.a
    return (math.sqrt(a * n) * (math.sin(theta) * (2.0 * theta - math.pi) + 2.0 * math.cos(theta))
            + a * (0.5 * math.sin(2.0 * theta) + theta - math.pi / 2.0)
            - 3.0 * math.pi / 4.0 - math.pi * l)


def solve_theta(params, l, residual_tol=1e-12):
    """Bisection solve of the phase condition; maps theta back to x."""
    if l < 0:
        raise DomainError("l must be non-negative")
    lo, hi = -math.pi / 2.0, math.pi / 2.0
    flo, fhi = theta_equation(params, lo, l), theta_equation(params, hi, l)
    if not (flo > 0.0 > fhi):
        raise BracketError(
            "phase condition does not bracket a root for l=%d (admissible l <= %d)"
            % (l, admissible_l_max(params)))
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fm = theta_equation(params, mid, l)
        if fm > 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-16:
            break
    theta = 0.5 * (lo + hi)
    if abs(theta_equation(params, theta, l)) > residual_tol:
        raise BracketError("phase residual above tolerance for l=%d" % l)
    n, a = params.n, params.a
    return ThetaSolution(l=l, theta=theta,
                         x=n + a + 2.0 * math.sin(theta) * math.sqrt(a * n))


def approximate_zeros(params):
    """All n approximate zeros for n > a, sorted ascending, with kinds."""
    rows = [(ZeroKind.FIRST, None, first_zero_approx(params))]
    for j, xj in near_integer_zeros(params):
        rows.append((ZeroKind.NEAR_INTEGER, j, xj))
    for l in range(admissible_l_max(params) + 1):
        sol = solve_theta(params, l)
        rows.append((ZeroKind.NONTRIVIAL, l, sol.x))
    rows.sort(key=lambda r: r[2])
    return rows


def zero_table(params, digits=DEFAULT_DIGITS):
    """Approximate zeros paired with the exact ones; one record per zero.

    Pairing is nearest-neighbour on the sorted lists, with a check that no
    exact zero is claimed twice.
    """
    n, a = params.n, params.a
    if n <= a:
        raise DomainError("the zero decomposition requires n > a")
    approx = approximate_zeros(params)
    exact = exact_zeros(params, digits)
    if len(approx) != n:
        raise PairingError("expected %d approximate zeros, built %d" % (n, len(approx)))

    exact_floats = [float(z) for z in exact]
    claimed = {}
    records = []
    for kind, idx, ax in approx:
        best = min(range(n), key=lambda i: abs(exact_floats[i] - ax))
        if best in claimed:
            raise PairingError(
                "exact zero %g claimed by two approximations" % exact_floats[best])
        claimed[best] = True
        rel = abs(ax - exact_floats[best]) / abs(exact_floats[best])
        records.append(ZeroRecord(kind=kind, index=idx, exact=exact[best],
                                  approx=ax, rel_err=rel))
    records.sort(key=lambda r: r.approx)
    return records
