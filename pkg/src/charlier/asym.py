"""Region geometry, the region classifier, and the eleven asymptotic forms.

The (n, a, x) parameter space splits into eleven regions separated by the
turning points X- = (sqrt(n)-sqrt(a))^2 and X+ = (sqrt(n)+sqrt(a))^2: two
small-degree regions (I, II), exponential zones below and above the
oscillatory band (III, IV, VII), near-zero transition regions (V, VI),
Airy layers around each turning point (VIII, IX, XI), and the oscillatory
zone itself (X).  Each region has its own approximation F1..F11.

Evaluations can exceed the double-precision exponent range (the
polynomials reach e.g. ~1e309 already at n = 200 inside the oscillatory
zone), so every F-function assembles bounded prefactors in floats but
exponentiates through mpmath and returns an mpmath scalar.

Phase-carrying exponents are evaluated with complex logs on the principal
branch; the real forms below the lower turning point and above the upper
one are algebraically equivalent rearrangements with all log arguments
positive.
"""
import cmath
import enum
import math
from dataclasses import dataclass

import mpmath

from ._util import cospi, sinpi
from .errors import DomainError, SingularityError
from .specfun import DEFAULT_CONFIG, airy_ai, airy_bi, gamma, hermite, pcf_d

_IM_RESIDUE_TOL = 1e-8


class Region(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"
    VII = "VII"
    VIII = "VIII"
    IX = "IX"
    X = "X"
    XI = "XI"


@dataclass(frozen=True)
class TurningPoints:
    """Boundaries of the oscillatory zone: all nontrivial zeros lie between them."""

    x_minus: float
    x_plus: float

    @property
    def width(self):
        return self.x_plus - self.x_minus


@dataclass(frozen=True)
class Discriminant:
    """Principal-branch sqrt(a^2 - 2a(x+n) + (x-n)^2).

    Real and non-negative outside [X-, X+], purely imaginary with positive
    imaginary part strictly inside, zero exactly at the turning points.
    """

    delta: complex

    @property
    def is_real(self):
        return self.delta.imag == 0.0


@dataclass(frozen=True)
class ClassifierConfig:
    """Tunable geometry of the classifier.

    kappa scales the Airy-band half width |x - X(+/-)| <= kappa
    (a/n)^{1/6} |sqrt(n) -/+ sqrt(a)|^{2/3}; x_small bounds the near-zero
    regions V/VI; n_small is the largest degree routed to the exact
    small-degree forms; na_band_factor sets |n - a| <= na_band_factor
    sqrt(a) as the V/VI boundary.
    """

    kappa: float = 1.5
    x_small: float = 2.0
    n_small: int = 1
    na_band_factor: float = 1.5

    def __post_init__(self):
        if self.kappa <= 0 or self.x_small <= 0 or self.na_band_factor <= 0:
            raise DomainError("classifier scales must be positive")
        if self.n_small < 1:
            raise DomainError("n_small must be at least 1")


DEFAULT_CLASSIFIER = ClassifierConfig()


@dataclass(frozen=True)
class RegionDecision:
    recommended: Region
    applicable: frozenset


@dataclass(frozen=True)
class ScaledCoordinate:
    """Local coordinates of the transition regions, where defined.

    eta: region II offset, x = a + eta sqrt(2a).
    u: region VI degree offset, n = a - u sqrt(a).
    theta: oscillatory-zone angle, x = n + a + 2 sin(theta) sqrt(an),
        defined only for X- < x < X+.
    t, s: Airy-layer offsets x = X- + t n^{1/6} and x = X+ + s n^{1/6}.
    """

    eta: float
    u: float
    theta: object          # float or None
    t: float
    s: float

    @classmethod
    def at_point(cls, params, x):
        tp = turning_points(params)
        return cls(
            eta=eta_from_x(params, x),
            u=u_from_params(params),
            theta=theta_from_x(params, x),
            t=(x - tp.x_minus) / params.n ** (1.0 / 6.0) if params.n > 0 else 0.0,
            s=(x - tp.x_plus) / params.n ** (1.0 / 6.0) if params.n > 0 else 0.0,
        )


# ----------------------------------------------------------------------
# geometry and coordinates
# ----------------------------------------------------------------------

def turning_points(params):
    """X-/X+ = (sqrt(n) -/+ sqrt(a))^2."""
    rn, ra = math.sqrt(params.n), math.sqrt(params.a)
    return TurningPoints(x_minus=(rn - ra) ** 2, x_plus=(rn + ra) ** 2)


def _radicand(params, x):
    n, a = params.n, params.a
    return a * a - 2.0 * a * (x + n) + (x - n) ** 2


def discriminant(params, x):
    """Principal-branch discriminant at x."""
    return Discriminant(delta=cmath.sqrt(complex(_radicand(params, x))))


def eta_from_x(params, x):
    return (x - params.a) / math.sqrt(2.0 * params.a)


def x_from_eta(params, eta):
    return params.a + eta * math.sqrt(2.0 * params.a)


def u_from_params(params):
    """Region VI degree offset u = (a - n)/sqrt(a)."""
    return (params.a - params.n) / math.sqrt(params.a)


def theta_from_x(params, x):
    """Oscillatory-zone angle, or None outside (X-, X+)."""
    if params.n == 0:
        return None
    s = (x - params.n - params.a) / (2.0 * math.sqrt(params.a * params.n))
    if not -1.0 < s < 1.0:
        return None
    return math.asin(s)


def x_from_theta(params, theta):
    if not -math.pi / 2 < theta < math.pi / 2:
        raise DomainError("theta must lie in (-pi/2, pi/2)")
    return params.n + params.a + 2.0 * math.sin(theta) * math.sqrt(params.a * params.n)


def x_from_t(params, t):
    return turning_points(params).x_minus + t * params.n ** (1.0 / 6.0)


def x_from_s(params, s):
    return turning_points(params).x_plus + s * params.n ** (1.0 / 6.0)


# ----------------------------------------------------------------------
# classifier
# ----------------------------------------------------------------------

def _airy_halfwidth(params, sign, cfg):
    """kappa (a/n)^{1/6} |sqrt(n) + sign*sqrt(a)|^{2/3}."""
    n, a = params.n, params.a
    edge = abs(math.sqrt(n) + sign * math.sqrt(a))
    return cfg.kappa * (a / n) ** (1.0 / 6.0) * edge ** (2.0 / 3.0)


def classify(params, x, cfg=DEFAULT_CLASSIFIER):
    """Deterministically tag (n, a, x) with one recommended region.

    Also returns the full set of regions whose (looser) side conditions
    hold at the point; the recommended tag is always a member.
    """
    n, a = params.n, params.a
    applicable = set()

    if n <= max(cfg.n_small, 5):
        applicable.add(Region.I)
        if abs(x - a) <= 2.0 * cfg.kappa * math.sqrt(2.0 * a):
            applicable.add(Region.II)
    if abs(n - a) <= 2.0 * cfg.na_band_factor * math.sqrt(a) and abs(x) <= cfg.x_small:
        applicable.add(Region.VI)
    if n > a and -1.0 < x <= cfg.x_small:
        applicable.add(Region.V)

    if n > cfg.n_small:
        tp = turning_points(params)
        wm = _airy_halfwidth(params, -1.0, cfg)
        wp = _airy_halfwidth(params, +1.0, cfg)
        if x <= 0 or (n < a and x <= tp.x_minus):
            applicable.add(Region.III)
        if n > a and 0 < x <= tp.x_minus:
            applicable.add(Region.VII)
        if abs(x - tp.x_minus) <= 2.0 * wm:
            applicable.add(Region.VIII if n < a else Region.IX)
        if abs(x - tp.x_plus) <= 2.0 * wp:
            applicable.add(Region.XI)
        if tp.x_minus < x < tp.x_plus:
            applicable.add(Region.X)
        if x >= tp.x_plus:
            applicable.add(Region.IV)

    recommended = _recommend(params, x, cfg)
    applicable.add(recommended)
    return RegionDecision(recommended=recommended, applicable=frozenset(applicable))


def _recommend(params, x, cfg):
    n, a = params.n, params.a
    if n <= cfg.n_small:
        if abs(x - a) <= cfg.kappa * math.sqrt(2.0 * a):
            return Region.II
        return Region.I
    if abs(n - a) <= cfg.na_band_factor * math.sqrt(a) and abs(x) <= cfg.x_small:
        return Region.VI
    if n > a and -1.0 < x <= cfg.x_small:
        # the near-zero form carries a Gamma(x+1) factor, so x <= -1 falls
        # through to the lower-zone form, which is valid for all x < 0
        return Region.V
    tp = turning_points(params)
    wm = _airy_halfwidth(params, -1.0, cfg)
    wp = _airy_halfwidth(params, +1.0, cfg)
    if x < 0:
        return Region.III
    if abs(x - tp.x_minus) <= wm and n != a:
        return Region.VIII if n < a else Region.IX
    if abs(x - tp.x_plus) <= wp:
        return Region.XI
    if x < tp.x_minus:
        return Region.III if n < a else Region.VII
    if x < tp.x_plus:
        return Region.X
    return Region.IV


# ----------------------------------------------------------------------
# the eleven approximations
# ----------------------------------------------------------------------

def _exp_mpf(exponent):
    """exp() without double-range overflow: goes through mpmath."""
    return mpmath.exp(mpmath.mpf(exponent))


def _phase_times_exp(psi, prefactor):
    """prefactor * e^psi for complex psi: bounded phase in floats, modulus in mpmath."""
    ph = cmath.exp(complex(0.0, psi.imag)) * prefactor
    return _exp_mpf(psi.real) * mpmath.mpc(ph.real, ph.imag)


def _delta_or_raise(params, x):
    rad = _radicand(params, x)
    if rad == 0.0:
        raise SingularityError("discriminant vanishes at a turning point")
    return cmath.sqrt(complex(rad))


def f1(params, x):
    """Small-degree form (1 - x/a)^n; exact for n = 0, 1."""
    n, a = params.n, params.a
    base = 1.0 - x / a
    if n == 0 or base == 0.0:
        return mpmath.mpf(1.0 if n == 0 else 0.0)
    sign = 1.0 if base > 0 or n % 2 == 0 else -1.0
    return sign * _exp_mpf(n * math.log(abs(base)))


def f2(params, eta):
    """Small-degree Hermite form at x = a + eta sqrt(2a); exact for n = 0, 1."""
    n, a = params.n, params.a
    h = hermite(n, eta)
    return (-1.0) ** (n % 2) * h * _exp_mpf(-0.5 * n * math.log(2.0 * a))


def f3_complex(params, x):
    """Principal-branch exponential-zone form (lower zone), complex-valued."""
    n, a = params.n, params.a
    d = _delta_or_raise(params, x)
    psi = (x * cmath.log((a + x - n + d) / (2.0 * a))
           + n * cmath.log((a - x + n + d) / (2.0 * a))
           + 0.5 * (a - x - n - d))
    ell = cmath.sqrt((a - x - n + d) / (2.0 * d))
    return _phase_times_exp(psi, ell)


def f4_complex(params, x):
    """Principal-branch exponential-zone form (upper zone), complex-valued."""
    n, a = params.n, params.a
    d = _delta_or_raise(params, x)
    psi = (x * cmath.log((a + x - n - d) / (2.0 * a))
           + n * cmath.log((x - a - n + d) / (2.0 * a))
           + 0.5 * (a - x - n + d))
    ell = cmath.sqrt((x - a + n + d) / (2.0 * d)) * (-1.0) ** (n % 2)
    return _phase_times_exp(psi, ell)


def _real_part_checked(v, what):
    if abs(v.imag) > _IM_RESIDUE_TOL * (abs(v.real) + mpmath.mpf("1e-300")):
        raise DomainError("%s is not real here (imaginary residue too large)" % what)
    return v.real


def f3(params, x):
    """Approximation below the lower turning point (and for all x < 0)."""
    return _real_part_checked(f3_complex(params, x), "F3")


def f4(params, x):
    """Approximation above the upper turning point."""
    return _real_part_checked(f4_complex(params, x), "F4")


def f5(params, x):
    """Near-zero approximation for n > a.

    Exact at x = 0 and x = 1.  The trigonometric factors are reduced
    exactly at integers, otherwise the second term's huge exponential
    amplifies the sin(pi x) rounding residue.
    """
    n, a = params.n, params.a
    if n <= a:
        raise DomainError("F5 requires n > a")
    if x <= -1.0:
        raise DomainError("F5 requires x > -1")
    first = cospi(x) * _exp_mpf(x * math.log(n / a - 1.0))
    s = sinpi(x)
    if s == 0.0:
        return first
    second = (math.sqrt(n) * math.sqrt(2.0 / math.pi) * gamma(x + 1.0) * s
              * _exp_mpf(n * math.log(n / a) - (x + 1.0) * math.log(n - a) + a - n))
    return first - second


def f6(params, x):
    """Near-zero approximation for n close to a, via the parabolic cylinder
    function at u = (a - n)/sqrt(a)."""
    n, a = params.n, params.a
    u = u_from_params(params)
    d = pcf_d(x, u, DEFAULT_CONFIG)
    return d * _exp_mpf(-0.5 * x * math.log(a) + u * u / 4.0)


def f7(params, x):
    """Exponential-zone form between 0 and X- for n > a.

    Combines a dominant and a subdominant branch weighted by sin/cos of
    pi x; the polynomial's zeros exponentially close to the integers in
    this zone come from the sign changes of the sin factor.
    """
    n, a = params.n, params.a
    if n <= a:
        raise DomainError("F7 requires n > a")
    tp = turning_points(params)
    if not 0.0 < x < tp.x_minus:
        raise DomainError("F7 requires 0 < x < X-")
    d = math.sqrt(_radicand(params, x))
    if d == 0.0:
        raise SingularityError("discriminant vanishes at a turning point")
    e_sub = (x * math.log((n - a - x + d) / (2.0 * a))
             + n * math.log((a + n - x - d) / (2.0 * a))
             + 0.5 * (a - x - n + d))
    l_sub = math.sqrt((x + n - a + d) / (2.0 * d))
    e_dom = (x * math.log((n - a - x - d) / (2.0 * a))
             + n * math.log((a + n - x + d) / (2.0 * a))
             + 0.5 * (a - x - n - d))
    l_dom = math.sqrt((x + n - a - d) / (2.0 * d))
    return cospi(x) * l_sub * _exp_mpf(e_sub) - 2.0 * sinpi(x) * l_dom * _exp_mpf(e_dom)


def f8(params, x):
    """Airy layer around X- for n < a."""
    n, a = params.n, params.a
    if not 0 < n < a:
        raise DomainError("F8 requires 0 < n < a")
    tp = turning_points(params)
    root_gap = math.sqrt(a) - math.sqrt(n)
    arg = (n / a) ** (1.0 / 6.0) * (tp.x_minus - x) / root_gap ** (2.0 / 3.0)
    pref = math.sqrt(2.0 * math.pi) * (n / a) ** (1.0 / 6.0) * root_gap ** (1.0 / 3.0)
    expo = (0.5 * n * math.log(n / a) + x * math.log(1.0 - math.sqrt(n / a))
            + math.sqrt(a * n) - n)
    return pref * airy_ai(arg) * _exp_mpf(expo)


def f9(params, x):
    """Airy layer around X- for n > a (both Airy kinds, weighted by cos/sin)."""
    n, a = params.n, params.a
    if not n > a:
        raise DomainError("F9 requires n > a")
    tp = turning_points(params)
    root_gap = math.sqrt(n) - math.sqrt(a)
    arg = (n / a) ** (1.0 / 6.0) * (tp.x_minus - x) / root_gap ** (2.0 / 3.0)
    pref = math.sqrt(2.0 * math.pi) * (n / a) ** (1.0 / 6.0) * root_gap ** (1.0 / 3.0)
    expo = (0.5 * n * math.log(n / a) + x * math.log(math.sqrt(n / a) - 1.0)
            + math.sqrt(a * n) - n)
    combo = cospi(x) * airy_ai(arg) - sinpi(x) * airy_bi(arg)
    return pref * combo * _exp_mpf(expo)


def f10(params, x):
    """Oscillatory-zone form: the two conjugate exponential branches summed.

    The imaginary parts cancel; an assertion guards the residue.
    """
    v = f3_complex(params, x) + f4_complex(params, x)
    return _real_part_checked(v, "F10")


def f11(params, x):
    """Airy layer around the upper turning point X+."""
    n, a = params.n, params.a
    if n < 1:
        raise DomainError("F11 requires n >= 1")
    tp = turning_points(params)
    root_sum = math.sqrt(a) + math.sqrt(n)
    arg = (n / a) ** (1.0 / 6.0) * (x - tp.x_plus) / root_sum ** (2.0 / 3.0)
    pref = math.sqrt(2.0 * math.pi) * (n / a) ** (1.0 / 6.0) * root_sum ** (1.0 / 3.0)
    expo = (0.5 * n * math.log(n / a) + x * math.log(1.0 + math.sqrt(n / a))
            - math.sqrt(a * n) - n)
    return (-1.0) ** (n % 2) * pref * airy_ai(arg) * _exp_mpf(expo)


_FORMULA_BY_REGION = {
    Region.I: "F1", Region.II: "F2", Region.III: "F3", Region.IV: "F4",
    Region.V: "F5", Region.VI: "F6", Region.VII: "F7", Region.VIII: "F8",
    Region.IX: "F9", Region.X: "F10", Region.XI: "F11",
}

_FORMULAS = {
    "F1": lambda p, x: f1(p, x),
    "F2": lambda p, x: f2(p, eta_from_x(p, x)),
    "F3": lambda p, x: f3(p, x),
    "F4": lambda p, x: f4(p, x),
    "F5": lambda p, x: f5(p, x),
    "F6": lambda p, x: f6(p, x),
    "F7": lambda p, x: f7(p, x),
    "F8": lambda p, x: f8(p, x),
    "F9": lambda p, x: f9(p, x),
    "F10": lambda p, x: f10(p, x),
    "F11": lambda p, x: f11(p, x),
}


def formula_for_region(region):
    """Name of the approximation recommended inside a region."""
    return _FORMULA_BY_REGION[region]


def evaluate_formula(params, x, name):
    """Evaluate one of F1..F11 at x (region II's eta is derived from x)."""
    try:
        fn = _FORMULAS[name]
    except KeyError:
        raise DomainError("unknown formula %r" % name) from None
    return fn(params, x)


def evaluate_auto(params, x, cfg=DEFAULT_CLASSIFIER):
    """Classifier-selected approximation at x: (region, formula name, value)."""
    decision = classify(params, x, cfg)
    name = formula_for_region(decision.recommended)
    return decision.recommended, name, evaluate_formula(params, x, name)
