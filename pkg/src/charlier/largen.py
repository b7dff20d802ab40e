"""Large-degree reductions of the region approximations.

These are the forms the region formulas collapse to when n grows with the
scaled coordinate held fixed: a two-branch trigonometric form in the lower
exponential zone (g7), Airy layers with frozen arguments at the turning
points (g9, g11), and complex-conjugate oscillatory branches (g3, g4)
whose sum has the closed real cosine form g10.

g3/g4 and g10 are computed along independent paths on purpose: their
agreement is a transcription check, not a tautology.
"""
import cmath
import math
from dataclasses import dataclass

import mpmath

from ._util import cospi, sinpi
from .errors import DomainError
from .specfun import airy_ai, airy_bi

_SQRT_2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class ComplexValue:
    """A finite complex scalar with mpmath components (exponent-safe)."""

    re: object
    im: object

    def to_mpc(self):
        return mpmath.mpc(self.re, self.im)

    def __post_init__(self):
        if not (mpmath.isfinite(self.re) and mpmath.isfinite(self.im)):
            raise DomainError("complex value must have finite components")


def _exp_mpf(exponent):
    return mpmath.exp(mpmath.mpf(exponent))


def _check_theta(theta):
    if not -math.pi / 2 < theta < math.pi / 2:
        raise DomainError("theta must lie in (-pi/2, pi/2)")


def _oscillatory_parts(params, theta):
    """Shared real exponent and phase of the conjugate pair at angle theta."""
    n, a = params.n, params.a
    re = ((math.log(n / a) - 1.0) * n
          + math.sqrt(a * n) * math.sin(theta) * math.log(n / a)
          + a * (1.0 - 0.5 * math.cos(2.0 * theta) + 0.5 * math.log(n / a)))
    phase = (math.sqrt(a * n) * (math.sin(theta) * (2.0 * theta - math.pi) + 2.0 * math.cos(theta))
             + a * (0.5 * math.sin(2.0 * theta) + theta - math.pi / 2))
    pref = (-1.0) ** (params.n % 2) * a ** -0.25 * n ** 0.25 / math.sqrt(2.0 * math.cos(theta))
    return re, phase, pref


def g3(params, theta):
    """Lower oscillatory branch at x = n + a + 2 sin(theta) sqrt(an)."""
    _check_theta(theta)
    re, phase, pref = _oscillatory_parts(params, theta)
    ph = cmath.exp(complex(0.0, math.pi / 4.0 - phase)) * pref
    v = _exp_mpf(re) * mpmath.mpc(ph.real, ph.imag)
    return ComplexValue(re=v.real, im=v.imag)


def g4(params, theta):
    """Upper oscillatory branch: the complex conjugate companion of g3."""
    _check_theta(theta)
    re, phase, pref = _oscillatory_parts(params, theta)
    ph = cmath.exp(complex(0.0, phase - math.pi / 4.0)) * pref
    v = _exp_mpf(re) * mpmath.mpc(ph.real, ph.imag)
    return ComplexValue(re=v.real, im=v.imag)


def g10(params, theta):
    """Real cosine form of the oscillatory zone; equals g3 + g4."""
    _check_theta(theta)
    n, a = params.n, params.a
    re, phase, _ = _oscillatory_parts(params, theta)
    pref = (-1.0) ** (params.n % 2) * math.sqrt(2.0) * a ** -0.25 * n ** 0.25 / math.sqrt(math.cos(theta))
    return pref * math.cos(phase - math.pi / 4.0) * _exp_mpf(re)


def g7(params, u_frac):
    """Two-branch lower-zone reduction at x = u_frac * n.

    The cosine branch is subdominant but indispensable near integer x,
    where the sine factor of the dominant branch vanishes.
    """
    n, a = params.n, params.a
    if n <= a:
        raise DomainError("g7 requires n > a")
    u_top = 1.0 - 2.0 * math.sqrt(a / n) + a / n
    if not 0.0 < u_frac < u_top:
        raise DomainError("u_frac must lie in (0, 1 - 2 sqrt(a/n) + a/n)")
    x = u_frac * n
    first = (cospi(x) / math.sqrt(1.0 - u_frac)
             * _exp_mpf((u_frac * math.log(n / a) + (u_frac - 1.0) * math.log(1.0 - u_frac) - u_frac) * n
                        + a * u_frac / (u_frac - 1.0)))
    second = (2.0 * sinpi(x) * math.sqrt(u_frac / (1.0 - u_frac))
              * _exp_mpf((math.log(n / a) + (1.0 - u_frac) * math.log(1.0 - u_frac)
                          + u_frac * math.log(u_frac) - 1.0) * n + a / (1.0 - u_frac)))
    return first - second


def g9(params, t):
    """Frozen-argument Airy layer at x = X- + t n^{1/6} (n > a)."""
    n, a = params.n, params.a
    if n <= a:
        raise DomainError("g9 requires n > a")
    x_minus = (math.sqrt(n) - math.sqrt(a)) ** 2
    x = x_minus + t * n ** (1.0 / 6.0)
    pref = _SQRT_2PI * a ** (-1.0 / 6.0) * n ** (1.0 / 3.0)
    expo = 0.5 * (x + n) * math.log(n / a) - n + 1.5 * a
    arg = -t * a ** (-1.0 / 6.0)
    combo = cospi(x) * airy_ai(arg) - sinpi(x) * airy_bi(arg)
    return pref * combo * _exp_mpf(expo)


def g11(params, s):
    """Frozen-argument Airy layer at x = X+ + s n^{1/6}.

    Carries the same parity sign as the zone it reduces from: above the
    upper turning point the polynomial has the sign of (-1)^n.
    """
    n, a = params.n, params.a
    if n < 1:
        raise DomainError("g11 requires n >= 1")
    x_plus = (math.sqrt(n) + math.sqrt(a)) ** 2
    x = x_plus + s * n ** (1.0 / 6.0)
    pref = (-1.0) ** (n % 2) * _SQRT_2PI * a ** (-1.0 / 6.0) * n ** (1.0 / 3.0)
    expo = 0.5 * (x + n) * math.log(n / a) - n + 1.5 * a
    return pref * airy_ai(s * a ** (-1.0 / 6.0)) * _exp_mpf(expo)
