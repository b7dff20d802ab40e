"""Internal helpers: precision contexts, exact-at-integers trig, formatting."""
import math
from functools import lru_cache

import mpmath
from mpmath.ctx_mp import MPContext


@lru_cache(maxsize=64)
def context(dps):
    """Return a cached independent mpmath context with the given precision.

    Contexts are never mutated after creation, so sharing the cached
    instance between threads is safe.
    """
    ctx = MPContext()
    ctx.dps = dps
    return ctx


def to_global_mpf(x):
    """Re-wrap a context-local mpf as a standard mpmath.mpf, losslessly."""
    return mpmath.mp.make_mpf(x._mpf_)


def sinpi(x):
    """sin(pi*x), exactly zero at integer x.

    Plain ``math.sin(math.pi * x)`` leaves an O(1e-16) residue at integers,
    which the exponentially large prefactors in the oscillatory formulas
    amplify into garbage.
    """
    r = round(x)
    s = math.sin(math.pi * (x - r))
    return -s if r % 2 else s


def cospi(x):
    """cos(pi*x) with the same integer-exact reduction as sinpi."""
    r = round(x)
    c = math.cos(math.pi * (x - r))
    return -c if r % 2 else c


def fmt(value):
    """Deterministic 17-significant-digit cell formatting for CSV output."""
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (int,)):
        return str(value)
    if isinstance(value, float):
        return "%.17g" % value
    # mpmath scalar
    return mpmath.nstr(value, 17)
