"""Large-degree reductions: structure checks and convergence toward the
full region forms."""
import math

import mpmath
import pytest

from charlier.errors import DomainError
from charlier.oracle import Params
from charlier.largen import ComplexValue, g3, g4, g7, g9, g10, g11
from charlier.asym import f7, f9, f10, f11, turning_points, x_from_t, x_from_s
from charlier.specfun import airy_ai, airy_bi
from charlier._util import cospi, sinpi

A_REF = 2.165184


def test_complex_value_requires_finite():
    with pytest.raises(DomainError):
        ComplexValue(re=mpmath.mpf("inf"), im=mpmath.mpf(0))


def test_g3_g4_are_conjugates():
    p = Params(n=200, a=A_REF)
    for th in (-1.0, -0.3, 0.2, 0.9):
        v3, v4 = g3(p, th), g4(p, th)
        assert float(abs(v3.re - v4.re) / abs(v3.re)) <= 1e-12
        assert float(abs(v3.im + v4.im) / abs(v3.im)) <= 1e-12


def test_g10_equals_branch_sum():
    p = Params(n=200, a=A_REF)
    for th in (-1.0, -0.3, 0.0, 0.3, 1.0):
        s = g3(p, th).to_mpc() + g4(p, th).to_mpc()
        v = g10(p, th)
        assert float(abs(s.imag) / abs(s.real)) <= 1e-10
        assert float(abs(v - s.real) / abs(v)) <= 1e-10


def test_g10_domain():
    with pytest.raises(DomainError):
        g10(Params(n=200, a=A_REF), 1.6)


def test_g7_structure():
    p = Params(n=200, a=A_REF)
    # at integer x = u n only the cosine branch survives
    u = 40.0 / 200.0
    first_only = (cospi(40.0) / math.sqrt(1 - u)
                  * mpmath.exp(mpmath.mpf((u * math.log(200 / A_REF)
                                           + (u - 1) * math.log(1 - u) - u) * 200
                                          + A_REF * u / (u - 1))))
    assert float(abs(g7(p, u) - first_only) / abs(first_only)) <= 1e-12
    with pytest.raises(DomainError):
        g7(p, 0.95)            # beyond the zone edge
    with pytest.raises(DomainError):
        g7(Params(n=10, a=20.0), 0.2)


def test_g9_structure():
    p = Params(n=200, a=A_REF)
    tp = turning_points(p)
    x0 = tp.x_minus
    expected = (math.sqrt(2 * math.pi) * A_REF ** (-1 / 6.0) * 200 ** (1 / 3.0)
                * (cospi(x0) * airy_ai(0.0) - sinpi(x0) * airy_bi(0.0))
                * mpmath.exp(mpmath.mpf(0.5 * (x0 + 200) * math.log(200 / A_REF)
                                        - 200 + 1.5 * A_REF)))
    got = g9(p, 0.0)
    assert float(abs(got - expected) / abs(expected)) <= 1e-12


def test_g9_roots_approximate_zeros_near_lower_edge():
    # sign changes of the reduction, mapped back to x, sit close to true
    # zeros (frozen: distances up to 0.07 within |t| <= 1 at degree 25)
    from charlier.zeros import exact_zeros
    p = Params(n=25, a=2.16564899)
    zs = [float(z) for z in exact_zeros(p, 60)]
    ts = [-1.0 + 2.0 * i / 400 for i in range(401)]
    vals = [float(g9(p, t)) for t in ts]
    roots = []
    for i in range(len(ts) - 1):
        if (vals[i] > 0) != (vals[i + 1] > 0):
            lo, hi, flo = ts[i], ts[i + 1], vals[i]
            for _ in range(60):
                m = 0.5 * (lo + hi)
                fm = float(g9(p, m))
                if (fm > 0) == (flo > 0):
                    lo, flo = m, fm
                else:
                    hi = m
            roots.append(x_from_t(p, 0.5 * (lo + hi)))
    assert roots
    for x in roots:
        assert min(abs(x - z) for z in zs) <= 0.08


def test_g11_structure_and_decay():
    p = Params(n=200, a=A_REF)
    tp = turning_points(p)
    expected = (math.sqrt(2 * math.pi) * A_REF ** (-1 / 6.0) * 200 ** (1 / 3.0)
                * airy_ai(0.0)
                * mpmath.exp(mpmath.mpf(0.5 * (tp.x_plus + 200) * math.log(200 / A_REF)
                                        - 200 + 1.5 * A_REF)))
    assert float(abs(g11(p, 0.0) - expected) / abs(expected)) <= 1e-12
    # the super-exponential Airy decay eventually beats the linear exponent
    # (crossover near s ~ 100 at this degree; immediately at small degree)
    assert abs(g11(p, 120.0)) < 1e-3 * abs(g11(p, 0.0))
    small = Params(n=5, a=A_REF)
    assert abs(g11(small, 3.0)) < abs(g11(small, 0.0))


def test_g11_parity_follows_the_zone():
    # above the upper turning point the polynomial's sign is (-1)^n
    podd = Params(n=201, a=A_REF)
    ratio = g11(podd, 1.0) / f11(podd, x_from_s(podd, 1.0))
    assert ratio > 0


@pytest.mark.parametrize("pair", ["g7", "g9", "g10", "g11"])
def test_reduction_gap_shrinks_with_degree(pair):
    gaps = []
    for n in (100, 200, 400):
        p = Params(n=n, a=A_REF)
        tp = turning_points(p)
        if pair == "g7":
            x = 0.2 * n
            gaps.append(float(abs(g7(p, 0.2) / f7(p, x) - 1)))
        elif pair == "g9":
            x = x_from_t(p, 0.5)
            gaps.append(float(abs(g9(p, 0.5) / f9(p, x) - 1)))
        elif pair == "g10":
            x = n + A_REF + 2 * math.sin(0.2) * math.sqrt(A_REF * n)
            gaps.append(float(abs(g10(p, 0.2) / f10(p, x) - 1)))
        else:
            x = x_from_s(p, 1.0)
            gaps.append(float(abs(g11(p, 1.0) / f11(p, x) - 1)))
    assert gaps[1] < gaps[0]
    assert gaps[2] < gaps[1]
