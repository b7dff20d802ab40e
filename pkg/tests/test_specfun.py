"""Special-function tests against closed forms and independent libraries."""
import math
import random

import mpmath
import pytest
import scipy.special as sp

from charlier.errors import ConvergenceError, DomainError
from charlier.specfun import (AIRY_SWITCH, SpecFunConfig, airy_ai, airy_ai_deriv,
                              airy_bi, airy_bi_deriv, hermite, log_gamma, pcf_d)


# ----------------------------------------------------------------------
# config
# ----------------------------------------------------------------------

def test_config_validation():
    with pytest.raises(ValueError):
        SpecFunConfig(series_tol=1e-5)
    with pytest.raises(ValueError):
        SpecFunConfig(series_tol=0.0)
    with pytest.raises(ValueError):
        SpecFunConfig(max_terms=10)
    cfg = SpecFunConfig(series_tol=1e-12, max_terms=50)
    assert cfg.max_terms == 50


# ----------------------------------------------------------------------
# log gamma
# ----------------------------------------------------------------------

@pytest.mark.parametrize("x,expected", [
    (5.0, math.log(24.0)),
    (1.0, 0.0),
    (0.5, math.log(math.sqrt(math.pi))),
])
def test_log_gamma_closed_forms(x, expected):
    assert log_gamma(x) == pytest.approx(expected, abs=1e-12, rel=1e-13)


def test_log_gamma_against_lgamma():
    for k in range(60):
        x = 0.1 * 10 ** (7 * k / 59.0)          # log-spaced over [0.1, 1e6]
        ref = math.lgamma(x)
        assert log_gamma(x) == pytest.approx(ref, rel=1e-13, abs=1e-13)


def test_log_gamma_recurrence():
    rng = random.Random(20240811)
    for _ in range(50):
        x = rng.uniform(0.5, 100.0)
        lhs = log_gamma(x + 1.0)
        rhs = log_gamma(x) + math.log(x)
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)


def test_log_gamma_domain():
    with pytest.raises(DomainError):
        log_gamma(0.0)
    with pytest.raises(DomainError):
        log_gamma(-1.5)


# ----------------------------------------------------------------------
# hermite
# ----------------------------------------------------------------------

@pytest.mark.parametrize("n,eta,expected", [
    (0, 0.7, 1.0),
    (1, 0.7, 1.4),
    (2, 0.0, -2.0),
])
def test_hermite_small(n, eta, expected):
    assert hermite(n, eta) == pytest.approx(expected, rel=1e-14, abs=1e-14)


def test_hermite_recurrence_consistency():
    for eta in range(-3, 4):
        for n in range(1, 51):
            lhs = hermite(n + 1, eta) - 2.0 * eta * hermite(n, eta) + 2.0 * n * hermite(n - 1, eta)
            scale = max(abs(hermite(n + 1, eta)), 1.0)
            assert abs(lhs) <= 1e-10 * scale


def test_hermite_against_scipy():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randrange(0, 16)
        eta = rng.uniform(-4.0, 4.0)
        assert hermite(n, eta) == pytest.approx(float(sp.eval_hermite(n, eta)), rel=1e-9)


# ----------------------------------------------------------------------
# airy
# ----------------------------------------------------------------------

def test_airy_at_zero():
    ai0 = 3.0 ** (-2.0 / 3.0) / math.gamma(2.0 / 3.0)
    bi0 = 3.0 ** (-1.0 / 6.0) / math.gamma(2.0 / 3.0)
    assert airy_ai(0.0) == pytest.approx(ai0, rel=1e-12)
    assert airy_bi(0.0) == pytest.approx(bi0, rel=1e-12)
    assert ai0 == pytest.approx(0.3550280539, abs=1e-9)
    assert bi0 == pytest.approx(0.6149266274, abs=1e-9)


def test_airy_absolute_error_central():
    # includes points on both sides of the series/asymptotics switch
    xs = [-10.0, -8.3, -7.1, -6.9, -5.0, -3.7, -1.2, 0.0, 0.9, 2.4, 4.8,
          6.0, 6.9, 7.1, 8.8, 10.0]
    for x in xs:
        assert abs(airy_ai(x) - float(mpmath.airyai(x))) <= 1e-10
        bi_ref = float(mpmath.airybi(x))
        if x <= 2.0:
            assert abs(airy_bi(x) - bi_ref) <= 1e-10
        else:
            assert airy_bi(x) == pytest.approx(bi_ref, rel=1e-8)


def test_airy_relative_error_tail():
    for k in range(25):
        x = AIRY_SWITCH + (30.0 - AIRY_SWITCH) * k / 24.0
        assert airy_ai(x) == pytest.approx(float(mpmath.airyai(x)), rel=1e-8)
        assert airy_bi(x) == pytest.approx(float(mpmath.airybi(x)), rel=1e-8)


def test_airy_ratio_matches_two_sided_asymptotic():
    # Ai/Bi approaches (1/2) exp(-(4/3) x^{3/2}); the next-order correction
    # is 10/(72 zeta), i.e. 1.4% at x = 6 and below 1% from x = 8 on
    for x, tol in ((6.0, 0.015), (8.0, 0.01)):
        ratio = airy_ai(x) / airy_bi(x)
        target = 0.5 * math.exp(-(4.0 / 3.0) * x ** 1.5)
        assert ratio == pytest.approx(target, rel=tol)


def test_airy_wronskian():
    # Ai Bi' - Ai' Bi = 1/pi across the central interval
    target = 1.0 / math.pi
    for k in range(26):
        x = -5.0 + 10.0 * k / 25.0
        w = airy_ai(x) * airy_bi_deriv(x) - airy_ai_deriv(x) * airy_bi(x)
        assert abs(w - target) <= 1e-8


def test_airy_derivatives_outside_switch():
    for x in (7.5, 12.0):
        assert airy_ai_deriv(x) == pytest.approx(float(mpmath.airyai(x, 1)), rel=1e-8)
        assert airy_bi_deriv(x) == pytest.approx(float(mpmath.airybi(x, 1)), rel=1e-8)
    for x in (-7.5, -9.4):
        assert abs(airy_ai_deriv(x) - float(mpmath.airyai(x, 1))) <= 1e-9
        assert abs(airy_bi_deriv(x) - float(mpmath.airybi(x, 1))) <= 1e-9


def test_airy_bi_overflow():
    with pytest.raises(OverflowError):
        airy_bi(200.0)


def test_airy_domain():
    with pytest.raises(DomainError):
        airy_ai(float("nan"))


# ----------------------------------------------------------------------
# parabolic cylinder
# ----------------------------------------------------------------------

def test_pcf_order_zero_and_one():
    assert pcf_d(0.0, 1.3) == pytest.approx(math.exp(-1.3 ** 2 / 4.0), rel=1e-12)
    assert pcf_d(0.0, 1.3) == pytest.approx(0.6554062543, abs=1e-10)
    assert pcf_d(1.0, 0.8) == pytest.approx(0.8 * math.exp(-0.16), rel=1e-12)
    assert pcf_d(1.0, 0.8) == pytest.approx(0.6817150312, abs=1e-10)


def test_pcf_at_zero_closed_form():
    # D_x(0) = 2^{x/2} sqrt(pi) / Gamma((1-x)/2), Gamma from an independent
    # high-precision oracle
    for x in (0.5, -1.3, 2.2, 4.9):
        expected = float(2.0 ** (x / 2.0) * mpmath.sqrt(mpmath.pi)
                         / mpmath.gamma((1.0 - x) / 2.0))
        assert pcf_d(x, 0.0) == pytest.approx(expected, rel=1e-11)
    assert pcf_d(0.5, 0.0) == pytest.approx(0.5813683170, abs=1e-9)


def test_pcf_hermite_identity():
    # D_n(u) = 2^{-n/2} e^{-u^2/4} H_n(u/sqrt(2)) for integer n
    rng = random.Random(99)
    for n in range(0, 11):
        for _ in range(4):
            u = rng.uniform(-5.0, 5.0)
            expected = 2.0 ** (-n / 2.0) * math.exp(-u * u / 4.0) * hermite(n, u / math.sqrt(2.0))
            if expected == 0.0:
                assert abs(pcf_d(float(n), u)) <= 1e-12
            else:
                assert pcf_d(float(n), u) == pytest.approx(expected, rel=1e-8)


def test_pcf_against_mpmath():
    rng = random.Random(4242)
    for _ in range(30):
        x = rng.uniform(-5.0, 5.0)
        u = rng.uniform(-10.0, 10.0)
        ref = float(mpmath.pcfd(x, u))
        assert pcf_d(x, u) == pytest.approx(ref, rel=1e-9, abs=1e-280)


def test_pcf_convergence_failure():
    cfg = SpecFunConfig(series_tol=1e-16, max_terms=50)
    with pytest.raises(ConvergenceError):
        pcf_d(0.5, 25.0, cfg)
