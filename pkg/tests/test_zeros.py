"""Zero machinery: exact bisection, closed-form approximations, the phase
equation, and the merged table."""
import math

import pytest

import charlier.zeros as zeros_mod
from charlier.errors import BracketError, DomainError, PairingError, ZeroCountError
from charlier.oracle import Params, charlier_sum
from charlier.asym import turning_points
from charlier.zeros import (ZeroKind, admissible_l_max, approximate_zeros,
                            exact_zeros, first_zero_approx, first_zero_asymptotic,
                            near_integer_zeros, solve_theta, theta_equation,
                            zero_table)

P25 = Params(n=25, a=2.16564899)

# reference zero table for degree 25 (exact column, 8 significant digits)
EXACT_25 = [4.1229323e-17, 1.0000000, 2.0000000, 3.0000000, 4.0000000,
            5.0000001, 6.0000015, 7.0000227, 8.0002574, 9.0021153,
            10.012329, 11.050278, 12.147166, 13.330606, 14.615276,
            16.007976, 17.514470, 19.142918, 20.905595, 22.820702,
            24.915443, 27.232157, 29.842164, 32.883964, 36.717784]


def test_exact_zeros_degree_one():
    zs = exact_zeros(Params(n=1, a=2.0))
    assert len(zs) == 1
    assert float(zs[0]) == pytest.approx(2.0, rel=1e-28)


def test_exact_zeros_reference_table():
    zs = exact_zeros(P25)
    assert len(zs) == 25
    vals = [float(z) for z in zs]
    assert vals == sorted(vals)
    for got, ref in zip(vals, EXACT_25):
        assert got == pytest.approx(ref, rel=5e-7)
    # each returned zero is a genuine sign change of the oracle
    for z in vals[1:]:
        lo = charlier_sum(P25, z * (1 - 1e-10), 80).value
        hi = charlier_sum(P25, z * (1 + 1e-10), 80).value
        assert (lo > 0) != (hi > 0)


def test_exact_zeros_needs_enough_digits():
    with pytest.raises(DomainError):
        exact_zeros(P25, digits=30)


def test_exact_zeros_count_mismatch(monkeypatch):
    monkeypatch.setattr(zeros_mod, "GRID_SPAN", 0.5)
    with pytest.raises(ZeroCountError):
        exact_zeros(P25)


def test_first_zero_values():
    x0 = first_zero_approx(P25)
    assert x0 == pytest.approx(4.1549216575561414e-17, rel=1e-12)   # frozen
    assert x0 == pytest.approx(0.41549221e-16, rel=5e-7)            # tabulated
    exact0 = float(exact_zeros(P25)[0])
    assert abs(x0 - exact0) / exact0 <= 0.01                        # measured 0.78%
    with pytest.raises(DomainError):
        first_zero_approx(Params(n=3, a=5.0))


def test_first_zero_monotone_in_degree():
    prev = None
    for n in range(7, 61):
        x0 = first_zero_approx(Params(n=n, a=2.0))
        if prev is not None:
            assert x0 < prev
        prev = x0


def test_first_zero_asymptotic_form():
    # the simplified form carries the right exponential scale; the full
    # form exceeds it by roughly the factor (n - a)
    n, a = 25, 2.16564899
    full = first_zero_approx(P25)
    simple = first_zero_asymptotic(P25)
    assert abs(full / simple - (n - a)) <= 0.01


def test_near_integer_zeros():
    rows = near_integer_zeros(P25)
    assert len(rows) == 12                                          # floor(X-)
    assert rows[0][0] == 1 and rows[-1][0] == 12
    by_j = dict(rows)
    assert by_j[3] == pytest.approx(3.0000001, abs=5e-7)
    assert by_j[9] == pytest.approx(9.0068260, rel=5e-7)
    assert by_j[12] == pytest.approx(12.137242, rel=5e-7)
    # lower turning point below 1: no near-integer zeros at all
    assert near_integer_zeros(Params(n=2, a=1.0)) == []
    with pytest.raises(DomainError):
        near_integer_zeros(Params(n=3, a=5.0))


def test_theta_solutions():
    assert admissible_l_max(P25) == 11
    xs = {}
    for l in range(12):
        sol = solve_theta(P25, l)
        assert abs(theta_equation(P25, sol.theta, l)) <= 1e-12
        tp = turning_points(P25)
        assert tp.x_minus < sol.x < tp.x_plus
        assert -math.pi / 2 < sol.theta < math.pi / 2
        xs[l] = sol.x
    assert xs[0] == pytest.approx(36.379078, rel=5e-7)
    assert xs[11] == pytest.approx(13.334295, rel=5e-7)
    with pytest.raises(BracketError):
        solve_theta(P25, 12)
    with pytest.raises(DomainError):
        solve_theta(P25, -1)


def test_zero_table_structure():
    records = zero_table(P25)
    assert len(records) == 25
    kinds = [r.kind for r in records]
    assert kinds.count(ZeroKind.FIRST) == 1
    assert kinds.count(ZeroKind.NEAR_INTEGER) == 12
    assert kinds.count(ZeroKind.NONTRIVIAL) == 12
    approxs = [r.approx for r in records]
    assert approxs == sorted(approxs)
    # oscillatory rows stay within 2% of the exact zeros (worst 1.6%)
    for r in records:
        if r.kind is ZeroKind.NONTRIVIAL:
            assert r.rel_err <= 0.02
        if r.kind is ZeroKind.NEAR_INTEGER and r.index <= 6:
            assert abs(r.approx - float(r.exact)) <= 1e-4
    # the table is a bijection onto the exact zeros
    exact_set = {float(r.exact) for r in records}
    assert len(exact_set) == 25


def test_zero_table_domain():
    with pytest.raises(DomainError):
        zero_table(Params(n=3, a=5.0))


def test_zero_table_detects_overcounting():
    # one degree up, the closed-form decomposition produces 27 candidates
    # for 26 zeros; the pairing check must refuse to hand out a table
    with pytest.raises(PairingError):
        zero_table(Params(n=26, a=2.16564899))


def test_approximate_zeros_sorted_and_complete():
    rows = approximate_zeros(P25)
    assert len(rows) == 25
    assert [r[2] for r in rows] == sorted(r[2] for r in rows)
