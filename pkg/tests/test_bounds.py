import math

import pytest

import oracles
from regulargraph.bounds import (
    bound_report,
    conditional_bound,
    conditional_crossing,
    glueck_bound,
    mit_check,
    tau_delta,
    transference_bound,
    unconditional_bound,
)
from regulargraph.errors import DomainError
from regulargraph.spectra import phi


def test_unconditional_examples():
    assert unconditional_bound(2) == pytest.approx((3 + math.sqrt(5)) / 2, rel=1e-15)
    assert unconditional_bound(3) == 3 + math.sqrt(2)
    assert unconditional_bound(4) == pytest.approx(3.5 + math.sqrt(9.25), rel=1e-15)
    with pytest.raises(DomainError):
        unconditional_bound(1)


def test_conditional_closed_forms():
    assert conditional_bound(2) == pytest.approx((3 + math.sqrt(5)) / 2, abs=1e-9)
    assert conditional_bound(3) == pytest.approx(3 + math.sqrt(2), abs=1e-9)


@pytest.mark.parametrize("n,value", [(4, 6.2875), (20, 37.8787), (50, 97.7996)])
def test_reported_values(n, value):
    assert conditional_bound(n) == pytest.approx(value, abs=5e-4)


@pytest.mark.parametrize("n", [2, 3, 4, 7, 20, 50])
def test_conditional_against_mpmath(n):
    assert conditional_bound(n) == pytest.approx(oracles.conditional_bound(n), rel=1e-10)


@pytest.mark.parametrize("n", [2, 5, 30, 200, 1000])
def test_crossing_consistency(n):
    w, value = conditional_crossing(n)
    assert phi(n, w) == pytest.approx(transference_bound(n, w), rel=1e-9)
    assert value == pytest.approx(phi(n, w), rel=1e-12)


def test_gap_at_fifty():
    assert 100 - conditional_bound(50) == pytest.approx(2.2004, abs=5e-4)
    assert bound_report(50).asymptotic_gap == pytest.approx(2.2004, abs=5e-4)


def test_constants_against_lambert_w():
    c = tau_delta()
    tau = oracles.tau()
    assert c.tau == pytest.approx(tau, rel=1e-12)
    assert c.delta == pytest.approx(math.log(2 / tau) + 1, rel=1e-12)
    assert c.theta == pytest.approx(2 / tau, rel=1e-12)
    assert c.tau == pytest.approx(0.5693, abs=5e-5)
    assert c.delta == pytest.approx(2.2564, abs=5e-5)
    assert c.theta == pytest.approx(3.5128, abs=5e-4)


def test_ordering():
    for n in range(2, 101):
        c, g, u = conditional_bound(n), glueck_bound(n), unconditional_bound(n)
        assert c <= g
        assert c <= u
        if n >= 8:
            assert g < u


def test_glueck_crossover_below_eight():
    # the weaker conditional bound only beats the unconditional one from n = 8 on
    assert glueck_bound(7) > unconditional_bound(7)
    assert glueck_bound(8) < unconditional_bound(8)


def test_glueck_asymptote():
    assert abs(glueck_bound(500) - (999 - math.log(2))) < 0.05


def test_asymptotic_behaviour():
    delta = tau_delta().delta
    for n in range(60, 301, 20):
        assert conditional_bound(n) < 2 * n - delta + 0.2
    gaps = [2 * n - conditional_bound(n) for n in range(10, 201)]
    assert all(a < b for a, b in zip(gaps, gaps[1:]))
    assert gaps[-1] < delta


def test_mit_examples():
    assert mit_check(10) == pytest.approx(0.25 + 3 - (9 / 8) ** 10, rel=1e-12)
    assert mit_check(10) == pytest.approx(0.0027, abs=5e-5)
    assert mit_check(9) == pytest.approx(2 / 7 + 3 - (8 / 7) ** 9, rel=1e-12)
    assert mit_check(9) < 0
    assert all(mit_check(n) > 0 for n in range(10, 1001))
    with pytest.raises(DomainError):
        mit_check(2)


def test_bound_report():
    r = bound_report(4)
    assert r.conditional_star == pytest.approx(6.2875, abs=5e-4)
    assert r.unconditional == pytest.approx(6.5414, abs=5e-5)
    assert r.conditional_w == max(6.0, r.conditional_star)
    assert r.caveat is False
    assert r.w is None
    for n in range(2, 40):
        r = bound_report(n)
        assert r.conditional_star <= r.unconditional + 1e-12
        assert r.conditional_star < 2 * n and 0 < r.asymptotic_gap < 3


def test_bound_report_caveat_for_large_n():
    r = bound_report(50)
    assert r.caveat is True
    assert r.conditional_w == 98.0


def test_bound_report_pointwise():
    r = bound_report(4, 4.0)
    assert r.pointwise_star == 4.0 and r.pointwise_w == 4.0
    r = bound_report(4, 20.0)
    assert r.pointwise_star == pytest.approx(min(80 / 17, phi(4, 20.0)))
    assert r.pointwise_w == pytest.approx(min(max(6.0, 80 / 17), phi(4, 20.0)))
    with pytest.raises(DomainError):
        bound_report(4, 3.0)
