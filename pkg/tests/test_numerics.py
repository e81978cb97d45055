from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from cmverify.characters import all_characters, char_eval
from cmverify.cyclotomic import numeric_eval
from cmverify.numerics import (
    Approx,
    bridge_residual,
    cot_derivative_numeric,
    dirichlet_L,
    hurwitz_zeta,
    l_value_from_cotangents,
    riemann_zeta_even,
)

TINY = mpmath.mpf(2) ** -200


def mp(x):
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


def test_hurwitz_at_one_is_zeta2():
    r = hurwitz_zeta(2, 1, 128)
    assert isinstance(r, Approx)
    with mpmath.workprec(160):
        assert abs(r.value - mpmath.pi**2 / 6) < mpmath.mpf(2) ** -120
    assert r.digits >= 35


def test_hurwitz_half_is_scaled_zeta():
    with mpmath.workprec(300):
        assert abs(hurwitz_zeta(2, Fraction(1, 2), 256).value - mpmath.pi**2 / 2) < TINY


def test_hurwitz_cotangent_identity_instance():
    with mpmath.workprec(300):
        d = hurwitz_zeta(3, Fraction(1, 4), 256).value - hurwitz_zeta(3, Fraction(3, 4), 256).value
        assert abs(d - 2 * mpmath.pi**3) < TINY


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 9), st.fractions(min_value=Fraction(1, 50), max_value=1, max_denominator=50))
def test_hurwitz_against_mpmath(k, x):
    r = hurwitz_zeta(k, x, 192)
    with mpmath.workprec(240):
        want = mpmath.zeta(k, mp(x))
        assert abs(r.value - want) <= r.error + mpmath.mpf(2) ** -180


@pytest.mark.parametrize("prec", [64, 512, 1024])
def test_hurwitz_precision_scaling(prec):
    r = hurwitz_zeta(4, Fraction(2, 7), prec)
    with mpmath.workprec(prec + 40):
        want = mpmath.zeta(4, mpmath.mpf(2) / 7)
        assert abs(r.value - want) <= r.error
        assert r.error < abs(want) * mpmath.mpf(2) ** -(prec - 2)


@pytest.mark.parametrize("k, x", [(1, Fraction(1, 2)), (2, 0), (2, Fraction(3, 2))])
def test_hurwitz_domain(k, x):
    with pytest.raises(ValueError):
        hurwitz_zeta(k, x)


def test_riemann_zeta_even():
    with mpmath.workprec(200):
        assert abs(riemann_zeta_even(4, 160) - mpmath.pi**4 / 90) < mpmath.mpf(2) ** -150


def test_catalan():
    chi4 = all_characters(4)[1]
    r = dirichlet_L(2, chi4, 256)
    with mpmath.workprec(300):
        assert abs(r.value - mpmath.catalan) < mpmath.mpf(10) ** -70


def test_L3_mod4():
    chi4 = all_characters(4)[1]
    with mpmath.workprec(300):
        assert abs(dirichlet_L(3, chi4, 256).value - mpmath.pi**3 / 32) < TINY


def test_L_trivial_mod3():
    chi0 = all_characters(3)[0]
    with mpmath.workprec(300):
        assert abs(dirichlet_L(2, chi0, 256).value - 8 * mpmath.pi**2 / 54) < TINY


def test_L1_mod4_from_cotangents():
    # Leibniz series value
    chi4 = all_characters(4)[1]
    with mpmath.workprec(200):
        assert abs(l_value_from_cotangents(1, chi4, 160) - mpmath.pi / 4) < mpmath.mpf(2) ** -150


def test_L_series_oracle_mod5():
    # direct partial sums with mpmath's own L-series routine as oracle
    for chi in all_characters(5):
        with mpmath.workdps(40):
            periodic = [numeric_eval(char_eval(chi, a), 128) for a in range(5)]
            want = mpmath.dirichlet(3, periodic)
            assert abs(dirichlet_L(3, chi, 128).value - want) < mpmath.mpf(10) ** -30


@pytest.mark.parametrize("k, a, q, want", [(2, 1, 4, -2), (3, 1, 4, 4)])
def test_cot_derivative_numeric(k, a, q, want):
    with mpmath.workprec(160):
        assert abs(cot_derivative_numeric(k, a, q).value - want) < mpmath.mpf(2) ** -120


def test_cot_pi_over_6():
    with mpmath.workprec(160):
        assert abs(cot_derivative_numeric(1, 1, 6).value - mpmath.sqrt(3)) < mpmath.mpf(2) ** -120


def test_bridge_examples():
    assert bridge_residual("reflection", {"k": 3, "a": 1, "q": 4}, 256) < TINY
    assert bridge_residual("rep", {"k": 2, "a": 1, "q": 3}, 256) < TINY
    chi = next(c for c in all_characters(5) if c.parity == 1 and not c.is_trivial())
    assert bridge_residual("l-value", {"k": 2, "chi": chi}, 256) < TINY


def test_bridge_errors():
    chi = all_characters(4)[1]
    with pytest.raises(ValueError):
        bridge_residual("l-value", {"k": 2, "chi": chi}, 128)
    with pytest.raises(ValueError):
        bridge_residual("nope", {}, 128)
