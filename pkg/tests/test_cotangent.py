from fractions import Fraction
from math import factorial, gcd

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from cmverify.cotangent import (
    cayley,
    cotan_norm,
    cotan_trace_sum,
    cotan_via_operator,
    derivative_poly,
    full_unit_sum,
    trace_closed_form,
    zeta_pair_norm,
)
from cmverify.cyclotomic import conjugate, galois_apply, is_real, numeric_eval, root_of_unity, trace_to_Q
from cmverify.exact import zeta_norm


def coprime_pairs(max_q):
    return st.integers(3, max_q).flatmap(
        lambda q: st.tuples(st.just(q), st.sampled_from([a for a in range(1, q) if gcd(a, q) == 1]))
    )


def numeric_oracle(k, a, q, dps=40):
    """i^k cot^(k-1)(pi a/q) from mpmath's numerical differentiation."""
    with mpmath.workdps(dps + 20):
        x = mpmath.pi * a / q
        return mpmath.j**k * mpmath.diff(mpmath.cot, x, k - 1)


@pytest.mark.parametrize("k, want", [(1, (0, 1)), (2, (-1, 0, -1)), (3, (0, 2, 0, 2))])
def test_derivative_poly_examples(k, want):
    assert derivative_poly(k) == want


@pytest.mark.parametrize("k", range(1, 8))
def test_derivative_poly_vs_numeric_derivative(k):
    coeffs = derivative_poly(k)
    with mpmath.workdps(50):
        for x in (mpmath.mpf("0.3"), mpmath.mpf("1.1")):
            c = mpmath.cot(x)
            val = sum(co * c**j for j, co in enumerate(coeffs))
            assert abs(val - mpmath.diff(mpmath.cot, x, k - 1)) < mpmath.mpf(10) ** -25


def test_derivative_poly_parity():
    for k in range(1, 12):
        assert all(c == 0 for j, c in enumerate(derivative_poly(k)) if (j - k) % 2)


def test_cayley_is_minus_i_cot():
    with mpmath.workdps(40):
        u = numeric_eval(cayley(1, 5))
        assert abs(u - (-mpmath.j) * mpmath.cot(mpmath.pi / 5)) < mpmath.mpf(10) ** -30


def test_cotan_norm_examples():
    z3, z4 = root_of_unity(3), root_of_unity(4)
    assert cotan_norm(1, 1, 4).value == z4
    assert cotan_norm(2, 1, 3).value == Fraction(4, 3)
    assert cotan_norm(1, 1, 3).value == (1 + 2 * z3) * Fraction(1, 3)


def test_operator_examples():
    z4 = root_of_unity(4)
    assert cotan_via_operator(1, 1, 4).value == z4
    assert cotan_via_operator(2, 1, 4).value == 2
    # i^3 * cot''(pi/4) = -i * 4
    assert cotan_via_operator(3, 1, 4).value == -4 * z4


@pytest.mark.parametrize("k, a, q", [(0, 1, 5), (1, 1, 2), (2, 2, 4), (1, 3, 6)])
def test_argument_errors(k, a, q):
    with pytest.raises(ValueError):
        cotan_norm(k, a, q)
    with pytest.raises(ValueError):
        cotan_via_operator(k, a, q)


@settings(max_examples=60)
@given(st.integers(1, 6), coprime_pairs(24))
def test_numeric_oracle(k, qa):
    q, a = qa
    with mpmath.workdps(40):
        assert abs(numeric_eval(cotan_norm(k, a, q).value) - numeric_oracle(k, a, q)) < mpmath.mpf(10) ** -20


@settings(max_examples=60)
@given(st.integers(1, 7), coprime_pairs(30))
def test_routes_agree(k, qa):
    q, a = qa
    assert cotan_norm(k, a, q).value == cotan_via_operator(k, a, q).value


@settings(max_examples=60)
@given(st.integers(1, 6), coprime_pairs(24), st.data())
def test_galois_equivariance(k, qa, data):
    q, a = qa
    b = data.draw(st.sampled_from([b for b in range(1, q) if gcd(b, q) == 1]))
    assert galois_apply(cotan_norm(k, a, q).value, b) == cotan_norm(k, a * b % q, q).value


@settings(max_examples=60)
@given(st.integers(1, 6), coprime_pairs(24))
def test_parity_and_reality(k, qa):
    q, a = qa
    v = cotan_norm(k, a, q)
    assert cotan_norm(k, q - a, q).value == (-1) ** k * v.value
    assert conjugate(v.value) == (-1) ** k * v.value
    assert v.check_invariants()
    z = root_of_unity(q)
    assert is_real((z - z.inverse()) ** k * v.value)


@given(st.integers(1, 4).map(lambda j: 2 * j - 1), st.integers(3, 30))
def test_odd_trace_vanishes(k, q):
    assert full_unit_sum(k, q) == 0


@pytest.mark.parametrize("k, q, want", [(2, 3, Fraction(8, 3)), (2, 4, Fraction(4)), (2, 5, Fraction(8))])
def test_trace_examples(k, q, want):
    assert cotan_trace_sum(k, q) == want


def test_trace_brute_force_sum():
    # direct sum of the exact values, independent of the Galois trace shortcut
    for k in (2, 4):
        for q in (5, 7, 9, 12):
            total = sum(
                (cotan_norm(k, a, q).value for a in range(1, q) if gcd(a, q) == 1),
                cotan_norm(k, 1, q).value * 0,
            )
            assert total == trace_closed_form(k, q)
            assert total == trace_to_Q(cotan_norm(k, 1, q).value)


def test_trace_odd_k_rejected():
    with pytest.raises(ValueError):
        cotan_trace_sum(3, 5)


@pytest.mark.parametrize("k, a, q", [(2, 1, 3), (3, 1, 4), (4, 2, 5), (5, 3, 8)])
def test_zeta_pair_dictionary(k, a, q):
    with mpmath.workdps(50):
        x = mpmath.mpf(a) / q
        lhs = (mpmath.zeta(k, x) + (-1) ** k * mpmath.zeta(k, 1 - x)) / (mpmath.j * mpmath.pi) ** k
        assert abs(numeric_eval(zeta_pair_norm(k, a, q), 160) - lhs) < mpmath.mpf(10) ** -40


def test_closed_form_instance():
    # -2 * 3! * 7^4 * (1 - 7^-4) * zeta_norm(4)
    assert trace_closed_form(4, 7) == -2 * factorial(3) * 2400 * zeta_norm(4)
