"""Exact values C_k(a, q) = i^k * cot^(k-1)(pi*a/q) inside Q(zeta_q).

Two independent constructions are provided:

* :func:`cotan_norm` writes cot^(k-1)(z) = D_k(cot z) with an integer
  polynomial D_k and substitutes cot(pi*a/q) = i*u, u = (z^a + 1)/(z^a - 1).
  Because D_k only has monomials of the parity of k, every power of i
  collapses to a sign and the result stays in Q(zeta_q).
* :func:`cotan_via_operator` applies (2X d/dX)^(k-1) to (X+1)/(X-1) and
  evaluates at X = zeta_q^a, giving (-1)^k * C_k(a, q).

The relation to Hurwitz zeta values is
``(i*pi)^-k * (zeta(k, a/q) + (-1)^k zeta(k, 1 - a/q)) = -C_k(a, q)/(k-1)!``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

from .cyclotomic import CycloElem, conjugate, is_real, root_of_unity, trace_to_Q
from .exact import euler_factor, zeta_norm


@lru_cache(maxsize=None)
def derivative_poly(k: int) -> tuple[int, ...]:
    """Coefficients of D_k (lowest first) with cot^(k-1)(z) = D_k(cot z).

    >>> derivative_poly(3)
    (0, 2, 0, 2)
    """
    if k < 1:
        raise ValueError("derivative_poly needs k >= 1")
    if k == 1:
        return (0, 1)
    prev = derivative_poly(k - 1)
    deriv = [j * prev[j] for j in range(1, len(prev))]
    out = [0] * (len(deriv) + 2)
    # -(1 + c^2) * D'
    for j, c in enumerate(deriv):
        out[j] -= c
        out[j + 2] -= c
    return tuple(out)


def _check_args(k: int, a: int, q: int) -> int:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if q <= 2:
        raise ValueError(f"q must be > 2, got {q}")
    a %= q
    if gcd(a, q) != 1:
        raise ValueError(f"a={a} is not coprime to q={q}")
    return a


@dataclass(frozen=True)
class CotanValue:
    k: int
    a: int
    q: int
    value: CycloElem

    def check_invariants(self) -> bool:
        sign = -1 if self.k % 2 else 1
        if conjugate(self.value) != self.value * sign:
            return False
        z = root_of_unity(self.q)
        return is_real((z - z.inverse()) ** self.k * self.value)


def cayley(a: int, q: int) -> CycloElem:
    """u = (zeta_q^a + 1)/(zeta_q^a - 1) = -i cot(pi a / q)."""
    z = root_of_unity(q, a)
    return (z + 1) / (z - 1)


def cotan_norm(k: int, a: int, q: int) -> CotanValue:
    a = _check_args(k, a, q)
    d = derivative_poly(k)
    u = cayley(a, q)
    # i^k * (i u)^j = (-1)^((k+j)/2) u^j, nonzero only for j = k mod 2
    acc = CycloElem.zero(q)
    for j in range(len(d) - 1, -1, -1):
        acc = acc * u
        if d[j]:
            sign = -1 if ((k + j) // 2) % 2 else 1
            acc = acc + sign * d[j]
    return CotanValue(k, a, q, acc)


@lru_cache(maxsize=None)
def operator_numerator(k: int) -> tuple[int, ...]:
    """P_k with (2X d/dX)^(k-1) ((X+1)/(X-1)) = P_k(X) / (X-1)^k."""
    if k == 1:
        return (1, 1)
    p = list(operator_numerator(k - 1))
    m = k - 1
    # 2X * (P'(X-1) - m P) over (X-1)^(m+1)
    dp = [j * p[j] for j in range(1, len(p))] + [0]
    inner = [0] * (len(p) + 1)
    for j, c in enumerate(dp):
        inner[j + 1] += c
        inner[j] -= c
    for j, c in enumerate(p):
        inner[j] -= m * c
    out = [0] + [2 * c for c in inner]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def cotan_via_operator(k: int, a: int, q: int) -> CotanValue:
    a = _check_args(k, a, q)
    num = operator_numerator(k)
    x = root_of_unity(q, a)
    p_val = CycloElem.zero(q)
    for c in reversed(num):
        p_val = p_val * x + c
    r = p_val * (x - 1).inverse() ** k
    return CotanValue(k, a, q, r if k % 2 == 0 else -r)


def full_unit_sum(k: int, q: int) -> Fraction:
    """sum over a in (Z/q)^x of C_k(a, q), as the trace of C_k(1, q)."""
    return trace_to_Q(cotan_norm(k, 1, q).value)


def trace_closed_form(k: int, q: int) -> Fraction:
    return -2 * factorial(k - 1) * Fraction(q) ** k * euler_factor(k, q) * zeta_norm(k)


def cotan_trace_sum(k: int, q: int) -> Fraction:
    if k % 2:
        raise ValueError("cotan_trace_sum is for even k; the odd-k sum vanishes")
    total = full_unit_sum(k, q)
    expected = trace_closed_form(k, q)
    if total != expected:
        raise AssertionError(f"trace {total} != closed form {expected} for k={k}, q={q}")
    return total


def zeta_pair_norm(k: int, a: int, q: int) -> CycloElem:
    """(i pi)^-k (zeta(k, a/q) + (-1)^k zeta(k, 1-a/q)) = -C_k(a,q)/(k-1)!."""
    return cotan_norm(k, a, q).value * Fraction(-1, factorial(k - 1))
