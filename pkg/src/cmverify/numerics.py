"""High-precision numerics bridging the exact model to the analytic side.

Values are mpmath numbers computed at ``precision + GUARD_BITS`` bits.  Each
result comes back as an :class:`Approx` carrying an absolute error bound:
the truncation bound of the series plus ``max(1, |value|) * 2^-precision``
for accumulated rounding, which the guard bits cover with a wide margin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, floor, log10

import mpmath

from .characters import DirichletChar, char_eval, coprime_residues, l_coordinates
from .cotangent import cotan_norm, derivative_poly
from .cyclotomic import numeric_eval
from .exact import bernoulli

GUARD_BITS = 32
MIN_EM_TERMS = 15  # Bernoulli tail runs at least through B_30


@dataclass(frozen=True)
class Approx:
    value: mpmath.mpf | mpmath.mpc
    precision: int
    error: mpmath.mpf

    @property
    def digits(self) -> int:
        """Significant decimal digits guaranteed by the error bound."""
        if self.error == 0:
            return floor(self.precision * log10(2))
        scale = max(mpmath.mpf(1), abs(self.value))
        return max(0, floor(-mpmath.log10(self.error / scale)))

    def __float__(self):
        return float(mpmath.re(self.value))


def _mpf(x) -> mpmath.mpf:
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


def _em_remainder(k: int, base, m: int):
    """|B_{2m+2}|/(2m+2)! * k(k+1)...(k+2m) * base^-(k+2m+1): the first omitted
    Euler-Maclaurin term, which bounds the tail for (t+x)^-k."""
    rising = mpmath.rf(k, 2 * m + 1)
    b = abs(_mpf(bernoulli(2 * m + 2)))
    return b / mpmath.factorial(2 * m + 2) * rising * base ** (-(k + 2 * m + 1))


def hurwitz_zeta(k: int, x, precision: int = 128) -> Approx:
    """zeta(k, x) for integer k >= 2 and rational 0 < x <= 1, by Euler-Maclaurin."""
    x = Fraction(x)
    if k < 2:
        raise ValueError("hurwitz_zeta needs k >= 2")
    if not 0 < x <= 1:
        raise ValueError("hurwitz_zeta needs 0 < x <= 1")
    with mpmath.workprec(precision + GUARD_BITS):
        target = mpmath.mpf(2) ** (-precision - 4)
        xf = _mpf(x)
        n_terms = max(int(0.7 * precision), 10)
        base = n_terms + xf
        m = MIN_EM_TERMS
        while _em_remainder(k, base, m) > target:
            m += 1
            if m > 4 * n_terms:
                n_terms *= 2
                base = n_terms + xf
                m = MIN_EM_TERMS
        head = mpmath.fsum((j + xf) ** (-k) for j in range(n_terms))
        tail = base ** (1 - k) / (k - 1) + base ** (-k) / 2
        # sum_j B_2j/(2j)! * k(k+1)...(k+2j-2) * base^-(k+2j-1)
        corr = mpmath.fsum(
            _mpf(bernoulli(2 * j)) / mpmath.factorial(2 * j) * mpmath.rf(k, 2 * j - 1) * base ** (-(k + 2 * j - 1))
            for j in range(1, m + 1)
        )
        value = head + tail + corr
        error = _em_remainder(k, base, m) + max(1, abs(value)) * mpmath.mpf(2) ** (-precision)
        return Approx(+value, precision, error)


def riemann_zeta_even(k: int, precision: int = 128) -> mpmath.mpf:
    """zeta(k) for even k from the exact rational (i pi)^-k zeta(k)."""
    from .exact import zeta_norm

    with mpmath.workprec(precision + GUARD_BITS):
        return _mpf(zeta_norm(k)) * (-1) ** (k // 2) * mpmath.pi**k


def dirichlet_L(k: int, chi: DirichletChar, precision: int = 128) -> Approx:
    """L(k, chi) = q^-k sum_{a=1}^{q} chi(a) zeta(k, a/q)."""
    if k < 2:
        raise ValueError("dirichlet_L needs k >= 2")
    q = chi.q
    with mpmath.workprec(precision + GUARD_BITS):
        total = mpmath.mpc(0)
        err = mpmath.mpf(0)
        for a in coprime_residues(q):
            z = hurwitz_zeta(k, Fraction(a, q), precision + 8)
            total += numeric_eval(char_eval(chi, a), precision + 8) * z.value
            err += z.error
        scale = mpmath.mpf(q) ** (-k)
        value = total * scale
        return Approx(value, precision, err * scale + max(1, abs(value)) * mpmath.mpf(2) ** (-precision))


def cot_derivative_numeric(k: int, a: int, q: int, precision: int = 128) -> Approx:
    """cot^(k-1)(pi a / q) via D_k evaluated at a high-precision cotangent."""
    with mpmath.workprec(precision + GUARD_BITS):
        c = mpmath.cot(mpmath.pi * a / q)
        val = mpmath.mpf(0)
        for coeff in reversed(derivative_poly(k)):
            val = val * c + coeff
        return Approx(val, precision, max(1, abs(val)) * mpmath.mpf(2) ** (-precision))


def _reflection(k: int, a: int, q: int, precision: int):
    x = Fraction(a, q)
    with mpmath.workprec(precision + GUARD_BITS):
        left = hurwitz_zeta(k, x, precision + 8).value + (-1) ** k * hurwitz_zeta(k, 1 - x, precision + 8).value
        right = mpmath.pi**k * (-1) ** (k - 1) / factorial(k - 1) * cot_derivative_numeric(k, a, q, precision + 8).value
        return abs(left - right)


def _representation(k: int, a: int, q: int, precision: int):
    with mpmath.workprec(precision + GUARD_BITS):
        exact = numeric_eval(cotan_norm(k, a, q).value, precision + 8)
        num = mpmath.j**k * cot_derivative_numeric(k, a, q, precision + 8).value
        return abs(exact - num)


def l_value_from_cotangents(k: int, chi: DirichletChar, precision: int = 128) -> mpmath.mpc:
    """pi^k (-1)^(k-1) / (q^k (k-1)!) * (-i)^k * Lambda(k, chi), for chi(-1) = (-1)^k."""
    q = chi.q
    with mpmath.workprec(precision + GUARD_BITS):
        lam = numeric_eval(l_coordinates(k, chi), precision + 8)
        return mpmath.pi**k * (-1) ** (k - 1) / (mpmath.mpf(q) ** k * factorial(k - 1)) * (-mpmath.j) ** k * lam


def _l_value(k: int, chi: DirichletChar, precision: int):
    if chi.parity != (-1) ** k:
        raise ValueError("the cotangent formula needs chi(-1) = (-1)^k")
    with mpmath.workprec(precision + GUARD_BITS):
        return abs(dirichlet_L(k, chi, precision + 8).value - l_value_from_cotangents(k, chi, precision + 8))


def bridge_residual(kind: str, params: dict, precision: int = 256) -> mpmath.mpf:
    """|left - right| for one of the identities tying exact values to analysis.

    ``reflection`` and ``rep`` take ``k, a, q``; ``l-value`` takes ``k`` and
    ``chi`` (a :class:`DirichletChar`).
    """
    if kind == "reflection":
        return _reflection(params["k"], params["a"], params["q"], precision)
    if kind == "rep":
        return _representation(params["k"], params["a"], params["q"], precision)
    if kind == "l-value":
        return _l_value(params["k"], params["chi"], precision)
    raise ValueError(f"unknown bridge kind {kind!r}")


def to_decimal(x, digits: int) -> str:
    return mpmath.nstr(x, digits, strip_zeros=False)
