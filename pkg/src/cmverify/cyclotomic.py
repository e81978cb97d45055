"""Exact arithmetic in Q(zeta_n).

Elements are stored in the power basis 1, z, ..., z^(phi(n)-1) modulo the
n-th cyclotomic polynomial, so two elements of the same field are equal
exactly when their coefficient tuples are equal.  The ambient ``n`` is part
of the value and is never promoted implicitly; use :func:`embed`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

from .exact import divisors, euler_phi, lcm


class FieldMismatchError(ValueError):
    """Raised when combining elements of different cyclotomic fields."""


# ---------------------------------------------------------------------------
# integer / rational polynomial helpers, coefficient lists low degree first
# ---------------------------------------------------------------------------


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(a, b):
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [0] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b):
        c = a[-1] if lead == 1 else Fraction(a[-1]) / lead
        shift = len(a) - len(b)
        quot[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        a.pop()
        a = _trim(a)
    return quot, a


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, lowest degree first.

    >>> cyclotomic_poly(6)
    (1, -1, 1)
    """
    if n < 1:
        raise ValueError("cyclotomic_poly needs n >= 1")
    num = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        num, rem = _poly_divmod(num, list(cyclotomic_poly(d)))
        assert not rem
    out = tuple(int(c) for c in num)
    assert len(out) == euler_phi(n) + 1 and out[-1] == 1
    return out


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """Integer coordinates of z^j for 0 <= j < n."""
    phi_poly = cyclotomic_poly(n)
    deg = len(phi_poly) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z and reduce with the monic Phi_n
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(deg):
                cur[i] -= top * phi_poly[i]
    return tuple(rows)


def _reduce_int(poly: list[int], n: int) -> list[int]:
    phi_poly = cyclotomic_poly(n)
    deg = len(phi_poly) - 1
    poly = list(poly) + [0] * max(0, deg - len(poly))
    for top in range(len(poly) - 1, deg - 1, -1):
        c = poly[top]
        if c:
            base = top - deg
            for i in range(deg):
                poly[base + i] -= c * phi_poly[i]
            poly[top] = 0
    return poly[:deg]


def _clear(coeffs) -> tuple[list[int], int]:
    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    return [int(c * den) for c in coeffs], den


# ---------------------------------------------------------------------------
# field elements
# ---------------------------------------------------------------------------


class CycloElem:
    """An element of Q(zeta_n) in the power basis modulo Phi_n."""

    __slots__ = ("n", "coeffs", "_hash")

    def __init__(self, n: int, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != euler_phi(n):
            raise ValueError(f"Q(zeta_{n}) needs {euler_phi(n)} coordinates, got {len(coeffs)}")
        self.n = n
        self.coeffs = coeffs
        self._hash = None

    # constructors -----------------------------------------------------------
    @classmethod
    def from_rational(cls, n: int, value) -> "CycloElem":
        return cls(n, [Fraction(value)] + [0] * (euler_phi(n) - 1))

    @classmethod
    def zero(cls, n: int) -> "CycloElem":
        return cls.from_rational(n, 0)

    @classmethod
    def one(cls, n: int) -> "CycloElem":
        return cls.from_rational(n, 1)

    @classmethod
    def from_poly(cls, n: int, poly) -> "CycloElem":
        """Reduce sum(poly[j] * z^j) into the power basis (any degree)."""
        table = _power_table(n)
        deg = euler_phi(n)
        acc = [Fraction(0)] * deg
        for j, c in enumerate(poly):
            if c:
                row = table[j % n]
                for i in range(deg):
                    if row[i]:
                        acc[i] += c * row[i]
        return cls(n, acc)

    # queries ----------------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other):
        if isinstance(other, CycloElem):
            return self.n == other.n and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"CycloElem({self.n}, {render(self)!r})"

    # arithmetic -------------------------------------------------------------
    def _coerce(self, other) -> "CycloElem":
        if isinstance(other, CycloElem):
            if other.n != self.n:
                raise FieldMismatchError(f"Q(zeta_{self.n}) vs Q(zeta_{other.n}); embed first")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElem.from_rational(self.n, other)
        raise TypeError(f"cannot combine CycloElem with {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        return CycloElem(self.n, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.n, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        o = self._coerce(other)
        a, da = _clear(self.coeffs)
        b, db = _clear(o.coeffs)
        prod = _reduce_int(_poly_mul(a, b), self.n)
        den = da * db
        return CycloElem(self.n, [Fraction(c, den) for c in prod])

    __rmul__ = __mul__

    def scale(self, c) -> "CycloElem":
        c = Fraction(c)
        return CycloElem(self.n, [c * a for a in self.coeffs])

    def inverse(self) -> "CycloElem":
        """Inverse via the extended Euclidean algorithm against Phi_n."""
        if self.is_zero():
            raise ZeroDivisionError(f"inverse of zero in Q(zeta_{self.n})")
        # invariant: s * self == r (mod Phi_n)
        r0, r1 = [Fraction(c) for c in cyclotomic_poly(self.n)], _trim(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            quot, rem = _poly_divmod(r0, r1)
            s_new = _poly_sub(s0, _poly_mul(quot, s1))
            r0, r1, s0, s1 = r1, rem, s1, s_new
        # r1 is a nonzero constant because Phi_n is irreducible
        c = r1[0]
        inv = CycloElem.from_poly(self.n, [x / c for x in s1])
        assert (inv * self) == 1
        return inv

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self.scale(Fraction(1) / Fraction(other))
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = CycloElem.one(self.n)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out


def _poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def root_of_unity(n: int, t: int = 1) -> CycloElem:
    """zeta_n ** t in Q(zeta_n)."""
    return CycloElem(n, _power_table(n)[t % n])


def embed(x: CycloElem, N: int) -> CycloElem:
    """Represent ``x`` in Q(zeta_N) via zeta_n = zeta_N^(N/n)."""
    if N % x.n:
        raise ValueError(f"cannot embed Q(zeta_{x.n}) into Q(zeta_{N}): {x.n} does not divide {N}")
    if N == x.n:
        return x
    step = N // x.n
    poly = [Fraction(0)] * (step * (len(x.coeffs) - 1) + 1)
    for i, c in enumerate(x.coeffs):
        poly[i * step] = c
    return CycloElem.from_poly(N, poly)


def galois_apply(x: CycloElem, a: int) -> CycloElem:
    """sigma_a : zeta_n -> zeta_n^a.  sigma_{-1} is complex conjugation."""
    if gcd(a, x.n) != 1:
        raise ValueError(f"{a} is not coprime to {x.n}")
    poly = [Fraction(0)] * x.n
    for i, c in enumerate(x.coeffs):
        poly[(i * a) % x.n] += c
    return CycloElem.from_poly(x.n, poly)


def conjugate(x: CycloElem) -> CycloElem:
    return galois_apply(x, -1)


def units(n: int) -> list[int]:
    return [a for a in range(1, n + 1) if gcd(a, n) == 1] if n > 1 else [1]


def trace_to_Q(x: CycloElem) -> Fraction:
    total = CycloElem.zero(x.n)
    for a in units(x.n):
        total = total + galois_apply(x, a)
    assert total.is_rational(), "conjugate sum is not rational"
    return total.coeffs[0]


def is_real(x: CycloElem) -> bool:
    return conjugate(x) == x


def fixed_by(x: CycloElem, d: int) -> bool:
    """True when x is fixed by Gal(Q(zeta_n)/Q(zeta_d)), i.e. x lies in Q(zeta_d)."""
    n = x.n
    if n % d:
        raise ValueError(f"{d} does not divide {n}")
    return all(galois_apply(x, a) == x for a in units(n) if a % d == 1 % d)


def descend(x: CycloElem, d: int) -> CycloElem:
    """The element of Q(zeta_d) that embeds to ``x``; raises if x is not in it."""
    if not fixed_by(x, d):
        raise ValueError(f"element does not lie in Q(zeta_{d})")
    # solve embed(y, n) == x by comparing images of the power basis
    from .linalg import solve_columns

    cols = [embed(root_of_unity(d, j), x.n).coeffs for j in range(euler_phi(d))]
    sol = solve_columns(cols, x.coeffs)
    return CycloElem(d, sol)


def numeric_eval(x: CycloElem, precision: int = 128) -> mpmath.mpc:
    """Value at zeta_n = exp(2*pi*i/n), computed with ``precision`` bits plus guard."""
    with mpmath.workprec(precision + 32):
        if x.is_rational():
            val = x.coeffs[0]
            return mpmath.mpc(mpmath.mpf(val.numerator) / val.denominator, 0)
        total = mpmath.mpc(0)
        for i, c in enumerate(x.coeffs):
            if c:
                total += (mpmath.mpf(c.numerator) / c.denominator) * mpmath.expjpi(mpmath.mpf(2 * i) / x.n)
        return +total


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render(x: CycloElem) -> str:
    """Polynomial in ``z``, e.g. ``1/3 + 2/3*z``."""
    parts = []
    for j, c in enumerate(x.coeffs):
        if not c:
            continue
        mag = abs(c)
        if j == 0:
            body = _fmt_coeff(mag)
        else:
            mono = "z" if j == 1 else f"z^{j}"
            body = mono if mag == 1 else f"{_fmt_coeff(mag)}*{mono}"
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts) if parts else "0"


def field_name(n: int) -> str:
    return f"Q(zeta_{n})"
