"""Integer and rational helpers shared by every other module.

Rationals are :class:`fractions.Fraction`; it is already canonical
(reduced, positive denominator) so equality is field equality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd

Rational = Fraction

# Deterministic for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` as sorted ``(prime, exponent)`` pairs.

    >>> factorize(12)
    ((2, 2), (3, 1))
    >>> factorize(1)
    ()
    """
    if n < 1:
        raise ValueError(f"factorize needs n >= 1, got {n}")
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    assert all(is_prime(p) for p, _ in out)
    return tuple(out)


def prime_divisors(n: int) -> list[int]:
    return [p for p, _ in factorize(n)]


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def lcm(*args: int) -> int:
    out = 1
    for a in args:
        out = out * a // gcd(out, a)
    return out


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple[Fraction, ...]:
    table = [Fraction(1)]
    for m in range(1, n + 1):
        # sum_{j=0}^{m} C(m+1, j) B_j = 0
        s = sum(comb(m + 1, j) * table[j] for j in range(m))
        table.append(-s / (m + 1))
    return tuple(table)


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2."""
    if n < 0:
        raise ValueError("bernoulli index must be non-negative")
    if n >= 3 and n % 2:
        return Fraction(0)
    # grow the cached table in chunks so repeated calls stay cheap
    size = max(32, 1 << (n.bit_length()))
    return _bernoulli_table(size)[n]


def zeta_norm(k: int) -> Fraction:
    """The rational number zeta(k) / (i*pi)**k for even k >= 2.

    >>> zeta_norm(2), zeta_norm(4)
    (Fraction(-1, 6), Fraction(1, 90))
    """
    if k < 2 or k % 2:
        raise ValueError(f"zeta_norm is defined for even k >= 2, got {k}")
    return -bernoulli(k) * 2 ** (k - 1) / factorial(k)


def euler_factor(k: int, q: int) -> Fraction:
    """prod_{p | q} (1 - p^-k)."""
    out = Fraction(1)
    for p in prime_divisors(q):
        out *= 1 - Fraction(1, p**k)
    return out


def multiplicative_order(a: int, n: int) -> int:
    if gcd(a, n) != 1:
        raise ValueError(f"{a} is not a unit mod {n}")
    if n == 1:
        return 1
    order = euler_phi(n)
    for p, _ in factorize(order):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


def primitive_root(pe: int) -> int:
    """Smallest generator of (Z/pe)^x for pe in {2, 4} or an odd prime power."""
    if pe in (2, 4):
        return pe - 1
    f = factorize(pe) if pe > 1 else ()
    if len(f) != 1 or f[0][0] == 2:
        raise ValueError(f"(Z/{pe})^x is not cyclic or {pe} is not an odd prime power")
    phi = euler_phi(pe)
    for g in range(2, pe):
        if gcd(g, pe) == 1 and multiplicative_order(g, pe) == phi:
            return g
    raise AssertionError("unreachable: odd prime powers have primitive roots")
