"""Dirichlet characters modulo q.

(Z/q)^x is split over the prime powers of q; each cyclic factor gets a
generator (a primitive root, or -1 and 5 for 2^e with e >= 3) lifted by CRT.
A character is an exponent vector on those generators, and its values are
roots of unity living in Q(zeta_order).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd

from .cotangent import cotan_norm
from .cyclotomic import CycloElem, embed, root_of_unity
from .exact import euler_phi, factorize, lcm, primitive_root


@dataclass(frozen=True)
class Generator:
    residue: int  # element of (Z/q)^x
    order: int
    modulus: int  # prime power component it acts on
    local: int  # generator of (Z/modulus)^x


@dataclass(frozen=True)
class UnitGroup:
    q: int
    generators: tuple[Generator, ...]

    @property
    def exponent(self) -> int:
        return lcm(*(g.order for g in self.generators))

    @property
    def orders(self) -> tuple[int, ...]:
        return tuple(g.order for g in self.generators)


def _crt_lift(residue: int, pe: int, q: int) -> int:
    """x = residue mod pe, x = 1 mod q/pe."""
    rest = q // pe
    if rest == 1:
        return residue % q
    # x = 1 + rest * t with rest*t = residue - 1 mod pe
    t = (residue - 1) * pow(rest, -1, pe) % pe
    return (1 + rest * t) % q


@lru_cache(maxsize=None)
def unit_group(q: int) -> UnitGroup:
    if q < 1:
        raise ValueError("modulus must be >= 1")
    gens = []
    for p, e in factorize(q):
        pe = p**e
        if p == 2:
            if e == 1:
                continue
            if e == 2:
                gens.append(Generator(_crt_lift(3, 4, q), 2, 4, 3))
                continue
            gens.append(Generator(_crt_lift(pe - 1, pe, q), 2, pe, pe - 1))
            gens.append(Generator(_crt_lift(5, pe, q), 2 ** (e - 2), pe, 5))
        else:
            g = primitive_root(pe)
            gens.append(Generator(_crt_lift(g, pe, q), euler_phi(pe), pe, g))
    group = UnitGroup(q, tuple(gens))
    prod_orders = 1
    for o in group.orders:
        prod_orders *= o
    assert prod_orders == euler_phi(q)
    return group


@lru_cache(maxsize=None)
def _dlog_table(q: int) -> dict[int, tuple[int, ...]]:
    group = unit_group(q)
    table = {}
    for exps in product(*(range(g.order) for g in group.generators)):
        x = 1
        for g, e in zip(group.generators, exps):
            x = x * pow(g.residue, e, q) % q
        table[x % q] = exps
    return table


def discrete_log(q: int, a: int) -> tuple[int, ...]:
    """Exponent vector of the unit ``a`` on the generators of unit_group(q)."""
    if gcd(a, q) != 1:
        raise ValueError(f"{a} is not a unit mod {q}")
    return _dlog_table(q)[a % q]


@dataclass(frozen=True)
class DirichletChar:
    q: int
    exponents: tuple[int, ...]

    @property
    def group(self) -> UnitGroup:
        return unit_group(self.q)

    @property
    def order(self) -> int:
        return lcm(*(g.order // gcd(e, g.order) for g, e in zip(self.group.generators, self.exponents)))

    def is_trivial(self) -> bool:
        return not any(self.exponents)

    def exponent_at(self, a: int) -> int | None:
        """t with chi(a) = zeta_order^t, or None off the units."""
        if gcd(a, self.q) != 1:
            return None
        E = self.group.exponent
        t = 0
        for g, e, l in zip(self.group.generators, self.exponents, discrete_log(self.q, a)):
            t += e * l * (E // g.order)
        t %= E
        step = E // self.order
        assert t % step == 0
        return t // step

    @property
    def parity(self) -> int:
        t = self.exponent_at(-1)
        # chi(-1) is +-1, i.e. t in {0, order/2}
        return 1 if t == 0 else -1

    def label(self) -> str:
        return f"chi_{self.q}[{','.join(map(str, self.exponents))}]"


def all_characters(q: int) -> list[DirichletChar]:
    """All phi(q) characters mod q, lexicographic in the exponent vectors."""
    group = unit_group(q)
    return [DirichletChar(q, tuple(e)) for e in product(*(range(g.order) for g in group.generators))]


def char_eval(chi: DirichletChar, a: int) -> CycloElem:
    t = chi.exponent_at(a)
    if t is None:
        return CycloElem.zero(chi.order)
    return root_of_unity(chi.order, t)


def char_value_in(chi: DirichletChar, a: int, N: int) -> CycloElem:
    """chi(a) embedded into Q(zeta_N); ``order(chi)`` must divide N."""
    return embed(char_eval(chi, a), N)


def coprime_residues(q: int) -> list[int]:
    return [a for a in range(1, q) if gcd(a, q) == 1] if q > 1 else [1]


def _value_table(q: int) -> tuple[list[DirichletChar], list[int], int, list[dict[int, CycloElem]]]:
    """Characters, units, field index E, and chi(a) in Q(zeta_E) per character."""
    chars = all_characters(q)
    us = coprime_residues(q)
    E = max(unit_group(q).exponent, 1)
    table = [{a: char_value_in(chi, a, E) for a in us} for chi in chars]
    return chars, us, E, table


def _inv(a: int, q: int) -> int:
    return pow(a, -1, q) if q > 1 else 1


def char_matrix(q: int) -> tuple[list[list[CycloElem]], list[list[CycloElem]], int]:
    """(chi_b(a))_{a,b}, its claimed inverse (1/phi) (chi_b(a^-1))_{b,a}, and
    the field index E they live in.  Raises if the product is not the identity."""
    chars, us, E, table = _value_table(q)
    M = [[table[b][a] for b in range(len(chars))] for a in us]
    phi = Fraction(1, euler_phi(q))
    inv = [[table[b][_inv(a, q)] * phi for a in us] for b in range(len(chars))]
    n = len(us)
    for i in range(n):
        for j in range(n):
            s = CycloElem.zero(E)
            for t in range(n):
                s = s + M[i][t] * inv[t][j]
            if s != (1 if i == j else 0):
                raise AssertionError(f"character matrix inverse fails at ({i},{j}) for q={q}")
    return M, inv, E


def orthogonality_defect(q: int) -> list[tuple[int, int]]:
    """Pairs (i, j) of character indices where (1/phi) sum chi_i(a) chi_j(a^-1)
    differs from the Kronecker delta (empty when orthogonality holds)."""
    chars, us, E, table = _value_table(q)
    bad = []
    for i in range(len(chars)):
        for j in range(len(chars)):
            s = CycloElem.zero(E)
            for a in us:
                s = s + table[i][a] * table[j][_inv(a, q)]
            if s * Fraction(1, len(us)) != (1 if i == j else 0):
                bad.append((i, j))
    return bad


def half_residues(q: int) -> list[int]:
    """T_q = {1 <= a < q/2 : (a, q) = 1}."""
    return [a for a in range(1, (q + 1) // 2) if 2 * a < q and gcd(a, q) == 1]


def l_field(k: int, chi: DirichletChar) -> int:
    return lcm(chi.q, chi.order)


def l_coordinates(k: int, chi: DirichletChar) -> CycloElem:
    """Lambda(k, chi) = sum_{a in T_q} chi(a) C_k(a, q) in Q(zeta_lcm(q, order))."""
    q = chi.q
    if q <= 2:
        raise ValueError("l_coordinates needs q > 2")
    N = l_field(k, chi)
    total = CycloElem.zero(N)
    for a in half_residues(q):
        total = total + char_value_in(chi, a, N) * embed(cotan_norm(k, a, q).value, N)
    return total


def full_unit_char_sum(k: int, chi: DirichletChar) -> CycloElem:
    """sum over all units a of chi(a) C_k(a, q); zero when chi(-1) != (-1)^k."""
    q = chi.q
    N = l_field(k, chi)
    total = CycloElem.zero(N)
    for a in coprime_residues(q):
        total = total + char_value_in(chi, a, N) * embed(cotan_norm(k, a, q).value, N)
    return total
