from math import gcd

import pytest
from hypothesis import given, strategies as st

from cmverify.characters import (
    all_characters,
    char_eval,
    char_matrix,
    char_value_in,
    discrete_log,
    full_unit_char_sum,
    half_residues,
    l_coordinates,
    orthogonality_defect,
    unit_group,
)
from cmverify.cyclotomic import CycloElem, root_of_unity
from cmverify.exact import euler_phi, lcm


def test_unit_group_examples():
    assert [(g.residue, g.order) for g in unit_group(8).generators] == [(7, 2), (5, 2)]
    assert [(g.residue, g.order) for g in unit_group(5).generators] == [(2, 4)]
    assert unit_group(1).generators == ()
    assert unit_group(2).generators == ()


@pytest.mark.parametrize("q", range(1, 61))
def test_generators_cover_the_unit_group(q):
    group = unit_group(q)
    seen = set()
    for a in range(q):
        if gcd(a, q) == 1:
            exps = discrete_log(q, a)
            x = 1
            for g, e in zip(group.generators, exps):
                x = x * pow(g.residue, e, q) % q
            assert x % q == a % q
            seen.add(exps)
    assert len(seen) == euler_phi(q)


def test_character_counts_and_parities():
    chars4 = all_characters(4)
    assert [c.parity for c in chars4] == [1, -1]
    assert char_eval(chars4[1], 3) == -1
    chars5 = all_characters(5)
    assert len(chars5) == 4
    assert sorted(c.parity for c in chars5) == [-1, -1, 1, 1]
    assert [c.parity for c in all_characters(3)] == [1, -1]


def test_character_values_examples():
    chi = next(c for c in all_characters(5) if char_eval(c, 2) == root_of_unity(4))
    assert char_eval(chi, 4) == -1
    for c in all_characters(12):
        assert char_eval(c, 6).is_zero()


@given(st.integers(1, 40), st.data())
def test_multiplicativity(q, data):
    chars = all_characters(q)
    chi = data.draw(st.sampled_from(chars))
    a, b = data.draw(st.integers(0, 3 * q)), data.draw(st.integers(0, 3 * q))
    E = max(unit_group(q).exponent, 1)
    assert char_value_in(chi, a * b, E) == char_value_in(chi, a, E) * char_value_in(chi, b, E)
    assert char_value_in(chi, a + q, E) == char_value_in(chi, a, E)


@pytest.mark.parametrize("q", range(1, 31))
def test_character_group_structure(q):
    chars = all_characters(q)
    assert len(chars) == euler_phi(q)
    assert len(set(chars)) == len(chars)
    assert sum(c.is_trivial() for c in chars) == 1
    for c in chars:
        # order really is the order of the character
        vals = [char_eval(c, a) for a in range(1, q + 1) if gcd(a, q) == 1]
        assert all(v ** c.order == 1 for v in vals)


@pytest.mark.parametrize("q", [3, 4])
def test_char_matrix_small(q):
    M, inv, _ = char_matrix(q)
    assert M == [[1, 1], [1, -1]]
    assert [[2 * x for x in row] for row in inv] == [[1, 1], [1, -1]]


@pytest.mark.parametrize("q", range(1, 31))
def test_orthogonality(q):
    assert orthogonality_defect(q) == []
    char_matrix(q)


def test_half_residues():
    assert half_residues(5) == [1, 2]
    assert half_residues(12) == [1, 5]
    assert half_residues(7) == [1, 2, 3]
    for q in range(3, 40):
        t = half_residues(q)
        full = sorted(t + [q - a for a in t])
        assert full == [a for a in range(1, q) if gcd(a, q) == 1]


def test_l_coordinates_mod_4():
    chi = all_characters(4)[1]
    assert l_coordinates(1, chi) == root_of_unity(4)
    with pytest.raises(ValueError):
        l_coordinates(1, all_characters(2)[0])


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9, 12, 15])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_parity_mismatch_sums_vanish(q, k):
    for chi in all_characters(q):
        s = full_unit_char_sum(k, chi)
        if chi.parity != (-1) ** k:
            assert s.is_zero()
        else:
            # matched parity: the full sum is twice the half sum
            assert s == 2 * l_coordinates(k, chi)


def test_l_field_contains_values():
    chi = all_characters(7)[1]
    assert l_coordinates(2, chi).n == lcm(7, chi.order)
    assert isinstance(l_coordinates(2, chi), CycloElem)
