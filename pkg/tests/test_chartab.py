from fractions import Fraction

import pytest

from galmckay.cyclo import ZERO, ONE, make_root, rational
from galmckay.groups import (
    FiniteGroup, GroupMap, cyclic_group, symmetric_group,
    semidirect_product, perm_pow, inverse,
)
from galmckay.chartab import (
    CharacterTable, ChartabError, dixon_schneider, dixon_prime,
    inner_product, induce, restrict, regular_character, trivial_character,
)


def dihedral(n):
    rot = tuple((i + 1) % n for i in range(n))
    refl = tuple((-i) % n for i in range(n))
    return FiniteGroup(n, [rot, refl], name="D%d" % (2 * n))


def quaternion8():
    # regular representation of Q8 on its 8 elements
    # elements: 1, -1, i, -i, j, -j, k, -k as indices 0..7
    mult_i = (2, 3, 1, 0, 6, 7, 5, 4)   # right mult by i
    mult_j = (4, 5, 7, 6, 1, 0, 2, 3)   # right mult by j
    return FiniteGroup(8, [mult_i, mult_j], name="Q8")


def test_c2_table():
    t = dixon_schneider(cyclic_group(2))
    assert t.degrees() == [1, 1]
    vals = sorted(tuple(v.rational_value() for v in r.values) for r in t.rows)
    assert vals == [(1, -1), (1, 1)]


def test_c3_table_has_cube_roots():
    t = dixon_schneider(cyclic_group(3))
    assert t.degrees() == [1, 1, 1]
    z = make_root(3, 1)
    got = {r.values for r in t.rows}
    assert any(z in r for r in got)


def test_q8_degrees():
    t = dixon_schneider(quaternion8())
    assert sorted(t.degrees()) == [1, 1, 1, 1, 2]


def test_d14_table():
    t = dixon_schneider(dihedral(7))
    assert sorted(t.degrees()) == [1, 1, 2, 2, 2]
    t.validate()


def test_s4_table():
    t = dixon_schneider(symmetric_group(4))
    assert sorted(t.degrees()) == [1, 1, 2, 3, 3]


def test_c13_c4_table():
    c13 = cyclic_group(13)
    a = GroupMap(c13, c13, [perm_pow(c13.generators[0], 8)],
                 kind="automorphism")
    sd = semidirect_product(c13, a, 4)
    t = dixon_schneider(sd.group)
    assert sorted(t.degrees()) == [1, 1, 1, 1, 4, 4, 4]


def test_second_orthogonality():
    G = symmetric_group(4)
    t = dixon_schneider(G)
    for c, cl in enumerate(G.conjugacy_classes):
        s = ZERO
        for r in t.rows:
            s = s + r.values[c] * r.values[c].conj()
        assert s == rational(G.order // cl.size)


def test_dixon_prime_independence():
    G = dihedral(6)
    p1 = dixon_prime(G.exponent, G.order)
    p2 = dixon_prime(G.exponent, G.order, skip=1)
    assert p1 != p2
    t1 = dixon_schneider(G, p0=p1)
    t2 = dixon_schneider(G, p0=p2)
    assert [r.values for r in t1.rows] == [r.values for r in t2.rows]


def test_galois_closure_of_table():
    G = dihedral(7)
    t = dixon_schneider(G)
    m = t.exponent
    rowset = {r.values for r in t.rows}
    for b in range(1, m):
        from math import gcd
        if gcd(b, m) != 1:
            continue
        for r in t.rows:
            assert r.galois(b).values in rowset


def test_inner_product_basics():
    G = symmetric_group(4)
    t = dixon_schneider(G)
    for i, r in enumerate(t.rows):
        for j, s in enumerate(t.rows):
            assert inner_product(r, s) == (ONE if i == j else ZERO)
    assert inner_product(trivial_character(G), regular_character(G)) == ONE


def test_induce_regular():
    G = symmetric_group(4)
    triv = G.subgroup([])
    tau = trivial_character(triv)
    ind = induce(G, triv, tau)
    assert ind == regular_character(G)


def test_induce_c13_to_frobenius():
    c13 = cyclic_group(13)
    a = GroupMap(c13, c13, [perm_pow(c13.generators[0], 8)],
                 kind="automorphism")
    sd = semidirect_product(c13, a, 4)
    G = sd.group
    T = sd.embedded_subgroup()
    tt = dixon_schneider(T)
    nontriv = next(r for r in tt.rows if any(v != ONE for v in r.values))
    ind = induce(G, T, nontriv)
    assert ind.degree_int() == 4
    assert inner_product(ind, ind) == ONE  # irreducible


def test_frobenius_reciprocity():
    G = symmetric_group(4)
    H = G.sylow_subgroup(3)
    tg = dixon_schneider(G)
    th = dixon_schneider(H)
    for chi in tg.rows:
        for tau in th.rows:
            lhs = inner_product(induce(G, H, tau), chi)
            rhs = inner_product(restrict(G, H, chi), tau)
            assert lhs == rhs


def test_restrict_then_induce_contains():
    G = symmetric_group(4)
    H = G.sylow_subgroup(2)
    tg = dixon_schneider(G)
    for chi in tg.rows[:3]:
        res = restrict(G, H, chi)
        back = induce(G, H, res)
        assert inner_product(back, chi) != ZERO


def test_p_prime_rows():
    G = symmetric_group(4)
    t = dixon_schneider(G)
    # degrees are 1,1,2,3,3: the odd ones are 1,1,3,3
    assert len(t.p_prime_rows(2)) == 4
    assert len(t.p_prime_rows(3)) == 3
    assert t.p_prime_rows(5) == list(range(5))


def test_values_live_in_element_order_field():
    G = dihedral(7)
    t = dixon_schneider(G)
    for r in t.rows:
        for v, cl in zip(r.values, G.conjugacy_classes):
            assert cl.element_order % v.order == 0
