import pytest

from galmckay.cyclo import ONE
from galmckay.groups import (
    FiniteGroup, GroupMap, cyclic_group, perm_pow, inverse,
)
from galmckay.chartab import dixon_schneider, inner_product, induce
from galmckay.galois import h_group
from galmckay.extend import (
    ExtendError, find_extensions, invariant_extension_exists,
    unique_multiplicity_one_extension, joint_stabilizer,
)


def dihedral(n):
    rot = tuple((i + 1) % n for i in range(n))
    refl = tuple((-i) % n for i in range(n))
    return FiniteGroup(n, [rot, refl], name="D%d" % (2 * n))


def c3_with_inversion():
    c3 = cyclic_group(3)
    a = GroupMap(c3, c3, [inverse(c3.generators[0])], kind="automorphism")
    return c3, a


def d14_with_c3():
    d = dihedral(7)
    rot, refl = d.generators
    a = GroupMap(d, d, [perm_pow(rot, 2), refl], kind="automorphism")
    assert a.map_order() == 3
    return d, a


def test_moved_character_stays_put():
    # psi not A-invariant: A_psi trivial, the extension set is psi itself
    c3, a = c3_with_inversion()
    t = dixon_schneider(c3)
    row = next(i for i, r in enumerate(t.rows)
               if any(v != ONE for v in r.values))
    ext = find_extensions(t, a, 2, row)
    assert ext.a_psi_order == 1
    assert ext.rows == (row,)
    assert ext.table is t


def test_trivial_character_two_extensions():
    c3, a = c3_with_inversion()
    t = dixon_schneider(c3)
    triv = next(i for i, r in enumerate(t.rows)
                if all(v == ONE for v in r.values))
    ext = find_extensions(t, a, 2, triv)
    assert ext.a_psi_order == 2
    assert len(ext.rows) == 2
    assert ext.product.group.order == 6
    assert all(ext.table.rows[i].degree_int() == 1 for i in ext.rows)


def test_gallagher_counts_c7_c3():
    c7 = cyclic_group(7)
    a = GroupMap(c7, c7, [perm_pow(c7.generators[0], 2)],
                 kind="automorphism")
    t = dixon_schneider(c7)
    for row in range(len(t.rows)):
        ext = find_extensions(t, a, 3, row)
        trivial = all(v == ONE for v in t.rows[row].values)
        assert len(ext.rows) == (3 if trivial else 1)


def test_restriction_is_exact():
    d, a = d14_with_c3()
    t = dixon_schneider(d)
    sign = next(i for i, r in enumerate(t.rows)
                if r.degree_int() == 1 and any(v != ONE for v in r.values))
    ext = find_extensions(t, a, 3, sign)
    assert len(ext.rows) == 3
    for i in ext.rows:
        chi = ext.table.rows[i]
        for c in range(len(t.classes)):
            assert chi.values[ext.fusion[c]] == t.rows[sign].values[c]


def test_unique_real_extension_odd_stabilizer():
    # real row, odd cyclic stabilizer: exactly one real extension and it
    # is the joint-stabilizer-invariant one
    d, a = d14_with_c3()
    t = dixon_schneider(d)
    sign = next(i for i, r in enumerate(t.rows)
                if r.degree_int() == 1 and any(v != ONE for v in r.values))
    ext = find_extensions(t, a, 3, sign)
    real = [i for i in ext.rows
            if all(v == v.conj() for v in ext.table.rows[i].values)]
    assert len(real) == 1
    H = h_group(2, ext.table.exponent)
    w = invariant_extension_exists(t, a, 3, sign, H)
    assert w.invariant
    assert w.extension_row == real[0]


def test_joint_stabilizer_contains_identity():
    d, a = d14_with_c3()
    t = dixon_schneider(d)
    H = h_group(2, t.exponent * 3)
    pairs = joint_stabilizer(t, a, 3, 0, H)
    assert any(j == 0 and s.is_identity() for j, s in pairs)


def test_linear_character_invariant_extension():
    c7 = cyclic_group(7)
    a = GroupMap(c7, c7, [perm_pow(c7.generators[0], 2)],
                 kind="automorphism")
    t = dixon_schneider(c7)
    triv = next(i for i, r in enumerate(t.rows)
                if all(v == ONE for v in r.values))
    H = h_group(5, 42)
    w = invariant_extension_exists(t, a, 3, triv, H)
    assert w.invariant
    chi = w.extension_set.table.rows[w.extension_row]
    c = w.extension_set.product.group.class_of_element(
        w.extension_set.product.comp_gen)
    assert chi.values[c] == ONE


def test_realizer_path():
    c3 = FiniteGroup(3, [(1, 2, 0)], name="C3")
    a = GroupMap(c3, c3, [(2, 0, 1)], kind="automorphism")
    t = dixon_schneider(c3)
    triv = next(i for i, r in enumerate(t.rows)
                if all(v == ONE for v in r.values))
    ext = find_extensions(t, a, 2, triv, realizer=(0, 2, 1))
    assert ext.product.group.degree == 3
    assert ext.product.group.order == 6
    assert len(ext.rows) == 2


def test_unique_multiplicity_one_trivial_case():
    d, a = d14_with_c3()
    t = dixon_schneider(d)
    sign = next(i for i, r in enumerate(t.rows)
                if r.degree_int() == 1 and any(v != ONE for v in r.values))
    ext = find_extensions(t, a, 3, sign)
    chosen = ext.rows[0]
    got = unique_multiplicity_one_extension(ext, ext.product.group,
                                            ext.table.rows[chosen])
    assert got == chosen


def test_unique_multiplicity_one_induced():
    # degree-2 row of D14 as the unique constituent of an induction from
    # the rotation subgroup; A trivial so the product is D14 itself
    d = dihedral(7)
    ident = GroupMap(d, d, list(d.generators), kind="automorphism")
    t = dixon_schneider(d)
    two = next(i for i, r in enumerate(t.rows) if r.degree_int() == 2)
    ext = find_extensions(t, ident, 1, two)
    X = d.subgroup([d.generators[0]], name="C7")
    tx = dixon_schneider(X)
    tau = next(r for r in tx.rows
               if inner_product(induce(d, X, r), t.rows[two]) == ONE)
    got = unique_multiplicity_one_extension(ext, X, tau)
    assert got == two


def test_unique_multiplicity_one_rejects_wrong_tau():
    d = dihedral(7)
    ident = GroupMap(d, d, list(d.generators), kind="automorphism")
    t = dixon_schneider(d)
    two = next(i for i, r in enumerate(t.rows) if r.degree_int() == 2)
    ext = find_extensions(t, ident, 1, two)
    X = d.subgroup([d.generators[0]], name="C7")
    tx = dixon_schneider(X)
    bad = next(r for r in tx.rows
               if inner_product(induce(d, X, r), t.rows[two]) != ONE)
    with pytest.raises(ExtendError):
        unique_multiplicity_one_extension(ext, X, bad)
