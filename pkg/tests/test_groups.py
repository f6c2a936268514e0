import pytest

from galmckay.groups import (
    FiniteGroup, GroupError, GroupMap, SemidirectProduct,
    compose, inverse, conjugate, perm_order, perm_pow, identity_perm,
    cyclic_group, symmetric_group, semidirect_product, identity_map,
    induced_class_permutation,
)


def test_perm_helpers():
    p = (1, 2, 0, 3)
    assert compose(p, inverse(p)) == identity_perm(4)
    assert perm_order(p) == 3
    assert perm_pow(p, 3) == identity_perm(4)
    assert perm_pow(p, -1) == inverse(p)


def test_trivial_and_cyclic():
    t = FiniteGroup(1, [])
    assert t.order == 1
    c5 = cyclic_group(5)
    assert c5.order == 5
    assert len(c5.conjugacy_classes) == 5


def test_symmetric_group():
    s4 = symmetric_group(4)
    assert s4.order == 24
    assert len(s4.conjugacy_classes) == 5
    sizes = sorted(c.size for c in s4.conjugacy_classes)
    assert sizes == [1, 3, 6, 6, 8]
    assert sum(sizes) == 24


def test_elementary_abelian_8():
    gens = []
    for b in range(3):
        perm = [i ^ (1 << b) for i in range(8)]
        gens.append(tuple(perm))
    g = FiniteGroup(8, gens)
    assert g.order == 8
    assert len(g.conjugacy_classes) == 8
    assert all(c.size == 1 for c in g.conjugacy_classes)


def dihedral(n):
    rot = tuple((i + 1) % n for i in range(n))
    refl = tuple((-i) % n for i in range(n))
    return FiniteGroup(n, [rot, refl], name="D%d" % (2 * n))


def test_dihedral_14_classes():
    d = dihedral(7)
    assert d.order == 14
    assert len(d.conjugacy_classes) == 5


def test_class_ordering_deterministic():
    d = dihedral(7)
    key = [(c.element_order, c.size) for c in d.conjugacy_classes]
    assert key == sorted(key)
    assert d.conjugacy_classes[0].element_order == 1


def test_power_map():
    d = dihedral(7)
    for c in range(len(d.conjugacy_classes)):
        assert d.power_map(c, 1) == c
    # a class of 7-elements: squaring then cubing returns g^6 = g^-1's class
    for c, cl in enumerate(d.conjugacy_classes):
        if cl.element_order == 7:
            c2 = d.power_map(c, 2)
            assert d.conjugacy_classes[c2].element_order == 7
            assert d.power_map(c2, 3) == d.power_map(c, 6)


def test_sylow_and_normalizer():
    s4 = symmetric_group(4)
    p2 = s4.sylow_subgroup(2)
    assert p2.order == 8
    p3 = s4.sylow_subgroup(3)
    assert p3.order == 3
    n3 = s4.normalizer(p3)
    assert n3.order == 6
    assert s4.normalizer(s4.subgroup(s4.generators)).order == 24
    with pytest.raises(GroupError):
        s4.sylow_subgroup(5)


def test_group_map_checks():
    c6 = cyclic_group(6)
    inv = GroupMap(c6, c6, [inverse(c6.generators[0])], kind="automorphism")
    assert inv.map_order() == 2
    assert not inv.is_inner()
    with pytest.raises(GroupError):
        # x -> x^2 is not injective on C6
        GroupMap(c6, c6, [perm_pow(c6.generators[0], 2)], kind="automorphism")


def test_induced_class_permutation_identity_and_inner():
    s4 = symmetric_group(4)
    assert induced_class_permutation(s4, identity_map(s4)) == tuple(range(5))
    g = s4.elements[7]
    imgs = [conjugate(s, g) for s in s4.generators]
    inner = GroupMap(s4, s4, imgs, kind="automorphism")
    assert induced_class_permutation(s4, inner) == tuple(range(5))


def test_semidirect_dihedral():
    c7 = cyclic_group(7)
    inv = GroupMap(c7, c7, [inverse(c7.generators[0])], kind="automorphism")
    sd = semidirect_product(c7, inv, 2)
    assert sd.group.order == 14
    d = dihedral(7)
    assert sorted(c.size for c in sd.group.conjugacy_classes) == \
        sorted(c.size for c in d.conjugacy_classes)
    # conjugation by the complement generator induces the automorphism
    for g in c7.generators:
        lhs = conjugate(sd.embed(g), sd.comp_gen)
        assert lhs == sd.embed(inv.apply(g))


def test_semidirect_c13_c4():
    c13 = cyclic_group(13)
    a = GroupMap(c13, c13, [perm_pow(c13.generators[0], 8)],
                 kind="automorphism")
    sd = semidirect_product(c13, a, 4)
    assert sd.group.order == 52
    assert len(sd.group.conjugacy_classes) == 7


def test_semidirect_trivial():
    s4 = symmetric_group(4)
    sd = semidirect_product(s4, identity_map(s4), 1)
    assert sd.group.order == 24
    assert sorted(c.size for c in sd.group.conjugacy_classes) == \
        sorted(c.size for c in s4.conjugacy_classes)


def test_semidirect_rejects_wrong_order():
    c7 = cyclic_group(7)
    inv = GroupMap(c7, c7, [inverse(c7.generators[0])], kind="automorphism")
    with pytest.raises(GroupError):
        semidirect_product(c7, inv, 3)


def test_semidirect_with_realizer():
    # S3 inside S4 point-stabilizer style: use realizer for C3 x C2 demo
    c3 = FiniteGroup(3, [(1, 2, 0)], name="C3")
    inv = GroupMap(c3, c3, [(2, 0, 1)], kind="automorphism")
    r = (0, 2, 1)  # transposition inverting the 3-cycle by conjugation
    sd = semidirect_product(c3, inv, 2, realizer=r)
    assert sd.group.order == 6
    assert sd.comp_gen == r


def test_class_sizes_divide_order():
    for g in (symmetric_group(4), dihedral(9), cyclic_group(12)):
        for c in g.conjugacy_classes:
            assert g.order % c.size == 0
        assert sum(c.size for c in g.conjugacy_classes) == g.order
