import pytest

from galmckay.chartab import dixon_schneider
from galmckay.verify import (
    VerifyError, ActionOnSet, match_actions, brute_force_match_exists,
    joint_row_action, condition_one, extension_sweep,
    torus_polynomials, lemma_congruence_check,
    tables_equivalent, cross_model_check, verify_target, list_targets,
    target_mode, local_model_group, global_table,
)
from galmckay.groups import FiniteGroup, cyclic_group, symmetric_group
from galmckay.galois import h_group


def test_match_actions_identity():
    X = ActionOnSet(["e", "a"], [(0, 1, 2), (1, 0, 2)], 3)
    res = match_actions(X, X)
    assert res.ok
    assert res.bijection == ((0, 0), (1, 1), (2, 2))


def test_match_actions_failure():
    # C2 acting trivially vs acting with one swap
    X = ActionOnSet(["e", "a"], [(0, 1, 2), (0, 1, 2)], 3)
    Y = ActionOnSet(["e", "a"], [(0, 1, 2), (1, 0, 2)], 3)
    res = match_actions(X, Y)
    assert not res.ok
    assert res.reason is not None


def test_match_actions_rejects_different_groups():
    X = ActionOnSet(["e"], [(0, 1)], 2)
    Y = ActionOnSet(["e", "a"], [(0, 1), (1, 0)], 2)
    with pytest.raises(VerifyError):
        match_actions(X, Y)


def test_match_actions_rejects_nonabelian():
    s3 = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (0, 2, 1), (1, 0, 2), (2, 1, 0)]
    X = ActionOnSet(list(range(6)), s3, 3)
    with pytest.raises(VerifyError):
        match_actions(X, X)


def test_match_agrees_with_brute_force():
    # several C4-actions on 4 points, pairwise compared against the
    # exhaustive search
    def c4_action(perm):
        p2 = tuple(perm[i] for i in perm)
        p3 = tuple(p2[i] for i in perm)
        return ActionOnSet([0, 1, 2, 3],
                           [tuple(range(4)), perm, p2, p3], 4)

    actions = [
        c4_action((1, 2, 3, 0)),    # one 4-cycle
        c4_action((1, 0, 3, 2)),    # two swaps
        c4_action((1, 0, 2, 3)),    # one swap, two fixed
        c4_action((0, 1, 2, 3)),    # trivial
        c4_action((2, 3, 0, 1)),    # two swaps via squares
    ]
    for X in actions:
        for Y in actions:
            fast = match_actions(X, Y).ok
            brute = brute_force_match_exists(X, Y)
            assert fast == brute


def test_condition_one_psl28(psl28_table):
    rep = verify_target("PSL2", 1, 7)
    assert rep["verdict"] == {"part1": True, "part2": True}
    assert rep["counts"] == {"global": 5, "local": 5}
    assert len(rep["bijection"]) == 5


def test_condition_one_psl28_p2():
    rep = verify_target("PSL2", 1, 2)
    assert rep["counts"] == {"global": 8, "local": 8}
    assert rep["verdict"] == {"part1": True, "part2": True}
    degrees = sorted(e["degree"] for e in rep["extensions"]
                     if e["side"] == "global")
    assert degrees == [1, 7, 7, 7, 7, 9, 9, 9]


def test_joint_row_action_stability(psl28_table):
    H = h_group(7, psl28_table.exponent)
    rows = psl28_table.p_prime_rows(7)
    X = joint_row_action(psl28_table, None, 1, H, rows)
    assert X.is_abelian()
    assert X.n == len(rows)


def test_torus_polynomials_f1():
    t = torus_polynomials(1)
    assert t == {"T1": 7, "T2+": 13, "T2-": 5, "T3": 57,
                 "T4+": 109, "T4-": 37}


def test_torus_polynomial_identities():
    for f in range(1, 9):
        q4 = 2 ** (2 * (2 * f + 1))
        t = torus_polynomials(f)
        assert t["T2+"] * t["T2-"] == q4 + 1
        assert t["T4+"] * t["T4-"] * (q4 + 1) == q4 ** 3 + 1


def test_lemma_congruences_small():
    rep = lemma_congruence_check(1, 3)
    assert rep["ok"]
    f1 = rep["per_f"][0]
    assert f1["values"]["T3"]["factors"] == [[3, 1], [19, 1]]
    assert f1["identities"]


def test_lemma_congruence_bounds():
    with pytest.raises(VerifyError):
        lemma_congruence_check(0, 3)
    with pytest.raises(VerifyError):
        lemma_congruence_check(2, 1)


def test_tables_equivalent_reflexive():
    t = dixon_schneider(symmetric_group(4))
    assert tables_equivalent(t, t)


def test_tables_equivalent_distinguishes():
    c4 = dixon_schneider(cyclic_group(4))
    gens = [(1, 0, 2, 3), (0, 1, 3, 2)]
    v4 = dixon_schneider(FiniteGroup(4, gens, name="V4"))
    assert not tables_equivalent(c4, v4)


def test_cross_model_2b2_p5():
    assert cross_model_check("2B2", 1, 5)


def test_cross_model_rejects_other_families():
    with pytest.raises(VerifyError):
        cross_model_check("2G2", 1, 7)


def test_out_of_scope_report():
    rep = verify_target("2B2", 1, 11)
    assert rep["status"] == "out-of-scope"
    assert rep["known_targets"]
    rep = verify_target("2F4", 3, 7)
    assert rep["status"] == "out-of-scope"


def test_local_only_target():
    rep = verify_target("2G2", 1, 7)
    assert rep["mode"] == "local-only"
    assert rep["verdict"]["part1"] is None
    assert rep["verdict"]["part2"] is True
    assert rep["counts"]["global"] is None


def test_target_modes():
    assert target_mode("2B2", 1, 5) == "full"
    assert target_mode("2B2", 2, 31) == "local-only"
    assert target_mode("2B2", 1, 11) is None


def test_list_targets_contains_acceptance_grid():
    grid = {(t["family"], t["f"], t["p"]) for t in list_targets()}
    for p in (5, 7, 13):
        assert ("2B2", 1, p) in grid
    for p in (2, 7):
        assert ("PSL2", 1, p) in grid


def test_local_model_group_psl2():
    assert local_model_group("PSL2", 1, 2).order == 56
    assert local_model_group("PSL2", 1, 7).order == 14
    assert local_model_group("PSL2", 1, 3).order == 18
