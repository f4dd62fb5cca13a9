import pytest

from graceful_lab.families import FamilyFilter, generate_trees, trees_up_to
from graceful_lab.fixtures import P6, S, T
from graceful_lab.labeling import Labeling, is_alpha
from graceful_lab.probes import (
    hunt,
    is_zero_centered,
    probe_q1,
    probe_q2,
    probe_q3,
    relaxed_s_check,
    run_probe,
    zero_centered,
)
from graceful_lab.search import ConstraintSet, brute_force_oracle
from graceful_lab.tree import Tree, canonical_code

from oracles import graceful_brute

P5 = Tree.path(5)


def test_q1_S_fails_both_ways():
    v = probe_q1(S)
    assert v.applicable and v.failed and v.sat_assignments == []
    assert set(v.verdicts) == {"critical=3,max=4", "critical=4,max=3"}
    assert all(c.oracle_checked for c in v.certificates.values())


def test_q1_P6_passes():
    v = probe_q1(P6)
    assert v.applicable and not v.failed and v.sat_assignments


def test_q1_T_not_applicable():
    assert not probe_q1(T).applicable


def test_q2_T_fails():
    v = probe_q2(T)
    assert v.applicable and v.failed


def test_q2_star_not_applicable():
    assert not probe_q2(Tree.star(4)).applicable


def _oracle_sat(t, **kw):
    return brute_force_oracle(t, ConstraintSet(**kw)).sat


def test_q2_P5_agrees_with_oracle():
    v = probe_q2(P5)
    assert v.applicable
    assert (not v.failed) == _oracle_sat(P5, max_on=2)
    # a concrete witness: 0-1-2-3-4 labeled 1,3,4,0,2 puts 4 on the center
    assert not v.failed


def test_q3_T_fails_for_both_almost_central():
    v = probe_q3(T)
    assert v.applicable and v.failed
    assert set(v.verdicts) == {"critical=3,max=2", "critical=3,max=4"}
    assert all(c.forced_critical == 3 for c in v.certificates.values())


def test_q3_P5_agrees_with_oracle():
    v = probe_q3(P5)
    assert v.applicable
    for w in (1, 3):
        oracle = _oracle_sat(P5, require_alpha=True, critical_on=2, max_on=w)
        assert v.verdicts[f"critical=2,max={w}"] == ("SAT" if oracle else "UNSAT")


def test_q3_star_not_applicable():
    assert not probe_q3(Tree.star(4)).applicable


def test_zero_centered_examples():
    assert not is_zero_centered(T)
    assert is_zero_centered(Tree.path(3))
    assert is_zero_centered(P5) == _oracle_sat(P5, zero_on=2)
    with pytest.raises(ValueError):
        is_zero_centered(P6)


def test_unknown_probe():
    with pytest.raises(ValueError):
        run_probe("q9", T)
    with pytest.raises(ValueError):
        hunt(4, probe="q9")


def test_hunt_minimality():
    fam = FamilyFilter.diameter(5, max_k_distance=2, center_count=2)
    report = hunt(7, fam, "q1")
    assert [e.code for e in report.failures] == [canonical_code(S)]
    six = [e for e in report.applicable if e.n == 6]
    assert [e.code for e in six] == [canonical_code(P6)] and not six[0].failed


def test_hunt_q2_finds_T():
    report = hunt(6, FamilyFilter.diameter(4, center_parity="even"), "q2")
    assert canonical_code(T) in {e.code for e in report.failures}


def test_hunt_q1_small_is_empty():
    report = hunt(4, FamilyFilter(), "q1")
    assert report.failures == []
    # only two-center trees with diameter 1 or 3 exist here, and they pass
    assert all(not e.failed for e in report.entries)


def test_hunt_report_json():
    d = hunt(6, FamilyFilter.diameter(4), "zero").to_dict()
    assert d["failures"] == [canonical_code(T)]
    assert d["trees"] == len(d["entries"])


def test_relaxed_s_check():
    certs = relaxed_s_check()
    assert certs["critical"].sat and certs["max"].sat
    assert (6, 4, 0, 5, 2, 3, 1) in certs["critical"].witnesses
    assert (1, 3, 4, 2, 6, 0, 5) in certs["max"].witnesses
    assert is_alpha(S, Labeling((6, 4, 0, 5, 2, 3, 1))) == 2
    assert is_alpha(S, Labeling((1, 3, 4, 2, 6, 0, 5))) == 3


@pytest.mark.parametrize("probe", ["q1", "q2", "q3", "zero"])
def test_probes_agree_with_oracle(probe):
    # run_probe cross-checks every certificate with the oracle up to n = 9,
    # so an engine/oracle disagreement surfaces as an AssertionError here
    for t in trees_up_to(8):
        v = run_probe(probe, t)
        assert all(c.oracle_checked for c in v.certificates.values())


def test_complement_duality():
    for t in trees_up_to(8):
        if len(t.profile.centers) != 1:
            continue
        c = t.profile.centers[0]
        labs = graceful_brute(t)
        zero = any(lab[c] == 0 for lab in labs)
        top = any(lab[c] == t.n - 1 for lab in labs)
        assert zero == top
        assert zero_centered(t, oracle=False).failed == (not zero)
