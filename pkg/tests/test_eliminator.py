import copy
import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from classgraph.eliminator import (
    ContradictionReport,
    candidate_fields,
    candidates,
    class_from_T,
    classify,
    congruence_obstruction,
    eliminate,
    k_candidates,
    qbyq_exponent_exceeds_three,
    rsnotprs_witnesses,
    tlints_exceptional,
    tmaless2t3,
    verify_report,
    witness_ok,
    witness_set,
)
from classgraph.groups import EVEN_ORTHOGONAL, LINEAR, ODD_ORTHOGONAL, SYMPLECTIC, GroupDescriptor, parse_descriptor
from classgraph.primegraph import zeta_table
from classgraph.tables import RangeError
from classgraph.zsigmondy import DomainError, nu_eps

O30 = GroupDescriptor(EVEN_ORTHOGONAL, 30, 3, -1)


@pytest.fixture(scope="module")
def o60_report():
    return eliminate(O30, GroupDescriptor(EVEN_ORTHOGONAL, 30, 2, -1))


def test_classes():
    assert classify(GroupDescriptor(LINEAR, 45, 5)) == "X1"
    assert classify(GroupDescriptor(LINEAR, 45, 5, -1)) == "X1"
    assert classify(GroupDescriptor(EVEN_ORTHOGONAL, 31, 5)) == "X2"
    # n = 0 mod 4 gives Y1 for symplectic groups; n = 28 itself has t = 22
    assert classify(GroupDescriptor(SYMPLECTIC, 32, 5)) == "Y1"
    assert classify(O30) == "Y1"
    with pytest.raises(RangeError):
        classify(GroupDescriptor(SYMPLECTIC, 28, 5))


@pytest.mark.parametrize("fe", [(LINEAR, 1), (LINEAR, -1), (SYMPLECTIC, 1), (ODD_ORTHOGONAL, 1),
                                (EVEN_ORTHOGONAL, 1), (EVEN_ORTHOGONAL, -1)])
def test_class_label_matches_T(fe):
    lo = 45 if fe[0] == LINEAR else 31
    for n in range(lo, lo + 12):
        L = GroupDescriptor(fe[0], n, 3, fe[1])
        assert classify(L) == class_from_T(L)


def test_k_table():
    assert k_candidates(3, GroupDescriptor(LINEAR, 50, 7)) == {3}
    assert k_candidates(4, GroupDescriptor(EVEN_ORTHOGONAL, 29, 7)) == {4, 6}
    assert k_candidates(2, GroupDescriptor(SYMPLECTIC, 30, 7)) == {1, 2}
    with pytest.raises(DomainError):
        k_candidates(5, GroupDescriptor(SYMPLECTIC, 30, 7))


def test_congruence():
    U = GroupDescriptor(LINEAR, 50, 7, -1)
    assert congruence_obstruction(nu_eps(21, -1), nu_eps(3, -1), U)
    S = GroupDescriptor(SYMPLECTIC, 30, 7)
    assert congruence_obstruction(12, 4, S)
    assert not congruence_obstruction(16, 4, S)


def test_witness_examples():
    assert rsnotprs_witnesses(13, GroupDescriptor(SYMPLECTIC, 28, 3)) == (30, 15)
    assert rsnotprs_witnesses(20, GroupDescriptor(LINEAR, 45, 3)) == (25, 24)
    assert rsnotprs_witnesses(30, GroupDescriptor(EVEN_ORTHOGONAL, 31, 3)) == (32, None)


def test_witness_o_plus_n_2_mod_4():
    # eta(j) = n/2 - 1 with n = 2 mod 4: the second witness is n + 2
    L = GroupDescriptor(EVEN_ORTHOGONAL, 34, 3)
    i, i2 = rsnotprs_witnesses(32, L)
    assert (i, i2) == (17, 36)
    assert set(witness_set(32, L)) == {17, 34, 36}


@given(st.sampled_from([(SYMPLECTIC, 1), (ODD_ORTHOGONAL, 1), (EVEN_ORTHOGONAL, 1), (EVEN_ORTHOGONAL, -1), (LINEAR, 1)]),
       st.integers(0, 8), st.data())
def test_witnesses_have_the_stated_properties(fe, dn, data):
    L = GroupDescriptor(fe[0], (45 if fe[0] == LINEAR else 31) + dn, 3, fe[1])
    Z = zeta_table(L)
    j = data.draw(st.sampled_from(sorted(Z.M & Z.N)))
    i, i2 = rsnotprs_witnesses(j, L)
    assert witness_ok(j, i, L)
    assert i2 is None or witness_ok(j, i2, L)


def test_o60_pattern(o60_report):
    r = o60_report
    assert isinstance(r, ContradictionReport) and r.verified
    assert r.pattern == "tplneq4"
    w = r.witnesses
    assert w["s_indices"] == [11, 22]
    assert w["r_indices"] == [19, 36, 38]


def test_class_mismatch():
    r = eliminate(parse_descriptor("S(n=29,q=5)"), parse_descriptor("S(n=30,u=2)"))
    assert r.pattern == "class-mismatch" and r.verified
    assert r.witnesses["x"] == 21


def test_t_mismatch():
    r = eliminate(GroupDescriptor(LINEAR, 45, 3), GroupDescriptor(LINEAR, 47, 2))
    assert r.pattern == "t-mismatch" and r.verified


def test_scan_l45():
    L = parse_descriptor("L45+(q=4)")
    reports = [eliminate(L, S) for S in candidates(L)]
    assert len(reports) == 36
    assert all(isinstance(r, ContradictionReport) and r.verified for r in reports)


def test_pair_errors():
    with pytest.raises(DomainError):
        eliminate(GroupDescriptor(LINEAR, 45, 3), GroupDescriptor(LINEAR, 45, 9))
    with pytest.raises(RangeError):
        eliminate(GroupDescriptor(SYMPLECTIC, 28, 3), GroupDescriptor(SYMPLECTIC, 28, 2))


def test_tampered_reports_fail(o60_report):
    tampered = set()
    for pos, f in enumerate(o60_report.narrative):
        if f.kind == "axiom":
            continue
        bad = copy.deepcopy(o60_report)
        g = bad.narrative[pos]
        if f.kind in ("t", "tp"):
            g.data["value"] += 1
        elif f.kind == "class":
            g.data["label"] = "X1"
        elif f.kind == "K":
            g.data["value"] = [1, 2, 3, 4, 6]
        elif f.kind == "coclique":
            g.data["indices"] = g.data["indices"] + [11]
        elif f.kind == "pigeonhole":
            g.data["pairs"] = []
        elif f.kind == "witness":
            g.data["i"] = 3
        else:
            continue
        assert not verify_report(bad), f.kind
        tampered.add(f.kind)
    assert {"t", "class", "K", "coclique", "pigeonhole", "witness"} <= tampered


def test_report_json(o60_report):
    d = json.loads(json.dumps(o60_report.as_dict()))
    assert d["pair"] == ["O-(n=30,q=3)", "O-(n=30,q=2)"]
    assert set(d) == {"pair", "pattern", "witnesses", "narrative", "verified"}
    assert all(set(f) == {"fact", "source"} for f in d["narrative"])


def test_inequalities():
    assert tmaless2t3(23, 3) and not tmaless2t3(23, 8)
    assert qbyq_exponent_exceeds_three(23, 23, 1)
    assert not qbyq_exponent_exceeds_three(9, 23, 14)
    with pytest.raises(DomainError):
        qbyq_exponent_exceeds_three(20, 23, 2)


@given(st.integers(23, 200), st.integers(1, 5))
def test_tmaless2t3_is_the_exact_inequality(t, a):
    assert tmaless2t3(t, a) == (3 * (t - a) > 2 * t + 2)


def test_exceptional_values():
    for m in range(29, 50):
        for eps in (1, -1):
            S = GroupDescriptor(EVEN_ORTHOGONAL, m, 2, eps)
            Z = zeta_table(S)
            extra = {Fraction(Z.zeta[i]) for i in Z.N - Z.M}
            assert extra <= tlints_exceptional(S)


def test_candidate_fields():
    assert candidate_fields(3, 3) == [2, 4, 5, 7, 8]
    assert candidate_fields(2, 4) == [3, 5, 7, 9]
