from fractions import Fraction

import pytest

from conftest import analysis_of, knotinfo, table
from knotbounds.analysis import analyze_diagram, analyze_goeritz
from knotbounds.covering import AbelianGroup, SpectrumEntry
from knotbounds.criteria import (
    CriterionVerdict,
    KnotData,
    achiral_u1_test,
    chirality_obstruction,
    combined_report,
    composite_bound,
    conjecture_scan,
    distance_bound,
    golden_congruence_test,
    jones_u1_test,
    linking_u1_test,
    q_bound,
    sigma4_square_test,
    signature_bound,
    signed_combination,
    traczyk_bound,
    wendt_bound,
)
from knotbounds.diagram import unknot
from knotbounds.invariants import InconsistentInvariants, SpecialValues

NAMES = [row.name for row in table("knots_le10")]


@pytest.fixture(scope="module")
def trivial():
    return analyze_diagram(unknot(), "0_1")


def test_verdict_bound_needs_applicability():
    with pytest.raises(ValueError):
        CriterionVerdict("x", False, 2)
    assert CriterionVerdict("x", True, 1).signed is None
    assert CriterionVerdict("x", False, None, True, False).signed == {
        "u_plus_1_excluded": True,
        "u_minus_1_excluded": False,
    }


@pytest.mark.parametrize("factors, bound", [((), 0), ((5, 5), 2), ((91,), 1)])
def test_wendt(factors, bound):
    assert wendt_bound(AbelianGroup(factors)).bound == bound


@pytest.mark.parametrize("sigma, bound", [(0, 0), (4, 2), (2, 1), (-6, 3)])
def test_signature_bound(sigma, bound):
    assert signature_bound(sigma).bound == bound


def test_signature_bound_rejects_odd():
    with pytest.raises(ValueError):
        signature_bound(3)


def test_traczyk(trivial):
    assert traczyk_bound(trivial.special).bound == 0
    assert traczyk_bound(analysis_of("9_46").special).bound == 2
    assert traczyk_bound(analysis_of("8_16").special).bound == 0


def test_jones_test_unknot_passes(trivial):
    v = jones_u1_test(trivial.jones, 0, trivial.data)
    assert v.bound is None and not v.u_plus_excluded and not v.u_minus_excluded


def test_jones_test_9_46_both_mirrors():
    data = analysis_of("9_46").data
    assert jones_u1_test(data.jones, data.sigma, data).bound == 2
    other = data.mirrored()
    assert jones_u1_test(other.jones, other.sigma, other).bound == 2


def test_jones_test_6_1_one_sided():
    data = analysis_of("6_1").data
    v = jones_u1_test(data.jones, data.sigma, data)
    assert v.bound is None and v.u_plus_excluded != v.u_minus_excluded


def test_achiral_test():
    a = analysis_of("8_18")
    v = achiral_u1_test(a.jones, a.special)
    assert a.det == 45 and v.bound == 2
    t = analysis_of("3_1")
    assert not achiral_u1_test(t.jones, t.special).applicable
    f = analysis_of("4_1")
    assert not achiral_u1_test(f.jones, f.special).applicable


def test_achiral_test_detects_inconsistent_input():
    sv = analysis_of("4_1").special
    fake = SpecialValues(**{**sv.__dict__, "det": 15})
    with pytest.raises(InconsistentInvariants):
        achiral_u1_test(analysis_of("4_1").jones, fake)


def test_chirality_obstruction(trivial):
    assert chirality_obstruction(trivial.special) is False
    assert chirality_obstruction(analysis_of("3_1").special) is True
    assert chirality_obstruction(analysis_of("9_46").special) is False


@pytest.mark.parametrize("name, bound", [("8_16", 2), ("9_49", 3), ("10_103", 3), ("4_1", 1), ("3_1", 1)])
def test_q_bound(name, bound):
    assert q_bound(analysis_of(name).special).bound == bound


def test_q_bound_unknot(trivial):
    assert q_bound(trivial.special).bound == 0


def test_golden_congruence_agrees_with_q_bound_at_k_one():
    for name in ("8_16", "10_86", "10_106", "10_109", "10_116", "10_121"):
        a = analysis_of(name)
        assert golden_congruence_test(a.q, a.det, a.data).bound == 2, name
    a = analysis_of("4_1")
    assert golden_congruence_test(a.q, a.det, a.data).bound is None


def test_linking_test_examples():
    for name in ("8_16", "10_105"):
        data = analysis_of(name).data
        assert linking_u1_test(data.spectrum, data.group, data.sigma, data).bound == 2, name
    data = analysis_of("3_1").data
    assert linking_u1_test(data.spectrum, data.group, data.sigma, data).bound is None


def test_linking_test_non_cyclic_group():
    data = analysis_of("9_46").data
    assert linking_u1_test(data.spectrum, data.group, data.sigma, data).bound == 2


def test_linking_signed_reading():
    # Z7 with lambda(g, g) = 2k^2/7: +2/7 occurs, -2/7 does not
    spec = [SpectrumEntry((k,), 7 if k else 1, Fraction(2 * k * k, 7) % 1) for k in range(7)]
    group = AbelianGroup((7,))
    at_zero = linking_u1_test(spec, group, 0)
    assert (at_zero.u_plus_excluded, at_zero.u_minus_excluded, at_zero.bound) == (False, True, None)
    at_two = linking_u1_test(spec, group, 2)
    assert (at_two.u_plus_excluded, at_two.u_minus_excluded, at_two.bound) == (True, True, 2)


@pytest.mark.parametrize(
    "det, sigma, bound",
    [(25, 4, 3), (169, 4, 3), (25, -4, 3), (49, 4, None), (45, 4, None), (25, 2, None)],
)
def test_sigma4_square(det, sigma, bound):
    assert sigma4_square_test(det, sigma).bound == bound


def test_composite_bound():
    assert composite_bound(2).bound == 2
    assert composite_bound(1).bound is None


def test_distance_bound():
    assert distance_bound(5, 4, 5, 0) == 3
    assert distance_bound(5, 4, 5, 4) is None
    assert distance_bound(25, 4, 1, 0) == 3
    assert distance_bound(7, 4, 7, 0) is None


def test_signed_combination(trivial):
    data = analysis_of("7_4").data
    verdicts = [CriterionVerdict("a", False, None, True, False), CriterionVerdict("b", False, None, False, True)]
    assert signed_combination(verdicts, data).bound == 2
    assert signed_combination(verdicts, trivial.data).bound is None
    assert signed_combination(verdicts[:1], data).bound is None


# combined reports ----------------------------------------------------------------


def test_unknot_report(trivial):
    assert trivial.report().combined_lower == 0


def test_8_16_report():
    report = analysis_of("8_16").report()
    assert report.combined_lower == 2
    assert {"Q", "linking"} <= set(report.firing())


def test_10_103_report():
    report = analysis_of("10_103").report()
    assert report.combined_lower == 3
    assert "Q" in report.firing() and report.verdict("sigma4-square").bound is None


def test_goeritz_only_report_needs_sigma():
    a = analyze_goeritz([[5, 0, -2, -2], [0, 4, -2, -1], [-2, -2, 5, 0], [-2, -1, 0, 3]])
    report = a.report()
    assert report.combined_lower == 2
    assert report.verdict("linking").u_plus_excluded is None


def test_bounds_never_exceed_reference():
    ref = knotinfo()
    for name in NAMES:
        raw = ref[name]["unknotting_number"]
        upper = int(raw.strip("[]").split(",")[-1])
        report = analysis_of(name).report()
        assert report.combined_lower <= upper, name


def test_no_false_positive_on_unknotting_number_one():
    ref = knotinfo()
    for name in NAMES:
        if ref[name]["unknotting_number"] == "1":
            report = analysis_of(name).report()
            assert report.combined_lower <= 1, name
            assert report.verdict("jones").bound is None, name


def test_reports_are_mirror_coherent():
    for name in NAMES:
        data = analysis_of(name).data
        own, other = combined_report(data), combined_report(data.mirrored())
        assert own.combined_lower == other.combined_lower, name
        for v in own.verdicts:
            w = other.verdict(v.name)
            assert (v.bound, v.u_plus_excluded, v.u_minus_excluded) == (w.bound, w.u_minus_excluded, w.u_plus_excluded), (name, v.name)


def test_q_exponent_matches_five_rank():
    for name in NAMES:
        a = analysis_of(name)
        assert a.special.golden_k == a.group.p_rank(5), name


def test_mirrored_data():
    data = analysis_of("3_1").data
    m = data.mirrored()
    assert m.sigma == -data.sigma
    assert m.jones == data.jones.substitute_inverse()
    assert {e.self_linking for e in m.spectrum} == {(-e.self_linking) % 1 for e in data.spectrum}
    assert m.mirrored().sigma == data.sigma


# conjectures ---------------------------------------------------------------------


def test_conjecture_scan_examples():
    findings = conjecture_scan([analysis_of(n).data for n in ("9_49", "3_1", "7_2", "4_1")])
    found = {(f.conjecture, f.knot): f.status for f in findings}
    assert found[("C1b", "9_49")] == "consistent"
    assert all(status == "consistent" for status in found.values())


def test_conjecture_scan_skips_incomplete_data():
    data = KnotData("x", 3, AbelianGroup((3,)))
    assert conjecture_scan([data]) == []


def test_c2_holds_automatically_for_sigma_two():
    findings = conjecture_scan([analysis_of("3_1").data, analysis_of("7_2").data, analysis_of("5_2").data])
    c2 = {f.knot: f.status for f in findings if f.conjecture == "C2"}
    assert c2 == {"3_1": "consistent", "7_2": "consistent", "5_2": "consistent"}
