"""Acceptance criteria, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL|FLAG ...`` line to the
terminal (also under output capture) before asserting.  Run only this module
with ``pytest tests/test_acceptance.py -v``.
"""

import time
from fractions import Fraction
from pathlib import Path

import pytest

from conftest import ENGINE, analysis_of, table
from knotbounds.algebra import GOLDEN
from knotbounds.analysis import analyze_diagram
from knotbounds.cli import check_row, run_rows
from knotbounds.criteria import conjecture_scan, distance_bound, jones_u1_test
from knotbounds.diagram import realize_dt
from knotbounds.invariants import QEngine
from knotbounds.tables import parse_table_file

from properties import PROPERTIES, check_properties
from knotgen import random_knots

KNOTS_12 = Path(__file__).parent / "data" / "knots_12.txt"


@pytest.fixture
def say(capsys):
    def emit(number, status, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {status} {detail}")

    return emit


def has_value(spectrum, value: Fraction, order: int | None = None) -> bool:
    return any(e.self_linking == value % 1 and (order is None or e.order == order) for e in spectrum)


def test_criterion_1_knot_10_105_end_to_end(say):
    start = time.perf_counter()
    a = analyze_diagram(realize_dt("4 12 16 20 18 2 8 6 10 14"), "10_105", engine=QEngine())
    report = a.report()
    elapsed = time.perf_counter() - start
    tml_fails = not (has_value(a.data.spectrum, Fraction(2, 91), 91) or has_value(a.data.spectrum, Fraction(-2, 91), 91))
    ok = (
        a.det == 91
        and abs(a.sigma) == 2
        and a.group.invariant_factors == (91,)
        and tml_fails
        and report.combined_lower == 2
        and "linking" in report.firing()
        and elapsed < 5.0
    )
    say(1, "PASS" if ok else "FAIL", f"det {a.det} sigma {a.sigma} H1 {a.group} bound {report.combined_lower} in {elapsed:.2f}s")
    assert ok


def test_criterion_2_knot_8_16(say):
    a = analysis_of("8_16")
    spec = a.data.spectrum
    eleven = has_value(spec, Fraction(11, 35), 35) or has_value(spec, Fraction(24, 35), 35)
    two = has_value(spec, Fraction(2, 35)) or has_value(spec, Fraction(-2, 35))
    sv = a.special
    golden_plus_root5 = sv.golden_sign == 1 and sv.golden_k == 1 and sv.q_at_golden == GOLDEN(1, 2)  # sqrt5 = 1 + 2r
    report = a.report()
    ok = a.det == 35 and eleven and not two and golden_plus_root5 and report.combined_lower == 2
    say(2, "PASS" if ok else "FAIL", f"det {a.det} +-11/35 {eleven} +-2/35 {two} Q value {sv.golden_value_text} bound {report.combined_lower}")
    assert ok


def test_criterion_3_knot_9_49(say):
    a = analysis_of("9_49")
    report = a.report()
    q_value = report.verdict("Q").bound
    square = report.verdict("sigma4-square").bound
    ok = (
        a.group.invariant_factors == (5, 5)
        and abs(a.sigma) == 4
        and a.special.q_at_golden == GOLDEN(-5, 0)
        and q_value == 3
        and square == 3
        and report.combined_lower == 3
    )
    say(3, "PASS" if ok else "FAIL", f"H1 {a.group} sigma {a.sigma} Q value {a.special.golden_value_text} bounds Q {q_value} sigma4 {square}")
    assert ok


TABLE_ROWS = {
    # knot: (u, Q row fires, linking row fires)
    "8_16": (2, True, True),
    "9_49": (3, True, True),
    "10_86": (2, True, True),
    "10_103": (3, True, False),
    "10_105": (2, False, True),
    "10_106": (2, True, True),
    "10_109": (2, True, True),
    "10_116": (2, True, True),
    "10_121": (2, True, True),
}


def test_criterion_4_method_table(say):
    examples = table("worked_examples")
    mismatches = []
    for name, (u, q_row, linking_row) in TABLE_ROWS.items():
        row = examples.by_name(name)
        a = analysis_of(name)
        assert (a.det, a.sigma) == (row.reference_det, row.reference_sigma), name
        report = a.report()
        firing = set(report.firing())
        q_fires = bool(firing & {"Q", "golden-congruence"})
        # the linking-form row covers the u > 2 square-determinant test as well
        lk_fires = bool(firing & {"linking", "sigma4-square"})
        if (report.combined_lower, q_fires, lk_fires) != (u, q_row, linking_row):
            mismatches.append(f"{name}: bound {report.combined_lower} firing {sorted(firing)}")
    silent = analysis_of("10_103").report().verdict("sigma4-square").bound is None
    ok = not mismatches and silent
    say(4, "PASS" if ok else "FAIL", f"{len(TABLE_ROWS)} knots; sigma4-square silent on 10_103: {silent}; {mismatches}")
    assert ok


BOTH_EXCLUDED = ["7_4", "8_18", "9_15", "9_17", "9_37", "9_40", "9_46", "9_47", "9_48"]
ONE_SIDED = ["6_1", "7_7"]


def test_criterion_5_jones_u1_list(say):
    wrong = []
    for name in BOTH_EXCLUDED + ONE_SIDED:
        data = analysis_of(name).data
        for variant in (data, data.mirrored()):
            v = jones_u1_test(variant.jones, variant.sigma, variant)
            if name in BOTH_EXCLUDED:
                good = v.bound == 2
            else:
                good = v.bound is None and v.u_plus_excluded != v.u_minus_excluded
            if not good:
                wrong.append(f"{name} sigma {variant.sigma}: {v}")
    say(5, "PASS" if not wrong else "FAIL", f"{len(BOTH_EXCLUDED)} excluded, {len(ONE_SIDED)} one-sided; {wrong}")
    assert not wrong


def test_criterion_6_composite_table(say):
    composites = table("composites")
    start = time.perf_counter()
    results = run_rows(composites, table("knots_le10"), 1, 20, 10**6)
    elapsed = time.perf_counter() - start
    short = []
    for r in results:
        ref = r.row.reference_u
        bound = r.report.combined_lower if r.report else None
        if bound is None or bound < ref.lowest or (ref.unresolved == 0 and bound != ref.value) or bound > ref.value:
            short.append(f"{r.row.name} bound {bound} u {ref}")
    ok = not short and elapsed < 120
    say(6, "PASS" if ok else "FAIL", f"{len(results)} rows in {elapsed:.1f}s; below the table: {short}")
    assert ok


def test_criterion_7_property_suites(say):
    fixtures = [analysis_of(row.name) for row in table("knots_le10")]
    randoms = [analyze_diagram(d, engine=ENGINE) for d in random_knots(50)]
    failures = []
    for a in fixtures:
        failures += check_properties(a, skein_crossings=1, engine=ENGINE)
    for a in randoms:
        failures += check_properties(a, engine=ENGINE)
    say(7, "PASS" if not failures else "FAIL", f"{len(fixtures)} fixtures + {len(randoms)} random, properties {','.join(PROPERTIES)}; failures {failures[:5]}")
    assert not failures


def test_criterion_8_distance_5_1_to_4_1(say):
    k, k2 = analysis_of("5_1"), analysis_of("4_1")
    bound = distance_bound(k.det, k.sigma, k2.det, k2.sigma)
    say(8, "PASS" if bound == 3 else "FAIL", f"distance(5_1, 4_1) >= {bound}")
    assert bound == 3


def test_criterion_9_conjecture_scan(say):
    start = time.perf_counter()
    results = run_rows(table("knots_le10"), table("knots_le10"), 1, 20, 10**6)
    findings = conjecture_scan([r.data for r in results if r.data is not None])
    elapsed = time.perf_counter() - start
    counter = [f"{f.conjecture} {f.knot} ({f.detail})" for f in findings if f.status == "counterexample"]
    status = "FLAG" if counter else "PASS"
    say(9, status, f"{len(findings)} findings in {elapsed:.1f}s; counterexamples: {counter or 'none'}")
    # a counterexample is reported, not failed
    assert all(r.data is not None for r in results)
    assert elapsed < 300


@pytest.mark.skipif(not KNOTS_12.exists(), reason="12-crossing data not supplied")
def test_criterion_note_12_664(say):
    row = parse_table_file(KNOTS_12).lookup(12, 664)
    start = time.perf_counter()
    result = check_row(row, table("knots_le10"), budget=12)
    report = result.report
    ok = (
        result.data.group.invariant_factors == (13, 13)
        and result.data.sigma == 4
        and report.combined_lower == 3
    )
    say("12_664", "PASS" if ok else "FAIL", f"H1 {result.data.group} sigma {result.data.sigma} bound {report.combined_lower} in {time.perf_counter() - start:.1f}s")
    assert ok
