"""Invariants checked on hypothesis-generated closed braids."""

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import ENGINE
from knotbounds.analysis import analyze_diagram
from knotbounds.criteria import combined_report
from knotbounds.diagram import add_kink, connected_sum, mirror

from knotgen import braid_closure
from properties import check_properties

letters = st.integers(2, 4).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.integers(1, n - 1).flatmap(lambda g: st.sampled_from((g, -g))), min_size=n - 1, max_size=8),
    )
)
knots = letters.map(lambda w: braid_closure(w[1], w[0])).filter(lambda d: d is not None)

SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])


@SETTINGS
@given(knots)
def test_identities_hold(d):
    assert check_properties(analyze_diagram(d, engine=ENGINE), engine=ENGINE) == []


@SETTINGS
@given(knots)
def test_mirror_negates_signature_and_keeps_det(d):
    a, b = analyze_diagram(d, engine=ENGINE), analyze_diagram(mirror(d), engine=ENGINE)
    assert (b.det, b.sigma, b.q) == (a.det, -a.sigma, a.q)
    assert b.jones == a.jones.substitute_inverse()
    assert b.special.traczyk_d == a.special.traczyk_d


@SETTINGS
@given(knots)
def test_report_is_mirror_coherent(d):
    data = analyze_diagram(d, engine=ENGINE).data
    own, other = combined_report(data), combined_report(data.mirrored())
    assert own.combined_lower == other.combined_lower
    for v in own.verdicts:
        w = other.verdict(v.name)
        assert (v.u_plus_excluded, v.u_minus_excluded) == (w.u_minus_excluded, w.u_plus_excluded)


@SETTINGS
@given(knots)
def test_report_structure(d):
    a = analyze_diagram(d, engine=ENGINE)
    report = a.report()
    bounds = [v.bound for v in report.verdicts if v.bound is not None]
    assert report.combined_lower == max(bounds, default=0)
    assert all(v.applicable for v in report.verdicts if v.bound is not None)
    # a trivial knot never gets a positive bound
    if a.det == 1 and a.jones == 1:
        assert report.combined_lower == 0


@SETTINGS
@given(knots, st.sampled_from((1, -1)))
def test_kinks_do_not_change_invariants(d, sign):
    a, b = analyze_diagram(d, engine=ENGINE), analyze_diagram(add_kink(d, None, sign), engine=ENGINE)
    assert (a.det, a.sigma, a.jones, a.q) == (b.det, b.sigma, b.jones, b.q)
    assert a.group == b.group


@settings(max_examples=20, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(knots, knots)
def test_connected_sum_is_multiplicative(d1, d2):
    a, b = analyze_diagram(d1, engine=ENGINE), analyze_diagram(d2, engine=ENGINE)
    s = analyze_diagram(connected_sum(d1, d2), engine=ENGINE)
    assert s.det == a.det * b.det
    assert s.sigma == a.sigma + b.sigma
    assert s.jones == a.jones * b.jones
    assert s.q == a.q * b.q
    assert s.group.order == a.group.order * b.group.order
