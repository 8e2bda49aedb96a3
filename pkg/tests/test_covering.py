from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import analysis_of, knotinfo
from knotbounds.algebra import determinant, rational_inverse
from knotbounds.covering import (
    AbelianGroup,
    EnumerationCapExceeded,
    goeritz,
    goeritz_from_matrix,
    homology,
    linking_form,
    self_linking_spectrum,
    signature,
)
from knotbounds.diagram import Diagram, DiagramError, mirror, parse_pd, realize_dt, unknot

# Goeritz matrix of 10_105 from the standard worked example, in its own basis
MATRIX_10_105 = [[5, 0, -2, -2], [0, 4, -2, -1], [-2, -2, 5, 0], [-2, -1, 0, 3]]


def values(spectrum, order=None):
    return {e.self_linking for e in spectrum if order is None or e.order == order}


def brute_force_values(matrix, box=2):
    """x^T U^-1 x mod 1 for integer vectors x with entries in [-box, box]."""
    inv = rational_inverse(matrix)
    n = len(matrix)
    out = set()
    for x in product(range(-box, box + 1), repeat=n):
        out.add(Fraction(sum(x[i] * inv[i][j] * x[j] for i in range(n) for j in range(n))) % 1)
    return out


def test_trefoil():
    d = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]")
    g = goeritz(d)
    assert g.det == 3 and homology(g) == AbelianGroup((3,))
    assert signature(d) == 2 and signature(mirror(d)) == -2
    spec = self_linking_spectrum(linking_form(g))
    assert sorted(e.self_linking for e in spec) == [0, Fraction(1, 3), Fraction(1, 3)]


def test_bare_one_by_one_matrix():
    form = linking_form(goeritz_from_matrix([[3]]))
    assert form.value((1,), (1,)) == Fraction(1, 3)
    assert goeritz_from_matrix([[3]]).signature is None


def test_cyclic_group_of_order_three_spectrum():
    spec = self_linking_spectrum(linking_form(goeritz_from_matrix([[-3]])))
    assert {(e.coordinates, e.order, e.self_linking) for e in spec} == {
        ((0,), 1, 0),
        ((1,), 3, Fraction(2, 3)),
        ((2,), 3, Fraction(2, 3)),
    }


def test_worked_example_matrix_for_10_105():
    g = goeritz_from_matrix(MATRIX_10_105)
    form = linking_form(g)
    assert g.det == 91 and homology(g).invariant_factors == (91,)
    assert form.value_goeritz((0, 0, 0, 1), (0, 0, 0, 1)) == Fraction(64, 91)
    spec = self_linking_spectrum(form)
    assert not values(spec, 91) & {Fraction(2, 91), Fraction(89, 91)}


def test_10_105_from_dt_matches_worked_example():
    ours = analysis_of("10_105")
    spec = self_linking_spectrum(linking_form(goeritz_from_matrix(MATRIX_10_105)))
    assert ours.group == AbelianGroup((91,))
    assert values(ours.data.spectrum) == values(spec)


def test_8_16_spectrum():
    spec = analysis_of("8_16").data.spectrum
    gens = values(spec, 35)
    assert gens & {Fraction(11, 35), Fraction(24, 35)}
    assert not gens & {Fraction(2, 35), Fraction(33, 35)}


def test_9_49_group():
    a = analysis_of("9_49")
    assert a.group.invariant_factors == (5, 5) and not a.group.is_cyclic
    assert a.group.p_rank(5) == 2 and a.group.p_rank(3) == 0
    assert len(a.data.spectrum) == 25


def test_pd_and_dt_paths_agree_on_the_table():
    ref = knotinfo()
    for name in ("6_1", "7_4", "8_16", "9_42", "10_105", "10_132"):
        a = analysis_of(name)
        b = goeritz(parse_pd(ref[name]["pd"]))
        other = values(self_linking_spectrum(linking_form(b)))
        if b.signature == a.sigma:
            assert other == values(a.data.spectrum), name
        else:
            assert b.signature == -a.sigma, name
            assert other == {(-x) % 1 for x in values(a.data.spectrum)}, name


def test_signature_matches_reference_magnitude():
    ref = knotinfo()
    for name, entry in ref.items():
        assert abs(analysis_of(name).sigma) == abs(entry["signature_knotinfo"]), name


def test_unknot_and_links():
    g = goeritz(unknot())
    assert g.det == 1 and homology(g) == AbelianGroup(()) and g.signature == 0
    with pytest.raises(DiagramError):
        goeritz(parse_pd("X[1,3,2,4] X[3,1,4,2]"))


def test_enumeration_cap():
    with pytest.raises(EnumerationCapExceeded):
        self_linking_spectrum(linking_form(goeritz_from_matrix(MATRIX_10_105)), cap=50)


def test_singular_matrix():
    with pytest.raises(ValueError):
        homology(goeritz_from_matrix([[1, 1], [1, 1]]))


def test_asymmetric_matrix():
    with pytest.raises(ValueError):
        goeritz_from_matrix([[1, 2], [0, 1]])


def test_group_description():
    assert str(AbelianGroup((5, 5))) == "Z5 + Z5"
    assert str(AbelianGroup(())) == "0"
    assert AbelianGroup((3, 15)).order == 45


sym = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.integers(-4, 4), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2).map(
        lambda xs, n=n: _symmetric(n, xs)
    )
)


def _symmetric(n, xs):
    it = iter(xs)
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = next(it)
    return m


@settings(max_examples=80, deadline=None)
@given(sym)
def test_spectrum_against_brute_force(m):
    det = abs(determinant(m))
    assume(0 < det <= 400)
    g = goeritz_from_matrix(m)
    group = homology(g)
    form = linking_form(g)
    spec = self_linking_spectrum(form, group)
    assert group.order == det == len(spec)
    assert brute_force_values(m) <= values(spec)
    # the form is symmetric and each generator has the stated order
    for i, k in enumerate(form.orders):
        for j in range(len(form.orders)):
            assert form.gram[i][j] == form.gram[j][i]
        assert (k * form.gram[i][i]) % 1 == 0


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 9), min_size=1, max_size=3))
def test_diagonal_matrix_groups(entries):
    g = goeritz_from_matrix([[x if i == j else 0 for j in range(len(entries))] for i, x in enumerate(entries)])
    group = homology(g)
    assert group.order == determinant(g.matrix)
    for x, y in zip(group.invariant_factors, group.invariant_factors[1:]):
        assert y % x == 0


def test_figure_eight_realized_from_dt():
    d = realize_dt("4 6 8 2")
    assert goeritz(d).det == 5 and signature(d) == 0


def test_zero_crossing_diagram_with_kinks():
    d = unknot([1, 1, -1])
    assert goeritz(d).det == 1 and signature(d) == 0
    assert isinstance(d, Diagram)
