import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from knotbounds.algebra import (
    EISENSTEIN,
    GAUSSIAN,
    GOLDEN,
    MINUS_ONE,
    LaurentPoly,
    determinant,
    mat_mul,
    poly_arith,
    rational_inverse,
    signature,
    smith_normal_form,
)
from knotbounds.algebra.matrices import transpose

ROOTS = {
    GOLDEN.name: (math.sqrt(5) - 1) / 2,
    EISENSTEIN.name: cmath.exp(1j * math.pi / 3),
    GAUSSIAN.name: 1j,
    MINUS_ONE.name: -1,
}

small = st.integers(-6, 6)
polys = st.dictionaries(st.integers(-5, 5), st.integers(-9, 9), max_size=6).map(
    lambda d: LaurentPoly.from_coefficients([d.get(e, 0) for e in range(-5, 6)], low=-5)
)


def as_complex(value):
    r = ROOTS[value.ring.name]
    return value.a + value.b * r


def numeric(p: LaurentPoly, x):
    return sum(c * x ** Fraction(k, 4) for k, c in p.items())


# Laurent polynomials -------------------------------------------------------------


def test_quarter_grid_storage():
    p = LaurentPoly.monomial(3, Fraction(3, 4), "A")
    assert p.terms == {3: 3}
    with pytest.raises(ValueError):
        LaurentPoly.monomial(1, Fraction(1, 3))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("t^(-2)-t^(-1)+ 2", {-8: 1, -4: -1, 0: 2}),
        ("-3+ 2*x+ 2*x^2", {0: -3, 4: 2, 8: 2}),
        ("t^(1/2) - t^(-1/2)", {2: 1, -2: -1}),
        ("5", {0: 5}),
    ],
)
def test_parse(text, expected):
    assert LaurentPoly.parse(text).terms == expected


def test_parse_maps_x_to_z_and_rejects_two_variables():
    assert LaurentPoly.parse("1 + x").var == "z"
    with pytest.raises(ValueError):
        LaurentPoly.parse("t + z")
    with pytest.raises(ValueError):
        LaurentPoly.parse("")


@given(polys)
def test_str_parse_round_trip(p):
    assert LaurentPoly.parse(str(p), "t") == p


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert p - p == 0
    assert poly_arith(p, q, "mul") == p * q


@given(polys, st.fractions(min_value=-3, max_value=3).filter(lambda x: x != 0))
def test_evaluate_is_a_homomorphism(p, x):
    q = p * p + LaurentPoly.monomial(1, -2)
    assert q.evaluate(x) == p.evaluate(x) ** 2 + x ** -2


@given(polys)
def test_divide_by_t_minus_1(p):
    p = p - p.value_at_one()
    quotient = p.divide_by_t_minus_1()
    assert quotient * (LaurentPoly.monomial(1, 1) - 1) == p


def test_divide_requires_root_at_one():
    with pytest.raises(ValueError):
        (LaurentPoly.monomial(1, 2) + 1).divide_by_t_minus_1()


@given(polys, st.integers(0, 3))
def test_derivative_at_one(p, order):
    expected = 0
    for k, c in p.items():
        e = k // 4
        expected += c * math.prod(e - j for j in range(order))
    assert p.derivative_at_one(order) == expected


def test_t6_is_one_modulo_t2_minus_t_plus_1():
    modulus = LaurentPoly.parse("t^2 - t + 1")
    t6 = LaurentPoly.monomial(1, 6)
    assert t6.is_congruent(1, modulus)
    assert not LaurentPoly.monomial(1, 3).is_congruent(1, modulus)
    # complex oracle: e^{i pi/3} is a root of the modulus
    w = cmath.exp(1j * math.pi / 3)
    assert abs(w ** 6 - 1) < 1e-12


@given(polys)
def test_reduce_mod_preserves_value_at_root(p):
    modulus = LaurentPoly.parse("t^2 - t + 1")
    rem, shift = p.reduce_mod(modulus)
    w = cmath.exp(1j * math.pi / 3)
    assert abs(numeric(rem, w) - w ** shift * numeric(p, w)) < 1e-6 * (1 + abs(numeric(p, w)))


def test_substitute_inverse_and_shift():
    p = LaurentPoly.parse("t + t^3 - t^4")
    assert p.substitute_inverse() == LaurentPoly.parse("t^(-1) + t^(-3) - t^(-4)")
    assert p.shift(-1) == LaurentPoly.parse("1 + t^2 - t^3")


def test_variable_mismatch():
    with pytest.raises(ValueError):
        LaurentPoly.parse("t") + LaurentPoly.parse("z")


def test_bracket_to_t():
    bracket = LaurentPoly.parse("-A^(-4) - A^4", "A")
    assert bracket.bracket_to_t() == LaurentPoly.parse("-t - t^(-1)")


# quadratic rings -----------------------------------------------------------------


@pytest.mark.parametrize("ring", [GOLDEN, EISENSTEIN, GAUSSIAN, MINUS_ONE], ids=lambda r: r.name)
@given(p=polys)
def test_ring_evaluation_matches_complex_oracle(ring, p):
    exact = p.evaluate_in(ring)
    approx = sum(c * ROOTS[ring.name] ** (k // 4) for k, c in p.items())
    assert abs(as_complex(exact) - approx) < 1e-6 * (1 + abs(approx))


@given(small, small, small, small)
def test_golden_multiplication(a, b, c, d):
    x, y = GOLDEN(a, b), GOLDEN(c, d)
    assert abs(as_complex(x * y) - as_complex(x) * as_complex(y)) < 1e-9
    assert (x * y).norm() == x.norm() * y.norm()


@given(small, small, small, small)
def test_exact_division(a, b, c, d):
    x, y = EISENSTEIN(a, b), EISENSTEIN(c, d)
    assume(not y.is_zero())
    assert (x * y).exact_div(y) == x


def test_golden_constants():
    root5 = GOLDEN(1, 2)
    assert root5 * root5 == 5
    assert GOLDEN.root * GOLDEN.root_inverse == 1
    assert EISENSTEIN.root ** 6 == 1
    assert GAUSSIAN.root ** 2 == -1
    assert GOLDEN(3, 0).exact_div(root5) is None


# integer matrices ----------------------------------------------------------------


def square(n):
    return st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)


matrices = st.integers(1, 4).flatmap(square)


def symmetric(m):
    return [[m[i][j] + m[j][i] for j in range(len(m))] for i in range(len(m))]


def leibniz(m):
    from itertools import permutations

    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        total += (-1) ** inversions * math.prod(m[i][perm[i]] for i in range(n))
    return total


@given(matrices)
def test_determinant_matches_leibniz(m):
    assert determinant(m) == leibniz(m)


@settings(max_examples=200)
@given(matrices)
def test_smith_normal_form(m):
    snf = smith_normal_form(m)
    n = len(m)
    diag = mat_mul(mat_mul(snf.left, m), snf.right)
    assert all(diag[i][j] == (snf.diagonal[i] if i == j else 0) for i in range(n) for j in range(n))
    assert abs(determinant(snf.left)) == 1 and abs(determinant(snf.right)) == 1
    assert all(d >= 0 for d in snf.diagonal)
    for x, y in zip(snf.diagonal, snf.diagonal[1:]):
        assert y % x == 0 if x else y == 0
    assert math.prod(snf.diagonal) == abs(determinant(m))


def test_smith_normal_form_examples():
    assert smith_normal_form([[2, 0], [0, 3]]).invariant_factors == (6,)
    assert smith_normal_form([[5, 0], [0, 5]]).invariant_factors == (5, 5)
    assert smith_normal_form([[0]]).invariant_factors == (0,)


@given(matrices)
def test_rational_inverse(m):
    assume(determinant(m) != 0)
    inv = rational_inverse(m)
    prod = mat_mul(m, inv)
    assert all(prod[i][j] == (i == j) for i in range(len(m)) for j in range(len(m)))


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), square(n))))
def test_signature_is_a_congruence_invariant(pair):
    m, p = pair
    assume(determinant(p) != 0)
    s = symmetric(m)
    congruent = mat_mul(mat_mul(transpose(p), s), p)
    assert signature(congruent) == signature(s)


def test_signature_examples():
    assert signature([[1, 0], [0, -3]]) == 0
    assert signature([[0, 1], [1, 0]]) == 0
    assert signature([[2, 1], [1, 2]]) == 2
    assert signature([[0, 0], [0, 0]]) == 0
    with pytest.raises(ValueError):
        signature([[1, 2], [0, 1]])
