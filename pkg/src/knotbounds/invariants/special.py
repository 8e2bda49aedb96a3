"""Special values of V and Q and the quantities derived from them."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import EISENSTEIN, GAUSSIAN, GOLDEN, LaurentPoly, QuadValue

__all__ = [
    "InconsistentInvariants",
    "SpecialValues",
    "special_values",
    "candidate_partner_jones",
    "traczyk_exponent",
    "golden_form",
    "golden_sign_from_det",
    "jones_battery",
    "JONES_MODULUS",
    "EISENSTEIN_MODULUS",
]

# (t - 1)(t^3 - 1) = t^4 - t^3 - t + 1
JONES_MODULUS = LaurentPoly({16: 1, 12: -1, 4: -1, 0: 1}, "t")
EISENSTEIN_MODULUS = LaurentPoly({8: 1, 4: -1, 0: 1}, "t")


class InconsistentInvariants(ArithmeticError):
    """Polynomial values that cannot come from a knot; signals an upstream bug."""


def _i_sqrt3() -> QuadValue:
    return EISENSTEIN(-1, 2)  # 2w - 1


def traczyk_exponent(value: QuadValue) -> tuple[int, int] | None:
    """Write ``value = sign * (i sqrt 3)^d``; returns (sign, d) or None."""
    if value.is_zero():
        return None
    base = _i_sqrt3()
    d = 0
    while True:
        if value == 1:
            return 1, d
        if value == -1:
            return -1, d
        q = value.exact_div(base)
        if q is None:
            return None
        value = q
        d += 1


def golden_form(value: QuadValue) -> tuple[int, int] | None:
    """Write ``value = sign * (sqrt 5)^k`` in Z[(sqrt5 - 1)/2]; (sign, k) or None."""
    if value.is_zero():
        return None
    root5 = GOLDEN(1, 2)
    k = 0
    while True:
        if value == 1:
            return 1, k
        if value == -1:
            return -1, k
        q = value.exact_div(root5)
        if q is None:
            return None
        value = q
        k += 1


def golden_sign_from_det(det: int) -> int | None:
    """Sign of Q((sqrt5-1)/2) when 5 does not divide det: that of Q(2) = det^2 mod 5."""
    if det % 5 == 0:
        return None
    return 1 if det % 5 in (1, 4) else -1


@dataclass(frozen=True)
class SpecialValues:
    det: int
    v_at_minus1: int
    arf_sign: int
    v_at_omega: QuadValue
    q_at_golden: QuadValue
    q_at_2: int
    traczyk_d: int
    traczyk_sign: int
    golden_sign: int
    golden_k: int

    @property
    def golden_value_text(self) -> str:
        body = "1" if self.golden_k == 0 else ("sqrt5" if self.golden_k == 1 else f"sqrt5^{self.golden_k}")
        return ("+" if self.golden_sign > 0 else "-") + body

    @property
    def omega_value_text(self) -> str:
        body = "1" if self.traczyk_d == 0 else ("i*sqrt3" if self.traczyk_d == 1 else f"(i*sqrt3)^{self.traczyk_d}")
        return ("+" if self.traczyk_sign > 0 else "-") + body


def special_values(jones: LaurentPoly, q: LaurentPoly) -> SpecialValues:
    """Determinant, Arf sign and the evaluations at e^{i pi/3} and (sqrt5-1)/2.

    Raises InconsistentInvariants when the determinant identities fail or a
    value is not of the form forced for knots.
    """
    if not jones.is_integral() or jones.value_at_one() != 1:
        raise InconsistentInvariants("not a knot Jones polynomial")
    v_m1 = int(jones.evaluate(-1))
    q2 = q.evaluate(2)
    if q2.denominator != 1:
        raise InconsistentInvariants("Q(2) is not an integer")
    q2 = int(q2)
    det = abs(v_m1)
    if det * det != q2:
        raise InconsistentInvariants(f"|V(-1)|^2 = {det * det} but Q(2) = {q2}")
    vi = jones.evaluate_in(GAUSSIAN)
    if vi.b != 0 or abs(vi.a) != 1:
        raise InconsistentInvariants(f"V(i) = {vi} is not +-1")
    second = jones.derivative_at_one(2)
    if second.denominator != 1 or second % 6:
        raise InconsistentInvariants("V''(1) is not divisible by 6")
    if vi.a != (-1) ** (int(second) // 6 % 2):
        raise InconsistentInvariants("Arf identity V(i) = (-1)^{V''(1)/6} fails")
    omega = jones.evaluate_in(EISENSTEIN)
    tr = traczyk_exponent(omega)
    if tr is None:
        raise InconsistentInvariants(f"V(e^(i pi/3)) = {omega} is not +-(i sqrt 3)^d")
    gold = q.evaluate_in(GOLDEN)
    gf = golden_form(gold)
    if gf is None:
        raise InconsistentInvariants(f"Q((sqrt5-1)/2) = {gold} is not +-(sqrt 5)^k")
    return SpecialValues(
        det=det,
        v_at_minus1=v_m1,
        arf_sign=vi.a,
        v_at_omega=omega,
        q_at_golden=gold,
        q_at_2=q2,
        traczyk_d=tr[1],
        traczyk_sign=tr[0],
        golden_sign=gf[0],
        golden_k=gf[1],
    )


def candidate_partner_jones(jones: LaurentPoly) -> LaurentPoly:
    """Jones polynomial forced on the knot left after unknotting by a positive switch.

    With V~ = 1 - (V - 1)/(t - 1) the partner has t^{-V~'(1)} V~.
    """
    one = LaurentPoly.constant(1, "t")
    tilde = one - (jones - one).divide_by_t_minus_1()
    slope = tilde.derivative_at_one(1)
    if slope.denominator != 1:
        raise InconsistentInvariants("non-integral derivative of the partner polynomial")
    return tilde.shift(-int(slope))


def jones_battery(poly: LaurentPoly) -> list[str]:
    """Failed necessary conditions for ``poly`` to be a knot Jones polynomial.

    An empty list means every condition holds: the congruence modulo
    (t-1)(t^3-1), the shape +-3^k (2t-1)^d modulo t^2-t+1 with its
    divisibility couplings to V(-1), and the Arf identity at t = i.
    """
    failures = []
    if not poly.is_integral():
        return ["exponents are not integers"]
    if not poly.is_congruent(LaurentPoly.constant(1, "t"), JONES_MODULUS):
        failures.append("not congruent to 1 mod (t-1)(t^3-1)")
    v_m1 = int(poly.evaluate(-1))
    omega = poly.evaluate_in(EISENSTEIN)
    tr = traczyk_exponent(omega)
    if tr is None:
        failures.append(f"value at e^(i pi/3) is {omega.a}+{omega.b}w, not +-(i sqrt3)^m")
    else:
        _, m = tr
        k, d = divmod(m, 2)
        if v_m1 % 3:
            if m:
                failures.append("3 does not divide V(-1) but the e^(i pi/3) value is not +-1")
        else:
            if m == 0:
                failures.append("3 divides V(-1) but the e^(i pi/3) value is +-1")
            elif v_m1 % 3 ** (2 * k + d):
                failures.append(f"3^{2 * k + d} does not divide V(-1) = {v_m1}")
    vi = poly.evaluate_in(GAUSSIAN)
    second = poly.derivative_at_one(2)
    if vi.b != 0 or abs(vi.a) != 1:
        failures.append("value at i is not +-1")
    elif second.denominator != 1 or second % 6:
        failures.append("V''(1) is not divisible by 6")
    elif vi.a != (-1) ** (int(second) // 6 % 2):
        failures.append("Arf identity fails")
    return failures
