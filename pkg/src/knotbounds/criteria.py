"""Lower bounds for the unknotting number and the conjecture predicates.

Every criterion returns a ``CriterionVerdict``.  Signed information records
whether u+ = 1 (unknotting by switching one positive crossing) or u- = 1 is
excluded.  ``combined_report`` takes the maximum over all bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

from .algebra import GOLDEN, LaurentPoly
from .covering import AbelianGroup, SpectrumEntry
from .invariants.special import (
    InconsistentInvariants,
    SpecialValues,
    candidate_partner_jones,
    jones_battery,
)

__all__ = [
    "CriterionVerdict",
    "BoundReport",
    "KnotData",
    "wendt_bound",
    "signature_bound",
    "traczyk_bound",
    "jones_u1_test",
    "achiral_u1_test",
    "chirality_obstruction",
    "q_bound",
    "golden_congruence_test",
    "linking_u1_test",
    "sigma4_square_test",
    "composite_bound",
    "distance_bound",
    "signed_combination",
    "combined_report",
    "ConjectureFinding",
    "conjecture_scan",
]


@dataclass(frozen=True)
class CriterionVerdict:
    name: str
    applicable: bool
    bound: int | None = None
    u_plus_excluded: bool | None = None
    u_minus_excluded: bool | None = None
    witness: str = ""

    def __post_init__(self):
        if self.bound is not None and not self.applicable:
            raise ValueError("a bound needs an applicable criterion")

    @property
    def signed(self) -> dict | None:
        if self.u_plus_excluded is None and self.u_minus_excluded is None:
            return None
        return {"u_plus_1_excluded": self.u_plus_excluded, "u_minus_1_excluded": self.u_minus_excluded}


@dataclass
class KnotData:
    """Everything the criteria read about one knot; missing pieces are None."""

    name: str
    det: int
    group: AbelianGroup
    spectrum: Sequence[SpectrumEntry] | None = None
    sigma: int | None = None
    jones: LaurentPoly | None = None
    q: LaurentPoly | None = None
    special: SpecialValues | None = None
    prime_factors: int | None = None

    @property
    def nontrivial(self) -> bool:
        """Certified knotted: det or Jones differs from the unknot's."""
        if self.det != 1:
            return True
        return self.jones is not None and self.jones != 1

    def mirrored(self) -> "KnotData":
        spec = None
        if self.spectrum is not None:
            spec = [SpectrumEntry(e.coordinates, e.order, (-e.self_linking) % 1) for e in self.spectrum]
        sv = self.special
        if sv is not None:
            sv = SpecialValues(
                det=sv.det,
                v_at_minus1=sv.v_at_minus1,
                arf_sign=sv.arf_sign,
                v_at_omega=sv.v_at_omega.conjugate(),
                q_at_golden=sv.q_at_golden,
                q_at_2=sv.q_at_2,
                traczyk_d=sv.traczyk_d,
                traczyk_sign=sv.traczyk_sign * (-1) ** sv.traczyk_d,
                golden_sign=sv.golden_sign,
                golden_k=sv.golden_k,
            )
        return KnotData(
            name=self.name[1:] if self.name.startswith("!") else "!" + self.name,
            det=self.det,
            group=self.group,
            spectrum=spec,
            sigma=None if self.sigma is None else -self.sigma,
            jones=None if self.jones is None else self.jones.substitute_inverse(),
            q=self.q,
            special=sv,
            prime_factors=self.prime_factors,
        )


@dataclass
class BoundReport:
    name: str
    verdicts: list[CriterionVerdict]
    combined_lower: int
    reference_u: int | None = None
    reference_slack: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def exceeds_reference(self) -> bool:
        return self.reference_u is not None and self.combined_lower > self.reference_u

    def verdict(self, name: str) -> CriterionVerdict:
        return next(v for v in self.verdicts if v.name == name)

    def firing(self) -> list[str]:
        """Criteria whose bound reaches the combined bound (when above 0)."""
        if self.combined_lower == 0:
            return []
        return [v.name for v in self.verdicts if v.bound == self.combined_lower]


def _u1_bound(excluded: bool, data: KnotData) -> int | None:
    if not excluded:
        return None
    return 2 if data.nontrivial else None


# individual criteria ------------------------------------------------------------


def wendt_bound(group: AbelianGroup) -> CriterionVerdict:
    return CriterionVerdict(
        "wendt", True, group.rank, witness=f"H1 = {group} has {group.rank} torsion number(s)"
    )


def signature_bound(sigma: int) -> CriterionVerdict:
    if sigma % 2:
        raise ValueError("knot signatures are even")
    return CriterionVerdict(
        "signature",
        True,
        abs(sigma) // 2,
        u_plus_excluded=sigma not in (0, 2),
        u_minus_excluded=sigma not in (0, -2),
        witness=f"sigma = {sigma}",
    )


def traczyk_bound(sv: SpecialValues) -> CriterionVerdict:
    return CriterionVerdict(
        "traczyk", True, sv.traczyk_d, witness=f"V(e^(i pi/3)) = {sv.omega_value_text}"
    )


def jones_u1_test(jones: LaurentPoly, sigma: int | None = None, data: KnotData | None = None) -> CriterionVerdict:
    """Partner-polynomial obstruction, for both switch signs.

    u+ = 1 would force a knot with Jones polynomial W built from V; W is
    tested against the necessary conditions for knot Jones polynomials.
    u- = 1 is the same question for the mirror image, V(1/t).  When
    ``sigma`` is given a sign is also excluded by the signature (u+ = 1
    needs sigma in {0, 2}, u- = 1 needs sigma in {0, -2}).
    """
    plus = jones_battery(candidate_partner_jones(jones))
    minus = jones_battery(candidate_partner_jones(jones.substitute_inverse()))
    ex_plus = bool(plus)
    ex_minus = bool(minus)
    notes = []
    if plus:
        notes.append("positive switch: " + "; ".join(plus))
    if minus:
        notes.append("negative switch: " + "; ".join(minus))
    if sigma is not None:
        if sigma not in (0, 2) and not ex_plus:
            ex_plus = True
            notes.append(f"positive switch excluded by sigma = {sigma}")
        if sigma not in (0, -2) and not ex_minus:
            ex_minus = True
            notes.append(f"negative switch excluded by sigma = {sigma}")
    excluded = ex_plus and ex_minus
    bound = None
    if excluded:
        bound = 2 if (data.nontrivial if data is not None else jones != 1) else None
    return CriterionVerdict(
        "jones",
        bound is not None,
        bound,
        u_plus_excluded=bool(plus),
        u_minus_excluded=bool(minus),
        witness="; ".join(notes) if notes else "partner polynomials pass every test",
    )


def achiral_u1_test(jones: LaurentPoly, sv: SpecialValues) -> CriterionVerdict:
    if jones != jones.substitute_inverse() or sv.det % 3:
        return CriterionVerdict("achiral", False, witness="needs V(t) = V(1/t) and 3 | det")
    if sv.det % 9:
        raise InconsistentInvariants(f"self-conjugate V with det {sv.det} divisible by 3 but not 9")
    return CriterionVerdict("achiral", True, 2, witness=f"V(t) = V(1/t) and 9 | det = {sv.det}")


def chirality_obstruction(sv: SpecialValues) -> bool:
    """True when V(e^(i pi/3)) is not real, which proves the knot chiral."""
    return sv.v_at_omega.b != 0


def q_bound(sv: SpecialValues) -> CriterionVerdict:
    k = sv.golden_k
    fires = sv.golden_sign == (-1) ** (k + 1)
    text = f"Q((sqrt5-1)/2) = {sv.golden_value_text}"
    if fires:
        return CriterionVerdict("Q", True, k + 1, witness=text + f" = -(-sqrt5)^{k}")
    return CriterionVerdict("Q", True, k, witness=text + f"; 5-rank {k}")


def _s5(k: int) -> list[int]:
    if k % 5:
        return [0]
    out, l = [], 1
    while k % 5 ** l == 0:
        out.append(l)
        l += 1
    return out


def golden_congruence_test(q: LaurentPoly, det: int, data: KnotData | None = None) -> CriterionVerdict:
    """The congruence for 1 + Q modulo z^2 + z - 1 forced by u = 1.

    Solutions are searched over k in S5(n), l in S5(n+1) and both signs,
    where det = 2n + 1.
    """
    if det <= 1:
        return CriterionVerdict("golden-congruence", False, witness="needs det > 1")
    n = (det - 1) // 2
    lhs = q.evaluate_in(GOLDEN) + 1
    alpha = GOLDEN(0, 1)
    root5 = GOLDEN(1, 2)  # 2z + 1 at the root
    found = None
    for k in _s5(n):
        for l in _s5(n + 1):
            for s1 in (1, -1):
                for s2 in (1, -1):
                    rhs = alpha * (root5 ** k * s1 + root5 ** l * s2)
                    if rhs == lhs:
                        found = (k, l, s1, s2)
    if found:
        return CriterionVerdict("golden-congruence", False, witness=f"solvable with k, l, signs = {found}")
    bound = 2 if (data is None or data.nontrivial) else None
    return CriterionVerdict("golden-congruence", bound is not None, bound, witness="no solution: u != 1")


def linking_u1_test(spectrum: Sequence[SpectrumEntry], group: AbelianGroup, sigma: int | None, data: KnotData | None = None) -> CriterionVerdict:
    """Generators with lambda(g, g) = +-2/D, unsigned and signed.

    u = 1 needs a generator with +-2/D.  With the signature known, u+ = 1
    needs +2/D when sigma = 0 and -2/D when sigma = 2; u- = 1 needs -2/D
    when sigma = 0 and +2/D when sigma = -2.
    """
    d = group.order
    plus = Fraction(2, d) % 1 if d else None
    minus = Fraction(-2, d) % 1 if d else None
    if not group.is_cyclic:
        vals = set()
    else:
        vals = {e.self_linking for e in spectrum if e.order == d}
    has_plus = plus in vals
    has_minus = minus in vals
    unsigned = not (has_plus or has_minus)
    text = f"generators with +2/{d}: {'yes' if has_plus else 'no'}, with -2/{d}: {'yes' if has_minus else 'no'}"
    if sigma is not None and sigma < 0:
        text += "; signed reading taken on the mirror image, which has sigma >= 0"
    if not group.is_cyclic:
        text = f"H1 = {group} is not cyclic"
    ex_plus = ex_minus = None
    if sigma is not None:
        ex_plus = not ((sigma == 0 and has_plus) or (sigma == 2 and has_minus))
        ex_minus = not ((sigma == 0 and has_minus) or (sigma == -2 and has_plus))
    excluded = unsigned or (ex_plus is True and ex_minus is True)
    bound = None
    if excluded:
        bound = 2 if (data is None or data.nontrivial) else None
    return CriterionVerdict("linking", bound is not None, bound, ex_plus, ex_minus, text)


def _no_3mod4_prime(n: int) -> bool:
    p = 3
    m = n
    while m % 2 == 0:
        m //= 2
    while p * p <= m:
        if m % p == 0:
            if p % 4 == 3:
                return False
            while m % p == 0:
                m //= p
        p += 2
    return not (m > 1 and m % 4 == 3)


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def sigma4_square_test(det: int, sigma: int) -> CriterionVerdict:
    if abs(sigma) != 4:
        return CriterionVerdict("sigma4-square", False, witness=f"|sigma| = {abs(sigma)} != 4")
    if not _is_square(det):
        return CriterionVerdict("sigma4-square", False, witness=f"det {det} is not a square")
    if not _no_3mod4_prime(det):
        return CriterionVerdict("sigma4-square", False, witness=f"det {det} has a prime divisor 3 mod 4")
    return CriterionVerdict("sigma4-square", True, 3, witness=f"|sigma| = 4, det = {det} square, no prime 3 mod 4")


def composite_bound(prime_factors: int) -> CriterionVerdict:
    """Knots of unknotting number one are prime, so a nontrivial sum has u >= 2."""
    if prime_factors < 2:
        return CriterionVerdict("composite", False, witness="prime or factorization unknown")
    return CriterionVerdict("composite", True, 2, witness=f"connected sum of {prime_factors} nontrivial knots")


def distance_bound(det_k: int, sigma_k: int, det_k2: int, sigma_k2: int) -> int | None:
    """3 when two crossing changes cannot turn K into K', else None."""
    if abs(sigma_k - sigma_k2) != 4:
        return None
    product_ = det_k * det_k2
    if _is_square(product_) and _no_3mod4_prime(product_):
        return 3
    return None


def signed_combination(verdicts: Iterable[CriterionVerdict], data: KnotData) -> CriterionVerdict:
    """u = 1 is impossible when both switch signs are excluded by some criterion."""
    plus_by = [v.name for v in verdicts if v.u_plus_excluded]
    minus_by = [v.name for v in verdicts if v.u_minus_excluded]
    text = f"u+=1 excluded by {plus_by or 'none'}; u-=1 excluded by {minus_by or 'none'}"
    if plus_by and minus_by and data.nontrivial:
        return CriterionVerdict("signed", True, 2, True, True, text)
    return CriterionVerdict("signed", False, None, bool(plus_by), bool(minus_by), text)


def _verdicts(data: KnotData) -> list[CriterionVerdict]:
    verdicts = [wendt_bound(data.group)]
    if data.sigma is not None:
        verdicts.append(signature_bound(data.sigma))
    if data.special is not None:
        verdicts.append(traczyk_bound(data.special))
        verdicts.append(q_bound(data.special))
    if data.jones is not None:
        verdicts.append(jones_u1_test(data.jones, data.sigma, data))
        if data.special is not None:
            verdicts.append(achiral_u1_test(data.jones, data.special))
    if data.q is not None:
        verdicts.append(golden_congruence_test(data.q, data.det, data))
    if data.spectrum is not None:
        verdicts.append(linking_u1_test(data.spectrum, data.group, data.sigma, data))
    if data.sigma is not None:
        verdicts.append(sigma4_square_test(data.det, data.sigma))
    if data.prime_factors is not None:
        verdicts.append(composite_bound(data.prime_factors))
    verdicts.append(signed_combination(verdicts, data))
    return verdicts


def _merge_mirror(own: CriterionVerdict, other: CriterionVerdict) -> CriterionVerdict:
    """Keep the stronger bound; the mirror's u- exclusion is our u+ exclusion."""

    def either(x, y):
        if x is None and y is None:
            return None
        return bool(x) or bool(y)

    bounds = [b for b in (own.bound, other.bound) if b is not None]
    bound = max(bounds) if bounds else None
    witness = own.witness
    if bound is not None and own.bound != bound:
        witness = f"{other.witness} (on the mirror image)"
    return CriterionVerdict(
        own.name,
        bound is not None or own.applicable,
        bound,
        either(own.u_plus_excluded, other.u_minus_excluded),
        either(own.u_minus_excluded, other.u_plus_excluded),
        witness,
    )


def combined_report(
    data: KnotData, reference_u: int | None = None, reference_slack: int = 0, mirror_both: bool = True
) -> BoundReport:
    """All verdicts for the knot and its mirror image, merged, with the maximal bound."""
    own = _verdicts(data)
    other = {v.name: v for v in _verdicts(data.mirrored() if mirror_both else data)}
    if not mirror_both:
        other = {k: replace(v, u_plus_excluded=v.u_minus_excluded, u_minus_excluded=v.u_plus_excluded) for k, v in other.items()}
    verdicts = [_merge_mirror(v, other[v.name]) for v in own]
    notes = [
        f"{v.name}: bound differs on the mirror image" for v in own if v.bound != other[v.name].bound
    ]
    combined = max((v.bound for v in verdicts if v.bound is not None), default=0)
    if data.special is not None:
        q = next(v for v in verdicts if v.name == "Q")
        gc = next((v for v in verdicts if v.name == "golden-congruence"), None)
        if gc is not None and gc.applicable and (q.bound or 0) < 2:
            notes.append("golden congruence excludes u = 1 but the Q value bound does not")
        if data.special.golden_k != data.group.p_rank(5):
            notes.append("golden exponent differs from the 5-rank of H1")
        if data.special.traczyk_d != data.group.p_rank(3):
            notes.append("Traczyk exponent differs from the 3-rank of H1")
    return BoundReport(data.name, verdicts, combined, reference_u, reference_slack, notes)


# conjectures ---------------------------------------------------------------------


@dataclass(frozen=True)
class ConjectureFinding:
    conjecture: str
    knot: str
    status: str  # "consistent" or "counterexample"
    detail: str


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def _has_value(spectrum, target: Fraction) -> bool:
    return any(e.self_linking == target % 1 for e in spectrum)


def conjecture_scan(knots: Iterable[KnotData]) -> list[ConjectureFinding]:
    """Evaluate each conjecture on every knot whose hypothesis holds.

    Knots with the hypothesis satisfied are reported as consistent or as a
    counterexample; others are skipped.  Signatures are read up to mirror
    image (the knot or its mirror is put in the position the statement
    asks for).
    """
    out: list[ConjectureFinding] = []
    for k in knots:
        if k.sigma is None or k.spectrum is None or k.special is None:
            continue
        d = k.det
        g = k.group
        sv = k.special
        if abs(k.sigma) == 4 and g.is_cyclic and d > 1 and _is_square(d) and _is_prime(isqrt(d)):
            out.append(ConjectureFinding("C1a", k.name, "counterexample", f"cyclic H1 of order {d}"))
        elif abs(k.sigma) == 4 and _is_square(d) and _is_prime(isqrt(d)):
            out.append(ConjectureFinding("C1a", k.name, "consistent", f"H1 = {g}"))
        if abs(k.sigma) == 4 and g.invariant_factors == (5, 5):
            ok = sv.golden_sign == -1 and sv.golden_k == 2
            out.append(
                ConjectureFinding("C1b", k.name, "consistent" if ok else "counterexample", f"Q value {sv.golden_value_text}")
            )
        if abs(k.sigma) in (0, 2) and _is_prime(d):
            # for |sigma| = 2 the statement holds automatically (D = 3 mod 4); checked all the same
            ok = _has_value(k.spectrum, Fraction(2, d)) or _has_value(k.spectrum, Fraction(-2, d))
            out.append(
                ConjectureFinding("C2", k.name, "consistent" if ok else "counterexample", f"det {d} prime, sigma {k.sigma}")
            )
        if g.is_cyclic and d % 5 == 0:
            exists = _has_value(k.spectrum, Fraction(2, d)) or _has_value(k.spectrum, Fraction(-2, d))
            want = (-1, 1) if exists else (1, 1)
            ok = (sv.golden_sign, sv.golden_k) == want
            out.append(
                ConjectureFinding(
                    "C3",
                    k.name,
                    "consistent" if ok else "counterexample",
                    f"+-2/{d} {'present' if exists else 'absent'}, Q value {sv.golden_value_text}",
                )
            )
        if abs(k.sigma) == 2 and g.is_cyclic:
            rep = k if k.sigma == 2 else k.mirrored()
            spec = rep.spectrum
            has_plus = _has_value(spec, Fraction(2, d))
            has_minus = _has_value(spec, Fraction(-2, d))
            minus_i_root3 = rep.special.traczyk_d == 1 and rep.special.traczyk_sign == -1
            if minus_i_root3:
                ok = not (has_plus or has_minus)
                out.append(
                    ConjectureFinding("C4a", k.name, "consistent" if ok else "counterexample", "V(e^(i pi/3)) = -i sqrt3")
                )
            if not has_minus:
                ok = not has_plus
                out.append(
                    ConjectureFinding("C4b", k.name, "consistent" if ok else "counterexample", f"no -2/{d} generator")
                )
    return out
