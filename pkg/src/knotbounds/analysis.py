"""One-call pipeline from a diagram (or a bare Goeritz matrix) to criteria input."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import LaurentPoly
from .covering import (
    DEFAULT_CAP,
    AbelianGroup,
    GoeritzData,
    LinkingForm,
    goeritz,
    goeritz_from_matrix,
    homology,
    linking_form,
    self_linking_spectrum,
)
from .criteria import BoundReport, KnotData, combined_report
from .diagram import Diagram
from .invariants import DEFAULT_BUDGET, InconsistentInvariants, QEngine, SpecialValues, jones, q_polynomial, special_values

__all__ = ["Analysis", "analyze_diagram", "analyze_goeritz"]


@dataclass
class Analysis:
    name: str
    diagram: Diagram | None
    goeritz: GoeritzData
    group: AbelianGroup
    form: LinkingForm
    data: KnotData
    jones: LaurentPoly | None = None
    q: LaurentPoly | None = None
    special: SpecialValues | None = None

    @property
    def det(self) -> int:
        return self.data.det

    @property
    def sigma(self) -> int | None:
        return self.data.sigma

    def report(self, reference_u: int | None = None, reference_slack: int = 0) -> BoundReport:
        return combined_report(self.data, reference_u, reference_slack)


def analyze_diagram(
    d: Diagram,
    name: str | None = None,
    budget: int = DEFAULT_BUDGET,
    engine: QEngine | None = None,
    cap: int = DEFAULT_CAP,
    prime_factors: int | None = None,
) -> Analysis:
    """Compute V, Q, their special values and the double cover data of a knot diagram.

    ``prime_factors`` is the number of nontrivial summands when the knot is
    known to be a connected sum.  Raises InconsistentInvariants when the
    three determinants disagree.
    """
    name = name or d.name or "K"
    v = jones(d, budget)
    q = q_polynomial(d, budget, engine)
    sv = special_values(v, q)
    g = goeritz(d)
    if g.det != sv.det:
        raise InconsistentInvariants(f"{name}: Goeritz det {g.det} but |V(-1)| = {sv.det}")
    group = homology(g)
    form = linking_form(g)
    spectrum = self_linking_spectrum(form, group, cap)
    data = KnotData(name, sv.det, group, spectrum, g.signature, v, q, sv, prime_factors)
    return Analysis(name, d, g, group, form, data, v, q, sv)


def analyze_goeritz(rows, name: str = "K", sigma: int | None = None, cap: int = DEFAULT_CAP) -> Analysis:
    """Criteria input from a matrix alone; the signature must be supplied if wanted."""
    g = goeritz_from_matrix(rows)
    group = homology(g)
    form = linking_form(g)
    spectrum = self_linking_spectrum(form, group, cap)
    data = KnotData(name, g.det, group, spectrum, sigma)
    return Analysis(name, None, g, group, form, data)
