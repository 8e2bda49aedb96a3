"""Dowker-Thistlethwaite codes.

Travelling along the knot, the crossing passes are numbered 1..2n; each
crossing carries one odd and one even number.  The code lists, for the odd
passes 1, 3, ..., 2n-1, the even partner, negated when the even pass goes
under.  Edge ``p`` of the realized diagram runs from pass ``p`` to pass
``p + 1`` (edge ``2n`` closes the loop back to pass 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .core import Diagram, DiagramError

__all__ = ["DTCode", "realize_dt", "dt_code_of", "realizations"]


@dataclass(frozen=True)
class DTCode:
    even_labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(x) for x in self.even_labels)
        object.__setattr__(self, "even_labels", labels)
        n = len(labels)
        if sorted(abs(x) for x in labels) != list(range(2, 2 * n + 1, 2)):
            raise DiagramError(f"DT code {labels} is not a signed permutation of 2..{2 * n}")

    @classmethod
    def parse(cls, text: str | Iterable[int]) -> "DTCode":
        if isinstance(text, str):
            toks = text.replace(",", " ").replace("[", " ").replace("]", " ").split()
            try:
                labels = tuple(int(t) for t in toks)
            except ValueError as exc:
                raise DiagramError(f"DT code must be integers: {text!r}") from exc
            return cls(labels)
        return cls(tuple(text))

    @property
    def n(self) -> int:
        return len(self.even_labels)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.even_labels)


def _crossing_passes(code: DTCode):
    """Per crossing: (under pass, over pass)."""
    out = []
    for k, e in enumerate(code.even_labels):
        odd = 2 * k + 1
        even = abs(e)
        out.append((even, odd) if e < 0 else (odd, even))
    return out


def _build(code: DTCode, flags) -> Diagram | None:
    n = code.n
    m = 2 * n

    def edge_in(p):
        return m if p == 1 else p - 1

    crossings, signs = [], []
    for (u, v), positive in zip(_crossing_passes(code), flags):
        a, c = edge_in(u), u
        vin, vout = edge_in(v), v
        if positive:
            crossings.append((a, vout, c, vin))
        else:
            crossings.append((a, vin, c, vout))
        signs.append(1 if positive else -1)
    try:
        d = Diagram(tuple(crossings), tuple(signs))
    except DiagramError:
        return None
    return d if d.is_planar() else None


def realizations(code: DTCode) -> list[Diagram]:
    """All planar diagrams carrying the code (brute force over rotations)."""
    if code.n == 0:
        return [Diagram((), (), loops=1)]
    found = []
    for flags in product((True, False), repeat=code.n):
        d = _build(code, flags)
        if d is not None:
            found.append(d)
    return found


def realize_dt(code: DTCode | str, name: str | None = None) -> Diagram:
    """Planar realization of a knot DT code with crossing 1 positive.

    A reflection of the plane keeps the code but mirrors the knot; of the
    planar realizations the first one (in flag order) whose first crossing
    is positive is returned.
    """
    if not isinstance(code, DTCode):
        code = DTCode.parse(code)
    options = realizations(code)
    if not options:
        raise DiagramError(f"DT code {code} has no planar realization")
    if code.n == 0:
        d = options[0]
    else:
        d = next((x for x in options if x.signs[0] > 0), options[0])
    return Diagram(d.crossings, d.signs, d.loops, name)


def dt_code_of(d: Diagram, start: int | None = None) -> DTCode:
    """DT code read off a knot diagram, travelling from the tail of ``start``.

    The pass after edge ``start`` is number 1.
    """
    if not d.is_knot:
        raise DiagramError("DT codes describe knots only")
    if d.n == 0:
        return DTCode(())
    (comp,) = d.component_edges
    if start is None:
        start = max(d.ends)
    k = comp.index(start)
    order = comp[k:] + comp[:k]
    passes: dict[int, list[tuple[int, bool]]] = {}
    for num, lab in enumerate(order, start=1):
        i, p = next(x for x in d.ends[lab] if d.is_incoming(*x))
        passes.setdefault(i, []).append((num, p == 0))
    pairs = {}
    for i, visits in passes.items():
        (n1, under1), (n2, under2) = visits
        if (n1 + n2) % 2 == 0:
            raise DiagramError("diagram has a crossing with passes of equal parity")
        odd, even = (n1, n2) if n1 % 2 else (n2, n1)
        even_under = under2 if n2 == even else under1
        pairs[odd] = -even if even_under else even
    return DTCode(tuple(pairs[o] for o in range(1, 2 * d.n, 2)))
