"""Oriented link diagrams in planar-diagram (PD) form.

A crossing is a 4-tuple of edge labels ``(a, b, c, d)`` listed
counterclockwise starting from the incoming under-strand, so the under
strand runs ``a -> c``.  The crossing is positive when the over strand runs
``d -> b`` and negative when it runs ``b -> d``.  Free circles without
crossings are counted separately in ``loops``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Diagram",
    "DiagramError",
    "parse_pd",
    "mirror",
    "switch_crossing",
    "smooth_crossing",
    "connected_sum",
    "add_kink",
    "from_strands",
    "unknot",
]

Crossing = tuple[int, int, int, int]
Dart = tuple[int, int]


class DiagramError(ValueError):
    """Malformed, inconsistent or non-planar diagram data."""


def _incoming_positions(sign: int) -> tuple[int, int]:
    return (0, 3) if sign > 0 else (0, 1)


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...]
    signs: tuple[int, ...]
    loops: int = 0
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(int(x) for x in c) for c in self.crossings))
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if len(self.crossings) != len(self.signs):
            raise DiagramError("one sign per crossing is required")
        if any(len(c) != 4 for c in self.crossings):
            raise DiagramError("every crossing needs four edge labels")
        if any(s not in (1, -1) for s in self.signs):
            raise DiagramError("crossing signs must be +1 or -1")
        if self.loops < 0:
            raise DiagramError("negative number of free loops")
        ends: dict[int, list[Dart]] = {}
        for i, c in enumerate(self.crossings):
            for p, lab in enumerate(c):
                ends.setdefault(lab, []).append((i, p))
        for lab, occ in ends.items():
            if len(occ) != 2:
                raise DiagramError(f"edge label {lab} occurs {len(occ)} time(s), expected 2")
            incoming = sum(p in _incoming_positions(self.signs[i]) for i, p in occ)
            if incoming != 1:
                raise DiagramError(f"edge {lab} has {incoming} incoming ends; orientation is inconsistent")

    # combinatorics --------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    @cached_property
    def ends(self) -> dict[int, tuple[Dart, Dart]]:
        out: dict[int, list[Dart]] = {}
        for i, c in enumerate(self.crossings):
            for p, lab in enumerate(c):
                out.setdefault(lab, []).append((i, p))
        return {k: (v[0], v[1]) for k, v in out.items()}

    @cached_property
    def neighbour(self) -> tuple[tuple[Dart, ...], ...]:
        """``neighbour[i][p]`` is the dart at the far end of the edge at (i, p)."""
        nb = [[None] * 4 for _ in self.crossings]
        for d1, d2 in self.ends.values():
            nb[d1[0]][d1[1]] = d2
            nb[d2[0]][d2[1]] = d1
        return tuple(tuple(r) for r in nb)

    def is_incoming(self, i: int, p: int) -> bool:
        return p in _incoming_positions(self.signs[i])

    @cached_property
    def component_edges(self) -> tuple[tuple[int, ...], ...]:
        """Edge labels of each crossing-carrying component in travel order."""
        seen: set[int] = set()
        comps = []
        for lab in sorted(self.ends):
            if lab in seen:
                continue
            # start at the tail of the edge and follow the orientation
            seq = []
            cur = lab
            while cur not in seen:
                seen.add(cur)
                seq.append(cur)
                (i, p) = next(d for d in self.ends[cur] if self.is_incoming(*d))
                cur = self.crossings[i][(p + 2) % 4]
            comps.append(tuple(seq))
        return tuple(comps)

    @property
    def components(self) -> int:
        return len(self.component_edges) + self.loops

    @property
    def is_knot(self) -> bool:
        return self.components == 1

    @cached_property
    def parts(self) -> int:
        """Number of connected pieces of the projection (free loops included)."""
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (i, _), (j, _) in self.ends.values():
            parent[find(i)] = find(j)
        return len({find(i) for i in range(self.n)}) + self.loops

    def corner_orbits(self) -> list[list[Dart]]:
        """Faces as cycles of corners; corner (i, p) lies between positions p and p+1."""
        seen = set()
        faces = []
        nb = self.neighbour
        for i in range(self.n):
            for p in range(4):
                if (i, p) in seen:
                    continue
                face = []
                cur = (i, p)
                while cur not in seen:
                    seen.add(cur)
                    face.append(cur)
                    ci, cp = cur
                    cur = nb[ci][(cp + 1) % 4]
                faces.append(face)
        return faces

    def is_planar(self) -> bool:
        crossing_parts = self.parts - self.loops
        return len(self.corner_orbits()) == self.n + 2 * crossing_parts

    def to_pd(self) -> str:
        return " ".join(f"X[{a},{b},{c},{d}]" for a, b, c, d in self.crossings)

    def __str__(self) -> str:
        label = self.name or "diagram"
        return f"{label}: {self.n} crossings, writhe {self.writhe}, {self.components} component(s)"


def unknot(kinks: Sequence[int] = ()) -> Diagram:
    d = Diagram((), (), loops=1, name="0_1")
    for s in kinks:
        d = add_kink(d, None, s)
    return d


# orientation assignment ------------------------------------------------------


def from_strands(
    strands: Sequence[Crossing],
    loops: int = 0,
    name: str | None = None,
    hint: dict[int, Dart] | None = None,
) -> Diagram:
    """Orient and relabel a diagram given by unoriented crossings.

    Each tuple lists its four labels counterclockwise with the under strand
    on positions 0 and 2; the starting position may be either end of the
    under strand.  A component is oriented so that a label listed in
    ``hint`` points into the given (crossing, position) end; otherwise it is
    oriented from the first occurrence of its smallest label.
    Edges are relabelled 1..2n along the components.
    """
    ends: dict[int, list[Dart]] = {}
    for i, c in enumerate(strands):
        for p, lab in enumerate(c):
            ends.setdefault(lab, []).append((i, p))
    for lab, occ in ends.items():
        if len(occ) != 2:
            raise DiagramError(f"edge label {lab} occurs {len(occ)} time(s), expected 2")
    hint = hint or {}
    entered: dict[int, set[int]] = {i: set() for i in range(len(strands))}
    order: list[tuple[int, Dart]] = []  # (old label, dart it enters)
    seen = set()
    starts = sorted(ends, key=lambda x: (x not in hint, x))
    for lab in starts:
        if lab in seen:
            continue
        d0, d1 = ends[lab]
        head = d1 if hint.get(lab) == d1 else d0
        cur_lab, cur_head = lab, head
        while cur_lab not in seen:
            seen.add(cur_lab)
            order.append((cur_lab, cur_head))
            i, p = cur_head
            entered[i].add(p)
            out_lab = strands[i][(p + 2) % 4]
            a, b = ends[out_lab]
            # the far end of the outgoing edge is its head
            cur_head = b if a == (i, (p + 2) % 4) else a
            cur_lab = out_lab
    relabel = {old: k + 1 for k, (old, _) in enumerate(order)}
    crossings = []
    signs = []
    for i, c in enumerate(strands):
        c = [relabel[x] for x in c]
        if 0 not in entered[i]:
            c = c[2:] + c[:2]
            ent = {(p + 2) % 4 for p in entered[i]}
        else:
            ent = entered[i]
        crossings.append(tuple(c))
        signs.append(1 if 3 in ent else -1)
    return Diagram(tuple(crossings), tuple(signs), loops, name)


_TUPLE = re.compile(r"[\[(]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\])]")


def _pd_tuples(text: str) -> list[Crossing]:
    body = text.strip()
    if "[" in body or "(" in body:
        found = [tuple(int(x) for x in m.groups()) for m in _TUPLE.finditer(body)]
        leftover = _TUPLE.sub("", body)
        if re.search(r"\d", leftover):
            raise DiagramError("PD text contains numbers outside 4-tuples")
        return found
    out = []
    for line in body.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.replace(",", " ").split()
        if toks and toks[0].upper() == "X":
            toks = toks[1:]
        if len(toks) != 4:
            raise DiagramError(f"crossing line needs 4 labels: {line!r}")
        try:
            out.append(tuple(int(x) for x in toks))
        except ValueError as exc:
            raise DiagramError(f"non-integer label in {line!r}") from exc
    return out


def parse_pd(text: str, name: str | None = None) -> Diagram:
    """Parse PD text: ``X[a,b,c,d]`` tuples, nested lists or "X a b c d" lines.

    Labels are anchored at the incoming under-strand.  The direction of each
    over-strand is propagated from the under-strands; components that never
    pass under fall back to label succession.  An empty crossing list is the
    0-crossing unknot.
    """
    tuples = _pd_tuples(text)
    if not tuples:
        return Diagram((), (), loops=1, name=name)
    ends: dict[int, list[Dart]] = {}
    for i, c in enumerate(tuples):
        for p, lab in enumerate(c):
            ends.setdefault(lab, []).append((i, p))
    for lab, occ in ends.items():
        if len(occ) != 2:
            raise DiagramError(f"dangling edge label {lab}: occurs {len(occ)} time(s)")
    # state[(i,p)] = True for an incoming end
    state: dict[Dart, bool] = {}
    for i in range(len(tuples)):
        state[(i, 0)] = True
        state[(i, 2)] = False

    def other(d: Dart) -> Dart:
        a, b = ends[tuples[d[0]][d[1]]]
        return b if a == d else a

    def propagate():
        changed = True
        while changed:
            changed = False
            for d, inc in list(state.items()):
                o = other(d)
                if o in state:
                    if state[o] == inc:
                        raise DiagramError(
                            f"edge {tuples[d[0]][d[1]]} has two {'incoming' if inc else 'outgoing'} ends"
                        )
                    continue
                state[o] = not inc
                changed = True
                i, p = o
                if p in (1, 3):
                    q = 4 - p
                    if (i, q) in state and state[(i, q)] == (not inc):
                        raise DiagramError(f"over-strand of crossing {i} is inconsistent")
                    state[(i, q)] = inc
    propagate()
    for i, (a, b, c, d) in enumerate(tuples):
        if (i, 1) in state:
            continue
        # KnotTheory succession: over strand runs d -> b when b follows d
        positive = (b - d == 1) or (d - b > 1)
        state[(i, 3)] = positive
        state[(i, 1)] = not positive
        propagate()
    signs = tuple(1 if state[(i, 3)] else -1 for i in range(len(tuples)))
    diagram = Diagram(tuple(tuples), signs, 0, name)
    if not diagram.is_planar():
        raise DiagramError("PD data does not describe a planar diagram")
    return diagram


# moves ---------------------------------------------------------------------


def mirror(d: Diagram) -> Diagram:
    """Switch every crossing: the mirror image in the same projection."""
    out = d
    for i in range(d.n):
        out = switch_crossing(out, i)
    return Diagram(out.crossings, out.signs, d.loops, _mirror_name(d.name))


def _mirror_name(name: str | None) -> str | None:
    if name is None:
        return None
    return name[1:] if name.startswith("!") else "!" + name


def switch_crossing(d: Diagram, i: int) -> Diagram:
    if not 0 <= i < d.n:
        raise IndexError(f"crossing index {i} out of range")
    a, b, c, e = d.crossings[i]
    if d.signs[i] > 0:
        new, s = (e, a, b, c), -1
    else:
        new, s = (b, c, e, a), 1
    crossings = d.crossings[:i] + (new,) + d.crossings[i + 1:]
    signs = d.signs[:i] + (s,) + d.signs[i + 1:]
    return Diagram(crossings, signs, d.loops, d.name)


def smoothing_pairs(crossing: Crossing, sign: int, mode: str) -> tuple[tuple[int, int], tuple[int, int]]:
    """Label pairs joined by the chosen splitting of one crossing."""
    a, b, c, e = crossing
    if mode == "oriented":
        mode = "A" if sign > 0 else "B"
    if mode == "A":
        return (a, b), (c, e)
    if mode == "B":
        return (a, e), (b, c)
    raise ValueError(f"unknown smoothing mode {mode!r}")


def smooth_crossing(d: Diagram, i: int, mode: str = "oriented") -> Diagram:
    """Split crossing ``i`` (oriented, A or B) and re-orient the result."""
    if not 0 <= i < d.n:
        raise IndexError(f"crossing index {i} out of range")
    pairs = smoothing_pairs(d.crossings[i], d.signs[i], mode)
    return _merge(d, i, pairs, keep_orientation=(mode == "oriented"))


def _merge(d: Diagram, removed: int, pairs, keep_orientation: bool) -> Diagram:
    parent: dict[int, int] = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in pairs:
        parent[find(x)] = find(y)
    rest = d.crossings[:removed] + d.crossings[removed + 1:]
    used = {find(lab) for c in rest for lab in c}
    roots = {find(lab) for pair in pairs for lab in pair}
    new_loops = len(roots - used)
    strands = [tuple(find(lab) for lab in c) for c in rest]
    if keep_orientation:
        # the oriented splitting preserves every orientation
        signs = d.signs[:removed] + d.signs[removed + 1:]
        return Diagram(tuple(strands), signs, d.loops + new_loops, None)
    hint: dict[int, Dart] = {}
    for lab, ends in d.ends.items():
        i, p = next(x for x in ends if d.is_incoming(*x))
        if i != removed:
            hint.setdefault(find(lab), (i if i < removed else i - 1, p))
    return from_strands(strands, d.loops + new_loops, None, hint)


def connected_sum(d1: Diagram, d2: Diagram, name: str | None = None) -> Diagram:
    """Band the two knots together along their smallest-labelled edges."""
    if not d1.is_knot or not d2.is_knot:
        raise DiagramError("connected sum needs two knot diagrams")
    if d1.n == 0:
        return Diagram(d2.crossings, d2.signs, d2.loops, name)
    if d2.n == 0:
        return Diagram(d1.crossings, d1.signs, d1.loops, name)
    shift = max(d1.ends) + 1 - min(d2.ends)
    c2 = [tuple(x + shift for x in c) for c in d2.crossings]
    e1 = min(d1.ends)
    e2 = min(d2.ends) + shift
    c1 = [list(c) for c in d1.crossings]
    c2 = [list(c) for c in c2]
    (i1, p1) = next(x for x in d1.ends[e1] if d1.is_incoming(*x))
    (i2, p2) = next(x for x in d2.ends[e2 - shift] if d2.is_incoming(*x))
    c1[i1][p1] = e2
    c2[i2][p2] = e1
    out = Diagram(tuple(map(tuple, c1 + c2)), d1.signs + d2.signs, 0, name)
    if not out.is_planar():  # pragma: no cover - the oriented splice is always planar
        raise DiagramError("connected sum produced a non-planar diagram")
    return from_strands(out.crossings, 0, name, _heads(out))


def _heads(d: Diagram) -> dict[int, Dart]:
    return {lab: next(x for x in ends if d.is_incoming(*x)) for lab, ends in d.ends.items()}


def add_kink(d: Diagram, edge: int | None, sign: int) -> Diagram:
    """Insert a one-crossing curl of the given sign into ``edge``.

    With ``edge=None`` the smallest label is used, or a free loop when the
    diagram has no crossings.
    """
    if sign not in (1, -1):
        raise ValueError("kink sign must be +1 or -1")
    if d.n == 0:
        if d.loops == 0:
            raise DiagramError("no strand to put a kink on")
        cross = (1, 1, 2, 2) if sign > 0 else (1, 2, 2, 1)
        base = Diagram((cross,), (sign,), d.loops - 1, d.name)
        return base
    if edge is None:
        edge = min(d.ends)
    if edge not in d.ends:
        raise DiagramError(f"no edge labelled {edge}")
    top = max(d.ends)
    loop, out_edge = top + 1, top + 2
    head = next(x for x in d.ends[edge] if d.is_incoming(*x))
    crossings = [list(c) for c in d.crossings]
    crossings[head[0]][head[1]] = out_edge
    if sign > 0:
        kink = (loop, loop, out_edge, edge)
    else:
        kink = (loop, edge, out_edge, loop)
    return Diagram(tuple(map(tuple, crossings)) + (kink,), d.signs + (sign,), d.loops, d.name)
