"""The unoriented Q polynomial by skein recursion towards descending diagrams.

A diagram is handled here in unoriented form: a tuple of crossings whose
positions 0 and 2 carry the under strand, plus a count of free circles.
The relation used is Q(D) + Q(D') = z (Q(D_A) + Q(D_B)) where D' has one
crossing switched and D_A, D_B are its two splittings.  Before recursing a
diagram is simplified: free circles and split pieces factor out, nugatory
crossings are untwisted and connected sums along two-edge cuts factor.
Values are memoized on a canonical key that ignores labels, the choice of
base dart, reflection of the plane and switching every crossing (Q does not
see mirror images).
"""

from __future__ import annotations

from collections import deque
from itertools import permutations

from ..algebra import LaurentPoly
from ..diagram import Diagram
from .bracket import DEFAULT_BUDGET, BudgetExceeded

__all__ = ["q_polynomial", "unlink_value", "QEngine", "canonical_key"]

Crossings = tuple[tuple[int, int, int, int], ...]


def unlink_value() -> LaurentPoly:
    """Q of the two-component unlink, 2/z - 1."""
    return LaurentPoly({-4: 2, 0: -1}, "z")


_ONE = LaurentPoly({0: 1}, "z")
_Z = LaurentPoly({4: 1}, "z")


def _ends(cr: Crossings) -> dict[int, list[tuple[int, int]]]:
    out: dict[int, list[tuple[int, int]]] = {}
    for i, c in enumerate(cr):
        for p, lab in enumerate(c):
            out.setdefault(lab, []).append((i, p))
    return out


def _neighbours(cr: Crossings):
    nb = [[None] * 4 for _ in cr]
    for (i, p), (j, q) in _ends(cr).values():
        nb[i][p] = (j, q)
        nb[j][q] = (i, p)
    return nb


def _merge(cr: Crossings, removed: int, pairs) -> tuple[Crossings, int]:
    """Delete one crossing, joining its ends in ``pairs``; returns new free circles."""
    parent: dict[int, int] = {}

    def find(x):
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    for x, y in pairs:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry
    rest = cr[:removed] + cr[removed + 1:]
    used = {find(lab) for c in rest for lab in c}
    roots = {find(lab) for pr in pairs for lab in pr}
    new = tuple(tuple(find(lab) for lab in c) for c in rest)
    return new, len(roots - used)


def _switch(cr: Crossings, i: int) -> Crossings:
    a, b, c, d = cr[i]
    return cr[:i] + ((b, c, d, a),) + cr[i + 1:]


def _pieces(cr: Crossings) -> list[Crossings]:
    n = len(cr)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (i, _), (j, _) in _ends(cr).values():
        parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return [tuple(cr[i] for i in g) for g in groups.values()]


def _faces(cr: Crossings, nb):
    face_of = {}
    count = 0
    for i in range(len(cr)):
        for p in range(4):
            if (i, p) in face_of:
                continue
            cur = (i, p)
            while cur not in face_of:
                face_of[cur] = count
                ci, cp = cur
                cur = nb[ci][(cp + 1) % 4]
            count += 1
    return face_of, count


def _nugatory(cr: Crossings, face_of) -> tuple[int, tuple] | None:
    for i, (a, b, c, d) in enumerate(cr):
        if face_of[(i, 0)] == face_of[(i, 2)]:
            # splitting along corners 0 and 2 keeps the diagram connected
            return i, ((a, b), (c, d))
        if face_of[(i, 1)] == face_of[(i, 3)]:
            return i, ((b, c), (d, a))
    return None


def _two_edge_cut(cr: Crossings, nb, face_of):
    """Two edges whose removal disconnects the diagram, splitting it as a connected sum."""
    ends = _ends(cr)
    by_faces: dict[tuple[int, int], list[int]] = {}
    for lab, ((i, p), _) in ends.items():
        left = face_of[(i, p)]
        right = face_of[(i, (p - 1) % 4)]
        by_faces.setdefault((min(left, right), max(left, right)), []).append(lab)
    for key, labs in by_faces.items():
        if len(labs) < 2 or key[0] == key[1]:
            continue
        for x in range(len(labs)):
            for y in range(x + 1, len(labs)):
                e1, e2 = labs[x], labs[y]
                # crossings reachable from one end of e1 without using e1, e2
                (s, _), _ = ends[e1]
                seen = {s}
                queue = deque([s])
                while queue:
                    i = queue.popleft()
                    for p in range(4):
                        if cr[i][p] in (e1, e2):
                            continue
                        j = nb[i][p][0]
                        if j not in seen:
                            seen.add(j)
                            queue.append(j)
                if len(seen) == len(cr):
                    continue
                return e1, e2, seen
    return None


def _split_sum(cr: Crossings, e1: int, e2: int, side: set[int]) -> tuple[Crossings, Crossings]:
    first, second = [], []
    for i, c in enumerate(cr):
        c = tuple(e1 if lab == e2 else lab for lab in c)
        (first if i in side else second).append(c)
    return tuple(first), tuple(second)


def canonical_key(cr: Crossings) -> tuple:
    """Label-free code of a connected unoriented diagram up to symmetry.

    Breadth-first numbering from each dart, in both rotational senses and
    with or without all crossings switched; the smallest code is the key.
    """
    nb = _neighbours(cr)
    n = len(cr)
    best = None
    for i0 in range(n):
        for p0 in range(4):
            for sense in (1, -1):
                for flip in (0, 1):
                    num = {i0: 0}
                    entry = {i0: p0}
                    order = [i0]
                    code = []
                    k = 0
                    while k < len(order):
                        i = order[k]
                        e = entry[i]
                        code.append((e % 2) ^ flip)
                        for step in range(4):
                            q = (e + sense * step) % 4
                            j, r = nb[i][q]
                            if j not in num:
                                num[j] = len(order)
                                entry[j] = r
                                order.append(j)
                            code.append(num[j])
                            code.append(((r - entry[j]) * sense) % 4)
                        k += 1
                        if best is not None and code > list(best[: len(code)]):
                            break
                    t = tuple(code)
                    if best is None or t < best:
                        best = t
    return best


class QEngine:
    """Memoizing evaluator; one instance may be reused across diagrams."""

    def __init__(self, budget: int = DEFAULT_BUDGET):
        self.budget = budget
        self.memo: dict[tuple, LaurentPoly] = {}
        self.mu = unlink_value()
        self._mu_powers = [_ONE]

    def mu_power(self, k: int) -> LaurentPoly:
        while len(self._mu_powers) <= k:
            self._mu_powers.append(self._mu_powers[-1] * self.mu)
        return self._mu_powers[k]

    def __call__(self, d: Diagram) -> LaurentPoly:
        if d.n > self.budget:
            raise BudgetExceeded(f"{d.n} crossings exceed the budget of {self.budget}")
        return self.value(d.crossings, d.loops)

    def value(self, cr: Crossings, loops: int) -> LaurentPoly:
        if not cr:
            return self.mu_power(max(loops - 1, 0))
        pieces = _pieces(cr)
        extra = loops + len(pieces) - 1
        out = self.mu_power(extra)
        for piece in pieces:
            out = out * self.connected(piece)
        return out

    def connected(self, cr: Crossings) -> LaurentPoly:
        nb = _neighbours(cr)
        face_of, _ = _faces(cr, nb)
        nug = _nugatory(cr, face_of)
        if nug is not None:
            i, pairs = nug
            new, loops = _merge(cr, i, pairs)
            return self.value(new, loops)
        cut = _two_edge_cut(cr, nb, face_of)
        if cut is not None:
            first, second = _split_sum(cr, *cut)
            return self.connected(first) * self.connected(second)
        key = canonical_key(cr)
        hit = self.memo.get(key)
        if hit is None:
            hit = self._skein(cr)
            self.memo[key] = hit
        return hit

    def _skein(self, cr: Crossings) -> LaurentPoly:
        bad, comps = _descending_plan(cr)
        total = LaurentPoly({}, "z")
        cur = cr
        for j, i in enumerate(bad):
            a, b, c, d = cur[i]
            sm_a = self.value(*_merge(cur, i, ((a, b), (c, d))))
            sm_b = self.value(*_merge(cur, i, ((a, d), (b, c))))
            term = _Z * (sm_a + sm_b)
            total = total + term if j % 2 == 0 else total - term
            cur = _switch(cur, i)
        tail = self.mu_power(comps - 1)
        return total + tail if len(bad) % 2 == 0 else total - tail


def _descending_plan(cr: Crossings) -> tuple[list[int], int]:
    """Crossings to switch for a descending diagram, and the component count.

    Each component is walked from the base dart and direction giving the
    fewest self-crossings first met from below; components are then ordered
    to minimise the crossings between them that are first met from below.
    """
    nb = _neighbours(cr)
    n = len(cr)
    comp_of = {}
    comps = []
    for i in range(n):
        for p in range(4):
            if (i, p) in comp_of:
                continue
            cycle = []
            cur = (i, p)
            while cur not in comp_of:
                comp_of[cur] = len(comps)
                comp_of[(cur[0], (cur[1] + 2) % 4)] = len(comps)
                cycle.append(cur)
                ci, cp = cur
                cur = nb[ci][(cp + 2) % 4]
            comps.append(cycle)

    def walk(start_idx, cycle, reverse):
        seq = cycle[start_idx:] + cycle[:start_idx]
        if reverse:
            # entering the other way: the exits in reverse order
            seq = [(ci, (cp + 2) % 4) for ci, cp in reversed(seq)]
        return seq

    plans = []
    for cycle in comps:
        best = None
        for s in range(len(cycle)):
            for rev in (False, True):
                seq = walk(s, cycle, rev)
                first: dict[int, int] = {}
                bad = []
                for ci, cp in seq:
                    if ci in first:
                        continue
                    first[ci] = cp
                    partner_same = comp_of[(ci, (cp + 1) % 4)] == comp_of[(ci, cp)]
                    if partner_same and cp % 2 == 0:
                        bad.append(ci)
                if best is None or len(bad) < len(best[0]):
                    best = (bad, seq)
        plans.append(best)
    k = len(comps)
    inter: dict[tuple[int, int], list[int]] = {}
    for i in range(n):
        c_under = comp_of[(i, 0)]
        c_over = comp_of[(i, 1)]
        if c_under != c_over:
            inter.setdefault((c_under, c_over), []).append(i)

    def cost(order):
        pos = {c: r for r, c in enumerate(order)}
        return sum(len(v) for (u, o), v in inter.items() if pos[u] < pos[o])

    if k <= 6:
        order = min(permutations(range(k)), key=cost)
    else:
        order = list(range(k))
    pos = {c: r for r, c in enumerate(order)}
    bad = []
    for c in order:
        bad.extend(plans[c][0])
    for (u, o), v in inter.items():
        if pos[u] < pos[o]:
            bad.extend(v)
    return bad, k


_DEFAULT_ENGINE: QEngine | None = None


def q_polynomial(d: Diagram, budget: int = DEFAULT_BUDGET, engine: QEngine | None = None) -> LaurentPoly:
    """Q polynomial of a diagram (orientation is ignored)."""
    global _DEFAULT_ENGINE
    if engine is None:
        if _DEFAULT_ENGINE is None or _DEFAULT_ENGINE.budget != budget:
            _DEFAULT_ENGINE = QEngine(budget)
        engine = _DEFAULT_ENGINE
    return engine(d)
