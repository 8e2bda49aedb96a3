"""Kauffman bracket and Jones polynomial."""

from __future__ import annotations

from fractions import Fraction

from ..algebra import LaurentPoly
from ..diagram import Diagram, smooth_crossing

__all__ = ["BudgetExceeded", "DEFAULT_BUDGET", "kauffman_bracket", "bracket_by_skein", "jones", "loop_value"]

DEFAULT_BUDGET = 20


class BudgetExceeded(RuntimeError):
    """The diagram has more crossings than the configured budget allows."""


def loop_value() -> LaurentPoly:
    """The circle factor -A^2 - A^-2."""
    return LaurentPoly({8: -1, -8: -1}, "A")


def _check_budget(d: Diagram, budget: int) -> None:
    if d.n > budget:
        raise BudgetExceeded(f"{d.n} crossings exceed the budget of {budget}")


def kauffman_bracket(d: Diagram, budget: int = DEFAULT_BUDGET) -> LaurentPoly:
    """State sum over all 2^n splittings.

    Depth-first over crossings with a union-find that is rolled back on the
    way up, so each state costs two unions.  Terms are collected by
    (#A - #B, number of circles) before expanding powers of the loop value.
    """
    _check_budget(d, budget)
    labels = sorted(d.ends)
    index = {lab: k for k, lab in enumerate(labels)}
    parent = list(range(len(labels)))
    size = [1] * len(labels)
    history: list[int] = []
    pairs = []
    for a, b, c, e in d.crossings:
        ia, ib, ic, ie = index[a], index[b], index[c], index[e]
        pairs.append((((ia, ib), (ic, ie)), ((ia, ie), (ib, ic))))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def union(x, y) -> bool:
        x, y = find(x), find(y)
        if x == y:
            history.append(-1)
            return False
        if size[x] < size[y]:
            x, y = y, x
        parent[y] = x
        size[x] += size[y]
        history.append(y)
        return True

    def undo():
        y = history.pop()
        if y >= 0:
            x = parent[y]
            size[x] -= size[y]
            parent[y] = y

    counts: dict[tuple[int, int], int] = {}
    n = d.n

    def walk(k: int, a_minus_b: int, merges: int):
        if k == n:
            key = (a_minus_b, len(labels) - merges)
            counts[key] = counts.get(key, 0) + 1
            return
        for choice, delta in ((0, 1), (1, -1)):
            (x1, y1), (x2, y2) = pairs[k][choice]
            m = union(x1, y1) + union(x2, y2)
            walk(k + 1, a_minus_b + delta, merges + m)
            undo()
            undo()

    if n == 0:
        circles_extra = d.loops
        return loop_value() ** max(circles_extra - 1, 0)
    walk(0, 0, 0)
    delta = loop_value()
    powers = {}
    total = LaurentPoly({}, "A")
    for (amb, circles), mult in sorted(counts.items()):
        circles += d.loops
        if circles not in powers:
            powers[circles] = delta ** (circles - 1)
        total = total + powers[circles].shift(amb) * mult
    return total


def bracket_by_skein(d: Diagram, budget: int = DEFAULT_BUDGET) -> LaurentPoly:
    """Independent evaluation via <D> = A <D_A> + A^-1 <D_B>."""
    _check_budget(d, budget)
    memo: dict = {}

    def rec(x: Diagram) -> LaurentPoly:
        if x.n == 0:
            return loop_value() ** (x.loops - 1)
        key = (x.crossings, x.loops)
        if key in memo:
            return memo[key]
        val = rec(smooth_crossing(x, 0, "A")).shift(1) + rec(smooth_crossing(x, 0, "B")).shift(-1)
        memo[key] = val
        return val

    return rec(d)


def jones(d: Diagram, budget: int = DEFAULT_BUDGET, bracket: LaurentPoly | None = None) -> LaurentPoly:
    """V(t) = (-t^{-3/4})^{-w} <D> evaluated at A = t^{-1/4}."""
    if bracket is None:
        bracket = kauffman_bracket(d, budget)
    w = d.writhe
    factor = LaurentPoly.monomial(-1 if w % 2 else 1, Fraction(3 * w, 4), "t")
    return factor * bracket.bracket_to_t()
