"""Faces, checkerboard shading and the Gordon-Litherland crossing types."""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque

from .core import Diagram, DiagramError

__all__ = ["FaceData", "checkerboard", "BLACK", "WHITE"]

WHITE, BLACK = 0, 1

# corner p of a crossing sits between positions p and p+1; the A-corners are
# (b, c) and (d, a), i.e. corners 1 and 3
_A_CORNERS = (1, 3)


@dataclass(frozen=True)
class FaceData:
    faces: tuple[tuple[tuple[int, int], ...], ...]
    shading: tuple[int, ...]
    unbounded: int
    corner_face: dict
    black_corner_parity: tuple[int, ...]
    black_is_A: tuple[bool, ...]
    crossing_types: tuple[int, ...]

    @property
    def black_faces(self) -> list[int]:
        return [f for f, col in enumerate(self.shading) if col == BLACK]

    def euler_characteristic(self, d: Diagram) -> int:
        return d.n - 2 * d.n + len(self.faces)


def checkerboard(d: Diagram) -> FaceData:
    """Faces of a connected diagram with the unbounded face shaded white.

    The unbounded face is taken to be a face with the most corners (lowest
    index on ties).  A crossing is of type II when its oriented splitting
    separates the two black corners, and of type I otherwise.
    """
    if d.n == 0:
        if d.loops != 1:
            raise DiagramError("checkerboard needs a connected diagram")
        return FaceData(((), ()), (WHITE, BLACK), 0, {}, (), (), ())
    if d.parts != 1:
        raise DiagramError("checkerboard needs a connected (non-split) diagram")
    orbits = d.corner_orbits()
    if len(orbits) != d.n + 2:
        raise DiagramError("diagram is not planar")
    corner_face = {}
    for f, face in enumerate(orbits):
        for corner in face:
            corner_face[corner] = f
    unbounded = max(range(len(orbits)), key=lambda f: (len(orbits[f]), -f))
    colour = [None] * len(orbits)
    colour[unbounded] = WHITE
    adjacent: dict[int, set[int]] = {f: set() for f in range(len(orbits))}
    for i in range(d.n):
        for p in range(4):
            f, g = corner_face[(i, p)], corner_face[(i, (p + 1) % 4)]
            adjacent[f].add(g)
            adjacent[g].add(f)
    queue = deque([unbounded])
    while queue:
        f = queue.popleft()
        for g in adjacent[f]:
            if g == f:
                raise DiagramError("a face meets itself across an edge; shading impossible")
            if colour[g] is None:
                colour[g] = 1 - colour[f]
                queue.append(g)
            elif colour[g] == colour[f]:
                raise DiagramError("faces cannot be two-coloured")
    parity, black_a, types = [], [], []
    for i in range(d.n):
        par = 0 if colour[corner_face[(i, 0)]] == BLACK else 1
        parity.append(par)
        is_a = par == 1  # black corners are 1 and 3
        black_a.append(is_a)
        # oriented splitting is A at a positive crossing; it joins the black
        # corners exactly when those are the corners it joins
        joins_black = (d.signs[i] > 0) == is_a
        types.append(1 if joins_black else 2)
    return FaceData(
        tuple(tuple(f) for f in orbits),
        tuple(colour),
        unbounded,
        corner_face,
        tuple(parity),
        tuple(black_a),
        tuple(types),
    )
