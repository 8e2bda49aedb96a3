"""Double branched cover algebra from a checkerboard shading.

The Goeritz matrix is the weighted Laplacian of the black faces: a crossing
joining black faces f and g contributes weight eta to the (f, g) coupling,
where eta = +1 when the black corners of the crossing are its A-corners and
-1 otherwise.  The last black face is deleted.  With the correction

    mu = sum of eta over crossings of type II,

the signature is sig(G) - mu; the positive trefoil gets +2.

The linking form is +U^{-1} with U = -G.  This is the sign for which a knot
of signature 2 that unknots by a positive switch carries a generator g with
lambda(g, g) = -2/det, as the signed linking criterion requires (the
positive trefoil is the smallest check).  Consequently the signature
reads sigma = -(sig(U) - mu_U) with mu_U = -mu.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod

from .algebra import determinant, is_symmetric, rational_inverse, signature as matrix_signature
from .algebra import smith_normal_form
from .algebra.matrices import integer_inverse, mat_mul, transpose
from .diagram import Diagram, DiagramError, checkerboard

__all__ = [
    "GoeritzData",
    "AbelianGroup",
    "LinkingForm",
    "SpectrumEntry",
    "EnumerationCapExceeded",
    "goeritz",
    "goeritz_from_matrix",
    "signature",
    "homology",
    "linking_form",
    "self_linking_spectrum",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 10**6


class EnumerationCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class GoeritzData:
    """``matrix`` is U, presenting H1 with linking form +U^{-1}."""

    matrix: tuple[tuple[int, ...], ...]
    mu: int | None
    face_index: tuple[int, ...]

    def __post_init__(self):
        if not is_symmetric(self.matrix):
            raise ValueError("Goeritz matrix must be symmetric")

    @property
    def size(self) -> int:
        return len(self.matrix)

    @property
    def det(self) -> int:
        return abs(determinant(self.matrix))

    @property
    def signature(self) -> int | None:
        """Knot signature, or None when no diagram correction is known."""
        if self.mu is None:
            return None
        return -(matrix_signature(self.matrix) - self.mu)


def goeritz(d: Diagram) -> GoeritzData:
    if not d.is_knot:
        raise DiagramError("the Goeritz path is implemented for knots only")
    fd = checkerboard(d)
    black = fd.black_faces
    if d.n == 0:
        return GoeritzData((), 0, ())
    pos = {f: k for k, f in enumerate(black)}
    m = len(black)
    lap = [[0] * m for _ in range(m)]
    mu = 0
    for i in range(d.n):
        eta = 1 if fd.black_is_A[i] else -1
        par = fd.black_corner_parity[i]
        f = pos[fd.corner_face[(i, par)]]
        g = pos[fd.corner_face[(i, par + 2)]]
        if f != g:
            lap[f][g] -= eta
            lap[g][f] -= eta
            lap[f][f] += eta
            lap[g][g] += eta
        if fd.crossing_types[i] == 2:
            mu += eta
    u = tuple(tuple(-x for x in row[: m - 1]) for row in lap[: m - 1])
    return GoeritzData(u, -mu, tuple(black[: m - 1]))


def goeritz_from_matrix(rows) -> GoeritzData:
    """Wrap a bare symmetric integer matrix; its signature correction is unknown."""
    mat = tuple(tuple(int(x) for x in r) for r in rows)
    if mat and any(len(r) != len(mat) for r in mat):
        raise ValueError("Goeritz matrix must be square")
    return GoeritzData(mat, None, tuple(range(len(mat))))


def signature(d: Diagram) -> int:
    sig = goeritz(d).signature
    assert sig is not None
    return sig


@dataclass(frozen=True)
class AbelianGroup:
    invariant_factors: tuple[int, ...]

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def p_rank(self, p: int) -> int:
        return sum(1 for f in self.invariant_factors if f % p == 0)

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "0"
        return " + ".join(f"Z{f}" for f in self.invariant_factors)


@dataclass(frozen=True)
class LinkingForm:
    """Gram matrix mod 1 on the invariant-factor generators.

    ``generators`` holds, per invariant factor, the coordinates of the
    generator in the Goeritz basis; ``coordinates`` maps a Goeritz basis
    vector to invariant-factor coordinates.
    """

    gram: tuple[tuple[Fraction, ...], ...]
    orders: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    coordinates: tuple[tuple[int, ...], ...]
    goeritz_inverse: tuple[tuple[Fraction, ...], ...]

    def value(self, x, y) -> Fraction:
        total = sum(a * self.gram[i][j] * b for i, a in enumerate(x) for j, b in enumerate(y))
        return Fraction(total) % 1

    def value_goeritz(self, x, y) -> Fraction:
        """lambda of two vectors given in the Goeritz basis."""
        inv = self.goeritz_inverse
        total = sum(a * inv[i][j] * b for i, a in enumerate(x) for j, b in enumerate(y))
        return Fraction(total) % 1


def homology(g: GoeritzData) -> AbelianGroup:
    if g.size == 0:
        return AbelianGroup(())
    snf = smith_normal_form(g.matrix)
    if 0 in snf.diagonal:
        raise ValueError("Goeritz matrix is singular; H1 is infinite")
    return AbelianGroup(tuple(x for x in snf.diagonal if x != 1))


def linking_form(g: GoeritzData) -> LinkingForm:
    if g.size == 0:
        return LinkingForm((), (), (), (), ())
    snf = smith_normal_form(g.matrix)
    if 0 in snf.diagonal:
        raise ValueError("Goeritz matrix is singular")
    inv = rational_inverse(g.matrix)
    # H1 = Z^m / U Z^m.  With L U R = D, new basis vectors are the columns of
    # L^{-1}; the k-th has order D_k.
    left_inv = integer_inverse(snf.left)
    keep = [k for k, x in enumerate(snf.diagonal) if x != 1]
    gens = tuple(tuple(left_inv[r][k] for r in range(g.size)) for k in keep)
    orders = tuple(snf.diagonal[k] for k in keep)
    gram = tuple(
        tuple(
            Fraction(sum(a * inv[i][j] * b for i, a in enumerate(x) for j, b in enumerate(y))) % 1
            for y in gens
        )
        for x in gens
    )
    # coordinates of the Goeritz basis vector e_r: row r of L restricted to kept factors
    coords = tuple(tuple(snf.left[k][r] % snf.diagonal[k] for k in keep) for r in range(g.size))
    return LinkingForm(gram, orders, gens, coords, inv)


@dataclass(frozen=True)
class SpectrumEntry:
    coordinates: tuple[int, ...]
    order: int
    self_linking: Fraction


def _element_order(coords, orders) -> int:
    from math import gcd, lcm

    out = 1
    for c, m in zip(coords, orders):
        out = lcm(out, m // gcd(c, m))
    return out


def self_linking_spectrum(form: LinkingForm, group: AbelianGroup | None = None, cap: int = DEFAULT_CAP):
    """lambda(x, x) for every element x of H1, as a list of SpectrumEntry."""
    orders = form.orders
    size = prod(orders) if orders else 1
    if size > cap:
        raise EnumerationCapExceeded(f"|H1| = {size} exceeds the enumeration cap {cap}")
    if group is not None and group.invariant_factors != orders:
        raise ValueError("group and linking form disagree")
    if not orders:
        return [SpectrumEntry((), 1, Fraction(0))]
    out = []
    for coords in product(*(range(m) for m in orders)):
        out.append(SpectrumEntry(coords, _element_order(coords, orders), form.value(coords, coords)))
    return out
