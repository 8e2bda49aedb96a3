"""Exact values ``a + b*r`` in Z[r] for a root r of a fixed monic polynomial.

Four rings are used: ``z^2 + z - 1`` (r = (sqrt5 - 1)/2), ``t^2 - t + 1``
(r = e^{i pi/3}), ``t^2 + 1`` (r = i) and the degenerate ``t + 1`` (r = -1,
where ``b`` is always 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

__all__ = ["QuadRing", "QuadValue", "GOLDEN", "EISENSTEIN", "GAUSSIAN", "MINUS_ONE"]


@dataclass(frozen=True)
class QuadRing:
    """Root r of ``x^2 + c1*x + c0`` (or of ``x + c0`` when ``linear``)."""

    name: str
    c1: int
    c0: int
    linear: bool = False

    def __post_init__(self):
        if abs(self.c0) != 1:
            raise ValueError("the root must be a unit (constant term +-1)")

    def __call__(self, a: int, b: int = 0) -> "QuadValue":
        return QuadValue(a, b, self)

    @property
    def root(self) -> "QuadValue":
        if self.linear:
            return QuadValue(-self.c0, 0, self)
        return QuadValue(0, 1, self)

    @property
    def root_inverse(self) -> "QuadValue":
        if self.linear:
            return QuadValue(-self.c0, 0, self)
        # r (r + c1) = -c0  =>  1/r = -(r + c1)/c0
        return QuadValue(-self.c1 * self.c0, -self.c0, self)

    def evaluate(self, coeffs: Mapping[int, int]) -> "QuadValue":
        """Value of ``sum c_e r^e`` for integer exponents ``e``."""
        if not coeffs:
            return QuadValue(0, 0, self)
        lo, hi = min(coeffs), max(coeffs)
        acc = QuadValue(0, 0, self)
        r = self.root
        for e in range(hi, lo - 1, -1):
            acc = acc * r + coeffs.get(e, 0)
        if lo < 0:
            acc = acc * self.root_inverse ** (-lo)
        else:
            acc = acc * r ** lo
        return acc


GOLDEN = QuadRing("z^2+z-1", 1, -1)
EISENSTEIN = QuadRing("t^2-t+1", -1, 1)
GAUSSIAN = QuadRing("t^2+1", 0, 1)
MINUS_ONE = QuadRing("t+1", 0, 1, linear=True)


@dataclass(frozen=True)
class QuadValue:
    a: int
    b: int
    ring: QuadRing

    def __post_init__(self):
        if self.ring.linear and self.b:
            raise ValueError("degenerate ring carries no b component")

    def _coerce(self, other) -> "QuadValue":
        if isinstance(other, int):
            return QuadValue(other, 0, self.ring)
        if isinstance(other, QuadValue):
            if other.ring != self.ring:
                raise ValueError("ring mismatch")
            return other
        raise TypeError(f"cannot combine QuadValue with {type(other).__name__}")

    def __add__(self, other) -> "QuadValue":
        o = self._coerce(other)
        return QuadValue(self.a + o.a, self.b + o.b, self.ring)

    __radd__ = __add__

    def __neg__(self) -> "QuadValue":
        return QuadValue(-self.a, -self.b, self.ring)

    def __sub__(self, other) -> "QuadValue":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QuadValue":
        return self._coerce(other) - self

    def __mul__(self, other) -> "QuadValue":
        o = self._coerce(other)
        if self.ring.linear:
            return QuadValue(self.a * o.a, 0, self.ring)
        # r^2 = -c1 r - c0
        c1, c0 = self.ring.c1, self.ring.c0
        bb = self.b * o.b
        return QuadValue(
            self.a * o.a - c0 * bb,
            self.a * o.b + self.b * o.a - c1 * bb,
            self.ring,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QuadValue":
        if n < 0:
            raise ValueError("negative powers: use exact division")
        result = QuadValue(1, 0, self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QuadValue(other, 0, self.ring)
        if not isinstance(other, QuadValue):
            return NotImplemented
        return (self.a, self.b, self.ring) == (other.a, other.b, other.ring)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.ring.name))

    def conjugate(self) -> "QuadValue":
        """Image under the other root ``r' = -c1 - r``."""
        if self.ring.linear:
            return self
        return QuadValue(self.a - self.b * self.ring.c1, -self.b, self.ring)

    def norm(self) -> int:
        if self.ring.linear:
            return self.a
        n = self * self.conjugate()
        return n.a

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def exact_div(self, other) -> "QuadValue | None":
        """``self / other`` if it lies in the ring, else None."""
        o = self._coerce(other)
        if self.ring.linear:
            if o.a == 0:
                raise ZeroDivisionError("division by zero in quadratic ring")
            return None if self.a % o.a else QuadValue(self.a // o.a, 0, self.ring)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic ring")
        num = self * o.conjugate()
        if num.a % n or num.b % n:
            return None
        return QuadValue(num.a // n, num.b // n, self.ring)

    def __repr__(self) -> str:
        return f"QuadValue({self.a}, {self.b}, {self.ring.name})"
