"""Exact Laurent polynomials on a quarter-integer exponent grid.

Exponents are stored as integers counting quarter units of the variable, so
``t**(3/4)`` is stored under key ``3`` and ``t**2`` under key ``8``.  One
representation therefore covers the bracket (variable ``A``), the Jones
polynomial of links (half-integer powers of ``t``) and the Q polynomial.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Iterator, Mapping

if TYPE_CHECKING:
    from .quadratic import QuadRing, QuadValue

__all__ = ["LaurentPoly", "poly_arith"]

_VARS = ("A", "t", "z")


def _to_quarters(exponent) -> int:
    q = Fraction(exponent) * 4
    if q.denominator != 1:
        raise ValueError(f"exponent {exponent} is not on the quarter grid")
    return int(q)


class LaurentPoly:
    """Immutable Laurent polynomial with integer coefficients.

    >>> t = LaurentPoly.monomial(1, 1)
    >>> (t - 1) * (t + 1)
    LaurentPoly('-1 + t^2', var='t')
    """

    __slots__ = ("_terms", "var", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "t"):
        if var not in _VARS:
            raise ValueError(f"unknown variable tag {var!r}")
        clean = {}
        for k, c in (terms or {}).items():
            if c:
                clean[int(k)] = int(c)
        self._terms = clean
        self.var = var
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def monomial(cls, coeff: int, exponent=0, var: str = "t") -> "LaurentPoly":
        return cls({_to_quarters(exponent): coeff}, var)

    @classmethod
    def constant(cls, c: int, var: str = "t") -> "LaurentPoly":
        return cls({0: c}, var)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[int], low: int = 0, var: str = "t") -> "LaurentPoly":
        """Build ``sum coeffs[k] * var**(low + k)`` (integer exponents)."""
        return cls({4 * (low + k): c for k, c in enumerate(coeffs)}, var)

    @classmethod
    def parse(cls, text: str, var: str | None = None) -> "LaurentPoly":
        """Parse strings such as ``"t^(-2)-t^(-1)+ 2"`` or ``"-3+ 2*x+ 2*x^2"``.

        Any single-letter variable is accepted in the text; ``var`` sets the tag
        of the result (defaults to the letter found, mapped ``x -> z``).
        """
        s = text.replace(" ", "").replace("**", "^")
        if not s:
            raise ValueError("empty polynomial string")
        letters = set(re.findall(r"[A-Za-z]", s))
        if len(letters) > 1:
            raise ValueError(f"more than one variable in {text!r}")
        letter = letters.pop() if letters else None
        if var is None:
            var = {"x": "z", None: "t"}.get(letter, letter)
        terms: dict[int, int] = {}
        pattern = re.compile(
            r"([+-]?)(\d*)\*?(?:([A-Za-z])(?:\^\(?([+-]?\d+(?:/\d+)?)\)?)?)?"
        )
        pos = 0
        while pos < len(s):
            m = pattern.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse {text!r} at position {pos}")
            sign, digits, letter_here, exp = m.groups()
            if not digits and not letter_here:
                raise ValueError(f"cannot parse {text!r} at position {pos}")
            coeff = int(digits) if digits else 1
            if sign == "-":
                coeff = -coeff
            e = Fraction(exp) if exp is not None else (Fraction(1) if letter_here else Fraction(0))
            key = _to_quarters(e)
            terms[key] = terms.get(key, 0) + coeff
            pos = m.end()
        return cls(terms, var)

    # basic protocol -----------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        """Copy of the quarter-exponent -> coefficient map."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, int]]:
        """(quarter exponent, coefficient) pairs in increasing exponent order."""
        return iter(sorted(self._terms.items()))

    def coeff(self, exponent) -> int:
        return self._terms.get(_to_quarters(exponent), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_integral(self) -> bool:
        """True when every exponent is an integer power of the variable."""
        return all(k % 4 == 0 for k in self._terms)

    def span(self) -> tuple[Fraction, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no span")
        return Fraction(min(self._terms), 4), Fraction(max(self._terms), 4)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.var == other.var and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.var, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r}, var={self.var!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, c in sorted(self._terms.items()):
            e = Fraction(k, 4)
            if e == 0:
                mono = ""
            elif e == 1:
                mono = self.var
            else:
                es = str(e) if e.denominator == 1 and e > 0 else f"({e})"
                mono = f"{self.var}^{es}"
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    # arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.var)
        if isinstance(other, LaurentPoly):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self._terms.items()}, self.var)

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out: dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (k, c), = self._terms.items()
            if abs(c) != 1:
                raise ValueError("monomial coefficient must be a unit")
            return LaurentPoly({-k * -n: c ** -n}, self.var)
        result = LaurentPoly.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, exponent) -> "LaurentPoly":
        """Multiply by ``var**exponent``."""
        q = _to_quarters(exponent)
        return LaurentPoly({k + q: c for k, c in self._terms.items()}, self.var)

    def substitute_inverse(self) -> "LaurentPoly":
        """The polynomial with ``var -> 1/var``."""
        return LaurentPoly({-k: c for k, c in self._terms.items()}, self.var)

    def bracket_to_t(self) -> "LaurentPoly":
        """Substitute ``A = t**(-1/4)`` in a polynomial in ``A``."""
        if self.var != "A":
            raise ValueError("expected a polynomial in A")
        if any(k % 4 for k in self._terms):
            raise ValueError("bracket must have integer powers of A")
        return LaurentPoly({-(k // 4): c for k, c in self._terms.items()}, "t")

    # exact calculus -----------------------------------------------------

    def _int_exponents(self) -> dict[int, int]:
        if not self.is_integral():
            raise ValueError("polynomial has non-integer exponents")
        return {k // 4: c for k, c in self._terms.items()}

    def value_at_one(self) -> int:
        return sum(self._terms.values())

    def evaluate(self, x) -> Fraction:
        """Exact value at a rational point (integer exponents only)."""
        x = Fraction(x)
        total = Fraction(0)
        for e, c in self._int_exponents().items():
            total += c * x ** e
        return total

    def derivative_at_one(self, order: int = 1) -> Fraction:
        """Exact ``order``-th derivative at ``var = 1``."""
        if order < 0:
            raise ValueError("order must be non-negative")
        total = 0
        for e, c in self._int_exponents().items():
            falling = 1
            for j in range(order):
                falling *= e - j
            total += c * falling
        return Fraction(total)

    def divide_by_t_minus_1(self) -> "LaurentPoly":
        """Exact quotient by ``(var - 1)``; raises if ``p(1) != 0``."""
        ints = self._int_exponents()
        if not ints:
            return LaurentPoly({}, self.var)
        if sum(ints.values()):
            raise ValueError("polynomial does not vanish at 1")
        lo, hi = min(ints), max(ints)
        # synthetic division from the top: q_{e-1} = c_e + q_e
        out: dict[int, int] = {}
        carry = 0
        for e in range(hi, lo, -1):
            carry += ints.get(e, 0)
            out[4 * (e - 1)] = carry
        return LaurentPoly(out, self.var)

    def clearing_exponent(self) -> int:
        """Smallest N >= 0 with ``var**N * p`` a polynomial."""
        ints = self._int_exponents()
        return max(0, -min(ints)) if ints else 0

    def reduce_mod(self, modulus: "LaurentPoly") -> tuple["LaurentPoly", int]:
        """Remainder of ``var**N * p`` modulo a monic polynomial, and N.

        ``N`` is the minimal clearing exponent.  The remainder has degree below
        ``deg(modulus)``.
        """
        mod = modulus._int_exponents()
        if not mod or min(mod) < 0:
            raise ValueError("modulus must be an ordinary polynomial")
        deg = max(mod)
        if mod[deg] != 1:
            raise ValueError("modulus must be monic")
        n = self.clearing_exponent()
        work = {e + n: c for e, c in self._int_exponents().items()}
        for e in range(max(work, default=-1), deg - 1, -1):
            c = work.pop(e, 0)
            if not c:
                continue
            for me, mc in mod.items():
                if me == deg:
                    continue
                k = e - deg + me
                work[k] = work.get(k, 0) - c * mc
        return LaurentPoly({4 * e: c for e, c in work.items()}, self.var), n

    def is_congruent(self, other, modulus: "LaurentPoly") -> bool:
        """Whether ``self - other`` lies in the ideal of ``modulus`` in Z[t, 1/t].

        Requires ``modulus(0) = +-1`` so the variable is a unit modulo it.
        """
        mod = modulus._int_exponents()
        if abs(mod.get(0, 0)) != 1:
            raise ValueError("modulus must have unit constant term")
        rem, _ = (self - other).reduce_mod(modulus)
        return rem.is_zero()

    def evaluate_in(self, ring: "QuadRing") -> "QuadValue":
        """Exact value at the root of a quadratic ring (integer exponents)."""
        return ring.evaluate(self._int_exponents())


def poly_arith(p: LaurentPoly, q: LaurentPoly, kind: str) -> LaurentPoly:
    """Add, subtract or multiply two polynomials with the same variable tag."""
    if p.var != q.var:
        raise ValueError(f"variable mismatch: {p.var} vs {q.var}")
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    raise ValueError(f"unknown operation {kind!r}")

