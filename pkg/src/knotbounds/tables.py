"""Plain-text knot tables.

A table file starts with a naming header and then holds one knot per line::

    #! naming: rolfsen
    # comment
    10 105 4 12 16 20 18 2 8 6 10 14 91 2 2
    10 105 : 91 (0,0,0,1)
    3_1#!7_1 4??

Prime rows are ``n index`` followed by the n DT entries and optionally the
determinant and signature, then optionally the unknotting number.  A number
``x`` followed by ``y`` question marks means u <= x with x - y, ..., x - 1
not excluded.  Composite rows name their factors joined by ``#`` (``!`` for a
mirror image) followed by the same optional columns.  A line ``n index :
text`` annotates the row with that key, wherever it appears in the file.

Naming ``rolfsen`` puts the determinant-85 knot at 10_86; ``kawauchi``
tables are read with 10_83 and 10_86 exchanged.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path

from .diagram import Diagram, DiagramError, DTCode, connected_sum, mirror, realize_dt

__all__ = [
    "TableError",
    "ReferenceU",
    "TableRow",
    "KnotTable",
    "NAMINGS",
    "parse_table",
    "parse_table_file",
    "format_table",
    "bundled_table",
    "prime_diagram",
    "composite_diagram",
]

NAMINGS = ("rolfsen", "kawauchi")
_SWAP = {(10, 83): (10, 86), (10, 86): (10, 83)}
_U_RE = re.compile(r"^(\d+)(\?*)$")
_FACTOR_RE = re.compile(r"^(!?)(\d+)_(\d+)$")


class TableError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class ReferenceU:
    value: int
    unresolved: int = 0

    @classmethod
    def parse(cls, text: str) -> "ReferenceU":
        m = _U_RE.match(text)
        if not m:
            raise TableError(f"bad unknotting number {text!r}")
        return cls(int(m.group(1)), len(m.group(2)))

    @property
    def lowest(self) -> int:
        return self.value - self.unresolved

    def __str__(self) -> str:
        return f"{self.value}{'?' * self.unresolved}"


@dataclass(frozen=True)
class TableRow:
    crossing_number: int | None
    index: int | None
    dt: DTCode | None = None
    factors: tuple[tuple[int, int, bool], ...] = ()
    reference_det: int | None = None
    reference_sigma: int | None = None
    reference_u: ReferenceU | None = None
    annotations: tuple[str, ...] = ()
    line: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if (self.dt is None) == (not self.factors):
            raise TableError("a row is either prime (DT code) or composite (factors)", self.line)
        if self.dt is not None and self.dt.n != self.crossing_number:
            raise TableError(
                f"DT code has {self.dt.n} entries for {self.crossing_number} crossings", self.line
            )

    @property
    def is_composite(self) -> bool:
        return bool(self.factors)

    @property
    def key(self) -> tuple:
        if self.is_composite:
            return ("#",) + self.factors
        return (self.crossing_number, self.index)

    @property
    def name(self) -> str:
        if self.is_composite:
            return "#".join(f"{'!' if m else ''}{c}_{i}" for c, i, m in self.factors)
        return f"{self.crossing_number}_{self.index}"

    @property
    def generator(self) -> tuple[int, ...] | None:
        """The first ``(a,b,...)`` vector among the annotations."""
        for text in self.annotations:
            m = re.search(r"\(([-\d,\s]+)\)", text)
            if m:
                return tuple(int(x) for x in m.group(1).split(","))
        return None


@dataclass
class KnotTable:
    naming: str
    rows: list[TableRow]

    def __iter__(self):
        return iter(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def lookup(self, crossing_number: int, index: int) -> TableRow:
        for row in self.rows:
            if row.crossing_number == crossing_number and row.index == index and not row.is_composite:
                return row
        raise KeyError(f"{crossing_number}_{index}")

    def by_name(self, name: str) -> TableRow:
        for row in self.rows:
            if row.name == name:
                return row
        raise KeyError(name)


def _ints(tokens, line):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise TableError(f"expected integers, got {' '.join(tokens)!r}", line) from None


def _references(tokens, line):
    """Trailing columns: [u] | det sigma | det sigma u."""
    det = sigma = u = None
    if len(tokens) == 1:
        u = ReferenceU.parse(tokens[0])
    elif len(tokens) in (2, 3):
        det, sigma = _ints(tokens[:2], line)
        if len(tokens) == 3:
            u = ReferenceU.parse(tokens[2])
    elif tokens:
        raise TableError(f"{len(tokens)} trailing columns; expected 0 to 3", line)
    if sigma is not None and sigma % 2:
        raise TableError(f"odd signature {sigma}", line)
    if det is not None and (det <= 0 or det % 2 == 0):
        raise TableError(f"a knot determinant is positive and odd, got {det}", line)
    return det, sigma, u


def _parse_factors(token, line):
    out = []
    for part in token.split("#"):
        m = _FACTOR_RE.match(part)
        if not m:
            raise TableError(f"bad factor {part!r}", line)
        out.append((int(m.group(2)), int(m.group(3)), bool(m.group(1))))
    return tuple(out)


def parse_table(text: str, source: str = "<table>") -> KnotTable:
    naming = None
    rows: list[TableRow] = []
    notes: dict[tuple, list[str]] = {}
    seen: set[tuple] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#!"):
            key, _, value = line[2:].partition(":")
            if key.strip() == "naming":
                naming = value.strip()
                if naming not in NAMINGS:
                    raise TableError(f"unknown naming convention {naming!r}", lineno)
            continue
        if line.startswith("#"):
            continue
        if naming is None:
            raise TableError(f"{source}: missing '#! naming:' header before the first row", lineno)
        head, colon, tail = line.partition(":")
        if colon:
            cn, idx = _ints(head.split(), lineno) if len(head.split()) == 2 else (None, None)
            if cn is None:
                raise TableError("annotation lines read 'n index : text'", lineno)
            notes.setdefault(_rename(naming, (cn, idx)), []).append(tail.strip())
            continue
        toks = line.split()
        if "#" in toks[0]:
            factors = tuple((*_rename(naming, (c, i)), m) for c, i, m in _parse_factors(toks[0], lineno))
            det, sigma, u = _references(toks[1:], lineno)
            row = TableRow(None, None, None, factors, det, sigma, u, line=lineno)
        else:
            if len(toks) < 2:
                raise TableError("a prime row needs crossing number and index", lineno)
            cn, idx = _ints(toks[:2], lineno)
            cn, idx = _rename(naming, (cn, idx))
            if cn < 0 or len(toks) < 2 + cn:
                raise TableError(f"row has fewer than {cn} DT entries", lineno)
            entries = toks[2 : 2 + cn]
            try:
                dt = DTCode(tuple(_ints(entries, lineno)))
            except DiagramError as exc:
                raise TableError(str(exc), lineno) from None
            det, sigma, u = _references(toks[2 + cn :], lineno)
            if u is not None and u.value > cn:
                raise TableError(f"unknotting number {u} exceeds the crossing number; DT arity mismatch?", lineno)
            row = TableRow(cn, idx, dt, (), det, sigma, u, line=lineno)
        if row.key in seen:
            raise TableError(f"duplicate row {row.name}", lineno)
        seen.add(row.key)
        rows.append(row)
    if naming is None:
        raise TableError(f"{source}: missing '#! naming:' header")
    for key, texts in notes.items():
        for k, row in enumerate(rows):
            if row.key == key:
                rows[k] = replace(row, annotations=row.annotations + tuple(texts))
                break
        else:
            raise TableError(f"annotation for {key[0]}_{key[1]} has no row")
    return KnotTable("rolfsen", rows)


def _rename(naming: str, key: tuple[int, int]) -> tuple[int, int]:
    if naming == "kawauchi":
        return _SWAP.get(key, key)
    return key


def parse_table_file(path) -> KnotTable:
    path = Path(path)
    return parse_table(path.read_text(encoding="ascii"), str(path))


def format_table(table: KnotTable) -> str:
    out = [f"#! naming: {table.naming}"]
    for row in table.rows:
        if row.is_composite:
            cols = [row.name]
        else:
            cols = [str(row.crossing_number), str(row.index), str(row.dt)]
        if row.reference_det is not None:
            cols += [str(row.reference_det), str(row.reference_sigma)]
        if row.reference_u is not None:
            cols.append(str(row.reference_u))
        out.append(" ".join(cols))
        for text in row.annotations:
            out.append(f"{row.crossing_number} {row.index} : {text}")
    return "\n".join(out) + "\n"


def bundled_table(name: str = "knots_le10") -> KnotTable:
    """One of the tables shipped with the package: knots_le10, worked_examples, composites."""
    text = resources.files("knotbounds").joinpath("data", f"{name}.txt").read_text(encoding="ascii")
    return parse_table(text, name)


def prime_diagram(row: TableRow) -> Diagram:
    if row.is_composite:
        raise TableError(f"{row.name} is composite")
    return realize_dt(row.dt, name=row.name)


def _factor_diagram(primes: KnotTable, cn: int, idx: int, mirrored: bool) -> Diagram:
    row = primes.lookup(cn, idx)
    d = prime_diagram(row)
    if row.reference_sigma is None:
        raise TableError(f"factor {row.name} needs a reference signature to fix its chirality")
    if row.reference_sigma < 0:
        d = mirror(d)
    return mirror(d) if mirrored else d


def composite_diagram(row: TableRow, primes: KnotTable) -> Diagram:
    """Connected sum of the factors; each factor is the representative with sigma >= 0."""
    if not row.is_composite:
        raise TableError(f"{row.name} is prime")
    parts = [_factor_diagram(primes, *f) for f in row.factors]
    d = parts[0]
    for part in parts[1:]:
        d = connected_sum(d, part)
    return Diagram(d.crossings, d.signs, d.loops, row.name)

