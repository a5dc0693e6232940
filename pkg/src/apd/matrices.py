"""Exact square matrices and the generators for each studied family.

All formulas use 1-based indices ``i, j`` as written in the literature;
storage is 0-based and the conversion happens in one place
(:meth:`SquareMatrix.from_rule`).
"""
from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Optional, Sequence, Union

from .errors import DimensionMismatch, DomainError, ParseError, ZeroBase
from .numeric import fmt_exact, to_exact


class Family(str, enum.Enum):
    IDENTITY = "identity"
    CIRCULANT = "circulant"
    SHIFTED = "shifted"
    HILBERT = "hilbert"
    MULT = "mult"
    VANDERMONDE = "vandermonde"
    VANDERMONDE_NODES = "vandermonde-nodes"
    PASCAL = "pascal"


# d may be the literal string "n": the shift then tracks the order (d = n).
ShiftParam = Union[int, str]


@dataclass(frozen=True)
class FamilySpec:
    """A matrix family together with the parameters it needs.

    ``d`` and ``r`` are required for ``SHIFTED``, ``r`` for ``MULT`` and
    ``nodes`` for ``VANDERMONDE_NODES``; every other family takes none.
    """

    family: Family
    d: Optional[ShiftParam] = None
    r: Optional[int] = None
    nodes: Optional[tuple] = None

    def __post_init__(self):
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        needs_d = fam is Family.SHIFTED
        needs_r = fam in (Family.SHIFTED, Family.MULT)
        needs_nodes = fam is Family.VANDERMONDE_NODES
        if (self.d is not None) != needs_d:
            raise DomainError(f"family {fam.value} {'needs' if needs_d else 'takes no'} d")
        if (self.r is not None) != needs_r:
            raise DomainError(f"family {fam.value} {'needs' if needs_r else 'takes no'} r")
        if (self.nodes is not None) != needs_nodes:
            raise DomainError(f"family {fam.value} {'needs' if needs_nodes else 'takes no'} nodes")
        if isinstance(self.d, str) and self.d != "n":
            raise DomainError(f"d must be an integer or 'n', got {self.d!r}")
        if self.nodes is not None:
            object.__setattr__(self, "nodes", tuple(to_exact(x) for x in self.nodes))

    def shift_for(self, n: int) -> int:
        return n if self.d == "n" else int(self.d)

    def build(self, n: int) -> "SquareMatrix":
        fam = self.family
        if fam is Family.IDENTITY:
            return identity(n)
        if fam is Family.CIRCULANT:
            return circulant(n)
        if fam is Family.SHIFTED:
            return shifted_power_lattice(n, self.shift_for(n), self.r, _spec=self)
        if fam is Family.HILBERT:
            return hilbert(n)
        if fam is Family.MULT:
            return multiplication_table(n, self.r)
        if fam is Family.VANDERMONDE:
            return vandermonde(n)
        if fam is Family.VANDERMONDE_NODES:
            if len(self.nodes) != n:
                raise DomainError(f"{len(self.nodes)} nodes given for order {n}")
            return vandermonde_nodes(self.nodes)
        if fam is Family.PASCAL:
            return pascal(n)
        raise AssertionError(fam)

    @property
    def label(self) -> str:
        parts = [self.family.value]
        if self.d is not None:
            parts.append(f"d={self.d}")
        if self.r is not None:
            parts.append(f"r={self.r}")
        if self.nodes is not None:
            parts.append("nodes=" + ",".join(fmt_exact(x) for x in self.nodes))
        return " ".join(parts)

    def to_json(self) -> dict:
        out = {"family": self.family.value}
        if self.d is not None:
            out["d"] = self.d
        if self.r is not None:
            out["r"] = self.r
        if self.nodes is not None:
            out["nodes"] = [fmt_exact(x) for x in self.nodes]
        return out


@dataclass(frozen=True)
class SquareMatrix:
    """Dense n-by-n grid of Fractions.

    ``A[i, j]`` uses 1-based indices; ``rows`` is the raw 0-based storage.
    """

    rows: tuple
    provenance: Union[FamilySpec, str] = field(default="custom", compare=False)

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.rows)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise DimensionMismatch("matrix must be a non-empty square grid")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rule(cls, n: int, rule: Callable[[int, int], object], provenance="custom"):
        if n < 1:
            raise DomainError(f"matrix order must be >= 1, got {n}")
        return cls(
            tuple(tuple(rule(i, j) for j in range(1, n + 1)) for i in range(1, n + 1)),
            provenance,
        )

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"index ({i}, {j}) outside 1..{self.n}")
        return self.rows[i - 1][j - 1]

    def row(self, i: int) -> tuple:
        return self.rows[i - 1]

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for row in self.rows for x in row)

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def common_denominator(self) -> int:
        return math.lcm(*(x.denominator for row in self.rows for x in row))

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix(tuple(zip(*self.rows)))

    def swap_rows(self, a: int, b: int) -> "SquareMatrix":
        rows = list(self.rows)
        rows[a - 1], rows[b - 1] = rows[b - 1], rows[a - 1]
        return SquareMatrix(tuple(rows))

    def map(self, fn: Callable[[Fraction], object]) -> "SquareMatrix":
        return SquareMatrix(tuple(tuple(fn(x) for x in row) for row in self.rows))

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        if other.n != self.n:
            raise DimensionMismatch(f"orders {self.n} and {other.n} differ")
        cols = list(zip(*other.rows))
        return SquareMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows)
        )

    def to_strings(self) -> list:
        return [[fmt_exact(x) for x in row] for row in self.rows]


def identity(n: int) -> SquareMatrix:
    return SquareMatrix.from_rule(n, lambda i, j: int(i == j), FamilySpec(Family.IDENTITY))


def circulant(n: int) -> SquareMatrix:
    """First row ``1..n``, each later row shifted one place to the left."""
    return SquareMatrix.from_rule(
        n, lambda i, j: (j + i - 2) % n + 1, FamilySpec(Family.CIRCULANT)
    )


def shifted_power_lattice(n: int, d: int, r: int, _spec: Optional[FamilySpec] = None) -> SquareMatrix:
    """Entries ``(j + (i-1)*d) ** r``; negative ``r`` gives exact reciprocals."""

    def rule(i, j):
        base = j + (i - 1) * d
        if r < 0 and base == 0:
            raise ZeroBase(f"entry ({i}, {j}) has base 0 and r = {r}")
        return Fraction(base) ** r

    return SquareMatrix.from_rule(n, rule, _spec or FamilySpec(Family.SHIFTED, d=d, r=r))


def hilbert(n: int) -> SquareMatrix:
    return SquareMatrix.from_rule(n, lambda i, j: Fraction(1, i + j - 1), FamilySpec(Family.HILBERT))


def multiplication_table(n: int, r: int = 1) -> SquareMatrix:
    return SquareMatrix.from_rule(
        n, lambda i, j: Fraction(i * j) ** r, FamilySpec(Family.MULT, r=r)
    )


def vandermonde(n: int) -> SquareMatrix:
    """Standard Vandermonde matrix on the nodes ``1..n``: entry ``i ** (j-1)``."""
    return SquareMatrix.from_rule(n, lambda i, j: i ** (j - 1), FamilySpec(Family.VANDERMONDE))


def vandermonde_nodes(nodes: Sequence) -> SquareMatrix:
    xs = [to_exact(x) for x in nodes]
    spec = FamilySpec(Family.VANDERMONDE_NODES, nodes=tuple(xs))
    return SquareMatrix.from_rule(len(xs), lambda i, j: xs[i - 1] ** (j - 1), spec)


def pascal(n: int) -> SquareMatrix:
    return SquareMatrix.from_rule(
        n, lambda i, j: math.comb(i + j - 2, i - 1), FamilySpec(Family.PASCAL)
    )


# -- file formats -----------------------------------------------------------

def dumps_matrix(matrix: SquareMatrix, fmt: str = "json") -> str:
    cells = matrix.to_strings()
    if fmt == "json":
        return json.dumps({"n": matrix.n, "entries": cells}) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(cells)
        return buf.getvalue()
    raise ValueError(f"unknown matrix format {fmt!r}")


def save_matrix(matrix: SquareMatrix, path, fmt: Optional[str] = None) -> None:
    path = Path(path)
    fmt = fmt or ("csv" if path.suffix.lower() == ".csv" else "json")
    path.write_text(dumps_matrix(matrix, fmt))


def _grid_to_matrix(grid, n=None) -> SquareMatrix:
    if not isinstance(grid, list) or not grid or not all(isinstance(row, list) for row in grid):
        raise ParseError("entries must be a non-empty list of rows")
    size = len(grid)
    if n is not None and n != size:
        raise ParseError(f"declared n={n} but {size} rows given")
    if any(len(row) != size for row in grid):
        raise ParseError("grid is not square")
    # ValueError from to_exact propagates for bad cells
    return SquareMatrix(tuple(tuple(to_exact(c) for c in row) for row in grid))


def loads_matrix(text: str, fmt: str = "json") -> SquareMatrix:
    if fmt == "json":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
        if not isinstance(doc, dict) or "entries" not in doc:
            raise ParseError('matrix JSON needs an "entries" key')
        n = doc.get("n")
        if n is not None and (not isinstance(n, int) or isinstance(n, bool)):
            raise ParseError('"n" must be an integer')
        return _grid_to_matrix(doc["entries"], n)
    if fmt == "csv":
        try:
            grid = [row for row in csv.reader(io.StringIO(text)) if row]
        except csv.Error as exc:
            raise ParseError(f"invalid CSV: {exc}") from None
        return _grid_to_matrix(grid)
    raise ValueError(f"unknown matrix format {fmt!r}")


def load_matrix(path) -> SquareMatrix:
    """Read a matrix from a ``.json`` or ``.csv`` file (by suffix)."""
    path = Path(path)
    fmt = "csv" if path.suffix.lower() == ".csv" else "json"
    return loads_matrix(path.read_text(), fmt)
