"""Exact sparse linear algebra over Q.

Rows are scaled to integers up front and eliminated fraction-free: the update
``r <- p_piv * r - r_piv * p`` keeps everything integral, and dividing each row
by its content keeps the entries small.  Fractions only reappear when a kernel
or solution vector is read off the reduced rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

IntRow = dict  # column -> nonzero int


def _integral(row: Mapping[int, Fraction]) -> IntRow:
    items = [(c, Fraction(v)) for c, v in row.items() if v != 0]
    if not items:
        return {}
    den = lcm(*(v.denominator for _, v in items))
    return _primitive({c: int(v * den) for c, v in items})


def _primitive(row: IntRow) -> IntRow:
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {c: v // g for c, v in row.items()}
    return row


def _eliminate(row: IntRow, pivot: IntRow, col: int) -> IntRow:
    """Clear ``col`` from ``row`` using ``pivot`` (whose pivot column is ``col``)."""
    a, b = pivot[col], row[col]
    g = gcd(a, b)
    a, b = a // g, b // g
    out = {c: a * v for c, v in row.items()}
    for c, v in pivot.items():
        nv = out.get(c, 0) - b * v
        if nv:
            out[c] = nv
        else:
            out.pop(c, None)
    return _primitive(out)


class Echelon:
    """Incrementally maintained reduced row echelon form (rows up to scale)."""

    def __init__(self, cols: int):
        self.cols = cols
        self.pivots: dict[int, IntRow] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: IntRow) -> IntRow:
        for c in sorted(set(row) & self.pivots.keys()):
            if c in row:
                row = _eliminate(row, self.pivots[c], c)
        return row

    def add(self, row: Mapping[int, Fraction]) -> bool:
        """Insert a row; True if it raised the rank."""
        r = self.reduce(_integral(row))
        if not r:
            return False
        col = min(r)
        for pc, prow in list(self.pivots.items()):
            if col in prow:
                self.pivots[pc] = _eliminate(prow, r, col)
        self.pivots[col] = r
        return True

    def kernel(self) -> list[list[Fraction]]:
        free = [c for c in range(self.cols) if c not in self.pivots]
        basis = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for pc, prow in self.pivots.items():
                if f in prow:
                    v[pc] = Fraction(-prow[f], prow[pc])
            basis.append(v)
        return basis


@dataclass
class RationalMatrix:
    """Sparse rows x cols matrix with Fraction entries."""

    rows: int
    cols: int
    entries: dict = field(default_factory=dict)  # (i, j) -> Fraction

    def __post_init__(self):
        clean = {}
        for (i, j), v in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise IndexError(f"entry ({i},{j}) outside {self.rows}x{self.cols}")
            v = Fraction(v)
            if v:
                clean[(i, j)] = v
        self.entries = clean

    @classmethod
    def from_dense(cls, data: Sequence[Sequence]) -> "RationalMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return cls(rows, cols, {(i, j): v for i, r in enumerate(data) for j, v in enumerate(r) if v})

    @classmethod
    def from_rows(cls, rows: Sequence[Mapping[int, Fraction]], cols: int) -> "RationalMatrix":
        return cls(len(rows), cols, {(i, j): v for i, r in enumerate(rows) for j, v in r.items()})

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    def row_dicts(self) -> list[dict]:
        out = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def to_dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def matvec(self, v: Sequence[Fraction]) -> list[Fraction]:
        out = [Fraction(0)] * self.rows
        for (i, j), a in self.entries.items():
            out[i] += a * v[j]
        return out

    def echelon(self) -> Echelon:
        ech = Echelon(self.cols)
        for r in self.row_dicts():
            ech.add(r)
        return ech

    def rank(self) -> int:
        return self.echelon().rank


@dataclass(frozen=True)
class RankKernel:
    rank: int
    kernel_basis: list


def rank_and_kernel(m: RationalMatrix) -> RankKernel:
    ech = m.echelon()
    return RankKernel(ech.rank, ech.kernel())


def solve(m: RationalMatrix, rhs: Sequence[Fraction]) -> list[Fraction] | None:
    """One exact solution of ``m x = rhs`` (free variables set to 0), or None."""
    if len(rhs) != m.rows:
        raise ValueError("right-hand side length does not match row count")
    aug = m.cols
    ech = Echelon(m.cols + 1)
    for i, r in enumerate(m.row_dicts()):
        if rhs[i]:
            r[aug] = Fraction(rhs[i])
        ech.add(r)
    if aug in ech.pivots:
        return None
    x = [Fraction(0)] * m.cols
    for pc, prow in ech.pivots.items():
        x[pc] = Fraction(prow.get(aug, 0), prow[pc])
    return x


def span_rank(vectors: Iterable[Sequence[Fraction]], dim: int) -> int:
    ech = Echelon(dim)
    for v in vectors:
        ech.add({i: x for i, x in enumerate(v) if x})
    return ech.rank
