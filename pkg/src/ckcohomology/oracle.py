"""Brute-force second cohomology H^2(g, R) with trivial coefficients.

Works for any finite-dimensional Lie algebra given as a :class:`StructureTable`;
nothing here knows about the Cayley-Klein family except :func:`equation_census`.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Hashable, Iterable, Mapping, Sequence

from .algebra import GeneratorPair, StructureTable, check_jacobi
from .linalg import Echelon, RationalMatrix, rank_and_kernel, solve


class NotALieAlgebra(ValueError):
    """The structure table violates the Jacobi identity."""


@dataclass(frozen=True)
class TwoCochain:
    """Antisymmetric bilinear form on the generators.

    ``values`` is keyed by ``(x, y)`` with ``x`` before ``y`` in ``generators``.
    """

    generators: tuple
    values: Mapping[tuple, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        gens = tuple(self.generators)
        order = {g: i for i, g in enumerate(gens)}
        clean: dict = {}
        for (x, y), v in self.values.items():
            v = Fraction(v)
            if x == y:
                if v:
                    raise ValueError("a two-cochain vanishes on the diagonal")
                continue
            if order[x] > order[y]:
                x, y, v = y, x, -v
            if v:
                clean[(x, y)] = clean.get((x, y), 0) + v
        clean = {k: v for k, v in sorted(clean.items(), key=lambda kv: (order[kv[0][0]], order[kv[0][1]])) if v}
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "values", clean)
        object.__setattr__(self, "_order", order)

    def __call__(self, x, y) -> Fraction:
        if x == y:
            return Fraction(0)
        if self._order[x] < self._order[y]:
            return self.values.get((x, y), Fraction(0))
        return -self.values.get((y, x), Fraction(0))

    def keys(self) -> list[tuple]:
        return list(itertools.combinations(self.generators, 2))

    def to_vector(self) -> list[Fraction]:
        return [self.values.get(k, Fraction(0)) for k in self.keys()]

    @classmethod
    def from_vector(cls, generators: Sequence[Hashable], vec: Sequence[Fraction]) -> "TwoCochain":
        keys = list(itertools.combinations(generators, 2))
        if len(vec) != len(keys):
            raise ValueError("vector length does not match the number of cochain coordinates")
        return cls(tuple(generators), {k: v for k, v in zip(keys, vec) if v})

    def _same_space(self, other: "TwoCochain") -> None:
        if self.generators != other.generators:
            raise ValueError("cochains live on different generator sets")

    def __add__(self, other: "TwoCochain") -> "TwoCochain":
        self._same_space(other)
        out = dict(self.values)
        for k, v in other.values.items():
            out[k] = out.get(k, 0) + v
        return TwoCochain(self.generators, out)

    def __neg__(self) -> "TwoCochain":
        return TwoCochain(self.generators, {k: -v for k, v in self.values.items()})

    def __sub__(self, other: "TwoCochain") -> "TwoCochain":
        return self + (-other)

    def scale(self, c) -> "TwoCochain":
        c = Fraction(c)
        return TwoCochain(self.generators, {k: c * v for k, v in self.values.items()})

    def is_zero(self) -> bool:
        return not self.values


@dataclass(frozen=True)
class OneCochain:
    """Linear form mu on the generators; unset entries read as 0."""

    values: Mapping[Hashable, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "values", {g: Fraction(v) for g, v in self.values.items() if v})

    def __getitem__(self, g) -> Fraction:
        return self.values.get(g, Fraction(0))

    def is_zero(self) -> bool:
        return not self.values


def coboundary(table: StructureTable, mu: OneCochain) -> TwoCochain:
    """(delta mu)(x, y) = mu([x, y])."""
    vals = {}
    for key, comb_ in table.nonzero():
        v = sum((c * mu[g] for g, c in comb_.items()), Fraction(0))
        if v:
            vals[key] = v
    return TwoCochain(table.generators, vals)


def _cochain_index(table: StructureTable) -> dict:
    return {k: i for i, k in enumerate(itertools.combinations(range(table.dim_n), 2))}


def cocycle_equations(table: StructureTable) -> list[tuple[tuple, dict]]:
    """One linear equation in the alpha coordinates per generator triple.

    Returns ``[(triple, {variable_index: coefficient}), ...]`` in triple order;
    rows may be empty (trivially satisfied).
    """
    gens = table.generators
    var = _cochain_index(table)
    idx = {g: i for i, g in enumerate(gens)}
    out = []
    for i, j, k in itertools.combinations(range(len(gens)), 3):
        row: dict = {}
        for u, v, w in ((i, j, k), (j, k, i), (k, i, j)):
            for g, c in table.bracket(gens[u], gens[v]).items():
                r = idx[g]
                if r == w:
                    continue
                col, sign = (var[(r, w)], 1) if r < w else (var[(w, r)], -1)
                row[col] = row.get(col, 0) + sign * c
        out.append(((gens[i], gens[j], gens[k]), {c: x for c, x in row.items() if x}))
    return out


def cocycle_residuals(table: StructureTable, alpha: TwoCochain) -> dict:
    """Nonzero left-hand sides of the cocycle condition, keyed by triple."""
    res = {}
    vec = alpha.to_vector()
    for triple, row in cocycle_equations(table):
        v = sum((c * vec[col] for col, c in row.items()), Fraction(0))
        if v:
            res[triple] = v
    return res


def is_cocycle(table: StructureTable, alpha: TwoCochain) -> bool:
    return not cocycle_residuals(table, alpha)


@dataclass(frozen=True)
class CochainSpace:
    dim: int
    basis: list


def _require_lie(table: StructureTable) -> None:
    bad = check_jacobi(table)
    if bad:
        raise NotALieAlgebra(f"Jacobi identity fails on {len(bad)} triple(s), first {bad[0]}")


def cocycle_space(table: StructureTable, check: bool = True) -> CochainSpace:
    """Z^2: kernel of the cocycle system."""
    if check:
        _require_lie(table)
    nvars = comb(table.dim_n, 2)
    rows = [row for _, row in cocycle_equations(table)]
    rk = rank_and_kernel(RationalMatrix.from_rows(rows, nvars))
    basis = [TwoCochain.from_vector(table.generators, v) for v in rk.kernel_basis]
    return CochainSpace(len(basis), basis)


def coboundary_matrix(table: StructureTable) -> RationalMatrix:
    """Rows: cochain coordinates (x, y); columns: generators."""
    var = _cochain_index(table)
    idx = {g: i for i, g in enumerate(table.generators)}
    entries = {}
    for (x, y), comb_ in table.nonzero():
        r = var[(idx[x], idx[y])]
        for g, c in comb_.items():
            entries[(r, idx[g])] = c
    return RationalMatrix(len(var), table.dim_n, entries)


def coboundary_space(table: StructureTable) -> CochainSpace:
    """B^2 spanned by delta of unit one-cochains, pruned to a basis."""
    ech = Echelon(comb(table.dim_n, 2))
    basis = []
    for g in table.generators:
        beta = coboundary(table, OneCochain({g: 1}))
        vec = beta.to_vector()
        if ech.add({i: v for i, v in enumerate(vec) if v}):
            basis.append(beta)
    return CochainSpace(len(basis), basis)


def h2_dimension(table: StructureTable, check: bool = True) -> int:
    return cocycle_space(table, check=check).dim - coboundary_space(table).dim


def h2_representatives(table: StructureTable) -> list[TwoCochain]:
    """Cocycles completing a basis of B^2 to one of Z^2."""
    return cohomology(table).representatives


def coboundary_preimage(table: StructureTable, alpha: TwoCochain) -> OneCochain | None:
    """mu with delta mu = alpha, or None when alpha is not a coboundary."""
    if alpha.generators != table.generators:
        raise ValueError("cochain and table use different generators")
    x = solve(coboundary_matrix(table), alpha.to_vector())
    if x is None:
        return None
    return OneCochain({g: v for g, v in zip(table.generators, x) if v})


def is_coboundary(table: StructureTable, alpha: TwoCochain) -> bool:
    return coboundary_preimage(table, alpha) is not None


@dataclass(frozen=True)
class CohomologyReport:
    z2: int
    b2: int
    h2: int
    representatives: list


def cohomology(table: StructureTable) -> CohomologyReport:
    z2 = cocycle_space(table)
    b2 = coboundary_space(table)
    # greedy augmentation: B^2 first, then Z^2 basis in key order
    ech = Echelon(comb(table.dim_n, 2))
    for beta in b2.basis:
        ech.add(dict(enumerate(beta.to_vector())))
    reps = [a for a in z2.basis if ech.add(dict(enumerate(a.to_vector())))]
    return CohomologyReport(z2.dim, b2.dim, z2.dim - b2.dim, reps)


def equation_census(table: StructureTable) -> Counter:
    """Count generator triples by the number of distinct Omega indices involved."""
    census: Counter = Counter()
    for triple in itertools.combinations(table.generators, 3):
        if not all(isinstance(g, GeneratorPair) for g in triple):
            raise TypeError("census needs Omega_ab generators")
        census[len({i for g in triple for i in g.indices()})] += 1
    return census


def expected_census(n: int) -> dict[int, int]:
    """1/16/30/15 split of the C(dim, 3) triples for so(N+1)-shaped index sets."""
    m = n + 1
    return {k: w * comb(m, k) for k, w in ((3, 1), (4, 16), (5, 30), (6, 15)) if comb(m, k)}
