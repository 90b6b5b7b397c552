"""Cayley-Klein quasi-orthogonal algebras so_{w1..wN}(N+1).

Generators are labelled by ordered index pairs ``(a, b)`` with ``0 <= a < b <= N``.
All arithmetic is exact (:class:`fractions.Fraction`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

Rational = Fraction
LinComb = dict  # label -> Fraction, zero coefficients never stored

MIN_N = 2


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, float):
        raise TypeError(f"floating point value {value!r} is not exact; pass a Fraction or 'p/q'")
    if isinstance(value, str):
        value = value.strip()
        if not value:
            raise ValueError("empty rational literal")
    return Fraction(value)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class OmegaSequence:
    """The contraction constants (w_1, ..., w_N)."""

    omegas: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(to_fraction(w) for w in self.omegas)
        if len(values) < MIN_N:
            raise ValueError(f"need at least {MIN_N} constants, got {len(values)}")
        object.__setattr__(self, "omegas", values)

    @classmethod
    def of(cls, *omegas) -> "OmegaSequence":
        return cls(tuple(omegas))

    @classmethod
    def parse(cls, text: str) -> "OmegaSequence":
        """Parse ``"0,-1,1,1"`` or ``"1/2, -3"``."""
        parts = [p for p in text.replace(" ", "").split(",")]
        if any(p == "" for p in parts):
            raise ValueError(f"malformed omega list: {text!r}")
        try:
            return cls(tuple(to_fraction(p) for p in parts))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed omega list: {text!r}") from exc

    @property
    def n(self) -> int:
        return len(self.omegas)

    def __getitem__(self, i: int) -> Fraction:
        """1-based access, ``seq[i] == w_i``."""
        if not 1 <= i <= self.n:
            raise IndexError(f"omega index {i} outside 1..{self.n}")
        return self.omegas[i - 1]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.omegas)

    def __len__(self) -> int:
        return self.n

    def standardized(self) -> "OmegaSequence":
        return OmegaSequence(tuple(Fraction(_sign(w)) for w in self.omegas))

    def is_standard(self) -> bool:
        return all(w in (-1, 0, 1) for w in self.omegas)

    def zero_pattern(self) -> tuple[bool, ...]:
        return tuple(w == 0 for w in self.omegas)

    def generators(self) -> list["GeneratorPair"]:
        return all_pairs(self.n)

    def __str__(self) -> str:
        return ",".join(str(w) for w in self.omegas)


@dataclass(frozen=True, order=True)
class GeneratorPair:
    """Index pair (a, b), a < b, labelling the generator Omega_ab."""

    a: int
    b: int

    def __post_init__(self):
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise TypeError("generator indices must be integers")
        if self.a < 0 or self.a >= self.b:
            raise ValueError(f"invalid generator pair ({self.a},{self.b}): need 0 <= a < b")

    def check(self, n: int) -> None:
        if self.b > n:
            raise ValueError(f"generator ({self.a},{self.b}) out of range for N={n}")

    def indices(self) -> tuple[int, int]:
        return (self.a, self.b)

    def __str__(self) -> str:
        return f"Omega{self.a}{self.b}" if self.b < 10 else f"Omega{self.a},{self.b}"


def pair(a: int, b: int) -> GeneratorPair:
    return GeneratorPair(a, b)


def all_pairs(n: int) -> list[GeneratorPair]:
    """All (N+1)N/2 generators in lexicographic order."""
    return [GeneratorPair(a, b) for a in range(n + 1) for b in range(a + 1, n + 1)]


def omega_product(seq: OmegaSequence, a: int, b: int) -> Fraction:
    """w_{ab} = w_{a+1} ... w_b, with w_{aa} = 1."""
    if not (0 <= a <= b <= seq.n):
        raise ValueError(f"need 0 <= a <= b <= {seq.n}, got a={a}, b={b}")
    out = Fraction(1)
    for i in range(a + 1, b + 1):
        out *= seq[i]
    return out


def bracket_shape(p: GeneratorPair, q: GeneratorPair) -> tuple[int, tuple[int, int], GeneratorPair] | None:
    """Structural form of [Omega_p, Omega_q] for p < q.

    Returns ``(sign, (lo, hi), target)`` meaning ``sign * w_{lo,hi} * Omega_target``,
    or None when the bracket vanishes for every choice of constants.
    """
    if not p < q:
        raise ValueError("bracket_shape expects p < q")
    (a, b), (c, d) = p.indices(), q.indices()
    if a == c:  # [Omega_ab, Omega_ad] = w_ab Omega_bd
        return 1, (a, b), GeneratorPair(b, d)
    if b == d:  # [Omega_ab, Omega_cb] = w_cb Omega_ac, a < c < b
        return 1, (c, b), GeneratorPair(a, c)
    if b == c:  # [Omega_ab, Omega_bd] = -Omega_ad
        return -1, (a, a), GeneratorPair(a, d)
    return None


def bracket(seq: OmegaSequence, p: GeneratorPair, q: GeneratorPair) -> LinComb:
    """[Omega_p, Omega_q] as a sparse linear combination of generators."""
    p.check(seq.n)
    q.check(seq.n)
    if p == q:
        return {}
    if q < p:
        return {k: -v for k, v in bracket(seq, q, p).items()}
    shape = bracket_shape(p, q)
    if shape is None:
        return {}
    sign, (lo, hi), target = shape
    coeff = sign * omega_product(seq, lo, hi)
    return {target: coeff} if coeff else {}


def _canonical(generators: Sequence[Hashable]) -> dict:
    return {g: i for i, g in enumerate(generators)}


@dataclass(frozen=True)
class StructureTable:
    """Sparse structure constants over an ordered list of generator labels.

    Only keys ``(x, y)`` with ``x`` before ``y`` in ``generators`` are stored;
    ``[y, x] = -[x, y]``.
    """

    generators: tuple
    entries: Mapping[tuple, Mapping[Hashable, Fraction]] = field(default_factory=dict)

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        order = _canonical(gens)
        if len(order) != len(gens):
            raise ValueError("duplicate generator labels")
        clean = {}
        for (x, y), comb in self.entries.items():
            if x not in order or y not in order:
                raise ValueError(f"unknown generator in key ({x}, {y})")
            terms = {g: Fraction(c) for g, c in comb.items() if c != 0}
            for g in terms:
                if g not in order:
                    raise ValueError(f"unknown generator {g} in bracket value")
            if order[x] == order[y]:
                if terms:
                    raise ValueError(f"[{x}, {x}] must vanish")
                continue
            if order[x] > order[y]:
                x, y = y, x
                terms = {g: -c for g, c in terms.items()}
            if terms:
                clean[(x, y)] = terms
        object.__setattr__(self, "entries", dict(sorted(clean.items(), key=lambda kv: (order[kv[0][0]], order[kv[0][1]]))))
        object.__setattr__(self, "_order", order)

    @property
    def dim_n(self) -> int:
        return len(self.generators)

    def index(self, g) -> int:
        return self._order[g]

    def bracket(self, x, y) -> LinComb:
        if self._order[x] <= self._order[y]:
            return dict(self.entries.get((x, y), {}))
        return {g: -c for g, c in self.entries.get((y, x), {}).items()}

    def apply(self, x: LinComb, y: LinComb) -> LinComb:
        """Bilinear extension of the bracket to linear combinations."""
        out: dict = {}
        for gx, cx in x.items():
            for gy, cy in y.items():
                for g, c in self.bracket(gx, gy).items():
                    out[g] = out.get(g, 0) + cx * cy * c
        return {g: c for g, c in out.items() if c != 0}

    def nonzero(self) -> Iterator[tuple[tuple, LinComb]]:
        return iter(self.entries.items())

    def without(self, labels: Iterable) -> "StructureTable":
        """Drop generators (and every term mentioning them)."""
        drop = set(labels)
        gens = tuple(g for g in self.generators if g not in drop)
        entries = {}
        for (x, y), comb in self.entries.items():
            if x in drop or y in drop:
                continue
            terms = {g: c for g, c in comb.items() if g not in drop}
            if terms:
                entries[(x, y)] = terms
        return StructureTable(gens, entries)


def structure_table(seq: OmegaSequence) -> StructureTable:
    gens = all_pairs(seq.n)
    entries = {}
    for p, q in itertools.combinations(gens, 2):
        comb = bracket(seq, p, q)
        if comb:
            entries[(p, q)] = comb
    return StructureTable(tuple(gens), entries)


def abelian_table(generators: Sequence[Hashable]) -> StructureTable:
    return StructureTable(tuple(generators), {})


def jacobi_residual(table: StructureTable, x, y, z) -> LinComb:
    res: dict = {}
    for u, v, w in ((x, y, z), (y, z, x), (z, x, y)):
        for g, c in table.apply(table.bracket(u, v), {w: Fraction(1)}).items():
            res[g] = res.get(g, 0) + c
    return {g: c for g, c in res.items() if c != 0}


def check_jacobi(table: StructureTable) -> list[tuple]:
    """Every generator triple whose Jacobi residual is nonzero."""
    return [t for t in itertools.combinations(table.generators, 3) if jacobi_residual(table, *t)]


Matrix = list  # list of rows of Fractions


def vector_representation(seq: OmegaSequence, p: GeneratorPair) -> Matrix:
    """(N+1)x(N+1) matrix -w_ab e_ab + e_ba."""
    p.check(seq.n)
    size = seq.n + 1
    m = [[Fraction(0)] * size for _ in range(size)]
    m[p.a][p.b] = -omega_product(seq, p.a, p.b)
    m[p.b][p.a] = Fraction(1)
    return m


def matmul(x: Matrix, y: Matrix) -> Matrix:
    return [[sum((x[i][k] * y[k][j] for k in range(len(y))), Fraction(0)) for j in range(len(y[0]))] for i in range(len(x))]


def commutator(x: Matrix, y: Matrix) -> Matrix:
    xy, yx = matmul(x, y), matmul(y, x)
    return [[xy[i][j] - yx[i][j] for j in range(len(xy[0]))] for i in range(len(xy))]


def represent(seq: OmegaSequence, comb: LinComb) -> Matrix:
    size = seq.n + 1
    out = [[Fraction(0)] * size for _ in range(size)]
    for g, c in comb.items():
        m = vector_representation(seq, g)
        for i in range(size):
            for j in range(size):
                out[i][j] += c * m[i][j]
    return out


def reverse(seq: OmegaSequence) -> OmegaSequence:
    return OmegaSequence(tuple(reversed(seq.omegas)))


@dataclass(frozen=True)
class SemidirectSplit:
    position: int
    abelian_t: tuple[GeneratorPair, ...]
    left_sub: tuple[GeneratorPair, ...]
    right_sub: tuple[GeneratorPair, ...]


def semidirect_split(seq: OmegaSequence, a: int) -> SemidirectSplit:
    """t + (left (+) right) decomposition attached to a vanishing w_a."""
    if not 1 <= a <= seq.n:
        raise ValueError(f"split position {a} outside 1..{seq.n}")
    if seq[a] != 0:
        raise ValueError(f"w_{a} = {seq[a]} is nonzero; no semidirect split there")
    t, left, right = [], [], []
    for g in all_pairs(seq.n):
        if g.a < a <= g.b:
            t.append(g)
        elif g.b < a:
            left.append(g)
        else:
            right.append(g)
    return SemidirectSplit(a, tuple(t), tuple(left), tuple(right))


# -- naming -----------------------------------------------------------------

def _signature(omegas: Sequence[Fraction]) -> tuple[int, int]:
    """(p, q) of diag(1, w1, w1 w2, ...); all entries assumed nonzero."""
    diag, acc = [Fraction(1)], Fraction(1)
    for w in omegas:
        acc *= w
        diag.append(acc)
    p = sum(1 for x in diag if x > 0)
    return p, len(diag) - p


def _so(p: int, q: int) -> str:
    p, q = max(p, q), min(p, q)
    return f"so({p})" if q == 0 else f"so({p},{q})"


def _run_length(values: Sequence[Fraction]) -> int:
    k = 0
    for w in values:
        if w != 0:
            break
        k += 1
    return k


def identify(seq: OmegaSequence, unicode: bool = False) -> str | None:
    """Registry lookup of the algebra's conventional name, or ``None``.

    Names take the form ``"<structure> (<alias>)"`` when a physical alias is known,
    e.g. ``"iiso(2) (2+1 Galilei)"``.
    """
    if not seq.is_standard():
        raise ValueError("identify() expects a standardized sequence (entries in -1, 0, 1)")
    om = seq.omegas
    n = seq.n
    prime = "′" if unicode else "'"
    plus = "⊕" if unicode else "+"

    if all(w == 0 for w in om):
        name = "i" * n + "so(1)"
        alias = "flag, 1+1 Galilei" if n == 2 else "flag"
        return f"{name} ({alias})"

    lead = _run_length(om)
    trail = _run_length(om[::-1])
    core = om[lead:n - trail]
    zeros_inside = [i for i, w in enumerate(core) if w == 0]

    if not zeros_inside:
        p, q = _signature(core)
        base = _so(p, q)
        name = "i" * lead + ("i" + prime) * trail + base
        space = p + q  # spatial dimension for the kinematical aliases
        alias = None
        if lead + trail == 1:
            alias = "Euclidean" if q == 0 else (f"{space - 1}+1 Poincare" if min(p, q) == 1 else None)
        elif lead + trail == 2 and q == 0:
            alias = f"{space}+1 Carroll" if lead == 1 else f"{space}+1 Galilei"
        return f"{name} ({alias})" if alias else name

    if lead == 0 and trail == 0 and len(zeros_inside) == 1:
        a = zeros_inside[0] + 1
        left = _so(*_signature(om[:a - 1]))
        right = _so(*_signature(om[a:]))
        name = f"t_{a * (n + 1 - a)}({left}{plus}{right})"
        alias = _newton_hooke(om)
        return f"{name} ({alias})" if alias else name
    return None


def _newton_hooke(om: Sequence[Fraction]) -> str | None:
    n = len(om)
    if n < 3:
        return None
    for cand in (tuple(om), tuple(reversed(om))):
        if cand[1] == 0 and cand[0] != 0 and all(w == 1 for w in cand[2:]):
            kind = "oscillating" if cand[0] > 0 else "expanding"
            return f"{n - 1}+1 {kind} Newton-Hooke"
    return None
