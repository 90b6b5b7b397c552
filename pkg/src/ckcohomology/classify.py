"""Closed-form description of the central extensions of CK algebras.

Every extension is parameterized by basic coefficients:

* ``tau_ac``      = alpha(Omega_{a,a+1}, Omega_{a+1,c}),   c >= a+2  (always a coboundary)
* ``alpha^F_{p,p+1}`` = alpha(Omega_{p-1,p}, Omega_{p-1,p+1}),   1 <= p <= N-1
* ``alpha^L_{p,p+1}`` = alpha(Omega_{p,p+2}, Omega_{p+1,p+2}),   0 <= p <= N-2
* ``beta_ij``     = alpha(Omega_{i-1,i}, Omega_{j-1,j}),   1 <= i, j >= i+2, j <= N

and every other cochain coordinate is a fixed multiple (an omega product) of one
of them; :func:`cochain_terms` lists those multiples.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .algebra import GeneratorPair, OmegaSequence, all_pairs, omega_product, structure_table
from .oracle import TwoCochain, h2_dimension

_SUBSCRIPTS = str.maketrans("0123456789,", "₀₁₂₃₄₅₆₇₈₉‚")


def _sub(i: int, j: int, unicode: bool) -> str:
    text = f"{i}{j}" if max(i, j) < 10 else f"{i},{j}"
    return text.translate(_SUBSCRIPTS) if unicode else text


class Kind(enum.Enum):
    TAU = "tau"
    ALPHA_F = "alpha^F"
    ALPHA_L = "alpha^L"
    BETA = "beta"

    @property
    def is_type_ii(self) -> bool:
        return self in (Kind.ALPHA_F, Kind.ALPHA_L)


_UNICODE_KIND = {Kind.TAU: "τ", Kind.ALPHA_F: "α^F", Kind.ALPHA_L: "α^L", Kind.BETA: "β"}


@dataclass(frozen=True)
class BasicCoefficient:
    """One basic extension coefficient; ``(i, j)`` are its printed subscripts."""

    kind: Kind
    i: int
    j: int

    def __post_init__(self):
        i, j = self.i, self.j
        if self.kind is Kind.TAU:
            ok = i >= 0 and j >= i + 2
        elif self.kind.is_type_ii:
            ok = j == i + 1 and i >= (1 if self.kind is Kind.ALPHA_F else 0)
        else:
            ok = i >= 1 and j >= i + 2
        if not ok:
            raise ValueError(f"invalid indices {i},{j} for {self.kind.value}")

    def sort_key(self) -> tuple:
        # alpha^L_01, then pairs by position (F before L), then beta lexicographic
        if self.kind is Kind.TAU:
            return (0, self.i, self.j, 0)
        if self.kind.is_type_ii:
            return (1, self.i, 0 if self.kind is Kind.ALPHA_F else 1, 0)
        return (2, self.i, self.j, 0)

    def __lt__(self, other: "BasicCoefficient") -> bool:
        return self.sort_key() < other.sort_key()

    def key(self) -> tuple[GeneratorPair, GeneratorPair]:
        """The cochain coordinate this coefficient sits on."""
        i, j = self.i, self.j
        if self.kind is Kind.TAU:
            return GeneratorPair(i, i + 1), GeneratorPair(i + 1, j)
        if self.kind is Kind.ALPHA_F:
            return GeneratorPair(i - 1, i), GeneratorPair(i - 1, i + 1)
        if self.kind is Kind.ALPHA_L:
            return GeneratorPair(i, i + 2), GeneratorPair(i + 1, i + 2)
        return GeneratorPair(i - 1, i), GeneratorPair(j - 1, j)

    def fits(self, n: int) -> bool:
        return max(g.b for g in self.key()) <= n

    def name(self, unicode: bool = False) -> str:
        kind = _UNICODE_KIND[self.kind] if unicode else self.kind.value
        sep = "" if unicode else "_"
        return f"{kind}{sep}{_sub(self.i, self.j, unicode)}"

    @classmethod
    def parse(cls, text: str) -> "BasicCoefficient":
        text = text.strip()
        for kind in Kind:
            prefix = kind.value + "_"
            if text.startswith(prefix):
                idx = text[len(prefix):]
                i, j = (int(x) for x in idx.split(",")) if "," in idx else (int(idx[0]), int(idx[1:]))
                return cls(kind, i, j)
        raise ValueError(f"unrecognized coefficient name {text!r}")

    def __str__(self) -> str:
        return self.name()


def tau(a: int, c: int) -> BasicCoefficient:
    return BasicCoefficient(Kind.TAU, a, c)


def alpha_f(p: int) -> BasicCoefficient:
    """alpha^F_{p,p+1}."""
    return BasicCoefficient(Kind.ALPHA_F, p, p + 1)


def alpha_l(p: int) -> BasicCoefficient:
    """alpha^L_{p,p+1}."""
    return BasicCoefficient(Kind.ALPHA_L, p, p + 1)


def beta(i: int, j: int) -> BasicCoefficient:
    return BasicCoefficient(Kind.BETA, i, j)


def _require_n(n: int) -> None:
    if n < 2:
        raise ValueError(f"the classification needs N >= 2, got {n}")


def enumerate_basic(n: int, include_tau: bool = True) -> list[BasicCoefficient]:
    _require_n(n)
    out = []
    if include_tau:
        out += [tau(a, c) for a in range(n - 1) for c in range(a + 2, n + 1)]
    out.append(alpha_l(0))
    for p in range(1, n - 1):
        out += [alpha_f(p), alpha_l(p)]
    out.append(alpha_f(n - 1))
    out += [beta(b + 1, d + 1) for b in range(n - 2) for d in range(b + 2, n)]
    return out


@dataclass(frozen=True)
class ExtensionAssignment:
    """Values of (some of) the basic coefficients; absent ones are zero."""

    values: Mapping[BasicCoefficient, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {c: Fraction(v) for c, v in self.values.items() if v}
        object.__setattr__(self, "values", dict(sorted(clean.items(), key=lambda kv: kv[0].sort_key())))

    def __getitem__(self, c: BasicCoefficient) -> Fraction:
        return self.values.get(c, Fraction(0))

    def support(self) -> list[BasicCoefficient]:
        return list(self.values)

    def without_tau(self) -> "ExtensionAssignment":
        return ExtensionAssignment({c: v for c, v in self.values.items() if c.kind is not Kind.TAU})

    @classmethod
    def unit(cls, coeffs: Iterable[BasicCoefficient]) -> "ExtensionAssignment":
        return cls({c: Fraction(1) for c in coeffs})


# -- derived coefficients -----------------------------------------------------

@dataclass(frozen=True)
class Term:
    """``sign * w_{lo,hi} * coefficient``."""

    sign: int
    lo: int
    hi: int
    coefficient: BasicCoefficient

    def factor(self, seq: OmegaSequence) -> Fraction:
        return self.sign * omega_product(seq, self.lo, self.hi)


def cochain_terms(n: int) -> dict[tuple[GeneratorPair, GeneratorPair], Term]:
    """Every cochain coordinate that can be nonzero, as a multiple of a basic coefficient."""
    _require_n(n)
    P = GeneratorPair
    terms: dict = {}

    def put(p, q, term):
        assert p < q and (p, q) not in terms, (p, q)
        terms[(p, q)] = term

    for c in enumerate_basic(n):
        p, q = c.key()
        put(p, q, Term(1, 0, 0, c))
    for a in range(n - 2):
        # type I, first pair not contiguous
        for c in range(a + 2, n):
            for d in range(c + 1, n + 1):
                put(P(a, c), P(c, d), Term(1, 0, 0, tau(a, d)))
        # type IIF
        for d in range(a + 3, n + 1):
            put(P(a, a + 1), P(a, d), Term(-1, a, a + 1, tau(a + 1, d)))
        for c in range(a + 2, n):
            put(P(a, c), P(a, c + 1), Term(1, a, c - 1, alpha_f(c)))
        for c in range(a + 2, n - 1):
            for e in range(c + 2, n + 1):
                put(P(a, c), P(a, e), Term(-1, a, c, tau(c, e)))
        # type IIL
        for c in range(a + 2, n):
            put(P(a, c + 1), P(c, c + 1), Term(-1, c, c + 1, tau(a, c)))
        for c in range(a + 3, n + 1):
            put(P(a, c), P(a + 1, c), Term(1, a + 2, c, alpha_l(a)))
        for c in range(a + 2, n - 1):
            for e in range(c + 2, n + 1):
                put(P(a, e), P(c, e), Term(-1, c, e, tau(a, c)))
        # type III with non-contiguous pairs
        put(P(a, a + 2), P(a + 1, a + 3), Term(-1, a + 1, a + 2, beta(a + 1, a + 3)))
    return terms


# -- constraints --------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    relation: str
    lhs: Fraction
    rhs: Fraction

    def __str__(self) -> str:
        return f"{self.relation}: {self.lhs} != {self.rhs}"


def _omega_name(indices: Iterable[int]) -> str:
    return "*".join(f"omega{i}" for i in indices)


def beta_multipliers(n: int, c: BasicCoefficient) -> list[tuple[int, ...]]:
    """Omega monomials that must annihilate ``c``; out-of-range factors dropped."""
    i, j = c.i, c.j
    b, d = i - 1, j - 1
    if j == i + 2:
        cand = [(b,), (b + 1, b + 2), (b + 2, b + 3), (b + 4,)]
    else:
        cand = [(b,), (b + 2,), (d,), (d + 2,)]
    return [m for m in cand if all(1 <= k <= n for k in m)]


def constraint_check(seq: OmegaSequence, assign: ExtensionAssignment) -> list[Violation]:
    n = seq.n
    for c in assign.values:
        if not c.fits(n):
            raise ValueError(f"{c} does not exist for N={n}")
    out = []
    for a in range(n - 2):
        f, l = assign[alpha_f(a + 1)], assign[alpha_l(a + 1)]
        lhs, rhs = seq[a + 3] * f, seq[a + 1] * l
        if lhs != rhs:
            rel = f"omega{a + 3}*{alpha_f(a + 1)} = omega{a + 1}*{alpha_l(a + 1)}"
            out.append(Violation(rel, lhs, rhs))
    for c, v in assign.values.items():
        if c.kind is not Kind.BETA:
            continue
        for m in beta_multipliers(n, c):
            w = Fraction(1)
            for k in m:
                w *= seq[k]
            if w * v:
                out.append(Violation(f"{_omega_name(m)}*{c} = 0", w * v, Fraction(0)))
    return out


class ConstraintError(ValueError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


def derive_full_cochain(
    seq: OmegaSequence,
    assign: ExtensionAssignment,
    taus: Mapping[BasicCoefficient, Fraction] | None = None,
    check: bool = True,
) -> TwoCochain:
    """Fill in every cochain coordinate from the basic coefficients."""
    if taus:
        if any(c.kind is not Kind.TAU for c in taus):
            raise ValueError("taus may only carry type I coefficients")
        assign = ExtensionAssignment({**assign.values, **taus})
    if check:
        bad = constraint_check(seq, assign)
        if bad:
            raise ConstraintError(bad)
    values = {}
    for key, term in cochain_terms(seq.n).items():
        v = assign[term.coefficient]
        if v:
            values[key] = term.factor(seq) * v
    return TwoCochain(tuple(all_pairs(seq.n)), values)


# -- classification -----------------------------------------------------------

def classify_nontrivial(seq: OmegaSequence) -> list[BasicCoefficient]:
    """Basic coefficients carrying the nontrivial classes, in canonical order."""
    n = seq.n
    _require_n(n)
    zero = lambda i: seq[i] == 0
    out = []
    for c in enumerate_basic(n, include_tau=False):
        if c.kind is Kind.ALPHA_L and c.i == 0:
            keep = zero(2)
        elif c.kind is Kind.ALPHA_F and c.i == n - 1:
            keep = zero(n - 1)
        elif c.kind.is_type_ii:
            keep = zero(c.i) and zero(c.i + 2)
        else:
            keep = all(any(zero(k) for k in m) for m in beta_multipliers(n, c))
        if keep:
            out.append(c)
    return out


@dataclass(frozen=True)
class DeltaSequence:
    deltas: tuple[int, ...]

    def __call__(self, i: int) -> int:
        """delta_i; positions outside 1..N stand for absent constants and read 1."""
        if 1 <= i <= len(self.deltas):
            return self.deltas[i - 1]
        return 1

    query = __call__


def delta_sequence(seq: OmegaSequence) -> DeltaSequence:
    return DeltaSequence(tuple(int(w == 0) for w in seq))


def h2_dimension_formula(seq: OmegaSequence) -> int:
    """dim H^2 as a polynomial in the zero indicators delta_i."""
    n = seq.n
    _require_n(n)
    d = delta_sequence(seq)
    total = d(2) + d(n - 1)
    total += 2 * sum(d(i) * d(i + 2) for i in range(1, n - 1))
    # beta_{i+1,i+3}
    total += sum(
        d(i) * d(i + 4) * (d(i + 2) + d(i + 1) * d(i + 3) - d(i + 2) * d(i + 1) * d(i + 3))
        for i in range(0, n - 2)
    )
    # beta_{i+1,j+1}, j >= i+3
    total += sum(
        d(i) * d(i + 2) * d(j) * d(j + 2)
        for i in range(0, n - 3)
        for j in range(i + 3, n)
    )
    return total


def flag_dimension(n: int) -> int:
    return n * (n + 1) // 2 - 1


@dataclass(frozen=True)
class FormulaCheck:
    formula: int
    oracle: int
    agree: bool


def is_formula_consistent(seq: OmegaSequence) -> FormulaCheck:
    f = h2_dimension_formula(seq)
    o = h2_dimension(structure_table(seq), check=False)
    return FormulaCheck(f, o, f == o)


def split_counts(coeffs: Iterable[BasicCoefficient]) -> tuple[int, int]:
    """(# type II, # type III)."""
    coeffs = list(coeffs)
    two = sum(1 for c in coeffs if c.kind.is_type_ii)
    return two, sum(1 for c in coeffs if c.kind is Kind.BETA)
