"""Centrally extended CK algebras and the redefinitions that trivialize them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import (
    GeneratorPair,
    OmegaSequence,
    StructureTable,
    all_pairs,
    bracket_shape,
    omega_product,
    structure_table,
)
from .classify import (
    BasicCoefficient,
    ConstraintError,
    ExtensionAssignment,
    Kind,
    alpha_f,
    alpha_l,
    cochain_terms,
    constraint_check,
    derive_full_cochain,
)
from .oracle import OneCochain, TwoCochain


@dataclass(frozen=True)
class CentralGenerator:
    """The central generator Xi (all instances are the same label)."""

    def __str__(self) -> str:
        return "Xi"


XI = CentralGenerator()


@dataclass(frozen=True)
class ExtendedAlgebra:
    base: OmegaSequence
    assignment: ExtensionAssignment
    cochain: TwoCochain
    table: StructureTable


def extended_table(seq: OmegaSequence, cochain: TwoCochain) -> StructureTable:
    """Base brackets plus ``cochain(x, y) * Xi``; Xi is central and listed last."""
    base = structure_table(seq)
    entries = {key: dict(comb) for key, comb in base.nonzero()}
    for key, v in cochain.values.items():
        entries.setdefault(key, {})[XI] = v
    return StructureTable(base.generators + (XI,), entries)


def extend(seq: OmegaSequence, assign: ExtensionAssignment, force: bool = False) -> ExtendedAlgebra:
    """Build the extension; ``force`` skips the constraint check (the result may then break Jacobi)."""
    if not force:
        bad = constraint_check(seq, assign)
        if bad:
            raise ConstraintError(bad)
    cochain = derive_full_cochain(seq, assign, check=False)
    return ExtendedAlgebra(seq, assign, cochain, extended_table(seq, cochain))


@dataclass(frozen=True)
class Trivialization:
    reduced: ExtensionAssignment
    shifts: OneCochain


def trivialize(seq: OmegaSequence, assign: ExtensionAssignment) -> Trivialization:
    """Remove every coefficient a redefinition Omega -> Omega + mu Xi can absorb.

    Type I coefficients go first through the non-consecutive mu_ac, then each
    consecutive generator Omega_{p,p+1} absorbs alpha^F_{p,p+1} (weight w_p)
    and/or alpha^L_{p,p+1} (weight w_{p+2}).
    """
    bad = constraint_check(seq, assign)
    if bad:
        raise ConstraintError(bad)
    n = seq.n
    shifts: dict = {}
    values = dict(assign.values)
    for c in list(values):
        if c.kind is Kind.TAU:
            # [Omega_{a,a+1}, Omega_{a+1,c}] = -Omega_ac, so delta(mu)_tau = -mu_ac
            shifts[GeneratorPair(c.i, c.j)] = -values.pop(c)
    for p in range(n):
        slots = []
        if p >= 1:
            slots.append((alpha_f(p), seq[p]))
        if p + 2 <= n:
            slots.append((alpha_l(p), seq[p + 2]))
        usable = [(c, w) for c, w in slots if w != 0]
        if not usable:
            continue
        c0, w0 = usable[0]
        mu = values.get(c0, Fraction(0)) / w0
        for c, w in usable[1:]:
            assert values.get(c, Fraction(0)) / w == mu, f"shifts for Omega{p}{p + 1} disagree"
        if mu:
            shifts[GeneratorPair(p, p + 1)] = mu
            for c, w in slots:
                values[c] = values.get(c, Fraction(0)) - w * mu
    return Trivialization(ExtensionAssignment(values), OneCochain(shifts))


def group_compactness_filter(seq: OmegaSequence, nontrivial: Iterable[BasicCoefficient]) -> list[BasicCoefficient]:
    """Drop beta_{a+1,c+1} whose [Omega_{a,a+1}, Omega_{c,c+1}] involves a compact generator.

    Omega_{k-1,k} generates a compact one-parameter subgroup when w_k > 0.  This is a
    heuristic group-level count, not a computation of H^2(G, U(1)).
    """
    if not seq.is_standard():
        raise ValueError("the compactness filter expects a standardized sequence")
    out = []
    for c in nontrivial:
        if c.kind is Kind.BETA and (seq[c.i] > 0 or seq[c.j] > 0):
            continue
        out.append(c)
    return out


# -- listings -----------------------------------------------------------------

_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def generator_name(g, unicode: bool) -> str:
    if g is XI:
        return "Ξ" if unicode else "Xi"
    text = f"{g.a}{g.b}" if g.b < 10 else f"{g.a},{g.b}"
    return f"Ω{text.translate(_SUB)}" if unicode else f"Omega{text}"


def _omegas(lo: int, hi: int, unicode: bool) -> list[str]:
    return [f"ω{str(k).translate(_SUB)}" if unicode else f"omega{k}" for k in range(lo + 1, hi + 1)]


def _term(sign: int, factors: list[str], value: Fraction | None, name: str) -> str:
    """Render ``sign * factors * name`` (symbolic) or ``value * name`` (numeric)."""
    if value is not None:
        if value == 1:
            return name
        if value == -1:
            return f"-{name}"
        text = str(value)
        return f"({text})*{name}" if "/" in text else f"{text}*{name}"
    body = "*".join(factors + [name])
    return f"-{body}" if sign < 0 else body


@dataclass(frozen=True)
class BracketRow:
    left: GeneratorPair
    right: GeneratorPair
    terms: tuple[str, ...]

    def render(self, unicode: bool = False) -> str:
        rhs = " + ".join(self.terms).replace("+ -", "- ")
        return f"[{generator_name(self.left, unicode)}, {generator_name(self.right, unicode)}] = {rhs}"


@dataclass(frozen=True)
class BracketListing:
    rows: tuple[BracketRow, ...]
    unicode: bool = False

    def lines(self) -> list[str]:
        return [r.render(self.unicode) for r in self.rows]

    def render(self) -> str:
        return "\n".join(self.lines())


def _row_order(key: tuple[GeneratorPair, GeneratorPair]) -> tuple:
    p, q = key
    idx = sorted({p.a, p.b, q.a, q.b})
    return (len(idx), idx, p, q)


def commutator_table(ext: ExtendedAlgebra, symbolic: bool = False, unicode: bool = False) -> BracketListing:
    """Nonzero brackets of ``ext``, grouped by the index set they involve.

    With ``symbolic`` the omega factors are written by name and kept even if the base
    sequence makes them vanish; otherwise they are evaluated.  Extension coefficients
    are always written by name and appear only where assigned a nonzero value.
    """
    seq = ext.base
    central = cochain_terms(seq.n)
    rows = []
    for key in sorted(itertools.combinations(all_pairs(seq.n), 2), key=_row_order):
        p, q = key
        parts = []
        shape = bracket_shape(p, q)
        if shape is not None:
            sign, (lo, hi), target = shape
            value = None if symbolic else sign * omega_product(seq, lo, hi)
            if symbolic or value:
                parts.append(_term(sign, _omegas(lo, hi, unicode), value, generator_name(target, unicode)))
        term = central.get(key)
        if term is not None and ext.assignment[term.coefficient]:
            value = None if symbolic else term.factor(seq)
            if symbolic or value:
                name = f"{term.coefficient.name(unicode)}*{generator_name(XI, unicode)}"
                parts.append(_term(term.sign, _omegas(term.lo, term.hi, unicode), value, name))
        if parts:
            rows.append(BracketRow(p, q, tuple(parts)))
    return BracketListing(tuple(rows), unicode)


def generic_extension(seq: OmegaSequence, coeffs: Sequence[BasicCoefficient]) -> ExtendedAlgebra:
    """Unit assignment on ``coeffs`` (normally the nontrivial ones)."""
    return extend(seq, ExtensionAssignment.unit(coeffs))
