"""Report records and text renderings behind the command-line interface."""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

from .algebra import GeneratorPair, OmegaSequence, identify, structure_table
from .classify import (
    BasicCoefficient,
    Kind,
    classify_nontrivial,
    h2_dimension_formula,
    split_counts,
)
from .extensions import commutator_table, generator_name, generic_extension, group_compactness_filter
from .oracle import cohomology

SWEEP_ORDER = (0, 1, -1)
DIAGRAM_LIMIT = 9


def fraction_text(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class Dims:
    z2: int
    b2: int
    h2: int
    formula: int


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    omega: tuple[str, ...]
    standardized: tuple[str, ...]
    name: str | None
    dims: Dims
    agree: bool
    generators: tuple[str, ...]
    group_generators: tuple[str, ...]
    brackets: tuple[str, ...] | None = None

    def to_dict(self) -> dict:
        out = asdict(self)
        for k in ("omega", "standardized", "generators", "group_generators"):
            out[k] = list(out[k])
        if self.brackets is None:
            del out["brackets"]
        else:
            out["brackets"] = list(self.brackets)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisReport":
        brackets = data.get("brackets")
        return cls(
            n=data["n"],
            omega=tuple(data["omega"]),
            standardized=tuple(data["standardized"]),
            name=data["name"],
            dims=Dims(**data["dims"]),
            agree=data["agree"],
            generators=tuple(data["generators"]),
            group_generators=tuple(data["group_generators"]),
            brackets=None if brackets is None else tuple(brackets),
        )

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))

    def render(self, group_filter: bool = False) -> str:
        d = self.dims
        lines = [
            f"omega        = ({', '.join(self.omega)})",
            f"standardized = ({', '.join(self.standardized)})",
            f"algebra      = {self.name or '(no standard name)'}",
            f"dim Z2 = {d.z2}, dim B2 = {d.b2}, dim H2 = {d.h2}",
            f"closed formula = {d.formula} ({'agrees' if self.agree else 'DISAGREES'} with the oracle)",
            f"nontrivial generators: [{', '.join(self.generators)}]",
        ]
        if group_filter:
            lines.append(
                f"after compactness filter (heuristic group-level count {len(self.group_generators)}): "
                f"[{', '.join(self.group_generators)}]"
            )
        if self.brackets is not None:
            lines.append("extended brackets:")
            lines.extend(f"  {b}" for b in self.brackets)
        return "\n".join(lines)


def analyze(seq: OmegaSequence, brackets: bool = False, unicode: bool = False) -> AnalysisReport:
    std = seq.standardized()
    coh = cohomology(structure_table(seq))
    formula = h2_dimension_formula(seq)
    nontrivial = classify_nontrivial(seq)
    listing = None
    if brackets:
        listing = tuple(commutator_table(generic_extension(seq, nontrivial), unicode=unicode).lines())
    return AnalysisReport(
        n=seq.n,
        omega=tuple(fraction_text(w) for w in seq),
        standardized=tuple(fraction_text(w) for w in std),
        name=identify(std, unicode=unicode),
        dims=Dims(coh.z2, coh.b2, coh.h2, formula),
        agree=coh.h2 == formula,
        generators=tuple(c.name(unicode) for c in nontrivial),
        group_generators=tuple(c.name(unicode) for c in group_compactness_filter(std, nontrivial)),
        brackets=listing,
    )


# -- sweep --------------------------------------------------------------------


def standardized_sequences(n: int) -> list[OmegaSequence]:
    """All 3^n standardized sequences, ternary order (0, 1, -1) with omega_1 most significant."""
    return [OmegaSequence.of(*w) for w in itertools.product(SWEEP_ORDER, repeat=n)]


@dataclass(frozen=True)
class SweepRow:
    omega: tuple[str, ...]
    name: str | None
    formula: int
    oracle: int | None
    agree: bool | None


def _sweep_row(args: tuple[OmegaSequence, bool]) -> SweepRow:
    seq, with_oracle = args
    formula = h2_dimension_formula(seq)
    oracle = cohomology(structure_table(seq)).h2 if with_oracle else None
    return SweepRow(
        omega=tuple(fraction_text(w) for w in seq),
        name=identify(seq),
        formula=formula,
        oracle=oracle,
        agree=None if oracle is None else oracle == formula,
    )


@dataclass(frozen=True)
class SweepResult:
    n: int
    rows: tuple[SweepRow, ...]

    @property
    def max_dim(self) -> int:
        return max(r.formula for r in self.rows)

    @property
    def agreements(self) -> int:
        return sum(1 for r in self.rows if r.agree)

    @property
    def checked(self) -> int:
        return sum(1 for r in self.rows if r.agree is not None)

    @property
    def all_agree(self) -> bool:
        return self.agreements == self.checked

    def to_json(self) -> str:
        body = {
            "n": self.n,
            "rows": [asdict(r) | {"omega": list(r.omega)} for r in self.rows],
            "summary": {
                "count": len(self.rows),
                "max_dim": self.max_dim,
                "checked": self.checked,
                "agree": self.agreements,
            },
        }
        return json.dumps(body, ensure_ascii=False, indent=2)

    def render(self) -> str:
        width = max(len(", ".join(r.omega)) for r in self.rows) + 2
        lines = [f"{'omega':<{width}}  formula  oracle  agree  name"]
        for r in self.rows:
            omega = f"({', '.join(r.omega)})"
            oracle = "-" if r.oracle is None else str(r.oracle)
            agree = "-" if r.agree is None else ("yes" if r.agree else "NO")
            lines.append(f"{omega:<{width}}  {r.formula:>7}  {oracle:>6}  {agree:>5}  {r.name or ''}".rstrip())
        lines.append(
            f"{len(self.rows)} algebras, max dim H2 = {self.max_dim}, "
            f"oracle agreement {self.agreements}/{self.checked}"
        )
        return "\n".join(lines)


def sweep(n: int, oracle: bool = True, parallel: bool = False) -> SweepResult:
    jobs = [(s, oracle) for s in standardized_sequences(n)]
    if parallel:
        with ProcessPoolExecutor() as pool:
            rows = list(pool.map(_sweep_row, jobs, chunksize=8))
    else:
        rows = [_sweep_row(j) for j in jobs]
    return SweepResult(n, tuple(rows))


# -- contraction table --------------------------------------------------------


def _pattern_text(pattern: tuple[bool, ...], unicode: bool) -> str:
    sym = "ω" if unicode else "omega"
    return "(" + ",".join("0" if z else f"{sym}{i}" for i, z in enumerate(pattern, 1)) + ")"


@dataclass(frozen=True)
class TableClass:
    zeros: int
    pattern: tuple[bool, ...]
    name: str | None
    coefficients: tuple[BasicCoefficient, ...]

    def counts(self) -> tuple[int, int]:
        return split_counts(self.coefficients)

    def coefficient_text(self, unicode: bool = False) -> str:
        ii = [c.name(unicode) for c in self.coefficients if c.kind.is_type_ii]
        iii = [c.name(unicode) for c in self.coefficients if c.kind is Kind.BETA]
        return "[" + ",".join(ii) + (";" + ",".join(iii) if iii else "") + "]"

    def render(self, unicode: bool = False) -> str:
        ii, iii = self.counts()
        return (
            f"{self.zeros}  {_pattern_text(self.pattern, unicode)}  {self.name or ''}  "
            f"{self.coefficient_text(unicode)} {ii}+{iii}"
        )


def contraction_table(n: int, unicode: bool = False) -> list[TableClass]:
    """One class per zero pattern; signs collapse, so the all-positive member stands in."""
    out = []
    for pattern in itertools.product((False, True), repeat=n):
        rep = OmegaSequence.of(*(0 if z else 1 for z in pattern))
        out.append(TableClass(sum(pattern), pattern, identify(rep, unicode), tuple(classify_nontrivial(rep))))
    out.sort(key=lambda c: (c.zeros, [not z for z in c.pattern]))
    return out


# -- triangular diagram -------------------------------------------------------


def _cell(a: int, b: int, unicode: bool) -> str:
    return generator_name(GeneratorPair(a, b), unicode)


def _link(c: BasicCoefficient, unicode: bool) -> str:
    p, q = c.key()
    kind = {Kind.ALPHA_F: "horizontal", Kind.ALPHA_L: "vertical", Kind.BETA: "long-range"}[c.kind]
    return f"{c.name(unicode)}: {_cell(p.a, p.b, unicode)} ~ {_cell(q.a, q.b, unicode)} ({kind})"


def diagram(seq: OmegaSequence, unicode: bool = False) -> str:
    """Triangular generator array with split boundaries and extension links.

    Row a holds Omega_ab for b = a+1..N.  Each omega_a = 0 splits off the block
    {Omega_ij : i < a <= j}; its boundary is drawn with '|' on the left and '-' below.
    """
    n = seq.n
    if n > DIAGRAM_LIMIT:
        raise ValueError(f"diagram supports N <= {DIAGRAM_LIMIT}, got {n}")
    zeros = [a for a in range(1, n + 1) if seq[a] == 0]
    width = max(len(_cell(a, b, unicode)) for a in range(n) for b in range(a + 1, n + 1))

    def col(b: int) -> int:
        return (b - 1) * (width + 1) + 1  # one separator column before each cell

    total = col(n) + width + 1
    lines = []
    for a in range(n):
        row = [" "] * total
        for b in range(a + 1, n + 1):
            text = _cell(a, b, unicode)
            row[col(b) : col(b) + len(text)] = text
        for z in zeros:
            if a < z:
                row[col(z) - 1] = "|"
        lines.append("".join(row).rstrip())
        under = [" "] * total
        for z in zeros:
            if z == a + 1:
                for x in range(col(z) - 1, total):
                    under[x] = "-"
        if any(ch != " " for ch in under):
            lines.append("".join(under).rstrip())
    if zeros:
        lines.append("")
        lines.append("splits at omega_a = 0: a = " + ", ".join(str(z) for z in zeros))
    links = classify_nontrivial(seq)
    if links:
        lines.append("")
        lines.extend(_link(c, unicode) for c in links)
    return "\n".join(lines)

