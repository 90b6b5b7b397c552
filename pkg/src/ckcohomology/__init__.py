"""Exact second cohomology of Cayley-Klein orthogonal algebras so_{w1..wN}(N+1).

Three independent routes to dim H^2 live here: a brute-force rational solver for
any structure table, a rule-based classification of the nontrivial central
extension coefficients, and a closed formula in the zero indicators of the
omega sequence.  The extension builder turns assignments into explicit
centrally extended algebras.
"""

from .algebra import (
    GeneratorPair,
    OmegaSequence,
    StructureTable,
    abelian_table,
    bracket,
    check_jacobi,
    identify,
    reverse,
    semidirect_split,
    structure_table,
)
from .classify import (
    BasicCoefficient,
    ConstraintError,
    ExtensionAssignment,
    Kind,
    classify_nontrivial,
    constraint_check,
    delta_sequence,
    derive_full_cochain,
    enumerate_basic,
    h2_dimension_formula,
    is_formula_consistent,
)
from .extensions import XI, ExtendedAlgebra, commutator_table, extend, group_compactness_filter, trivialize
from .oracle import (
    NotALieAlgebra,
    OneCochain,
    TwoCochain,
    cocycle_space,
    coboundary_space,
    cohomology,
    h2_dimension,
    is_coboundary,
)

__version__ = "0.1.0"

__all__ = [
    "BasicCoefficient",
    "ConstraintError",
    "ExtendedAlgebra",
    "ExtensionAssignment",
    "GeneratorPair",
    "Kind",
    "NotALieAlgebra",
    "OmegaSequence",
    "OneCochain",
    "StructureTable",
    "TwoCochain",
    "XI",
    "abelian_table",
    "bracket",
    "check_jacobi",
    "classify_nontrivial",
    "coboundary_space",
    "cocycle_space",
    "cohomology",
    "commutator_table",
    "constraint_check",
    "delta_sequence",
    "derive_full_cochain",
    "enumerate_basic",
    "extend",
    "group_compactness_filter",
    "h2_dimension",
    "h2_dimension_formula",
    "identify",
    "is_coboundary",
    "is_formula_consistent",
    "reverse",
    "semidirect_split",
    "structure_table",
    "trivialize",
]
