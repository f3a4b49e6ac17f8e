"""Exact workbench for finite-dimensional algebras given by structure
constants: basis-change transport over Q(t), bit-exact t -> 0 limits,
verified degeneration witnesses, a constructive classifier onto the four
level-one canonical algebras, and a recognizer with explicit isomorphisms.
"""

from .algebra import (
    Algebra,
    InvariantVector,
    Subspace,
    apply_basis_change,
    derived_subspace,
    deterministic_candidates,
    extend_basis,
    ideal_powers,
    invariant_vector,
    random_algebra,
    random_invertible_matrix,
    rebase,
    subspace_product,
    unit_vector,
)
from .canonical import CanonicalForm, Tag, abelian, construct
from .classify import ClassifierConfig, classify, span_witness_search
from .errors import (
    AbelianInput,
    BadDimension,
    DegreeOverflow,
    DimensionMismatch,
    NoLimit,
    NotNu,
    ParseError,
    PoleAtPoint,
    PoleAtZero,
    SearchExhausted,
    SingularFamily,
    SingularMatrix,
)
from .parser import parse_laurent, print_laurent
from .poly import FieldElement
from .recognize import RecognitionResult, alpha_of, recognize
from .transport import (
    ParamAlgebra,
    ParamMatrix,
    Report,
    Witness,
    embed_algebra,
    invert,
    limit_at_zero,
    random_family,
    transport,
    transport_limit,
    verify_degeneration,
)

__all__ = [
    "Algebra",
    "AbelianInput",
    "BadDimension",
    "CanonicalForm",
    "ClassifierConfig",
    "DegreeOverflow",
    "DimensionMismatch",
    "FieldElement",
    "InvariantVector",
    "NoLimit",
    "NotNu",
    "ParamAlgebra",
    "ParamMatrix",
    "ParseError",
    "PoleAtPoint",
    "PoleAtZero",
    "RecognitionResult",
    "Report",
    "SearchExhausted",
    "SingularFamily",
    "SingularMatrix",
    "Subspace",
    "Tag",
    "Witness",
    "abelian",
    "alpha_of",
    "apply_basis_change",
    "classify",
    "construct",
    "derived_subspace",
    "deterministic_candidates",
    "embed_algebra",
    "extend_basis",
    "ideal_powers",
    "invariant_vector",
    "invert",
    "limit_at_zero",
    "parse_laurent",
    "print_laurent",
    "random_algebra",
    "random_family",
    "random_invertible_matrix",
    "rebase",
    "recognize",
    "span_witness_search",
    "subspace_product",
    "transport",
    "transport_limit",
    "unit_vector",
    "verify_degeneration",
]
