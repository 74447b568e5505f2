"""Exact computation with truncated polynomial rings F_q[x]/x^n and
Z[x]/(p^N, x^n, p^k x^{n-1}): strict partial valuations, valuation shapes
with their counting bounds, canonical subring bases, lifting along
one-step quotients, and full subring censuses at desk scale."""

from .coefficients import FieldCtx, ZpNCtx, default_modulus, is_irreducible, is_prime
from .errors import (
    CtxMismatch,
    DivisionByZero,
    InvariantViolation,
    NotAQuotient,
    NotAUnit,
    NotMinimal,
    OutOfFamily,
    PolyParseError,
    TooLarge,
    UndefinedValuation,
)
from .rings import (
    Element,
    FieldPolyCtx,
    RingCtx,
    ZpNPolyCtx,
    extension_ctx,
    field_ring,
    kernel_generator,
    project,
    quotient_ctx,
    zpn_ring,
)
from .shapes import (
    ExpDomain,
    GridDomain,
    IntervalDomain,
    Shape,
    e_bound,
    enumerate_shapes,
    eps_bound,
    generate,
    is_realizable_zshape,
    is_shape,
    minimal_generators,
)
from .subrings import (
    CensusRow,
    FamilyReport,
    IdealData,
    LiftFamily,
    MinimalExtension,
    Subring,
    canonicalize,
    census,
    closure,
    cotangent_dim,
    counterexample_family,
    enumerate_subrings,
    exponent_set,
    ideal_data,
    in_row_span,
    lift_isomorphic,
    project_subring,
    restricted_extension,
)
from .verify import CheckResult, run_suite

__version__ = "0.1.0"

__all__ = [
    "CensusRow",
    "CheckResult",
    "CtxMismatch",
    "DivisionByZero",
    "Element",
    "ExpDomain",
    "FamilyReport",
    "FieldCtx",
    "FieldPolyCtx",
    "GridDomain",
    "IdealData",
    "IntervalDomain",
    "InvariantViolation",
    "LiftFamily",
    "MinimalExtension",
    "NotAQuotient",
    "NotAUnit",
    "NotMinimal",
    "OutOfFamily",
    "PolyParseError",
    "RingCtx",
    "Shape",
    "Subring",
    "TooLarge",
    "UndefinedValuation",
    "ZpNCtx",
    "ZpNPolyCtx",
    "canonicalize",
    "census",
    "closure",
    "cotangent_dim",
    "counterexample_family",
    "default_modulus",
    "e_bound",
    "enumerate_shapes",
    "enumerate_subrings",
    "eps_bound",
    "exponent_set",
    "extension_ctx",
    "field_ring",
    "generate",
    "ideal_data",
    "in_row_span",
    "is_irreducible",
    "is_prime",
    "is_realizable_zshape",
    "is_shape",
    "kernel_generator",
    "lift_isomorphic",
    "minimal_generators",
    "project",
    "project_subring",
    "quotient_ctx",
    "restricted_extension",
    "run_suite",
    "zpn_ring",
]
