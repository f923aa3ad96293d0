"""Exact computation with Hecke symmetries.

Builds the type-A Hecke algebra action on tensor powers of a vector space,
extracts the Frobenius structure of the associated quadratic algebras
(top component, pairings, the operators theta, phi, psi), runs the full
identity suites at desk scale, and carries out the resultant computation
that rules out three-dimensional regular algebras of elliptic type A.
"""

__version__ = "0.1.0"

from .exactnum import (
    FieldSpec,
    GENERIC_Q,
    PoleError,
    RATIONAL,
    Scalar,
    cyclotomic_field,
    primitive_root,
    qbinom,
    qfact,
    qint,
    specialize,
)
from .exprio import ExprError, format_scalar, parse_scalar
from .frobenius import FrobeniusProfile, analyze, reconstruct_from_f, verify_operator_identities
from .heckealg import HeckeElement, antisymmetrizer, partial_y, verify_identities
from .linalg import MatrixF, Subspace
from .multipoly import MultiPoly, PolyRing
from .permgroup import Composition, Perm
from .symmetry import HeckeSymmetry, check_braid, check_hecke, dj_standard, flip

__all__ = [
    "FieldSpec",
    "GENERIC_Q",
    "PoleError",
    "RATIONAL",
    "Scalar",
    "cyclotomic_field",
    "primitive_root",
    "qbinom",
    "qfact",
    "qint",
    "specialize",
    "ExprError",
    "format_scalar",
    "parse_scalar",
    "MultiPoly",
    "PolyRing",
    "Perm",
    "Composition",
    "HeckeElement",
    "antisymmetrizer",
    "partial_y",
    "verify_identities",
    "MatrixF",
    "Subspace",
    "HeckeSymmetry",
    "check_braid",
    "check_hecke",
    "dj_standard",
    "flip",
    "FrobeniusProfile",
    "analyze",
    "reconstruct_from_f",
    "verify_operator_identities",
    "__version__",
]
