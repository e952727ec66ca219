"""Exact real-root tools for centred polynomial families.

Rational polynomial arithmetic, Sturm counting and certified isolation,
the remainder cascade ``P_n = x*P_{n-1} - R_{n-2}``, admissible intervals
for the trailing coefficient, and a builder that chooses coefficients one
degree at a time so every intermediate polynomial keeps only real, distinct
roots.
"""

from .construct import (
    AdmissibleInterval,
    FamilyChainLedger,
    MultiplicityProfile,
    admissible_interval,
    build_all_real,
    choose_coefficient,
    classify_multiplicities,
    degree5_emptiness_probe,
    limit_case_catalog,
)
from .errors import (
    CertificationError,
    ConstructionFailedError,
    GateViolationError,
    InterlaceError,
    InvalidArgumentError,
    InvalidCertificateError,
    NoAdmissibleChoiceError,
    ParseError,
    PreconditionError,
)
from .family import FamilySpec, build_family, cascade_split, is_interlaced, prop1_sign_condition
from .parse import parse_polynomial
from .polycore import Poly, X, discriminant, gcd, resultant, squarefree_decompose
from .realroots import AlgebraicReal, IntervalQ, count_distinct_real_roots, isolate_real_roots, sturm_chain

__all__ = [
    "AdmissibleInterval", "FamilyChainLedger", "MultiplicityProfile", "admissible_interval",
    "build_all_real", "choose_coefficient", "classify_multiplicities", "degree5_emptiness_probe",
    "limit_case_catalog", "CertificationError", "ConstructionFailedError", "GateViolationError",
    "InterlaceError", "InvalidArgumentError", "InvalidCertificateError", "NoAdmissibleChoiceError",
    "ParseError", "PreconditionError", "FamilySpec", "build_family", "cascade_split", "is_interlaced",
    "prop1_sign_condition", "parse_polynomial", "Poly", "X", "discriminant", "gcd", "resultant",
    "squarefree_decompose", "AlgebraicReal", "IntervalQ", "count_distinct_real_roots",
    "isolate_real_roots", "sturm_chain",
]

__version__ = "0.1.0"
