"""Associated forms, inverse systems and stability tests in exact arithmetic.

Polynomials are passed as strings in the variables x1..xn (or the names given
in ``variables``); dual forms use z1..zn. Rational results are returned as
``fractions.Fraction``.
"""

from ._assoform import (
    AssoformError,
    DegreeCapExceeded,
    NotRegularSequence,
    ParseError,
    PreconditionViolated,
    SingularHypersurface,
    associated_form,
    binary_stability,
    hilbert_function,
    is_regular_sequence,
    koszul_exactness_check,
    mather_yau_point,
    perp_generators,
    quartic_invariants,
    recognize_decomposable,
    run_cli,
    semistability_audit,
    torus_destabilizer,
)

__all__ = [
    "AssoformError",
    "DegreeCapExceeded",
    "NotRegularSequence",
    "ParseError",
    "PreconditionViolated",
    "SingularHypersurface",
    "associated_form",
    "binary_stability",
    "hilbert_function",
    "is_regular_sequence",
    "koszul_exactness_check",
    "mather_yau_point",
    "perp_generators",
    "quartic_invariants",
    "recognize_decomposable",
    "run_cli",
    "semistability_audit",
    "torus_destabilizer",
]
