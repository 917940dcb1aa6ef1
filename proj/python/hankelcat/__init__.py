"""Exact Hankel determinants and Hankel transforms of integer sequences.

All values are exact big integers. Three independent evaluation paths are
exposed: direct fraction-free elimination (`hankel_det`, `det_bareiss`),
the r x r binomial reduction (`cigler_matrix` + `det`), and product-form
evaluation for the Catalan sequence (`eval_general`, `eval_shift4` ...
`eval_shift7`). `check_point` and `sweep` cross-validate the paths.
"""

from ._hankelcat import (
    ConsistencyRecord,
    DimensionCapError,
    EmptySequenceError,
    ExactMatrix,
    NotSquareError,
    SequenceParseError,
    SequenceTooShortError,
    __version__,
    binomial,
    catalan,
    catalan_prefix,
    check_point,
    cigler_matrix,
    det,
    det_bareiss,
    det_laplace,
    eval_general,
    eval_shift4,
    eval_shift5,
    eval_shift6,
    eval_shift7,
    hankel_det,
    hankel_matrix,
    hankel_transform,
    polynomial_identity_check,
    sweep,
)

__all__ = [
    "ConsistencyRecord",
    "DimensionCapError",
    "EmptySequenceError",
    "ExactMatrix",
    "NotSquareError",
    "SequenceParseError",
    "SequenceTooShortError",
    "__version__",
    "binomial",
    "catalan",
    "catalan_prefix",
    "check_point",
    "cigler_matrix",
    "det",
    "det_bareiss",
    "det_laplace",
    "eval_general",
    "eval_shift4",
    "eval_shift5",
    "eval_shift6",
    "eval_shift7",
    "hankel_det",
    "hankel_matrix",
    "hankel_transform",
    "polynomial_identity_check",
    "sweep",
]
