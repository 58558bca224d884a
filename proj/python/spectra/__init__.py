"""Spectra of finite and self-similar measures.

Rationals are accepted as ``int``, ``fractions.Fraction`` or ``"p/q"``
strings and returned as ``Fraction``. Floats are rejected where an exact
value is required.
"""

from ._spectra import (
    Inconsistent,
    InvalidInput,
    arrow_close,
    atomic_transform,
    certify_spectral_pair,
    completeness_defect,
    construct_line_spectrum,
    cyclotomic_polynomial,
    decide_line_set,
    exponential_sum_vanishes,
    frame_bounds,
    ifs_transform,
    is_spectral_pair,
    jp_spectrum,
    measure_from_representation,
    multiplication_representation,
    permutation_representation,
    run_cli,
    search_spectrum,
)

__all__ = [
    "Inconsistent",
    "InvalidInput",
    "arrow_close",
    "atomic_transform",
    "certify_spectral_pair",
    "completeness_defect",
    "construct_line_spectrum",
    "cyclotomic_polynomial",
    "decide_line_set",
    "exponential_sum_vanishes",
    "frame_bounds",
    "ifs_transform",
    "is_spectral_pair",
    "jp_spectrum",
    "measure_from_representation",
    "multiplication_representation",
    "permutation_representation",
    "run_cli",
    "search_spectrum",
]
