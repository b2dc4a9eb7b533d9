"""Fourier and nonlinear Fourier spectra of fuzzy subsets of the circle."""

from ._fuzzyspec import (
    DomainError,
    Error,
    InvalidSequenceError,
    Membership,
    NumericError,
    PreconditionError,
    UnsupportedError,
    ValidationError,
    approximation_sequence,
    c_to_s,
    classify,
    crisp_spectrum,
    defuzz,
    defuzz_gaussian,
    exp_series_oracle,
    fourier_coefficients,
    parseval_residual,
    periodize_gaussian,
    poisson_check_gaussian,
    rational_expansion,
    s_to_c,
    sign_polynomial,
    unit_root_decompose,
    validate_fuzzy_spectrum,
    verify_match,
)

__all__ = [name for name in dir() if not name.startswith("_")]
