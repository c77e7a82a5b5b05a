"""Exact power ideals and inverse systems of central hyperplane arrangements.

Rationals cross the boundary as ``fractions.Fraction``; inputs may be ints,
Fractions or strings like ``"-3/4"``.
"""

from ._pil import (
    Arrangement,
    ConstructionError,
    ParseError,
    a_monomial_span,
    check_c_equals_cprime,
    contract,
    degree1_component,
    delete_form,
    exact_sequence_defect,
    format_arrangement,
    hilbert_function,
    ideal_dim,
    inverse_system_basis,
    k23_arrangement,
    large_span,
    lines,
    load_arrangement,
    parse_arrangement,
    pencil_arrangement,
    rho_min,
    rho_of,
    same_matroid,
    strata,
    tutte,
    tutte_eval,
    uniform_u23,
    verify,
)

__all__ = [
    "Arrangement",
    "ConstructionError",
    "ParseError",
    "a_monomial_span",
    "check_c_equals_cprime",
    "contract",
    "degree1_component",
    "delete_form",
    "exact_sequence_defect",
    "format_arrangement",
    "hilbert_function",
    "ideal_dim",
    "inverse_system_basis",
    "k23_arrangement",
    "large_span",
    "lines",
    "load_arrangement",
    "parse_arrangement",
    "pencil_arrangement",
    "rho_min",
    "rho_of",
    "same_matroid",
    "strata",
    "tutte",
    "tutte_eval",
    "uniform_u23",
    "verify",
]
