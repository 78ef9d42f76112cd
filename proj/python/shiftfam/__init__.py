"""Numerical semigroups and shifted families M_n = <n, n + r_1, ..., n + r_k>."""

from ._shiftfam import (
    NumericalSemigroup,
    ShiftfamError,
    ShiftSpec,
    brute_pf,
    brute_shift_check,
    brute_trace_holes,
    min_fact_length,
    minimal_generators,
    random_family,
    submonoid_frobenius,
)

__all__ = [
    "NumericalSemigroup",
    "ShiftfamError",
    "ShiftSpec",
    "brute_pf",
    "brute_shift_check",
    "brute_trace_holes",
    "min_fact_length",
    "minimal_generators",
    "random_family",
    "submonoid_frobenius",
]
