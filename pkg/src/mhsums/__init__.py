"""Exact nested harmonic sums with an exact-rational identity checker."""

from .harmonic import (
    alt_harmonic_number,
    harmonic_number,
    mhs,
    mhs_bruteforce,
    mhss,
    mhss_bruteforce,
    mhts,
    mhts_bruteforce,
)
from .numeric_core import (
    Composition,
    DomainError,
    Rational,
    binomial,
    format_rational,
    ones_composition,
    parse_rational,
    partial_weight,
    rational_pow,
)
from .stirling_bell import (
    bell_number_Y,
    complete_bell,
    mhss_ones_via_bell,
    stirling1,
    stirling1_via_mhs,
)

__version__ = "0.1.0"
