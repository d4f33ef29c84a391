"""Lexicographically least words in the orbit closure of the Rudin-Shapiro word.

The library builds the fixed point u of the substitution a -> ab,
b -> ac, c -> db, d -> dc and the Rudin-Shapiro word w (the binary
coding of u), decides factor membership effectively, desubstitutes
factors, and computes, for any factor prefix, an exact descriptor of the
lexicographically least infinite word in the corresponding orbit closure.
Every answer can be checked against an independent brute-force oracle.
"""

from .core import (
    BINARY_ALPHABET,
    CODING,
    LIFT_BY_PARITY,
    QUATERNARY_ALPHABET,
    SUBSTITUTION,
    LetterStream,
    NotAFactorError,
    apply_morphism,
    fixed_point_stream,
    iterate_morphism,
    rudin_shapiro_bit,
    rudin_shapiro_stream,
    sequence_prefix,
    sequence_window,
    stream,
    validate_word,
)
from .desub import PullbackTriple, pullback
from .factors import (
    FactorTable,
    OccurrenceParities,
    factor_set,
    is_factor_u,
    is_factor_w,
    least_extension,
    occurrence_parities,
    stabilization_depth,
)
from .leastu import BASE_TABLE, LeastWord, descriptor_stream, least_u
from .leastw import (
    factor_parities,
    is_ambiguous,
    least_w,
    lift,
    parity_weight,
)
from .oracle import VerifyReport, oracle_least, verify_descriptor

__all__ = [
    "BASE_TABLE",
    "BINARY_ALPHABET",
    "CODING",
    "FactorTable",
    "LIFT_BY_PARITY",
    "LeastWord",
    "LetterStream",
    "NotAFactorError",
    "OccurrenceParities",
    "PullbackTriple",
    "QUATERNARY_ALPHABET",
    "SUBSTITUTION",
    "VerifyReport",
    "apply_morphism",
    "descriptor_stream",
    "factor_parities",
    "factor_set",
    "fixed_point_stream",
    "is_ambiguous",
    "is_factor_u",
    "is_factor_w",
    "iterate_morphism",
    "least_extension",
    "least_u",
    "least_w",
    "lift",
    "occurrence_parities",
    "oracle_least",
    "parity_weight",
    "pullback",
    "rudin_shapiro_bit",
    "rudin_shapiro_stream",
    "sequence_prefix",
    "sequence_window",
    "stabilization_depth",
    "stream",
    "validate_word",
    "verify_descriptor",
]

__version__ = "0.1.0"
