"""Least words in the orbit closure of w, via parity lifts to u.

A letter of w sitting at a known index parity pulls back to a unique
letter of u: 0 at even index to a, 0 at odd index to b, 1 at even index
to d, 1 at odd index to c.  A factor of w occurring at both parities is
called ambiguous.  No factor of length 8 is ambiguous, so a query prefix
is first extended to its least length-8 factor extension, lifted at its
unique admissible parity, answered on the u side, and coded back.
"""

from __future__ import annotations

from .core import (
    CODING,
    LIFT_BY_PARITY,
    NotAFactorError,
    apply_morphism,
    validate_word,
)
from .factors import is_factor_u, is_factor_w, least_extension
from .leastu import SHIFT, LeastWord, least_u

PARITIES = ("even", "odd")

#: Query prefixes shorter than this are extended before lifting; at this
#: length a factor of w determines its occurrence parity.
UNAMBIGUOUS_LENGTH = 8


def parity_weight(word: str) -> int:
    """Sum of the binary digits of `word`."""
    validate_word(word, "w")
    return word.count("1")


def _other(parity):
    return "odd" if parity == "even" else "even"


def lift(word: str, parity: str) -> str:
    """Letterwise preimage of `word` under the coding.

    `parity` is the index parity assumed for the first letter; parities
    alternate along the word.  The result always codes back to `word`,
    but need not be a factor of u; callers check that separately.
    """
    validate_word(word, "w")
    if parity not in PARITIES:
        raise ValueError(f"unknown parity {parity!r}")
    letters = []
    for ch in word:
        letters.append(LIFT_BY_PARITY[ch, parity])
        parity = _other(parity)
    return "".join(letters)


def factor_parities(word: str) -> tuple[str, ...]:
    """Parities at which `word` lifts to a factor of u."""
    validate_word(word, "w")
    return tuple(p for p in PARITIES if is_factor_u(lift(word, p)))


def is_ambiguous(word: str) -> bool:
    """True iff `word` occurs in w at both even and odd indices.

    Decided exactly, by testing whether both parity lifts are factors
    of u.
    """
    parities = factor_parities(word)
    if not parities:
        raise NotAFactorError(f"{word!r} is not a factor of w")
    return len(parities) == 2


def least_w(prefix: str) -> LeastWord:
    """Descriptor of the least word in the orbit closure of w extending `prefix`.

    The prefix is extended to its least length-8 factor extension (length
    8 factors are never ambiguous), lifted at its unique parity, answered
    by `least_u`, and the answer coded letterwise back to the binary side.
    """
    validate_word(prefix, "w")
    if not is_factor_w(prefix):
        raise NotAFactorError(f"{prefix!r} is not a factor of w")
    extended = prefix
    if len(extended) < UNAMBIGUOUS_LENGTH:
        extended = least_extension(extended, UNAMBIGUOUS_LENGTH, "w")
        assert extended is not None
    parities = factor_parities(extended)
    if len(parities) != 1:
        raise RuntimeError(
            f"{extended!r} should lift at exactly one parity, got {parities}"
        )
    inner = least_u(lift(extended, parities[0]))
    if inner.form == SHIFT:
        return LeastWord.shifted("w", inner.offset)
    return LeastWord.finite("w", apply_morphism(CODING, inner.prefix))
