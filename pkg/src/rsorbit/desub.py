"""Unique desubstitution of factors of u.

Every factor of u of length at least 3 extends in exactly one way, by a
left pad from {empty, a, d} and a right pad from {empty, b, c}, to an
exact image of the substitution whose preimage is again a factor.  The
preimage is strictly shorter, so repeated pullback terminates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import NotAFactorError, apply_morphism, SUBSTITUTION, validate_word
from .factors import _LEFT_PADS, _RIGHT_PADS, deconcatenate, is_factor_u


@dataclass(frozen=True)
class PullbackTriple:
    """Padding pair and preimage with substitution(core) == left + word + right."""

    left: str
    right: str
    core: str


def pullback(word: str) -> PullbackTriple:
    """The unique factor-preserving desubstitution of `word`.

    Tries every admissible padding of even total length and keeps those
    whose padded word splits into substitution images with a preimage
    that is itself a factor.  Exactly one padding must survive; zero or
    several would contradict unique desubstitution, so anything but one
    aborts loudly.
    """
    validate_word(word, "u")
    if len(word) < 3:
        raise ValueError("pullback needs a word of length at least 3")
    if not is_factor_u(word):
        raise NotAFactorError(f"{word!r} is not a factor of u")
    found = []
    for left in _LEFT_PADS:
        for right in _RIGHT_PADS:
            if (len(left) + len(word) + len(right)) % 2:
                continue
            preimage = deconcatenate(left + word + right)
            if preimage is not None and is_factor_u(preimage):
                found.append(PullbackTriple(left, right, preimage))
    if len(found) != 1:
        raise RuntimeError(
            f"desubstitution of {word!r} is not unique: {len(found)} parses"
        )
    triple = found[0]
    assert apply_morphism(SUBSTITUTION, triple.core) == triple.left + word + triple.right
    return triple
