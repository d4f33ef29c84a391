"""Least words in the orbit closure of u with a prescribed prefix.

The answer to a least-word query is an infinite word; it is returned as
an exact finite descriptor, either a finite word followed by the whole
fixed point, or the fixed point with its first k letters removed.  The
second form is needed: stripping the left pad during the lifting step
can consume the entire finite part (first reachable at prefix ``bac``),
and the resulting word is a shifted fixed point, which is not of the
finite-prefix form.

Queries of length at most 2 are answered from a transcribed base table;
longer queries desubstitute, recurse, and lift the inner answer through
"strip the left pad, then apply the substitution".
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    SUBSTITUTION,
    NotAFactorError,
    alphabet_of,
    apply_morphism,
    sequence_prefix,
    sequence_window,
    validate_word,
)
from .desub import pullback
from .factors import is_factor_u

#: Least word of the orbit closure of u for every prefix of length <= 2,
#: as the finite part before the fixed point.
BASE_TABLE = {
    "": "",
    "a": "",
    "ab": "",
    "ac": "ac",
    "b": "b",
    "ba": "b",
    "bd": "bdb",
    "c": "c",
    "ca": "c",
    "cd": "cdbabdb",
    "d": "db",
    "db": "db",
    "dc": "dcac",
}

FINITE = "finite"
SHIFT = "shift"


@dataclass(frozen=True)
class LeastWord:
    """Exact description of an infinite word over one of the two sides.

    ``form == "finite"``: `prefix` followed by the side's fixed sequence.
    ``form == "shift"``: the side's fixed sequence from position `offset`.
    """

    side: str
    form: str
    prefix: str = ""
    offset: int = 0

    def __post_init__(self):
        alphabet_of(self.side)
        if self.form == FINITE:
            validate_word(self.prefix, self.side)
            if self.offset:
                raise ValueError("finite form carries no offset")
        elif self.form == SHIFT:
            if self.offset < 1:
                raise ValueError("shift offset must be positive")
            if self.prefix:
                raise ValueError("shift form carries no prefix")
        else:
            raise ValueError(f"unknown descriptor form {self.form!r}")

    @classmethod
    def finite(cls, side: str, prefix: str) -> "LeastWord":
        return cls(side=side, form=FINITE, prefix=prefix)

    @classmethod
    def shifted(cls, side: str, offset: int) -> "LeastWord":
        return cls(side=side, form=SHIFT, offset=offset)


def descriptor_stream(descriptor: LeastWord, n: int) -> str:
    """First n letters of the infinite word a descriptor denotes."""
    if n < 0:
        raise ValueError("length must be non-negative")
    if descriptor.form == SHIFT:
        return sequence_window(descriptor.side, descriptor.offset, descriptor.offset + n)
    head = descriptor.prefix[:n]
    return head + sequence_prefix(descriptor.side, n - len(head))


def least_u(prefix: str) -> LeastWord:
    """Descriptor of the least word in the orbit closure of u extending `prefix`.

    Length <= 2 is answered from the base table.  Otherwise the prefix is
    desubstituted, the inner query answered recursively, and the inner
    answer nu lifted to "strip the left pad from substitution(nu)".  For a
    shifted inner answer the lift uses the identity that the substitution
    doubles shift offsets of the fixed point.
    """
    validate_word(prefix, "u")
    if not is_factor_u(prefix):
        raise NotAFactorError(f"{prefix!r} is not a factor of u")
    if len(prefix) <= 2:
        return LeastWord.finite("u", BASE_TABLE[prefix])
    triple = pullback(prefix)
    inner = least_u(triple.core)
    pad = triple.left

    if inner.form == SHIFT:
        offset = 2 * inner.offset
        if pad and sequence_window("u", offset, offset + 1) != pad:
            raise RuntimeError("left pad does not match the shifted fixed point")
        return LeastWord.shifted("u", offset + len(pad))

    expanded = apply_morphism(SUBSTITUTION, inner.prefix)
    if expanded:
        if not expanded.startswith(pad):
            raise RuntimeError("left pad does not match the lifted finite part")
        return LeastWord.finite("u", expanded[len(pad):])
    # Inner answer is the fixed point itself; stripping the pad shifts it.
    if pad == "":
        return LeastWord.finite("u", "")
    if pad == "a":
        return LeastWord.shifted("u", 1)
    raise RuntimeError("cannot strip 'd' from the fixed point")
