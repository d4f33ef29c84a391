"""Factor membership and stabilized factor sets of u and w.

Membership in u is decided by the recursive reduction: pad the query on
the left with nothing, ``a`` or ``d`` and on the right with nothing,
``b`` or ``c`` so that the padded word has even length, split it into
images of the substitution, and recurse on the preimage, which is
strictly shorter.  Words of length at most 2 are settled by a base set
scanned from a generated prefix.  Membership in w reduces to membership
in u via the two parity lifts.

Factor sets by length are certified by stabilization: the generation
depth is increased until one more application of the substitution adds
no new factor of that length.
"""

from __future__ import annotations

from functools import cache

from .core import (
    SUBSTITUTION,
    NotAFactorError,
    alphabet_of,
    iterate_morphism,
    sequence_prefix,
    validate_word,
)
from typing import NamedTuple

_IMAGE_TO_LETTER = {image: letter for letter, image in SUBSTITUTION.items()}

_LEFT_PADS = ("", "a", "d")
_RIGHT_PADS = ("", "b", "c")

_BASE_SCAN_DEPTH = 6
_DEPTH_CAP = 22


def deconcatenate(word: str):
    """Preimage of an even-length word under the substitution, else None.

    Succeeds iff the word splits into consecutive two-letter blocks that
    are all substitution images.
    """
    if len(word) % 2:
        return None
    letters = []
    for i in range(0, len(word), 2):
        letter = _IMAGE_TO_LETTER.get(word[i : i + 2])
        if letter is None:
            return None
        letters.append(letter)
    return "".join(letters)


def _short_factor_base() -> frozenset[str]:
    # Base sets for lengths <= 2, scanned rather than hardcoded.
    prefix = iterate_morphism(SUBSTITUTION, "a", _BASE_SCAN_DEPTH)
    base = {""}
    for n in (1, 2):
        base.update(prefix[i : i + n] for i in range(len(prefix) - n + 1))
    return frozenset(base)


_SHORT_FACTORS = _short_factor_base()


@cache
def _is_factor_u(word: str) -> bool:
    if len(word) <= 2:
        return word in _SHORT_FACTORS
    for left in _LEFT_PADS:
        for right in _RIGHT_PADS:
            if (len(left) + len(word) + len(right)) % 2:
                continue
            preimage = deconcatenate(left + word + right)
            if preimage is not None and _is_factor_u(preimage):
                return True
    return False


def is_factor_u(word: str) -> bool:
    """True iff `word` occurs in the fixed point u."""
    return _is_factor_u(validate_word(word, "u"))


def is_factor_w(word: str) -> bool:
    """True iff `word` occurs in the Rudin-Shapiro sequence w."""
    from .leastw import lift  # deferred: leastw imports this module

    validate_word(word, "w")
    return any(_is_factor_u(lift(word, parity)) for parity in ("even", "odd"))


def _is_factor(word, target):
    return is_factor_u(word) if target == "u" else is_factor_w(word)


def _window_set(text, n):
    return {text[i : i + n] for i in range(len(text) - n + 1)}


class FactorTable:
    """Per-length factor sets of one sequence, certified by stabilization.

    For each requested length the table scans generated prefixes of
    doubling depth until two consecutive depths yield the same set, and
    records the depth at which that happened.
    """

    def __init__(self, target: str):
        alphabet_of(target)
        self.target = target
        self._by_length: dict[int, tuple[tuple[str, ...], int]] = {}

    def _entry(self, n):
        if n < 1:
            raise ValueError("factor length must be at least 1")
        if n not in self._by_length:
            depth = max(2, (n - 1).bit_length())
            current = _window_set(sequence_prefix(self.target, 1 << depth), n)
            while True:
                if depth + 1 > _DEPTH_CAP:
                    raise RuntimeError(
                        f"factor set of length {n} did not stabilize by depth {_DEPTH_CAP}"
                    )
                grown = _window_set(sequence_prefix(self.target, 1 << (depth + 1)), n)
                if grown == current:
                    break
                current = grown
                depth += 1
            self._by_length[n] = (tuple(sorted(current)), depth)
        return self._by_length[n]

    def factors(self, n: int) -> tuple[str, ...]:
        """Sorted tuple of all length-n factors."""
        return self._entry(n)[0]

    def stabilized_at(self, n: int) -> int:
        """Depth m at which the length-n sets of depths m and m+1 agree."""
        return self._entry(n)[1]


_TABLES = {"u": FactorTable("u"), "w": FactorTable("w")}


def factor_set(n: int, target: str) -> tuple[str, ...]:
    """Sorted tuple of all length-n factors of the named sequence."""
    alphabet_of(target)
    return _TABLES[target].factors(n)


def stabilization_depth(n: int, target: str) -> int:
    """Generation depth certifying the length-n factor set."""
    alphabet_of(target)
    return _TABLES[target].stabilized_at(n)


def least_extension(prefix: str, n: int, target: str):
    """Least length-n factor of the named sequence extending `prefix`.

    Returns None when `prefix` is not a factor (no extension exists).
    """
    validate_word(prefix, target)
    if n < len(prefix):
        raise ValueError("extension length is shorter than the prefix")
    for candidate in factor_set(n, target):
        if candidate.startswith(prefix):
            return candidate
    return None


class OccurrenceParities(NamedTuple):
    even_seen: bool
    odd_seen: bool


def occurrence_parities(word: str, horizon: int | None = None) -> OccurrenceParities:
    """Which index parities `word` occurs at within a scanned prefix of w.

    With `horizon` omitted, the scan covers the prefix certifying the
    factor set at length ``len(word) + 2``, which is long enough for the
    parity pattern of a factor to have appeared.
    """
    validate_word(word, "w")
    if not is_factor_w(word):
        raise NotAFactorError(f"{word!r} is not a factor of w")
    if word == "":
        return OccurrenceParities(True, True)
    if horizon is None:
        horizon = 1 << (stabilization_depth(len(word) + 2, "w") + 1)
    text = sequence_prefix("w", horizon)
    even_seen = odd_seen = False
    at = text.find(word)
    while at != -1:
        if at % 2:
            odd_seen = True
        else:
            even_seen = True
        if even_seen and odd_seen:
            break
        at = text.find(word, at + 1)
    return OccurrenceParities(even_seen, odd_seen)
