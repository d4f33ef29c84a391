"""Brute-force ground truth for least-word queries.

The oracle answers a least-extension query by scanning a generated
prefix of the sequence for every length-n window, growing the scan
horizon until the window set is unchanged by one more doubling.  Because
every factor extends on the right within the factor set, the least
length-n factor extending a prefix is exactly the length-n prefix of the
least infinite orbit-closure word extending it, so these scans check the
solver end to end.

The w-side scan is generated from the binary-representation bit formula
alone, never from the substitution pipeline, so agreement between the
two is a discovered fact rather than shared code.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .core import alphabet_of, rudin_shapiro_bit, sequence_prefix, validate_word
from .leastu import LeastWord, descriptor_stream

START_HORIZON = 1 << 14
MAX_HORIZON = 1 << 22


class _BitFormulaBuffer:
    """Grow-only prefix of w computed position by position from the bit formula."""

    def __init__(self):
        self._data = ""

    def prefix(self, n: int) -> str:
        if len(self._data) < n:
            start = len(self._data)
            self._data += "".join(rudin_shapiro_bit(i) for i in range(start, n))
        return self._data[:n]


_W_FROM_BITS = _BitFormulaBuffer()


def _scan_prefix(target, n):
    if target == "w":
        return _W_FROM_BITS.prefix(n)
    return sequence_prefix("u", n)


def _window_set(text, n):
    return {text[i : i + n] for i in range(len(text) - n + 1)}


@cache
def _stable_windows(n: int, target: str) -> tuple[str, ...]:
    horizon = START_HORIZON
    current = _window_set(_scan_prefix(target, horizon), n)
    while True:
        if horizon * 2 > MAX_HORIZON:
            raise RuntimeError(
                f"window set of length {n} did not stabilize within {MAX_HORIZON} letters"
            )
        grown = _window_set(_scan_prefix(target, horizon * 2), n)
        if grown == current:
            return tuple(sorted(current))
        current = grown
        horizon *= 2


def oracle_least(prefix: str, n: int, target: str):
    """Least length-n window of the named sequence extending `prefix`.

    Returns None when no window extends `prefix`, which happens exactly
    when `prefix` is not a factor.
    """
    alphabet_of(target)
    validate_word(prefix, target)
    if n < len(prefix):
        raise ValueError("window length is shorter than the prefix")
    for candidate in _stable_windows(n, target):
        if candidate.startswith(prefix):
            return candidate
    return None


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of checking a descriptor against the oracle."""

    passed: bool
    first_mismatch: int | None = None

    def __bool__(self):
        return self.passed


def verify_descriptor(prefix: str, descriptor: LeastWord, n: int, target: str) -> VerifyReport:
    """Compare a solver descriptor with the oracle answer on n letters.

    A failing report is data, not an error; it carries the first
    position where the two sides disagree (None when the oracle has no
    answer at all).
    """
    if n < len(prefix):
        raise ValueError("horizon is shorter than the prefix")
    expected = oracle_least(prefix, n, target)
    if expected is None:
        return VerifyReport(False, None)
    got = descriptor_stream(descriptor, n)
    if got == expected:
        return VerifyReport(True)
    mismatch = next(i for i, (x, y) in enumerate(zip(got, expected)) if x != y)
    return VerifyReport(False, mismatch)
