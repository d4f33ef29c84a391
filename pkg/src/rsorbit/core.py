"""Words, morphisms and the two infinite sequences.

Finite words are plain Python strings over one of two ordered alphabets,
the quaternary alphabet ``a < b < c < d`` and the binary alphabet
``0 < 1``.  Both orders coincide with code-point order, so ``<`` on
strings is exactly lexicographic word comparison, and a proper prefix
compares less than any of its extensions.

Two infinite sequences are exposed, named by one-letter targets:

* ``"u"`` -- the fixed point of the 2-uniform substitution
  a -> ab, b -> ac, c -> db, d -> dc, starting from ``a``;
* ``"w"`` -- the image of ``u`` under the coding a, b -> 0 and c, d -> 1,
  which is the Rudin-Shapiro sequence.

The Rudin-Shapiro sequence has a second, arithmetic characterization:
its n-th letter is the parity of the number of (overlapping) occurrences
of ``11`` in the binary representation of n.  `rudin_shapiro_bit`
implements that formula directly; it shares no code with the
substitution pipeline and serves as an independent cross-check.
"""

from __future__ import annotations

from collections.abc import Mapping

QUATERNARY_ALPHABET = "abcd"
BINARY_ALPHABET = "01"

#: 2-uniform substitution whose fixed point starting with ``a`` is u.
SUBSTITUTION = {"a": "ab", "b": "ac", "c": "db", "d": "dc"}

#: Letter-to-letter coding sending u to the Rudin-Shapiro sequence w.
CODING = {"a": "0", "b": "0", "c": "1", "d": "1"}

#: Inverse of the coding, refined by the parity of the occurrence index.
LIFT_BY_PARITY = {
    ("0", "even"): "a",
    ("0", "odd"): "b",
    ("1", "even"): "d",
    ("1", "odd"): "c",
}

TARGETS = ("u", "w")


class NotAFactorError(ValueError):
    """A query word does not occur in the queried sequence."""


def alphabet_of(target: str) -> str:
    """Alphabet of the sequence named by `target` (``"u"`` or ``"w"``)."""
    if target == "u":
        return QUATERNARY_ALPHABET
    if target == "w":
        return BINARY_ALPHABET
    raise ValueError(f"unknown target {target!r}; expected 'u' or 'w'")


def validate_word(word: str, target: str) -> str:
    """Return `word` unchanged, or raise ValueError on a foreign letter."""
    alphabet = alphabet_of(target)
    for ch in word:
        if ch not in alphabet:
            raise ValueError(f"letter {ch!r} is not in the {target!r} alphabet")
    return word


def apply_morphism(morphism: Mapping[str, str], word: str) -> str:
    """Apply a letter-to-word map to each letter of `word` and concatenate."""
    try:
        return "".join([morphism[ch] for ch in word])
    except KeyError as exc:
        raise ValueError(f"letter {exc.args[0]!r} outside the source alphabet") from None


def iterate_morphism(morphism: Mapping[str, str], seed: str, depth: int) -> str:
    """Apply `morphism` to `seed` `depth` times."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    word = seed
    for _ in range(depth):
        word = apply_morphism(morphism, word)
    return word


def rudin_shapiro_bit(n: int) -> str:
    """Letter of w at position n, by the binary-representation formula.

    Counts overlapping occurrences of ``11`` among the bits of n (so
    binary 111 contains two) and returns ``"0"`` or ``"1"`` by parity.
    """
    if n < 0:
        raise ValueError("position must be non-negative")
    return BINARY_ALPHABET[(n & (n >> 1)).bit_count() & 1]


class _PrefixBuffer:
    """Grow-only prefix of an infinite word.

    `grow` must extend its argument on the right; previously read
    positions therefore never change, so indexed reads are stable and
    the buffer may be shared by any number of cursors.
    """

    def __init__(self, seed, grow):
        self._data = seed
        self._grow = grow

    def request(self, n: int) -> str:
        data = self._data
        while len(data) < n:
            data = self._grow(data)
            if len(data) <= len(self._data):
                raise RuntimeError("prefix buffer failed to grow")
            self._data = data
        return self._data

    def prefix(self, n: int) -> str:
        return self.request(n)[:n]

    def letter(self, i: int) -> str:
        return self.request(i + 1)[i]

    def window(self, start: int, stop: int) -> str:
        if stop <= start:
            return ""
        return self.request(stop)[start:stop]


_U_BUFFER = _PrefixBuffer("a", lambda cur: apply_morphism(SUBSTITUTION, cur))
# w is the coded image of u; growing it re-codes a doubled u prefix.
_W_BUFFER = _PrefixBuffer(
    "0", lambda cur: apply_morphism(CODING, _U_BUFFER.request(2 * len(cur)))
)

_BUFFERS = {"u": _U_BUFFER, "w": _W_BUFFER}


class LetterStream:
    """Cursor over an infinite sequence backed by a shared prefix buffer.

    The cursor (`take`, iteration) is single-consumer; indexed reads via
    ``stream[i]`` do not move it and are reproducible across streams.
    """

    def __init__(self, buffer: _PrefixBuffer):
        self._buffer = buffer
        self.cursor = 0

    def __getitem__(self, i: int) -> str:
        if i < 0:
            raise IndexError("infinite sequences have no negative positions")
        return self._buffer.letter(i)

    def take(self, n: int) -> str:
        """Emit the next n letters and advance the cursor."""
        out = self._buffer.window(self.cursor, self.cursor + n)
        self.cursor += n
        return out

    def __iter__(self):
        return self

    def __next__(self) -> str:
        return self.take(1)


def fixed_point_stream() -> LetterStream:
    """Fresh cursor over u, the fixed point of the substitution."""
    return LetterStream(_U_BUFFER)


def rudin_shapiro_stream() -> LetterStream:
    """Fresh cursor over w, the Rudin-Shapiro sequence."""
    return LetterStream(_W_BUFFER)


def stream(target: str) -> LetterStream:
    """Fresh cursor over the sequence named by `target`."""
    alphabet_of(target)
    return LetterStream(_BUFFERS[target])


def sequence_prefix(target: str, n: int) -> str:
    """First n letters of the sequence named by `target`."""
    alphabet_of(target)
    if n < 0:
        raise ValueError("length must be non-negative")
    return _BUFFERS[target].prefix(n)


def sequence_window(target: str, start: int, stop: int) -> str:
    """Letters of the named sequence at positions start..stop-1."""
    alphabet_of(target)
    if start < 0:
        raise ValueError("start must be non-negative")
    return _BUFFERS[target].window(start, stop)
