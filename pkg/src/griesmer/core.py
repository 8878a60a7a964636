"""Words, codes, and the Hamming metric over the alphabet {0, ..., q-1}.

Symbols are plain residues mod q; no field structure is assumed, so any
integer alphabet size q >= 2 is accepted.  All values are immutable and
every operation is pure, so everything here is safe to share between
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Word:
    """A fixed-length word whose symbols are integers in [0, q)."""

    symbols: tuple[int, ...]
    q: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if self.q < 2:
            raise ValueError(f"alphabet size must be at least 2, got {self.q}")
        if not self.symbols:
            raise ValueError("a word needs at least one symbol")
        for s in self.symbols:
            if not 0 <= s < self.q:
                raise ValueError(f"symbol {s} outside [0, {self.q})")

    @classmethod
    def zero(cls, length: int, q: int) -> Word:
        return cls((0,) * length, q)

    @classmethod
    def parse(cls, text: str, q: int) -> Word:
        """Inverse of str(): digit string for q <= 10, whitespace-separated integers above."""
        text = text.strip()
        if q <= 10:
            if not text or any(ch not in "0123456789" for ch in text):
                raise ValueError(f"not a digit-string word: {text!r}")
            symbols = tuple(int(ch) for ch in text)
        else:
            parts = text.split()
            if not parts:
                raise ValueError("empty word text")
            symbols = tuple(int(p) for p in parts)
        return cls(symbols, q)

    @property
    def length(self) -> int:
        return len(self.symbols)

    def prefix(self, k: int) -> Word:
        """The systematic part: the first k symbols as a word."""
        if not 1 <= k <= self.length:
            raise ValueError(f"prefix length {k} outside [1, {self.length}]")
        return Word(self.symbols[:k], self.q)

    def tail(self, k: int) -> tuple[int, ...]:
        """The symbols after position k; empty when k equals the length."""
        if not 1 <= k <= self.length:
            raise ValueError(f"prefix length {k} outside [1, {self.length}]")
        return self.symbols[k:]

    def __str__(self) -> str:
        if self.q <= 10:
            return "".join(str(s) for s in self.symbols)
        return " ".join(str(s) for s in self.symbols)


@dataclass(frozen=True)
class CodeParams:
    """Parameters (q, n, k, d) of a target systematic code."""

    q: int
    n: int
    k: int
    d: int

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError(f"alphabet size must be at least 2, got {self.q}")
        if self.n < 1:
            raise ValueError(f"length must be at least 1, got {self.n}")
        if not 1 <= self.k <= self.n:
            raise ValueError(f"message length {self.k} outside [1, n={self.n}]")
        if not 1 <= self.d <= self.n:
            raise ValueError(f"distance {self.d} outside [1, n={self.n}]")


class Code:
    """An immutable collection of distinct equal-length words over one alphabet.

    Words are kept in lexicographic order so that iteration, equality,
    hashing and printed output are deterministic regardless of
    construction order.
    """

    __slots__ = ("_words", "_q", "_length")

    def __init__(self, words: Iterable[Word]) -> None:
        ordered = sorted(words, key=lambda w: w.symbols)
        if not ordered:
            raise ValueError("a code needs at least one word")
        q = ordered[0].q
        length = ordered[0].length
        for w in ordered:
            if w.q != q:
                raise ValueError(f"words of one code must share the alphabet: {w.q} != {q}")
            if w.length != length:
                raise ValueError(f"words of one code must share the length: {w.length} != {length}")
        for a, b in zip(ordered, ordered[1:]):
            if a.symbols == b.symbols:
                raise ValueError(f"duplicate word {a}")
        self._words = tuple(ordered)
        self._q = q
        self._length = length

    @property
    def words(self) -> tuple[Word, ...]:
        return self._words

    @property
    def q(self) -> int:
        return self._q

    @property
    def length(self) -> int:
        return self._length

    def __iter__(self) -> Iterator[Word]:
        return iter(self._words)

    def __len__(self) -> int:
        return len(self._words)

    def __contains__(self, item: object) -> bool:
        return isinstance(item, Word) and item in self._words

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return self._q == other._q and self._words == other._words

    def __hash__(self) -> int:
        return hash((self._q, self._words))

    def __repr__(self) -> str:
        shown = ", ".join(str(w) for w in self._words[:8])
        if len(self._words) > 8:
            shown += f", ... ({len(self._words)} words)"
        return f"Code(q={self._q}, length={self._length}, {{{shown}}})"


def weight(w: Word) -> int:
    """Number of nonzero symbols."""
    return sum(1 for s in w.symbols if s)


def distance(a: Word, b: Word) -> int:
    """Hamming distance: the number of positions where a and b differ."""
    if a.length != b.length:
        raise ValueError(f"incomparable words: lengths {a.length} and {b.length} differ")
    if a.q != b.q:
        raise ValueError(f"incomparable words: alphabets {a.q} and {b.q} differ")
    return sum(1 for x, y in zip(a.symbols, b.symbols) if x != y)


def min_distance(code: Code) -> int:
    """Smallest pairwise distance over all distinct word pairs."""
    if len(code) < 2:
        raise ValueError("minimum distance needs at least two words")
    words = code.words
    best = code.length
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            dist = distance(words[i], words[j])
            if dist < best:
                best = dist
                if best == 1:
                    return 1
    return best


def is_systematic(code: Code, k: int) -> bool:
    """True iff the code has q**k words with pairwise-distinct length-k prefixes."""
    if not 1 <= k <= code.length:
        raise ValueError(f"prefix length {k} outside [1, {code.length}]")
    if len(code) != code.q**k:
        return False
    prefixes = {w.symbols[:k] for w in code}
    return len(prefixes) == len(code)


def translate(code: Code, t: Word) -> Code:
    """Subtract t from every word, component-wise mod q.

    Translating by any codeword yields an equivalent code containing the
    zero word; all pairwise distances are preserved.
    """
    if t.length != code.length:
        raise ValueError(f"incomparable words: lengths {t.length} and {code.length} differ")
    if t.q != code.q:
        raise ValueError(f"incomparable words: alphabets {t.q} and {code.q} differ")
    q = code.q
    return Code(
        Word(tuple((a - b) % q for a, b in zip(w.symbols, t.symbols)), q) for w in code
    )


def pad(code: Code, extra: int) -> Code:
    """Append `extra` constant-zero columns to every word.

    Zero columns add no differences, so the minimum distance and the
    systematic property are preserved exactly.
    """
    if extra < 0:
        raise ValueError(f"cannot pad by a negative amount: {extra}")
    if extra == 0:
        return code
    zeros = (0,) * extra
    return Code(Word(w.symbols + zeros, w.q) for w in code)
