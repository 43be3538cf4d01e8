"""Finite-support words over the irrep alphabet and their shift orbits.

A word maps integer positions to irrep indices; position values are always
nonzero (the trivial index 0 means "unconstrained" and is never stored), so
the empty word is the base point.  The shift moves support to the right and
every nonempty orbit contains exactly one word whose support starts at 0;
that word is the canonical orbit representative.
"""

from __future__ import annotations

from collections.abc import Mapping
from itertools import product
from typing import Iterable

from .errors import LampkError
from .grouprep import GroupRepData


class Word:
    """Immutable finite map position -> irrep index (values >= 1)."""

    __slots__ = ("_items",)

    def __init__(self, entries: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = entries.items() if isinstance(entries, Mapping) else entries
        cleaned = {}
        for pos, idx in items:
            pos, idx = int(pos), int(idx)
            if idx == 0:
                continue
            if idx < 0:
                raise LampkError(f"irrep index must be >= 0, got {idx}")
            if pos in cleaned:
                raise LampkError(f"duplicate position {pos} in word entries")
            cleaned[pos] = idx
        self._items = tuple(sorted(cleaned.items()))

    @property
    def entries(self) -> tuple[tuple[int, int], ...]:
        return self._items

    def value_at(self, pos: int) -> int:
        for p, idx in self._items:
            if p == pos:
                return idx
        return 0

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self._items)

    @property
    def is_empty(self) -> bool:
        return not self._items

    @property
    def min_support(self) -> int | None:
        return self._items[0][0] if self._items else None

    @property
    def max_support(self) -> int | None:
        return self._items[-1][0] if self._items else None

    def window_length(self) -> int:
        """Length of the support window [min, max]; 0 for the empty word."""
        if not self._items:
            return 0
        return self._items[-1][0] - self._items[0][0] + 1

    def dense(self) -> tuple[int, ...]:
        """Index vector over the support window, trivial positions as 0."""
        if not self._items:
            return ()
        lo = self._items[0][0]
        vec = [0] * self.window_length()
        for pos, idx in self._items:
            vec[pos - lo] = idx
        return tuple(vec)

    def sort_key(self) -> tuple:
        """Total order: window length, then index vector, then position."""
        lo = self._items[0][0] if self._items else 0
        return (self.window_length(), self.dense(), lo)

    def is_canonical(self) -> bool:
        return not self._items or self._items[0][0] == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def __lt__(self, other: "Word") -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        if not self._items:
            return "Word()"
        body = ", ".join(f"{p}: {i}" for p, i in self._items)
        return f"Word({{{body}}})"


EMPTY_WORD = Word()


def shift(word: Word, k: int) -> Word:
    """Translate the word k steps: the entry at p moves to p + k."""
    if k == 0 or word.is_empty:
        return word
    return Word((p + k, idx) for p, idx in word.entries)


def canonicalize(word: Word) -> tuple[Word, int]:
    """Orbit representative and the offset putting it back in place.

    Returns (rep, offset) with shift(rep, offset) == word; rep is the unique
    orbit member whose support starts at 0 (the empty word for itself).
    Words are shift-equivalent exactly when their reps coincide.
    """
    if word.is_empty:
        return word, 0
    offset = word.min_support
    return shift(word, -offset), offset


def canonical_count(group: GroupRepData, max_len: int) -> int:
    """Closed-form number of canonical words with support in [0, max_len)."""
    r = group.num_irreps
    total = 1 + (r - 1)
    for length in range(2, max_len + 1):
        total += (r - 1) ** 2 * r ** (length - 2)
    return total


def enumerate_canonical(group: GroupRepData, max_len: int) -> list[Word]:
    """All canonical words with support inside [0, max_len).

    Ordered by window length, then lexicographically by the dense index
    vector: the empty word, the single-letter words at position 0, then for
    each length L the words with nontrivial first and last letter and free
    interior.
    """
    if max_len < 1:
        raise LampkError(f"max_len must be >= 1, got {max_len}")
    r = group.num_irreps
    words = [EMPTY_WORD]
    words.extend(Word({0: g}) for g in range(1, r))
    for length in range(2, max_len + 1):
        for first in range(1, r):
            for interior in product(range(r), repeat=length - 2):
                for last in range(1, r):
                    vec = (first, *interior, last)
                    words.append(Word((i, v) for i, v in enumerate(vec) if v))
    return words
