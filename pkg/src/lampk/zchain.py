"""Integer chains on words, the shift action, and the orbit splitting.

A ZChain is an element of the free abelian group on words.  The shift acts
basis-wise; its invariants are the multiples of the empty word (the only
finite orbit), and every chain splits uniquely as

    chain = (witness - alpha(witness)) + canonical

with ``canonical`` supported on canonical words.  The splitting is computed
by telescoping each basis word back to its orbit representative, so the
identity holds term-exactly, not just up to equivalence.
"""

from __future__ import annotations

from typing import NamedTuple

from .shiftwords import EMPTY_WORD, Word, canonicalize, shift
from .sparse import SparseIntVector


class ZChain(SparseIntVector):
    """Finite integer combination of words; coefficients arbitrary ints."""

    def terms(self) -> list[tuple[Word, int]]:
        """(word, coefficient) pairs in the deterministic word order."""
        return sorted(self._coeffs.items(), key=lambda kv: kv[0].sort_key())

    def __repr__(self) -> str:
        if not self._coeffs:
            return "ZChain()"
        body = ", ".join(f"{c}*{w!r}" for w, c in self.terms())
        return f"ZChain<{body}>"


ZERO = ZChain()


def add(a: ZChain, b: ZChain) -> ZChain:
    return a + b


def negate(chain: ZChain) -> ZChain:
    return -chain


def scale(chain: ZChain, n: int) -> ZChain:
    return chain * n


def alpha(chain: ZChain, k: int = 1) -> ZChain:
    """The shift applied to every basis word (k-fold; k may be negative)."""
    if k == 0:
        return chain
    return chain.map_keys(lambda w: shift(w, k))


def is_invariant(chain: ZChain) -> bool:
    """True iff alpha(chain) == chain, i.e. chain is a multiple of [empty]."""
    return all(w.is_empty for w in chain)


def invariant_basis() -> ZChain:
    """Generator of the invariants subgroup: the empty-word chain."""
    return ZChain.of(EMPTY_WORD)


class Decomposition(NamedTuple):
    witness: ZChain
    canonical: ZChain


def decompose(chain: ZChain) -> Decomposition:
    """Split chain as (witness - alpha(witness)) + canonical.

    Each basis word x = shift(s, k) telescopes to its representative s:
    for k > 0, x - s = (alpha - Id)(s + alpha(s) + ... + alpha^(k-1)(s)).
    The witness never touches the empty word (that word is its own
    representative with offset 0), which makes the output deterministic:
    the ambiguity in the witness is exactly the invariants subgroup.
    """
    witness = ZChain()
    canonical = ZChain()
    for word, coeff in chain.items():
        rep, offset = canonicalize(word)
        canonical += ZChain.of(rep, coeff)
        if offset > 0:
            steps = ZChain((shift(rep, j), -coeff) for j in range(offset))
            witness += steps
        elif offset < 0:
            steps = ZChain((shift(rep, j), coeff) for j in range(offset, 0))
            witness += steps
    return Decomposition(witness=witness, canonical=canonical)


def coinvariant_class(chain: ZChain) -> ZChain:
    """Image of the chain in the co-invariants, written on canonical words.

    Vanishes exactly on chains of the form m - alpha(m); acts as the
    identity on chains already supported on canonical words.
    """
    return decompose(chain).canonical
