"""Levelwise bookkeeping for the inductive-limit K-group computation.

Level n carries the dual of the n-fold product group, indexed by length-n
tuples of irrep indices (one-sided convention: passing to level n+1 appends
a coordinate).  The induction map sends a level-n basis tuple t to

    t  -  sum over sigma of  dim(sigma) * (t + (sigma,))

and the direct-sum certificate checks, at truncation N, that the images of
levels 1..N-1 together with the complement basis (all level-1 tuples, plus
the tuples with nontrivial last coordinate at levels 2..N) form a Z-basis:
the square matrix they assemble must have determinant +-1.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product

from . import intdet
from .errors import BudgetError, LampkError, TruncationError
from .grouprep import GroupRepData
from .sparse import SparseIntVector

DEFAULT_COLUMN_BUDGET = 100_000

IrrepTuple = tuple[int, ...]


class LevelVector(SparseIntVector):
    """Integer combination of level tuples; the level is the tuple length."""

    def __init__(self, data=()):
        super().__init__(data)
        for t in self._coeffs:
            if not isinstance(t, tuple) or len(t) == 0:
                raise LampkError(f"level keys must be nonempty tuples, got {t!r}")

    def terms(self) -> list[tuple[IrrepTuple, int]]:
        return sorted(self._coeffs.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def max_level(self) -> int:
        return max((len(t) for t in self._coeffs), default=0)


def s_map(t: IrrepTuple) -> IrrepTuple:
    """Embed level n into level n+1 by appending the trivial index."""
    if len(t) < 1:
        raise LampkError("level tuples have length >= 1")
    return (*t, 0)


def r_map(t: IrrepTuple) -> IrrepTuple:
    """Project level n+1 onto level n (drop the last coordinate)."""
    if len(t) < 2:
        raise LampkError("r_map needs a tuple of length >= 2")
    return t[:-1]


def tuple_dim(group: GroupRepData, t: IrrepTuple) -> int:
    """Dimension of the product representation indexed by the tuple."""
    d = 1
    for idx in t:
        d *= group.dims[idx]
    return d


def f_apply(group: GroupRepData, vec: LevelVector, levels: int) -> LevelVector:
    """Induction map on a vector supported on levels 1..levels-1.

    Linear over the basis rule above; the image lives on levels 1..levels.
    Equivalently, pointwise: the coefficient at a tuple t of level n >= 2
    picks up -dims[t[-1]] times the input coefficient at its projection.
    """
    if levels < 2:
        raise LampkError(f"levels must be >= 2, got {levels}")
    if vec.max_level() > levels - 1:
        raise TruncationError(
            f"input supported at level {vec.max_level()}, "
            f"but the truncation admits inputs only up to level {levels - 1}"
        )
    out: dict[IrrepTuple, int] = {}

    def bump(t, c):
        total = out.get(t, 0) + c
        if total:
            out[t] = total
        else:
            out.pop(t, None)

    for t, c in vec.items():
        bump(t, c)
        for sigma, d in enumerate(group.dims):
            bump((*t, sigma), -c * d)
    return LevelVector(out)


def level_tuples(group: GroupRepData, level: int):
    """All level tuples in lexicographic order."""
    return product(range(group.num_irreps), repeat=level)


def complement_tuples(group: GroupRepData, level: int):
    """The complement basis at one level: level 1 is kept whole, higher
    levels keep the tuples whose last coordinate is nontrivial."""
    if level == 1:
        yield from level_tuples(group, 1)
        return
    for t in level_tuples(group, level):
        if t[-1] != 0:
            yield t


def total_size(group: GroupRepData, levels: int) -> int:
    r = group.num_irreps
    return sum(r**n for n in range(1, levels + 1))


def claim_matrix(group: GroupRepData, levels: int) -> list[list[int]]:
    """The square certificate matrix at the given truncation.

    Rows: all tuples of levels 1..N (level order, then lex).  Columns: the
    induction images of the level-1..N-1 basis tuples, then the inclusion
    of the complement basis.  Column and row counts agree by construction.
    """
    row_index: dict[IrrepTuple, int] = {}
    for n in range(1, levels + 1):
        for t in level_tuples(group, n):
            row_index[t] = len(row_index)
    size = len(row_index)
    matrix = [[0] * size for _ in range(size)]
    col = 0
    for n in range(1, levels):
        for t in level_tuples(group, n):
            matrix[row_index[t]][col] = 1
            for sigma, d in enumerate(group.dims):
                matrix[row_index[(*t, sigma)]][col] = -d
            col += 1
    for n in range(1, levels + 1):
        for t in complement_tuples(group, n):
            matrix[row_index[t]][col] = 1
            col += 1
    assert col == size
    return matrix


@dataclass(frozen=True)
class ClaimCertificate:
    group: str
    levels: int
    size: int
    det: int
    elapsed_ms: int

    @property
    def holds(self) -> bool:
        return self.det in (1, -1)


def claim_check(
    group: GroupRepData, levels: int, budget: int = DEFAULT_COLUMN_BUDGET
) -> ClaimCertificate:
    """Certify the direct-sum splitting at a finite truncation.

    Builds the certificate matrix and returns its exact determinant; the
    splitting holds at this truncation iff the determinant is +-1 (the
    columns then form a Z-basis).
    """
    if levels < 2:
        raise LampkError(f"levels must be >= 2, got {levels}")
    size = total_size(group, levels)
    if size > budget:
        raise BudgetError(
            f"certificate matrix would have {size} columns, over the "
            f"budget of {budget}"
        )
    start = time.monotonic()
    matrix = claim_matrix(group, levels)
    determinant = intdet.det(matrix)
    elapsed_ms = int((time.monotonic() - start) * 1000)
    return ClaimCertificate(
        group=group.name,
        levels=levels,
        size=size,
        det=determinant,
        elapsed_ms=elapsed_ms,
    )
