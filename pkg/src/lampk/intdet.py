"""Exact integer linear algebra: determinant and rank.

The determinant kernel exists twice (a compiled Cython version and a
pure-Python fallback), selected once at import.  ``det`` is the only hot
path in the package (certificate matrices grow like r^N); rank is used at
desk scale only and stays pure.
"""

from __future__ import annotations

from ._detpure import bareiss_det as bareiss_det_pure

try:
    from ._detcore import bareiss_det as _bareiss_det

    BACKEND = "cython"
except ImportError:  # extension not built; behaviour is identical
    _bareiss_det = bareiss_det_pure
    BACKEND = "python"


def det(rows) -> int:
    """Exact determinant of a square integer matrix."""
    return _bareiss_det(rows)


def rank(rows) -> int:
    """Rank of an integer matrix, computed exactly.

    Fraction-free elimination with the Bareiss division, so intermediate
    entries stay minors of the input instead of growing exponentially.
    """
    m = [list(row) for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rk = 0
    prev = 1
    for col in range(ncols):
        pivot_row = next((i for i in range(rk, nrows) if m[i][col]), None)
        if pivot_row is None:
            continue
        m[rk], m[pivot_row] = m[pivot_row], m[rk]
        pivot = m[rk][col]
        top = m[rk]
        for i in range(rk + 1, nrows):
            a = m[i][col]
            row = m[i]
            m[i] = [(row[j] * pivot - a * top[j]) // prev for j in range(ncols)]
        prev = pivot
        rk += 1
        if rk == nrows:
            break
    return rk
