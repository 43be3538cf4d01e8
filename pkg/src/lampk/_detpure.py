"""Pure-Python fraction-free determinant (Bareiss elimination).

Reference implementation for the compiled kernel in _detcore.pyx; both must
return identical values on every integer matrix.  All divisions below are
exact by the Bareiss identity, so the result is an exact integer.
"""

from __future__ import annotations


def bareiss_det(rows) -> int:
    """Exact determinant of a square integer matrix (list of rows)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(row) for row in rows]
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot_row = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pk = m[k]
        akk = pk[k]
        for i in range(k + 1, n):
            ri = m[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * pk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * m[n - 1][n - 1]
