# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled fraction-free determinant (Bareiss elimination).

Entries stay Python ints (they must: Bareiss intermediates are minors and
overflow any fixed width), so the win over the pure kernel is the loop and
indexing overhead, not the arithmetic itself.
"""


def bareiss_det(rows):
    """Exact determinant of a square integer matrix (list of rows)."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef list m = [list(row) for row in rows]
    cdef Py_ssize_t i, j, k, pivot_row
    cdef int sign = 1
    cdef list pk, ri
    for i in range(n):
        if len(<list> m[i]) != n:
            raise ValueError("matrix must be square")
    prev = 1
    for k in range(n - 1):
        pivot_row = -1
        for i in range(k, n):
            if (<list> m[i])[k] != 0:
                pivot_row = i
                break
        if pivot_row < 0:
            return 0
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        pk = <list> m[k]
        akk = pk[k]
        for i in range(k + 1, n):
            ri = <list> m[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * akk - aik * pk[j]) // prev
            ri[k] = 0
        prev = akk
    return sign * (<list> m[n - 1])[n - 1]
