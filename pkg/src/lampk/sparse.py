"""Sparse integer combinations over an arbitrary hashable key set.

This is the free abelian group on the key set: a finite map key -> nonzero
int with exact (arbitrary-precision) coefficient arithmetic.  Zero
coefficients are never stored, so equality of the internal dicts is equality
in the group.
"""

from __future__ import annotations

from collections.abc import Mapping
from typing import Callable, Hashable, Iterable, Iterator


class SparseIntVector:
    """Immutable finite integer combination of hashable keys."""

    __slots__ = ("_coeffs",)

    def __init__(self, data: Mapping | Iterable[tuple[Hashable, int]] = ()):
        if isinstance(data, SparseIntVector):
            coeffs = dict(data._coeffs)
        else:
            items = data.items() if isinstance(data, Mapping) else data
            coeffs: dict = {}
            for key, c in items:
                c = int(c)
                if c == 0:
                    continue
                total = coeffs.get(key, 0) + c
                if total:
                    coeffs[key] = total
                else:
                    del coeffs[key]
        self._coeffs = coeffs

    @classmethod
    def of(cls, key, coeff: int = 1):
        return cls(((key, coeff),))

    def coeff(self, key) -> int:
        return self._coeffs.get(key, 0)

    def keys(self):
        return self._coeffs.keys()

    def items(self):
        return self._coeffs.items()

    def map_keys(self, fn: Callable):
        """Linear extension of a key map (which must be injective)."""
        return type(self)((fn(k), c) for k, c in self._coeffs.items())

    def __iter__(self) -> Iterator:
        return iter(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __contains__(self, key) -> bool:
        return key in self._coeffs

    def __add__(self, other):
        if not isinstance(other, SparseIntVector):
            return NotImplemented
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            total = out.get(key, 0) + c
            if total:
                out[key] = total
            else:
                del out[key]
        result = object.__new__(type(self))
        result._coeffs = out
        return result

    def __sub__(self, other):
        if not isinstance(other, SparseIntVector):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        result = object.__new__(type(self))
        result._coeffs = {k: -c for k, c in self._coeffs.items()}
        return result

    def __mul__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n == 0:
            return type(self)()
        result = object.__new__(type(self))
        result._coeffs = {k: n * c for k, c in self._coeffs.items()}
        return result

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseIntVector):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        if not self._coeffs:
            return f"{type(self).__name__}()"
        body = ", ".join(f"{k!r}: {c}" for k, c in self._coeffs.items())
        return f"{type(self).__name__}({{{body}}})"
