"""Finite groups presented by their irreducible-representation dimensions.

Every computation in this package depends on a finite group F only through
the vector of irrep dimensions (d_1, ..., d_r) and the order |F|:
induction multiplicities, minimal-projection traces, and the basis counts
are all functions of this data.  Character tables are deliberately not
modelled.

Index 0 always denotes the trivial representation (d_1 = 1); word and tuple
entries throughout the package are indices into ``dims``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import CatalogError, GroupDataError

ISO = "iso"
NOT_ISO = "not-iso"
UNDECIDED = "undecided"


@dataclass(frozen=True)
class GroupRepData:
    """A finite group known through |F| and its irrep dimension vector."""

    name: str
    order: int
    dims: tuple[int, ...]
    abelian_order: int = field(init=False)

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if self.order < 2:
            raise GroupDataError(
                f"{self.name!r}: order must be at least 2, got {self.order}"
            )
        if not dims or dims[0] != 1:
            raise GroupDataError(
                f"{self.name!r}: index 0 must be the trivial representation "
                f"(dims[0] = 1), got dims = {dims}"
            )
        if any(d < 1 for d in dims):
            raise GroupDataError(f"{self.name!r}: irrep dimensions must be positive")
        square_sum = sum(d * d for d in dims)
        if square_sum != self.order:
            raise GroupDataError(
                f"{self.name!r}: sum of squared dimensions is {square_sum}, "
                f"expected the group order {self.order}"
            )
        abelian_order = sum(1 for d in dims if d == 1)
        if self.order % abelian_order != 0:
            raise GroupDataError(
                f"{self.name!r}: count of 1-dimensional irreps "
                f"({abelian_order}) does not divide the order {self.order}"
            )
        object.__setattr__(self, "abelian_order", abelian_order)

    @property
    def num_irreps(self) -> int:
        """r = |F^|, the size of the word/tuple alphabet."""
        return len(self.dims)

    @property
    def is_abelian(self) -> bool:
        return self.abelian_order == self.order


# Non-cyclic catalog entries; cyclic groups are generated on demand.
_CATALOG: dict[str, tuple[int, tuple[int, ...]]] = {
    "klein4": (4, (1, 1, 1, 1)),
    "S3": (6, (1, 1, 2)),
    "D4": (8, (1, 1, 1, 1, 2)),
    "Q8": (8, (1, 1, 1, 1, 2)),
    "A4": (12, (1, 1, 1, 3)),
    "S4": (24, (1, 1, 2, 3, 3)),
    "A5": (60, (1, 3, 3, 4, 5)),
}

_CYCLIC_RE = re.compile(r"^(?:c(\d+)|cyclic\((\d+)\))$", re.IGNORECASE)


def builtin(name: str) -> GroupRepData:
    """Look up a group in the built-in catalog.

    Cyclic groups are written ``C5`` or ``cyclic(5)``; the remaining names
    are klein4, S3, D4, Q8, A4, S4 and A5 (case-insensitive).
    """
    cyclic = _CYCLIC_RE.match(name.strip())
    if cyclic:
        n = int(cyclic.group(1) or cyclic.group(2))
        if n < 2:
            raise CatalogError(f"cyclic({n}): order must be at least 2")
        return GroupRepData(name=f"C{n}", order=n, dims=(1,) * n)
    for key, (order, dims) in _CATALOG.items():
        if key.lower() == name.strip().lower():
            return GroupRepData(name=key, order=order, dims=dims)
    available = "C<n> (n >= 2), " + ", ".join(_CATALOG)
    raise CatalogError(f"unknown group {name!r}; available: {available}")


def validate(name: str, order: int, dims) -> GroupRepData:
    """Build GroupRepData from raw user data, checking every invariant."""
    return GroupRepData(name=name, order=int(order), dims=tuple(dims))


def fingerprint(group: GroupRepData) -> tuple[int, tuple[int, ...], int]:
    """(|F|, sorted irrep dims, |F^ab|); invariant under irrep reordering."""
    return (group.order, tuple(sorted(group.dims)), group.abelian_order)


def csalgebras_isomorphic_abelian_case(
    f1: GroupRepData, f2: GroupRepData
) -> str:
    """Decide isomorphism of the two lamplighter C*-algebras when possible.

    With at least one abelian factor the answer is complete: the algebras
    are isomorphic exactly when both groups are abelian of the same order.
    With two non-abelian factors we return ``undecided``.
    """
    if not (f1.is_abelian or f2.is_abelian):
        return UNDECIDED
    if f1.is_abelian and f2.is_abelian and f1.order == f2.order:
        return ISO
    return NOT_ISO
