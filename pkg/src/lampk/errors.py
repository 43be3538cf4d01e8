"""Exception hierarchy shared across the package.

Everything raised on bad *mathematical* input derives from LampkError so the
CLI can map domain failures to a single exit code; genuinely malformed
invocations (unparseable JSON, unknown flags) are usage errors and stay out
of this hierarchy.
"""


class LampkError(Exception):
    """Base class for domain errors raised by lampk."""


class CatalogError(LampkError):
    """Unknown built-in group name."""


class GroupDataError(LampkError):
    """Representation data violates a structural invariant."""


class NonAbelianGroupError(LampkError):
    """A full-shift operation was asked for a non-abelian group.

    The function model on the dual only exists when every irreducible
    representation is one-dimensional, i.e. the group is abelian.
    """


class TruncationError(LampkError):
    """A level vector has support beyond the configured truncation."""


class BudgetError(LampkError):
    """A computation would exceed the configured size budget."""
