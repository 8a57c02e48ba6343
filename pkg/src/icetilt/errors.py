"""Exceptions raised across the package.

Each error carries the name of the stage that raised it in ``stage`` so the
CLI can report where a failure came from.
"""


class IcetiltError(Exception):
    stage = "core"


class CapExceeded(IcetiltError):
    """An enumeration would exceed its configured size cap."""

    stage = "resource"


class SchemaError(IcetiltError, ValueError):
    stage = "algebra"


class NonComposablePath(SchemaError):
    pass


class NonAdmissible(SchemaError):
    pass


class NotFiniteDimensional(SchemaError):
    pass


class UnknownSummand(IcetiltError):
    """A direct summand matched no entry of the indecomposable table."""

    stage = "modcat"


class IncompleteBound(UserWarning):
    """Indecomposables exist beyond the per-vertex dimension bound."""


class IncompleteTable(IcetiltError):
    """The table could not be filled because the dimension bound is too small."""

    stage = "resource"


class TooManyIndecs(IcetiltError):
    stage = "lattice"


class NotWide(IcetiltError):
    stage = "lattice"


class NoBrick(IcetiltError):
    stage = "ice"


class MultipleBricks(IcetiltError):
    stage = "ice"


class NotEnoughProjectives(IcetiltError):
    stage = "ice"


class CriteriaDisagree(IcetiltError):
    stage = "ice"


class BijectionViolation(IcetiltError):
    stage = "ice"


class NotHereditary(IcetiltError):
    stage = "mutation"


class RigidRequiresHereditary(NotHereditary):
    pass


class NotASummand(IcetiltError, ValueError):
    stage = "mutation"


class TheoremViolation(IcetiltError):
    stage = "mutation"
