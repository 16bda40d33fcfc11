"""Shared exception types.

Every error carries a stable machine-readable ``code`` that the CLI
reports on stderr alongside the human-readable message.
"""


class LabError(Exception):
    """Base class for all laboratory errors."""

    code = "error"


class DomainError(LabError):
    """Value falls outside the exact field or a documented parameter domain."""

    code = "domain"


class PoleError(LabError):
    """A gamma evaluation landed on a non-positive integer with no regulator."""

    code = "pole"


class IndeterminateSign(LabError):
    """Interval evaluation could not separate a value from zero."""

    code = "indeterminate-sign"


class MissingParameter(LabError):
    """An operator family parameter is required but was not supplied."""

    code = "missing-parameter"


class DepthExceeded(LabError):
    """A ladder or lattice depth limit was exceeded."""

    code = "depth-exceeded"


class NotConvergent(LabError):
    """A renormalized limit does not exist (a pole survives the eps shift)."""

    code = "not-convergent"


class ChargeAbsent(LabError):
    """The requested angular charge is not present in the state."""

    code = "charge-absent"


class UnsupportedFormat(LabError):
    """Unknown export format."""

    code = "unsupported-format"


class OpSyntaxError(LabError):
    """Operator expression text could not be parsed.

    ``offset`` is the byte position of the offending token.
    """

    code = "syntax"

    def __init__(self, message, offset):
        super().__init__("%s (at byte %d)" % (message, offset))
        self.offset = offset


class UnknownNameError(LabError):
    """Operator name is not in the vocabulary of the requested space."""

    code = "unknown-name"


class ArityError(LabError):
    """A construct was used with the wrong number of arguments."""

    code = "arity"
