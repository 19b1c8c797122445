"""Exception hierarchy.

Every error carries a stable ``code`` used by the CLI as a machine-parsable
prefix, so each failure path is distinguishable in scripts.
"""


class MomentError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"


class ParseError(MomentError, ValueError):
    code = "parse-error"


class EigenFailure(MomentError):
    code = "eigen-failure"


class DomainViolation(MomentError, ValueError):
    code = "domain-violation"


class EmptyBasis(MomentError):
    code = "empty-basis"


class DefectMismatch(MomentError):
    code = "defect-mismatch"


class RouteDisagreement(MomentError):
    """Determinacy verdicts from the defect count and the linear systems differ."""

    code = "route-disagreement"

    def __init__(self, message, defect=None, residuals=None):
        super().__init__(message)
        self.defect = defect
        self.residuals = residuals


class NotDeterminate(MomentError):
    code = "not-determinate"


class NotIndeterminate(MomentError):
    code = "not-indeterminate"


class NonUnitary(MomentError):
    code = "non-unitary"


class NotUnitary(MomentError, ValueError):
    code = "not-unitary"


class ExtensionNotUnitary(MomentError):
    code = "extension-not-unitary"


class NodeDegeneracy(MomentError):
    code = "node-degeneracy"


class SingularKernel(MomentError):
    code = "singular-kernel"


class SingularSystem(MomentError):
    code = "singular-system"


class DiskViolation(MomentError, ValueError):
    code = "disk-violation"


class NotContractive(MomentError, ValueError):
    code = "not-contractive"


class NotSolvable(MomentError):
    code = "not-solvable"
