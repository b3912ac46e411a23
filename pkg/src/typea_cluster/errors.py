"""Exception hierarchy shared by all modules.

Every error carries a short machine-readable ``code`` so the CLI can map
failures to exit codes and JSON reports.
"""


class TypeAError(Exception):
    code = "ERROR"

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code


class InvalidTriangulation(TypeAError, ValueError):
    """Input does not describe an admissible triangulation.

    ``code`` is one of CROSSING_DIAGONALS, NOT_MAXIMAL, NON_ACYCLIC_QUIVER,
    BAD_LABELS or SCHEMA.
    """

    code = "SCHEMA"


class NotDivisible(TypeAError, ArithmeticError):
    code = "NOT_DIVISIBLE"


class LimitExceeded(TypeAError, RuntimeError):
    code = "LIMIT_EXCEEDED"


class SizeLimit(TypeAError, RuntimeError):
    code = "SIZE_LIMIT"


class MalformedDenominator(TypeAError, RuntimeError):
    code = "MALFORMED_DENOMINATOR"


class VerificationFailed(TypeAError, RuntimeError):
    code = "VERIFICATION_FAILED"
