"""Exception hierarchy.

Every error carries a stable ``code`` (used verbatim in CLI error
envelopes) and, when it can be pinned down, the offending field.
"""


class RealOrientError(ValueError):
    code = "Error"

    def __init__(self, message, field=None):
        super().__init__(message)
        self.message = message
        self.field = field


class ConstraintViolation(RealOrientError):
    code = "ConstraintViolation"


class InconsistentFlags(RealOrientError):
    code = "InconsistentFlags"


class GenusTooSmall(RealOrientError):
    code = "GenusTooSmall"


class CurveMismatch(RealOrientError):
    code = "CurveMismatch"


class IllegalRelabeling(RealOrientError):
    code = "IllegalRelabeling"


class EmptyRealPart(RealOrientError):
    code = "EmptyRealPart"


class NotSeparating(RealOrientError):
    code = "NotSeparating"


class PreconditionViolated(RealOrientError):
    code = "PreconditionViolated"


class RankTooSmall(RealOrientError):
    code = "RankTooSmall"


class CaseMismatch(RealOrientError):
    code = "CaseMismatch"


class OutOfRange(RealOrientError):
    code = "OutOfRange"


class DegreeOutOfRange(RealOrientError):
    code = "DegreeOutOfRange"


class NoFixedPoint(RealOrientError):
    code = "NoFixedPoint"


class ValidationError(RealOrientError):
    code = "ValidationError"


class BoundTooLarge(RealOrientError):
    code = "BoundTooLarge"


class OracleMismatch(AssertionError):
    """A closed formula disagreed with its brute-force oracle.

    This is never expected; it signals a bug, not bad input.
    """
