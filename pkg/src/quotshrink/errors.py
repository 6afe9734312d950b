"""Exception hierarchy.

Two families matter to callers: ``PreconditionError`` (bad input, exit code 1
on the command line) and ``InvariantViolation`` (an internal check failed,
exit code 2).
"""


class QuotShrinkError(Exception):
    """Base class for every error raised by this package."""


class PreconditionError(QuotShrinkError, ValueError):
    pass


class InvariantViolation(QuotShrinkError, RuntimeError):
    pass


class DegreeMismatch(PreconditionError):
    pass


class MalformedCycles(PreconditionError):
    pass


class PointOutOfRange(PreconditionError):
    pass


class NotASubgroup(PreconditionError):
    pass


class NotInGroup(PreconditionError):
    pass


class NotNormal(PreconditionError):
    pass


class NotMinimalNormal(PreconditionError):
    pass


class NotTransitive(PreconditionError):
    pass


class NotInvariant(PreconditionError):
    pass


class NotSemisimple(PreconditionError):
    pass


class AbelianFactor(PreconditionError):
    pass


class NotInjective(PreconditionError):
    pass


class NotAHomomorphism(PreconditionError):
    pass


class DegenerateBase(PreconditionError):
    pass


class BadPoints(PreconditionError):
    pass


class OrderCapExceeded(PreconditionError):
    pass


class PreconditionFailed(PreconditionError):
    pass


class LemmaViolated(InvariantViolation):
    pass


class BoundViolation(InvariantViolation):
    pass


class CertificateError(QuotShrinkError):
    """A certificate failed re-verification."""


class KernelMismatch(CertificateError):
    pass


class TraceMismatch(KernelMismatch):
    pass


class BoundMismatch(CertificateError):
    pass
