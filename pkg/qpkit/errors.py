# qpkit.errors


"""Exceptions raised by qpkit operations.

All errors derive from ``QPError`` which is a ``ValueError``, so callers
written against plain ``ValueError`` keep working.
"""


import logging
log = logging.getLogger(__name__)


class QPError(ValueError):
    """Base class of all qpkit errors."""

    #: CLI exit code used when the error reaches the command line
    exit_code = 1


class MalformedQP(QPError):
    pass


class DanglingArrow(MalformedQP):
    pass


class NonCyclicTerm(MalformedQP):
    pass


class ZeroCoefficient(MalformedQP):
    pass


class DegreeExceeded(QPError):
    exit_code = 2


class UndeterminedDimension(QPError):
    exit_code = 2


class ReductionBoundExceeded(QPError):
    exit_code = 2


class SizeBoundExceeded(QPError):
    exit_code = 2

    def __init__(self, msg, partial=None):
        super().__init__(msg)
        self.partial = partial


class NotACut(QPError):
    pass


class NotSelfinjective(QPError):
    pass


class NonAdmissibleRelation(QPError):
    pass


class NonMinimalRelations(QPError):
    pass


class MixedEndpointRelation(QPError):
    pass


class NotStrictSource(QPError):
    pass


class NotStrictSink(QPError):
    pass


class NoSequence(QPError):
    pass


class NotCompatible(QPError):
    pass


class TwoCycleAtVertex(QPError):
    pass


class OrbitPreconditionViolated(QPError):
    pass


class NotPlanarMutable(QPError):
    pass


class Disconnected(QPError):
    pass


class NotPlanar(QPError):
    pass


class EmbeddingMismatch(QPError):

    def __init__(self, msg, faces=(), cells=()):
        super().__init__(msg)
        self.faces = list(faces)
        self.cells = list(cells)


class BadParameter(QPError):
    pass


class NotAlternating(QPError):
    pass


class IllegalFacePattern(QPError):
    pass


class InvariantViolation(QPError):
    """A theorem-backed postcondition failed; indicates a bug or bad input."""
    pass
