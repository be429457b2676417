"""Exception hierarchy.

Input problems derive from :class:`QuiverError` (a ``ValueError``); broken
internal invariants derive from :class:`InternalInvariantError`.  The CLI maps
these families onto its exit codes.
"""


class GreenSeqError(Exception):
    """Base class for all package errors."""


class QuiverError(GreenSeqError, ValueError):
    """The input quiver is malformed or outside the supported classes."""


class InvalidQuiver(QuiverError):
    pass


class CyclicQuiver(QuiverError):
    pass


class DisconnectedQuiver(QuiverError):
    pass


class UnsupportedQuiver(QuiverError):
    """Underlying graph is neither Dynkin nor extended Dynkin."""


class NotSinkOrSource(QuiverError):
    pass


class NonUnimodular(QuiverError):
    pass


class TooManyOrientations(GreenSeqError, ValueError):
    pass


class InternalInvariantError(GreenSeqError, RuntimeError):
    """Something that the theory guarantees did not hold."""


class OrbitOverflow(InternalInvariantError):
    pass


class LoopOverflow(InternalInvariantError):
    pass


class IndexOutOfCatalog(InternalInvariantError):
    pass


class CardinalityViolation(InternalInvariantError):
    pass


class SinkUnreachable(InternalInvariantError):
    pass


class CycleDetected(InternalInvariantError):
    pass


class SignIncoherence(InternalInvariantError):
    pass


class MismatchFound(GreenSeqError):
    """The oracle and the Hasse-quiver pipeline disagree."""
