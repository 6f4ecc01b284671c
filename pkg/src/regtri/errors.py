"""Exception hierarchy shared by every regtri module."""


class RegtriError(Exception):
    """Base class for all errors raised by regtri."""


class SurfaceError(RegtriError, ValueError):
    """Input faces do not describe a triangulated surface."""


class NonManifoldEdge(SurfaceError):
    pass


class BadLink(SurfaceError):
    pass


class DuplicateFace(SurfaceError):
    pass


class DegenerateFace(SurfaceError):
    pass


class UnknownVertex(RegtriError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotADisc(RegtriError, ValueError):
    pass


class ClosedSurface(NotADisc):
    pass


class Disconnected(RegtriError, ValueError):
    pass


class DegreeTooSmall(RegtriError, ValueError):
    pass


class ResourceLimit(RegtriError, RuntimeError):
    pass


class InternalInvariantViolation(RegtriError, AssertionError):
    """A freshly constructed object failed its own audit (a bug, not bad input)."""


class PrecisionLoss(RegtriError, ArithmeticError):
    pass


class LayerOutOfRange(RegtriError, IndexError):
    pass


class NotRegular(RegtriError, ValueError):
    pass


class NotClosed(RegtriError, ValueError):
    pass


class InputContradictsLemma(RegtriError, ValueError):
    """A closed regular surface of degree < 6 matched none of the known references."""


class UnsupportedInput(RegtriError, ValueError):
    pass


class NumericalDrift(RegtriError, ArithmeticError):
    pass


class TriFormatError(RegtriError, ValueError):
    """Malformed TRI text."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
