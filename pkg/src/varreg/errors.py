"""Exception hierarchy shared by every module."""


class VarRegError(Exception):
    """Base class for all errors raised by :mod:`varreg`."""


class DegenerateDenominator(VarRegError, ZeroDivisionError):
    pass


class InvalidParams(VarRegError, ValueError):
    pass


class InvalidMu(InvalidParams):
    pass


class InvalidLambda(InvalidParams):
    pass


class InvalidEvalPoint(InvalidParams):
    pass


class QuadratureError(VarRegError):
    pass


class NoConvergence(QuadratureError):
    """Adaptive subdivision exhausted its panel budget."""


class InvalidPath(QuadratureError, ValueError):
    pass


class ContinuationError(VarRegError):
    pass


class ContinuationStall(ContinuationError):
    """Newton corrector failed to converge at some continuation step."""


class LeftDisk(ContinuationError):
    """The tracked point reached or crossed the unit circle."""


class BranchAmbiguity(ContinuationError):
    """Neither square-root start produced an admissible path."""


class GeometryError(VarRegError, ValueError):
    pass


class TooFewVertices(GeometryError):
    pass


class NonConvexInput(GeometryError):
    pass


class NearDegenerateWarning(UserWarning):
    """Parameters are valid but sit close to a degenerate regime."""
