"""Exception hierarchy shared by all slimhex modules."""


class SlimhexError(Exception):
    """Base class for every error raised by this package."""


class GeometryError(SlimhexError):
    pass


class BadLine(GeometryError):
    """A line has repeated or out-of-range point ids, or is not a triple."""


class NotPartialLinear(GeometryError):
    """Two distinct points lie on two distinct lines."""


class NotCollinear(GeometryError):
    pass


class NotDistanceTwo(GeometryError):
    pass


class NotDistanceThree(GeometryError):
    pass


class TooFewCommonNeighbours(GeometryError):
    pass


class AxiomViolation(GeometryError):
    """A near-polygon axiom (or a theorem that follows from it) failed."""


class NotDisjoint(GeometryError):
    pass


class NotBig(GeometryError):
    pass


class DegenerateForm(SlimhexError):
    """A bilinear form that must be non-degenerate has a nonzero radical."""


class ParityViolation(SlimhexError):
    """Some line meets the distance-3 set of a point in an odd number of points."""


class InconsistentSystem(SlimhexError):
    """The central-bit system has no solution: no non-abelian representation of this shape."""


class ParseError(SlimhexError):
    pass


class ValidationError(SlimhexError):
    pass


class InternalError(SlimhexError):
    """A built-in construction produced wrong counts."""
