"""Exception types raised by the certification engine."""


class SVCertError(Exception):
    """Base class for all engine errors."""


class DegenerateDegree(SVCertError, ValueError):
    pass


class ShapeMismatch(SVCertError, ValueError):
    pass


class InvalidDimension(SVCertError, ValueError):
    pass


class NotTangent(SVCertError):
    """A linear space fails first-order tangency at a sampled point."""


class SpanFillsSpace(SVCertError):
    """The tangent span is the whole ambient space; weak defectiveness is vacuous."""


class ShapeNotCovered(SVCertError, ValueError):
    pass


class DegenerateLinearSpace(SVCertError, ValueError):
    pass
