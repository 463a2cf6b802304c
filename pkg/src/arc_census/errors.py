"""Exception types shared across the package."""


class ArcCensusError(Exception):
    pass


class DegenerateInput(ArcCensusError):
    """Input violates the general-position contract (e.g. co-circular or
    tangent pairs).  Carries the offending arc ids when known."""

    def __init__(self, message: str, pair=None):
        super().__init__(message)
        self.pair = pair


class BoundaryCase(ArcCensusError):
    """A predicate was asked to decide a configuration lying within eps of
    its decision boundary."""


class SpanTooLarge(ArcCensusError):
    """Arc spans at least a semicircle where a sub-semicircle arc is required."""


class OnBoundary(ArcCensusError):
    """Query point lies within eps of a cutting-cell boundary (strict mode)."""


class BuildFailure(ArcCensusError):
    """Cutting construction could not meet the crossing bound after the
    resampling budget."""


class GenerationFailure(ArcCensusError):
    """Instance generator exhausted its resampling budget."""


class ParseError(ArcCensusError):
    def __init__(self, message: str, line_no: int | None = None):
        super().__init__(message)
        self.line_no = line_no
