"""Exception hierarchy shared by every module."""


class RainbowSatError(ValueError):
    """Base class for all library errors."""


class DuplicateEdge(RainbowSatError):
    pass


class BadColor(RainbowSatError):
    pass


class BadVertex(RainbowSatError):
    pass


class MissingEdge(RainbowSatError):
    pass


class NotANonEdge(RainbowSatError):
    pass


class DegeneratePattern(RainbowSatError):
    """Pattern without edges (or with isolated vertices where forbidden)."""


class PaletteTooSmall(RainbowSatError):
    pass


class NotRainbowFree(RainbowSatError):
    pass


class TooLarge(RainbowSatError):
    pass


class Disconnected(RainbowSatError):
    pass


class TooSmall(RainbowSatError):
    pass


class NoSuchSystem(RainbowSatError):
    pass


class OddOrder(RainbowSatError):
    pass


class NoQualifyingEdge(RainbowSatError):
    pass


class BadParameters(RainbowSatError):
    pass


class BadOrder(RainbowSatError):
    pass


class NotAStarForest(RainbowSatError):
    pass


class BadInput(RainbowSatError):
    pass


class RetriesExhausted(RainbowSatError):
    pass


class ParseError(RainbowSatError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
