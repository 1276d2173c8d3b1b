"""Exception types raised by thuelab."""


class ThueLabError(Exception):
    """Base class for every error raised by this package."""


class AlphabetOverlap(ThueLabError, ValueError):
    pass


class NotNonrepetitive(ThueLabError, ValueError):
    pass


class NotRainbow(ThueLabError, ValueError):
    pass


class BadCuts(ThueLabError, ValueError):
    pass


class UnknownFamily(ThueLabError, ValueError):
    pass


class BadParameter(ThueLabError, ValueError):
    pass


class EmptyFactor(ThueLabError, ValueError):
    pass


class GraphFormatError(ThueLabError, ValueError):
    """Malformed graph6 or edge-list input."""


class IncompleteColouring(ThueLabError, ValueError):
    pass


class NotIndependent(ThueLabError, ValueError):
    pass


class RepetitiveFactorColouring(ThueLabError, ValueError):
    pass


class ListTooShort(ThueLabError, ValueError):
    pass


class DistinctSelectionFailed(ThueLabError, RuntimeError):
    pass


class TooLarge(ThueLabError, ValueError):
    """An instance exceeds a solver or enumeration guard."""
