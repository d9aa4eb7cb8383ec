class SimplexError(Exception):
    """Base class for every error raised by the library."""

    def __init__(self, message, **details):
        super().__init__(message)
        self.message = message
        self._details = details

    @property
    def code(self):
        return type(self).__name__

    def details(self):
        """Return a JSON-ready description of the error."""
        payload = {"error": self.code, "message": self.message}
        for key, value in self._details.items():
            payload[key] = value if isinstance(value, (int, str, list)) or value is None else str(value)
        return payload


class ConfigurationError(SimplexError, ValueError):
    pass


class InvalidRange(ConfigurationError):
    pass


# Input validation

class InvalidInstance(SimplexError, ValueError):
    pass


class DimensionMismatch(InvalidInstance):
    pass


class NegativePopulation(InvalidInstance):
    pass


class EmptyClasses(InvalidInstance):
    pass


class EmptyStations(InvalidInstance):
    pass


class InvalidLiteral(InvalidInstance):
    pass


class MalformedInstanceFile(InvalidInstance):
    pass


class IndexOutOfRange(SimplexError, IndexError):
    pass


# Algorithm preconditions

class AlgorithmPreconditionError(SimplexError):
    suggestion = None

    def details(self):
        payload = super().details()
        if self.suggestion is not None:
            payload["suggestion"] = self.suggestion
        return payload


class WrongClassCount(AlgorithmPreconditionError):
    suggestion = "explicit2"


class RepeatedCoefficients(AlgorithmPreconditionError):
    suggestion = "gen"


class DegenerateDenominator(AlgorithmPreconditionError):
    suggestion = "convolution"

    def __init__(self, t, i, k):
        super().__init__(
            f"aggregate difference vanished at t={list(t)} between rows {i} and {k}",
            t=list(t),
            i=i,
            k=k,
        )
        self.t = tuple(t)
        self.i = i
        self.k = k


# Oracle guards

class GuardExceeded(SimplexError):
    def __init__(self, message, size, limit):
        super().__init__(message, size=size, limit=limit)
        self.size = size
        self.limit = limit


class StateSpaceTooLarge(GuardExceeded):
    pass


class ExpansionTooLarge(GuardExceeded):
    pass


class ZeroNormalizingConstant(SimplexError, ZeroDivisionError):
    pass
