class SteinerCodesError(Exception):
    """
    Base class for all errors raised by steinercodes
    """


class ConfigurationError(SteinerCodesError):
    """
    Exception raised for invalid parameters

    This exception indicates incorrect usage, e.g. an extension degree outside the supported range or parameters
    that do not meet the hypothesis an operation relies on. It is raised before any expensive work starts.
    """


class ReduciblePolynomialError(ConfigurationError):
    """
    The polynomial offered as field modulus factors over GF(2)
    """


class NonPrimitivePolynomialError(ConfigurationError):
    """
    The polynomial is irreducible, but its root does not generate the multiplicative group
    """


class ParameterRangeError(ConfigurationError):
    """
    A parameter such as ``e`` lies outside the range an operation is defined for
    """


class EnumerationGuardError(ConfigurationError):
    """
    Exhaustive enumeration was requested for a code whose dimension exceeds the configured guard
    """


class VerificationMismatch(SteinerCodesError):
    """
    An empirical result disagrees with a closed-form prediction

    This is a finding, not a crash: the object that failed to match is attached as ``details``.
    """

    def __init__(self, message: str, details=None):
        super().__init__(message)
        self.details = details


class InconsistencyError(SteinerCodesError):
    """
    Internal inconsistency

    Raised when exact arithmetic produces something that cannot happen for valid input, e.g. a division by
    a power of two leaves a remainder, or a minimal polynomial has a coefficient outside GF(2).
    Usually this signals a bug.
    """
