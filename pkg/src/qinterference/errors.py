"""Exception and warning types raised across the package."""


class QInterferenceError(Exception):
    """Base class for all package errors."""


class ValidationError(QInterferenceError):
    """A matrix failed one of the density-matrix invariants.

    ``magnitude`` holds the offending value (deviation or eigenvalue).
    """

    def __init__(self, message, magnitude):
        super().__init__(message)
        self.magnitude = float(magnitude)


class NonHermitian(ValidationError):
    pass


class TraceDeviation(ValidationError):
    pass


class NegativeEigenvalue(ValidationError):
    pass


class NormDeviation(QInterferenceError):
    def __init__(self, message, magnitude):
        super().__init__(message)
        self.magnitude = float(magnitude)


class ParameterOutOfRange(QInterferenceError, ValueError):
    pass


class UnknownState(QInterferenceError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NonUnitary(QInterferenceError):
    def __init__(self, message, magnitude):
        super().__init__(message)
        self.magnitude = float(magnitude)


class ArityMismatch(QInterferenceError):
    pass


class DimensionMismatch(QInterferenceError):
    pass


class DimUnsupported(QInterferenceError):
    pass


class EnvelopeSingularity(QInterferenceError):
    """A diagonal envelope denominator reached zero; ``location`` is the offending point."""

    def __init__(self, message, location):
        super().__init__(message)
        self.location = tuple(float(z) for z in location)


class GridTooCoarse(QInterferenceError):
    pass


class NonConvergence(QInterferenceError):
    """Optimizer stopped without meeting its tolerance; ``best`` is the best value found."""

    def __init__(self, message, best):
        super().__init__(message)
        self.best = float(best)


class ParseError(QInterferenceError):
    def __init__(self, message, line=None, column=None):
        loc = "" if line is None else f" (line {line}, column {column})"
        super().__init__(message + loc)
        self.line = line
        self.column = column


class UnknownFamily(QInterferenceError, ValueError):
    pass


class FarFieldWarning(UserWarning):
    """Geometry is outside the regime where the linearized path lengths hold."""


class HermiticityWarning(UserWarning):
    """Input matrix was not exactly Hermitian and has been symmetrized."""
