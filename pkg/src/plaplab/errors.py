"""Exception classes shared across the package."""


class ParameterError(ValueError):
    """A constructor or configuration argument is out of its admissible range."""


class RegimeError(ValueError):
    """Inputs are valid numbers but lie outside the regime where a quantity
    or check is defined (e.g. p beyond the admissible window, sigma outside
    the applicability window of an estimate)."""


class SolutionFormatError(ValueError):
    """A solution file could not be parsed back into a RadialSolution."""
