"""Exception hierarchy for acidfront.

Input errors map to CLI exit code 1, numerical failures to exit code 2.
"""


class AcidFrontError(Exception):
    """Base class for every error raised by acidfront."""


class InputError(AcidFrontError, ValueError):
    """Invalid grid, parameters, data or configuration."""


class NumericalError(AcidFrontError, RuntimeError):
    """A scheme could not produce a valid next state."""


# Core
class InvalidDomain(InputError):
    pass


class NonIntegerCellCount(InputError):
    pass


class NegativeParameter(InputError):
    pass


class JumpOutsideDomain(InputError):
    pass


class LengthMismatch(InputError):
    pass


class InvalidSpec(InputError):
    """Spec combination the variant cannot honour."""


# Analysis
class ZeroJump(InputError):
    pass


class EmptySeries(InputError):
    pass


class NonPositiveD(InputError):
    pass


class FrontNotFound(InputError):
    pass


class BoundaryContamination(InputError):
    pass


# Run configuration
class ParseError(InputError):
    """Malformed line in a run config."""

    def __init__(self, line: int, message: str) -> None:
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}")


class UnknownKey(ParseError):
    pass


class UnknownExperiment(InputError):
    pass


# Schemes
class ZeroPivot(NumericalError):
    pass


class NonFiniteState(NumericalError):
    pass


class CflViolation(NumericalError):
    pass


class StiffnessWarning(UserWarning):
    """Explicit relaxation step larger than the relaxation time."""


# Output
class IoError(AcidFrontError):
    """Writing results failed."""

    def __init__(self, path: str, message: str) -> None:
        self.path = path
        super().__init__(f"{path}: {message}")
