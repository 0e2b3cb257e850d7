"""Exception hierarchy for chromakh.

Input problems derive from ``ValueError`` and map to CLI exit code 2;
broken internal invariants derive from ``RuntimeError`` and map to exit code 3.
"""


class ChromaKhError(Exception):
    """Base class for all chromakh errors."""

    exit_code = 3


class InputError(ChromaKhError, ValueError):
    """Bad user input: malformed diagrams, impossible moves, bad pairings."""

    exit_code = 2


class InvariantViolation(ChromaKhError, RuntimeError):
    """An identity that must hold by construction failed."""

    exit_code = 3


# Input errors


class MalformedPD(InputError):
    pass


class NonPlanar(InputError):
    pass


class OrientationInconsistent(InputError):
    pass


class UnknownComponent(InputError):
    pass


class PairingMismatch(InputError):
    pass


class ColorMismatch(InputError):
    pass


class InvalidSite(InputError):
    pass


class InvalidMove(InputError):
    pass


class NonAdjacentPair(InputError):
    pass


class OutOfRange(InputError):
    pass


class NotACover(InputError):
    pass


# Invariant violations


class NonDivisible(InvariantViolation):
    pass


class DegreeMismatch(InvariantViolation):
    pass


class MoveValidationFailed(InvariantViolation):
    pass


class InconsistentSquares(InvariantViolation):
    pass


class NonProportionalSquare(InvariantViolation):
    pass


class AmbiguousE(InvariantViolation):
    pass


__all__ = [
    "ChromaKhError",
    "InputError",
    "InvariantViolation",
    "MalformedPD",
    "NonPlanar",
    "OrientationInconsistent",
    "UnknownComponent",
    "PairingMismatch",
    "ColorMismatch",
    "InvalidSite",
    "InvalidMove",
    "NonAdjacentPair",
    "OutOfRange",
    "NotACover",
    "NonDivisible",
    "DegreeMismatch",
    "MoveValidationFailed",
    "InconsistentSquares",
    "NonProportionalSquare",
    "AmbiguousE",
]
