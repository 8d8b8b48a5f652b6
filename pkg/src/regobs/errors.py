"""Exception hierarchy.

Every error raised deliberately by the library derives from ``RegObsError``.
Errors caused by bad *input* (malformed scenario files, mismatched shapes,
unknown names) derive from ``InputError``; the CLI maps those to exit code 2.
"""

from __future__ import annotations


class RegObsError(Exception):
    pass


class InputError(RegObsError):
    pass


class InternalConsistencyError(RegObsError):
    """A result that holds by construction did not hold. Always a bug."""


# --- exact-linear -----------------------------------------------------------

class DimensionMismatch(InputError):
    pass


class SingularMatrix(RegObsError):
    pass


class InconsistentSystem(RegObsError):
    pass


class NotADirectSum(InputError):
    pass


class NotCanonical(InputError):
    pass


# --- gen-inverse / chains ---------------------------------------------------

class NotAnInnerInverse(RegObsError):
    pass


class NotAGeneralizedInverse(RegObsError):
    pass


class OddChainLength(InputError):
    pass


class NotNRegular(RegObsError):
    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class TheoremContradiction(InternalConsistencyError):
    pass


# --- obstructed categories --------------------------------------------------

class UnknownName(InputError):
    pass


class NotRegular(RegObsError):
    """A cocycle identity failed.

    ``index`` is the 1-based position of the arrow whose identity failed and
    ``witness`` a standard basis column vector on which the two sides differ.
    """

    def __init__(self, message: str, index: int | None = None, witness=None):
        super().__init__(message)
        self.index = index
        self.witness = witness


class ObjectNotOnCocycle(InputError):
    pass


class RetractionFailure(InputError):
    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class SmallCycleNotTrivial(InputError):
    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class LengthMismatch(InputError):
    pass


class ImageNotACocycle(InputError):
    pass


# --- algebra ----------------------------------------------------------------

class InvariantViolation(InputError):
    pass


class NotRegularAlgebra(RegObsError):
    pass


class NotMultiplicative(RegObsError):
    pass


# --- tqft -------------------------------------------------------------------

class BoundaryMismatch(InputError):
    pass


class NoOppositeDeclared(InputError):
    pass


class UnassignedLabel(InputError):
    pass


class UnassignedGenerator(InputError):
    pass


class ShapeMismatch(InputError):
    pass


# --- scenario files ---------------------------------------------------------

class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class SchemaError(InputError):
    def __init__(self, message: str, key: str | None = None):
        super().__init__(message if key is None else f"{key}: {message}")
        self.key = key


class RationalFormatError(InputError):
    pass
