"""Exception hierarchy shared by the whole package.

Every library error derives from MotivicError and carries a stable
machine-readable ``code`` used by the command line tool when it emits
JSON error objects and picks exit codes.
"""

from __future__ import annotations


class MotivicError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"


class NotPrimeError(MotivicError):
    """The characteristic passed to a field constructor is not prime."""

    code = "not-prime"


class DegreeOutOfRangeError(MotivicError):
    """Extension degree outside the supported range."""

    code = "degree-out-of-range"


class ContextMismatchError(MotivicError):
    """Field elements from different field contexts were mixed."""

    code = "context-mismatch"


class DivisionByZeroError(MotivicError, ZeroDivisionError):
    """Inversion of the zero field element."""

    code = "division-by-zero"


class BudgetExceededError(MotivicError):
    """An exhaustive enumeration would exceed the configured budget."""

    code = "budget-exceeded"

    def __init__(self, message: str, needed: int, budget: int):
        super().__init__(message)
        self.needed = needed
        self.budget = budget


class VarietySyntaxError(MotivicError):
    """Malformed variety or scenario text.  Carries the offset at which
    parsing failed."""

    code = "syntax"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ValidationError(MotivicError):
    """Structurally well-formed input that violates a semantic rule
    (non-homogeneous projective system, conflicting base fields, ...)."""

    code = "validation"


class InvalidComplementError(ValidationError):
    """Complement construction whose closed part is not recognised as a
    closed subvariety of the ambient part."""

    code = "invalid-complement"


class NonIntegralProfileError(MotivicError):
    """Point counts that do not come from a variety: the closed-point
    recursion produced a negative or fractional multiplicity."""

    code = "non-integral-profile"


class NonIntegralSeriesError(MotivicError):
    """Ghost components with no integral preimage in the Witt ring."""

    code = "non-integral-series"


class PrecisionMismatchError(MotivicError):
    """Arithmetic on Witt vectors of different precision."""

    code = "precision-mismatch"


class InsufficientDataError(MotivicError):
    """Too few series coefficients for the requested reconstruction."""

    code = "insufficient-data"


class NonIntegralCoefficientsError(MotivicError):
    """A rational form exists over Q but not over Z; the input is not a
    zeta function of anything."""

    code = "non-integral-coefficients"


class NoRationalFormError(MotivicError):
    """No rational function within the degree bound matches the series."""

    code = "no-rational-form"


class ZeroInputError(MotivicError):
    """Zero passed where an element of Q* is required."""

    code = "zero-input"


class NotOddPrimeError(MotivicError):
    """Residue-symbol prime that is not an odd prime."""

    code = "not-odd-prime"


class UnsupportedSpaceError(MotivicError):
    """Space outside the cohomology catalog."""

    code = "unsupported-space"


class UnsupportedScenarioError(MotivicError):
    """Scenario outside the evaluable range (bad base field for the
    chosen symbol, unsupported automorphism, ...)."""

    code = "unsupported-scenario"


class UnsupportedCycleLengthError(UnsupportedScenarioError):
    """Permutation with a cycle longer than two."""

    code = "unsupported-cycle-length"


class InternalCountError(MotivicError):
    """Consistency check inside the counting machinery failed; indicates
    a bug, not bad input."""

    code = "internal"
