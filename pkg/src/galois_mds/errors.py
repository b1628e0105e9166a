"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class GaloisMDSError(Exception):
    """Base class for all errors raised by :mod:`galois_mds`."""


class ContextMismatchError(GaloisMDSError):
    """Operands belong to different rings or fields."""


class NotAUnitError(GaloisMDSError, ZeroDivisionError):
    """Inversion of a zero divisor (a nilpotent element or zero)."""


class InvalidDivisorError(GaloisMDSError):
    """Polynomial division by a divisor whose leading coefficient is not a unit."""


class InvalidInputError(GaloisMDSError, ValueError):
    """Arguments violate a documented precondition."""


class NotBasicIrreducibleError(InvalidInputError):
    """The reduction of a modulus modulo p is reducible."""


class NoGeneratorError(GaloisMDSError):
    """No Teichmüller generator of order p^m - 1 could be produced."""


class NoIsomorphismError(GaloisMDSError):
    """No conjugate exponent maps one ring presentation onto another."""


class ConstructionRejected(InvalidInputError):
    """A Cauchy construction's hypotheses are violated.

    ``violations`` holds one human-readable line per offending condition,
    e.g. ``"x_2 + y_3 = 0 is not a unit"``; ``theorem`` names the construction
    whose hypotheses were checked.
    """

    def __init__(self, theorem: str, violations: list[str]):
        self.theorem = theorem
        self.violations = list(violations)
        detail = "; ".join(self.violations)
        super().__init__(f"{theorem} hypotheses violated: {detail}")


class DocumentError(GaloisMDSError):
    """A JSON document does not match its schema."""

    def __init__(self, message: str, field: str | None = None):
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)
