"""Exception types shared across the package.

Every failure of a mathematical claim (a divisibility that should hold, an
integrality that should hold) is raised as its own exception type so that a
violated theorem surfaces as a loud, named error instead of a silent wrong
value.
"""

from __future__ import annotations


class UwrtError(Exception):
    """Base class for all package errors."""


class NotDivisible(UwrtError):
    """An exact polynomial division left a nonzero remainder."""


class FractionalPowerAtEvenOrder(UwrtError):
    """A polynomial with fractional q-powers was evaluated at a root of even
    order, where no canonical fourth root of q exists."""


class BadRootForTransform(UwrtError):
    """Evaluation rule of a Laplace-transform image applied at a root whose
    order does not have the required gcd with the twist parameter."""


class PoleAtSubstitution(UwrtError):
    """A substitution made a Pochhammer factor in a denominator identically
    zero.  The message names the vanishing factor."""


class UnknownName(UwrtError):
    """Catalog lookup with an unrecognized link or manifold name."""


class CapacityExceeded(UwrtError):
    """A state-sum tensor would exceed the configured size bound."""

    def __init__(self, size: int, bound: int):
        super().__init__(f"state-sum tensor of size {size} exceeds bound {bound}")
        self.size = size
        self.bound = bound


class NotAlgebraicallySplit(UwrtError):
    """Cyclotomic-expansion extraction requires zero framings and zero
    linking matrix."""


class IntegralityViolation(UwrtError):
    """A coefficient failed a divisibility or integrality guarantee.  Either
    an implementation bug or a convention mismatch; never ignored."""


class NotRationalHomologySphere(UwrtError):
    """Operation requires a nondegenerate linking matrix."""


class NotDiagonalPM1(UwrtError):
    """Unified-invariant assembly requires a diagonal linking matrix with all
    entries +1 or -1."""


class TruncationTooShallow(UwrtError):
    """A truncated Habiro-ring element was asked for information beyond its
    truncation order.  Carries the truncation that would be needed."""

    def __init__(self, message: str, required: int | None = None):
        super().__init__(message)
        self.required = required


class BasisConversionFailure(UwrtError):
    """Rewriting a cyclotomic value in a power basis over a subfield failed;
    signals an arithmetic bug."""
