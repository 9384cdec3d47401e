"""Exception types shared across the package.

Errors fall into three groups, which the CLI and service map to exit codes
and HTTP statuses:

* input problems (bad parameters, codes without the required structure),
* resource caps (ambient field too large, enumeration too big),
* internal invariant failures (two computation paths disagreed; these
  indicate a bug and are never caught inside the library).
"""
from __future__ import annotations


class SkewRankError(Exception):
    """Base class for all package errors."""


# ---------------------------------------------------------------- input ----

class InputError(SkewRankError):
    """The request itself is malformed or out of the supported domain."""


class NonPrimeCharacteristic(InputError):
    pass


class SkewDivisibilityViolated(InputError):
    """m must divide r*n so that GF(q^m) embeds in GF(q^{rn})."""


class UndeclaredSubfield(InputError):
    """The requested GF(q^d) is not a subfield of the ambient field."""


class ZeroInput(InputError):
    pass


class ZeroPoly(InputError):
    pass


class BothZero(InputError):
    pass


class NotInBaseField(InputError):
    """A scalar that must lie in GF(q)* does not."""


class NotCoprime(InputError):
    """Root-set operations require gcd(q, n) = 1."""


class NotADivisor(InputError):
    pass


class NotARightDivisor(InputError):
    pass


class NotCosetClosed(InputError):
    """Exponent set is not closed under multiplication by q^m mod n."""


class MixedSkewOrder(InputError):
    """Linearized polynomials with different skew orders cannot be combined."""


class ZeroLowestCoefficient(InputError):
    """The adjoint and reversal transforms need a nonzero lowest coefficient."""


class LengthMismatch(InputError):
    pass


class NotCyclic(InputError):
    pass


class NotSkewCyclic(InputError):
    pass


class NotGaloisClosed(InputError):
    """Equivalence transfer needs both endpoints stable under theta."""


class NotCoprimeGH(InputError):
    """Idempotent machinery needs gcd(g, h) = 1."""


class NoBetaForB(InputError):
    """No beta in GF(q^m)* satisfies beta^{q^r} = b*beta for the implied b."""


class CheckPolyMismatch(InputError):
    """The two check polynomials are not related by the required scaling."""


class H0NotCentral(InputError):
    """Skew shortening only applies when the closure check polynomial is
    central; this is a documented limitation, not a crash."""


class ParseError(InputError):
    pass


# ----------------------------------------------------------------- caps ----

class CapExceeded(SkewRankError):
    """A configured desk-scale resource cap was hit."""


class AmbientTooLarge(CapExceeded):
    pass


class EnumerationCapExceeded(CapExceeded):
    pass


class OrderCapExceeded(CapExceeded):
    pass


class DeskScaleExceeded(CapExceeded):
    pass


# ----------------------------------------- internal invariant failures ----

class InvariantFailure(SkewRankError):
    """Two independent computations of the same quantity disagreed.

    This is always a bug, either in the code or in the theory it encodes,
    and is deliberately fatal.
    """


class PathDisagreement(InvariantFailure):
    """Multi-path length computations returned different values."""


class CriterionDisagreement(InvariantFailure):
    """Degeneracy criteria did not vote unanimously."""


class VerificationFailed(InvariantFailure):
    """A constructed witness (equivalence, shortening) failed verification."""
