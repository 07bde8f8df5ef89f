"""Exception hierarchy.

Two families: bad input parameters (CLI exit code 2) and failed numerical
preconditions (CLI exit code 3).
"""

from __future__ import annotations


class MultivalentError(ValueError):
    """Base class for all package errors."""


class ParameterError(MultivalentError):
    """Invalid parameters or malformed input."""


class NumericalError(MultivalentError):
    """A numerical precondition failed (zero divisor, branch problem...)."""


class BasePowerMismatch(ParameterError):
    pass


class InvalidBeta(ParameterError):
    pass


class InvalidLambda(ParameterError):
    pass


class InvalidParameter(ParameterError):
    pass


class UnsupportedDominant(ParameterError):
    pass


class AlphaNotConstant(ParameterError):
    pass


class ZeroLeadingCoefficient(NumericalError):
    pass


class NotUnitNormalized(NumericalError):
    pass


class ZeroAlphaPochhammer(NumericalError):
    pass


class ZeroAlpha(NumericalError):
    pass


class VanishingDenominator(NumericalError):
    pass


class ZeroOnGrid(NumericalError):
    pass


class CrossCheckError(NumericalError):
    """A closed form and its numerical cross-check disagree."""
