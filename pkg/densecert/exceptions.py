#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# exceptions.py

"""densecert exceptions."""


class FieldError(ValueError):
    """The quadratic field is degenerate or of the wrong kind."""


class IdealError(ValueError):
    """The ideal or element does not satisfy the required integrality."""


class FundamentalUnitError(RuntimeError):
    """The continued-fraction period exceeded its cap."""

    def __init__(self, d, cap):
        self.d = d
        self.cap = cap
        msg = "Continued fraction period for Q(sqrt({})) exceeds {} steps."
        super().__init__(msg.format(d, cap))


class GeneratorSearchBoundError(RuntimeError):
    """Principality could not be decided within the coordinate bound."""

    def __init__(self, ideal, needed, bound):
        self.ideal = ideal
        self.needed = needed
        self.bound = bound
        msg = "Generator search for {} needs coordinates up to {}; bound is {}."
        super().__init__(msg.format(ideal, needed, bound))


class ClosureSizeError(RuntimeError):
    """A group or ring enumeration exceeded the element cap."""


class NonAbelianGroupError(ValueError):
    """The operation requires an abelian group."""


class StabilizationError(RuntimeError):
    """A local unit quotient did not reach its predicted order."""


class WeilPolynomialError(ValueError):
    """The polynomial does not define a quadratic Weil class."""


class IsogClassError(AssertionError):
    """A guaranteed property of an isogeny class failed to hold."""


class UnsupportedPrimeError(ValueError):
    """No maximal-order presentation is available for this prime."""


class SearchExhaustedError(RuntimeError):
    """A candidate search reached its cap without success."""


class UsageError(ValueError):
    """Malformed command-line input."""


class JSONVersionError(ValueError):
    """JSON was serialized with a different version of densecert."""


class GroupAxiomError(ValueError):
    """A constructed group violates a group law."""
