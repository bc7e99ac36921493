#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# models/cmp.py

"""
Utilities for comparing densecert objects.
"""

import functools
import operator


def sametype(func):
    """Method decorator returning ``NotImplemented`` when the operands have
    different types, so Python tries the reflected comparison.
    """

    @functools.wraps(func)
    def wrapper(self, other):  # pylint: disable=missing-docstring
        if type(other) is not type(self):
            return NotImplemented
        return func(self, other)

    return wrapper


def _ordering(op):
    @sametype
    def compare(self, other):
        self._require_same_context(other)
        return op(tuple(self.order_by()), tuple(other.order_by()))

    compare.__name__ = "__{}__".format(op.__name__)
    return compare


class Orderable:
    """Mixin for rich comparisons driven by ``order_by``.

    ``order_by`` returns a tuple compared lexicographically; equality and
    hashing use the same tuple. The attributes named in
    ``unorderable_unless_eq`` form a context (the field of an ideal, say):
    objects in different contexts are never equal and ordering them raises
    ``TypeError``.
    """

    unorderable_unless_eq = []

    def order_by(self):
        """Return a tuple of values to compare for ordering."""
        raise NotImplementedError

    def _context(self):
        return tuple(getattr(self, attr) for attr in self.unorderable_unless_eq)

    def _require_same_context(self, other):
        if self._context() != other._context():
            raise TypeError(
                "cannot order {} objects unless {} agree".format(
                    type(self).__name__, ", ".join(self.unorderable_unless_eq)
                )
            )

    __lt__ = _ordering(operator.lt)
    __le__ = _ordering(operator.le)
    __gt__ = _ordering(operator.gt)
    __ge__ = _ordering(operator.ge)

    @sametype
    def __eq__(self, other):
        return self._context() == other._context() and tuple(
            self.order_by()
        ) == tuple(other.order_by())

    def __ne__(self, other):
        equal = self.__eq__(other)
        return equal if equal is NotImplemented else not equal

    def __hash__(self):
        return hash((type(self).__name__,) + tuple(self.order_by()))
