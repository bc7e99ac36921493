#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# utils.py

"""
Elementary number theory shared by the field, group and quaternion modules.
"""

from fractions import Fraction
from functools import reduce
from itertools import chain, combinations
from math import gcd, isqrt

from sympy import divisors, factorint, jacobi_symbol, multiplicity, primefactors


def is_square(n):
    """Return whether the integer ``n`` is a perfect square."""
    return n >= 0 and isqrt(n) ** 2 == n


def is_squarefree(n):
    """Return whether ``n`` has no repeated prime factor.

    >>> is_squarefree(-15), is_squarefree(12)
    (True, False)
    """
    if n == 0:
        return False
    return all(e == 1 for e in factorint(abs(n)).values())


def squarefree_decomposition(n):
    """Write a nonzero integer as ``s**2 * d`` with ``d`` squarefree.

    Returns:
        tuple[int, int]: The pair ``(s, d)``; ``d`` carries the sign of ``n``.

    >>> squarefree_decomposition(-28)
    (2, -7)
    """
    if n == 0:
        raise ValueError("0 has no squarefree decomposition")
    s, d = 1, -1 if n < 0 else 1
    for q, e in factorint(abs(n)).items():
        s *= q ** (e // 2)
        d *= q ** (e % 2)
    return s, d


def kronecker(a, p):
    """Kronecker symbol ``(a | p)`` for a prime ``p``.

    >>> kronecker(-4, 5), kronecker(-7, 2), kronecker(8, 2)
    (1, 1, 0)
    """
    if p == 2:
        if a % 2 == 0:
            return 0
        return 1 if a % 8 in (1, 7) else -1
    if a % p == 0:
        return 0
    return int(jacobi_symbol(a % p, p))


def valuation(n, p):
    """The ``p``-adic valuation of a nonzero integer or Fraction."""
    if isinstance(n, Fraction):
        return valuation(n.numerator, p) - valuation(n.denominator, p)
    if n == 0:
        raise ValueError("0 has infinite valuation")
    return multiplicity(p, abs(n))


def lcm(*values):
    """Least common multiple of positive integers (``1`` when empty)."""
    return reduce(lambda a, b: a * b // gcd(a, b), values, 1)


def int_log(n, q):
    """Return ``k`` with ``q**k == n``; raise if ``n`` is not a power of ``q``."""
    k = 0
    while n > 1 and n % q == 0:
        n //= q
        k += 1
    if n != 1:
        raise ValueError("not a power of {}".format(q))
    return k


def sorted_divisors(n):
    """Sorted positive divisors of ``n``.

    >>> sorted_divisors(12)
    [1, 2, 3, 4, 6, 12]
    """
    return [int(k) for k in divisors(n)]


def prime_divisors(n):
    """Sorted list of the prime divisors of ``n``."""
    return list(primefactors(n)) if n > 1 else []


def denominator(*fractions):
    """Common denominator of a sequence of Fractions."""
    return lcm(*(Fraction(f).denominator for f in fractions))


# From https://docs.python.org/3/library/itertools.html#itertools-recipes
def powerset(iterable, nonempty=False):
    """Generate the power set of an iterable, smallest subsets first.

    >>> list(powerset([3, 5]))
    [(), (3,), (5,), (3, 5)]
    """
    iterable = list(iterable)
    start = 1 if nonempty else 0
    return chain.from_iterable(
        combinations(iterable, r) for r in range(start, len(iterable) + 1)
    )


def parse_int_list(text):
    """Parse a comma-separated list of integers; empty text gives ``[]``."""
    if text is None or not str(text).strip():
        return []
    return [int(item) for item in str(text).split(",") if item.strip()]
