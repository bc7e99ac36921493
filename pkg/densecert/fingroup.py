#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# fingroup.py

"""
Explicitly enumerated finite groups.

A ``FiniteGroup`` stores every element. Elements are canonical hashable
encodings supplied by the constructing module (integers or tuples of
integers) so that equality of encodings is equality of group elements, and
encodings of one group are mutually comparable.
"""

import logging
from functools import partial
from math import gcd

import numpy as np

from . import config, exceptions, utils
from .models import fmt

log = logging.getLogger(__name__)


class FiniteGroup:
    """A finite group given by its elements and operations.

    Args:
        elements (Iterable): Canonical encodings of all elements.
        op (Callable): The group law.
        identity: The identity element.
        inverse (Callable): Inversion.

    Keyword Args:
        name (str): Label used in reprs and logs.
        abelian (bool): Whether the group is known to be abelian. ``None``
            means it is checked on demand.
    """

    def __init__(self, elements, op, identity, inverse, name="", abelian=None):
        self.elements = frozenset(elements)
        self.op = op
        self.identity = identity
        self.inverse = inverse
        self.name = name
        self._abelian = abelian
        self._ordered = None
        if len(self.elements) > config.ELEMENT_CAP:
            raise exceptions.ClosureSizeError(
                "{} has {} elements; the cap is {}".format(
                    name or "group", len(self.elements), config.ELEMENT_CAP
                )
            )
        if identity not in self.elements:
            raise exceptions.GroupAxiomError(
                "identity {} is not an element".format(identity)
            )
        if config.VALIDATE_GROUPS:
            check_group_axioms(self)

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return self.order

    def __contains__(self, x):
        return x in self.elements

    def __iter__(self):
        return iter(self.ordered())

    def ordered(self):
        """The elements in sorted order."""
        if self._ordered is None:
            self._ordered = tuple(sorted(self.elements))
        return self._ordered

    def power(self, x, k):
        """``x^k`` by repeated squaring; negative ``k`` is allowed."""
        if k < 0:
            x, k = self.inverse(x), -k
        result = self.identity
        while k:
            if k & 1:
                result = self.op(result, x)
            x = self.op(x, x)
            k >>= 1
        return result

    def element_order(self, x):
        """Order of the element ``x``."""
        n = self.order
        for k in utils.sorted_divisors(n):
            if self.power(x, k) == self.identity:
                return k
        raise exceptions.GroupAxiomError("element order does not divide |G|")

    @property
    def is_abelian(self):
        if self._abelian is None:
            self._abelian = is_abelian(self)
        return self._abelian

    def __str__(self):
        return "{}(order={})".format(self.name or "FiniteGroup", self.order)

    def __repr__(self):
        return fmt.make_repr(self, ["name", "order"])


class Subgroup:
    """A subgroup of a ``FiniteGroup``.

    Attributes:
        parent (FiniteGroup): The ambient group.
        members (frozenset): The elements of the subgroup.
        generators (tuple): The elements it was generated from.
    """

    def __init__(self, parent, members, generators=()):
        self.parent = parent
        self.members = frozenset(members)
        self.generators = tuple(generators)

    @property
    def order(self):
        return len(self.members)

    def __len__(self):
        return self.order

    def __contains__(self, x):
        return x in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self):
        return hash(self.members)

    def is_whole(self):
        return self.order == self.parent.order

    def __str__(self):
        return "Subgroup(order={}, index={})".format(
            self.order, index(self.parent, self)
        )

    def __repr__(self):
        return fmt.make_repr(self, ["order", "generators"])


def closure(G, gens):
    """Smallest subgroup of ``G`` containing ``gens``.

    Raises:
        ClosureSizeError: If the subgroup grows past ``config.ELEMENT_CAP``.

    >>> G = units_mod(16)
    >>> sorted(closure(G, [5]))
    [1, 5, 9, 13]
    """
    gens = [g for g in dict.fromkeys(gens) if g != G.identity]
    for g in gens:
        if g not in G:
            raise ValueError("{} is not an element of {}".format(g, G))
    cap = config.ELEMENT_CAP
    members = {G.identity}
    frontier = [G.identity]
    op = G.op
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = op(x, g)
            if y not in members:
                members.add(y)
                frontier.append(y)
        if len(members) > cap:
            raise exceptions.ClosureSizeError(
                "closure of {} generators exceeds {} elements".format(len(gens), cap)
            )
    return Subgroup(G, members, gens)


def index(G, H):
    """``|G| / |H|`` for a subgroup ``H`` of ``G``.

    >>> index(units_mod(8), closure(units_mod(8), [5]))
    2
    """
    if not H.members <= G.elements:
        raise ValueError("{} is not a subgroup of {}".format(H, G))
    return G.order // H.order


def power_subgroup(G, k, of=None):
    """The set ``{x^k}`` of an abelian group, as a frozenset."""
    source = G.elements if of is None else of
    return frozenset(G.power(x, k) for x in source)


def _require_abelian(G):
    if not G.is_abelian:
        raise exceptions.NonAbelianGroupError("{} is not abelian".format(G))


def min_generators(G):
    """Minimal number of generators of a finite abelian group.

    This is the largest ``q``-rank ``log_q |G / G^q|`` over the primes ``q``
    dividing ``|G|``.

    Raises:
        NonAbelianGroupError: If ``G`` is not abelian.

    >>> min_generators(direct_product(cyclic_group(10), cyclic_group(5)))
    2
    """
    _require_abelian(G)
    n = G.order
    rank = 0
    for q in utils.prime_divisors(n):
        rank = max(rank, utils.int_log(n // len(power_subgroup(G, q)), q))
    return rank


def abelian_invariants(G):
    """Invariant factors ``d_1 | d_2 | ...`` of a finite abelian group,
    ascending. The trivial group has none.

    >>> abelian_invariants(direct_product(cyclic_group(10), cyclic_group(5)))
    [5, 10]
    """
    _require_abelian(G)
    n = G.order
    primary = {}
    for q in utils.prime_divisors(n):
        exponents = []
        current = G.elements
        ranks = []
        while True:
            image = power_subgroup(G, q, of=current)
            rank = utils.int_log(len(current) // len(image), q)
            if rank == 0:
                break
            ranks.append(rank)
            current = image
        # ranks[k-1] is the number of cyclic factors of exponent >= k.
        ranks.append(0)
        for k in range(1, len(ranks)):
            exponents += [q ** k] * (ranks[k - 1] - ranks[k])
        primary[q] = sorted(exponents, reverse=True)
    count = max((len(v) for v in primary.values()), default=0)
    factors = []
    for i in range(count):
        d = 1
        for powers in primary.values():
            if i < len(powers):
                d *= powers[i]
        factors.append(d)
    return sorted(factors)


def quotient(G, H):
    """The quotient of an abelian group by a subgroup.

    Cosets are represented by their smallest element in sorted order.
    """
    _require_abelian(G)
    rep_of = {}
    members = sorted(H.members)
    for x in G.ordered():
        if x in rep_of:
            continue
        for h in members:
            rep_of[G.op(x, h)] = x
    return QuotientGroup(G, H, rep_of)


class QuotientGroup(FiniteGroup):
    """``G / H`` with the projection ``G -> G / H``.

    Attributes:
        parent (FiniteGroup): The group ``G``.
        kernel (Subgroup): The subgroup ``H``.
    """

    def __init__(self, parent, kernel, rep_of):
        self.parent = parent
        self.kernel = kernel
        self.rep_of = rep_of
        super().__init__(
            set(rep_of.values()),
            self._op,
            rep_of[parent.identity],
            self._inverse,
            name="{}/H".format(parent.name or "G"),
            abelian=True,
        )

    def _op(self, x, y):
        return self.rep_of[self.parent.op(x, y)]

    def _inverse(self, x):
        return self.rep_of[self.parent.inverse(x)]

    def project(self, x):
        """Image of ``x`` in the quotient."""
        return self.rep_of[x]


def is_abelian(G):
    """Check commutativity.

    Groups up to ``config.ABELIAN_CHECK_LIMIT`` elements are checked exactly
    on a generating set; larger groups on sampled pairs.
    """
    if G.order <= config.ABELIAN_CHECK_LIMIT:
        gens = generating_set(G)
        return all(
            G.op(x, y) == G.op(y, x) for i, x in enumerate(gens) for y in gens[i + 1 :]
        )
    elements = G.ordered()
    rng = np.random.default_rng(config.RANDOM_SEED)
    for i, j in rng.integers(0, len(elements), size=(config.ASSOCIATIVITY_SAMPLES, 2)):
        x, y = elements[i], elements[j]
        if G.op(x, y) != G.op(y, x):
            return False
    return True


def generating_set(G):
    """A greedy generating set: each element in sorted order that is not yet
    generated is added.
    """
    gens = []
    H = closure(G, [])
    for x in G.ordered():
        if len(H) == G.order:
            break
        if x not in H:
            gens.append(x)
            H = closure(G, gens)
    return gens


def minimal_generating_tuple(G):
    """A generating tuple of an abelian group of length ``min_generators``.

    Each entry is the first element in sorted order whose adjunction lowers
    the minimal generator count of the remaining quotient by one.
    """
    g = min_generators(G)
    chosen = []
    for i in range(g):
        target = g - i - 1
        for x in G.ordered():
            if x in chosen:
                continue
            if min_generators(quotient(G, closure(G, chosen + [x]))) == target:
                chosen.append(x)
                break
        else:
            raise exceptions.GroupAxiomError("no generator lowers the rank")
    return tuple(chosen)


def check_group_axioms(G):
    """Verify identity and inverse laws on every element, and closure and
    associativity on sampled triples.

    Raises:
        GroupAxiomError: On the first violated law.
    """
    e, op = G.identity, G.op
    for x in G.elements:
        if op(e, x) != x or op(x, e) != x:
            raise exceptions.GroupAxiomError("identity law fails at {}".format(x))
        inv = G.inverse(x)
        if inv not in G.elements or op(x, inv) != e:
            raise exceptions.GroupAxiomError("inverse law fails at {}".format(x))
    samples = config.ASSOCIATIVITY_SAMPLES
    if not samples or G.order == 1:
        return True
    elements = G.ordered()
    rng = np.random.default_rng(config.RANDOM_SEED)
    for i, j, k in rng.integers(0, len(elements), size=(samples, 3)):
        x, y, z = elements[i], elements[j], elements[k]
        xy = op(x, y)
        if xy not in G.elements:
            raise exceptions.GroupAxiomError("{} * {} is not an element".format(x, y))
        if op(xy, z) != op(x, op(y, z)):
            raise exceptions.GroupAxiomError(
                "associativity fails at {}".format((x, y, z))
            )
    return True


# Standard groups
# =============================================================================


def _mul_mod(n, x, y):
    return x * y % n


def _inv_mod(n, x):
    return pow(x, -1, n) if n > 1 else 0


def _add_mod(n, x, y):
    return (x + y) % n


def _neg_mod(n, x):
    return -x % n


def units_mod(n):
    """The multiplicative group ``(Z/n)^*``.

    >>> units_mod(25).order
    20
    """
    if n == 1:
        elements = [0]
    else:
        elements = [x for x in range(1, n) if gcd(x, n) == 1]
    return FiniteGroup(
        elements,
        partial(_mul_mod, n),
        1 % n,
        partial(_inv_mod, n),
        name="(Z/{})^*".format(n),
        abelian=True,
    )


def cyclic_group(n):
    """The additive group ``Z/n``."""
    return FiniteGroup(
        range(n),
        partial(_add_mod, n),
        0,
        partial(_neg_mod, n),
        name="Z/{}".format(n),
        abelian=True,
    )


def _product_op(G, H, x, y):
    return (G.op(x[0], y[0]), H.op(x[1], y[1]))


def _product_inverse(G, H, x):
    return (G.inverse(x[0]), H.inverse(x[1]))


def direct_product(G, H):
    """The direct product ``G x H`` with pair encodings."""
    abelian = True if (G._abelian and H._abelian) else None
    return FiniteGroup(
        [(x, y) for x in G.elements for y in H.elements],
        partial(_product_op, G, H),
        (G.identity, H.identity),
        partial(_product_inverse, G, H),
        name="{} x {}".format(G.name, H.name),
        abelian=abelian,
    )
