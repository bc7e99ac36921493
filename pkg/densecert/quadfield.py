#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# quadfield.py

"""
Exact arithmetic in quadratic fields ``Q(sqrt(d))`` and their rings of
integers.

Elements are stored by rational coordinates in the integral basis
``(1, w)``, where ``w = (1 + sqrt(d))/2`` when ``d = 1 mod 4`` and
``w = sqrt(d)`` otherwise. In both cases ``w^2 = T w - N`` with ``T`` the
trace and ``N`` the norm of ``w``.

Ideals are stored in two-element Hermite normal form ``(a, b + c w)``: the
lattice with Z-basis ``a`` and ``b + c w``, normalized so that ``c | a``,
``c | b`` and ``0 <= b < a``.
"""

import collections
import logging
import math
from enum import Enum
from fractions import Fraction
from itertools import chain
from math import gcd, isqrt

from sympy import nextprime
from sympy.core.numbers import igcdex
from sympy.ntheory import sqrt_mod

from . import config, exceptions, forms, utils, validate
from .cache import cache
from .models import cmp, fmt

log = logging.getLogger(__name__)


class SplittingKind(Enum):
    """How a rational prime decomposes in a quadratic field.

    The value is the Kronecker symbol ``(disc | p)``.
    """

    SPLIT = 1
    INERT = -1
    RAMIFIED = 0

    def __str__(self):
        return self.name.capitalize()

    def to_json(self):
        return str(self)

    @classmethod
    def from_json(cls, name):
        return cls[name.upper()]


class QuadField:
    """The quadratic field ``Q(sqrt(d))``.

    Use ``make_field`` to obtain instances; it validates and memoizes.

    Attributes:
        d (int): Squarefree integer, not 0 or 1.
        disc (int): The field discriminant, ``d`` or ``4d``.
        signature (int): Number of real embeddings, 2 or 0.
        T (int): Trace of ``w``.
        N (int): Norm of ``w``.
    """

    def __init__(self, d):
        validate.field_discriminant(d)
        self.d = d
        if d % 4 == 1:
            self.disc = d
            self.T, self.N = 1, (1 - d) // 4
            self.omega = "(1+sqrt({}))/2".format(d)
        else:
            self.disc = 4 * d
            self.T, self.N = 0, -d
            self.omega = "sqrt({})".format(d)
        self.signature = 2 if d > 0 else 0

    @property
    def is_real(self):
        return self.signature == 2

    @property
    def is_imaginary(self):
        return self.signature == 0

    def __eq__(self, other):
        return isinstance(other, QuadField) and self.d == other.d

    def __hash__(self):
        return hash(("QuadField", self.d))

    def __str__(self):
        return "Q(sqrt({}))".format(self.d)

    def __repr__(self):
        return fmt.make_repr(self, ["d"])

    def to_json(self):
        return {"d": self.d, "disc": self.disc, "signature": self.signature}

    def __call__(self, a, b=0):
        """Return the element ``a + b w``."""
        return QuadElt(self, a, b)

    @property
    def one(self):
        return QuadElt(self, 1)

    @property
    def w(self):
        """The integral basis element ``w``."""
        return QuadElt(self, 0, 1)

    @property
    def sqrt_d(self):
        """The element ``sqrt(d)``."""
        if self.T:
            return QuadElt(self, -1, 2)
        return QuadElt(self, 0, 1)

    @property
    def sqrt_disc(self):
        """The element ``w - conj(w) = sqrt(disc)``."""
        return QuadElt(self, -self.T, 2)

    def minpoly_roots(self, p):
        """Sorted roots in ``[0, p)`` of the minimal polynomial of ``w``
        modulo the prime ``p``.
        """
        if p == 2:
            return [r for r in range(2) if (r * r - self.T * r + self.N) % 2 == 0]
        half = pow(2, -1, p)
        square_roots = sqrt_mod(self.disc % p, p, all_roots=True) or []
        return sorted({(self.T + s) * half % p for s in square_roots})


@cache()
def make_field(d):
    """Return the quadratic field ``Q(sqrt(d))``.

    Raises:
        FieldError: If ``d`` is not squarefree or ``d`` is 0 or 1.

    >>> F = make_field(-7)
    >>> F.disc, F.signature
    (-7, 0)
    """
    return QuadField(d)


def coerce(field, value):
    """Return ``value`` as an element of ``field``, or ``None`` if it is not a
    number.
    """
    if isinstance(value, QuadElt):
        if value.field != field:
            raise exceptions.FieldError(
                "cannot combine elements of {} and {}".format(field, value.field)
            )
        return value
    if isinstance(value, (int, Fraction)):
        return QuadElt(field, value)
    return None


class QuadElt:
    """An element ``a + b w`` of a quadratic field, with rational ``a, b``.

    Instances are immutable; arithmetic returns new elements and accepts
    integers and Fractions on either side.
    """

    __slots__ = ("field", "a", "b")

    def __init__(self, field, a, b=0):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("QuadElt is immutable")

    def __reduce__(self):
        return (QuadElt, (self.field, self.a, self.b))

    @property
    def coords(self):
        return (self.a, self.b)

    def __add__(self, other):
        other = coerce(self.field, other)
        if other is None:
            return NotImplemented
        return QuadElt(self.field, self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadElt(self.field, -self.a, -self.b)

    def __sub__(self, other):
        other = coerce(self.field, other)
        if other is None:
            return NotImplemented
        return QuadElt(self.field, self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = coerce(self.field, other)
        if other is None:
            return NotImplemented
        T, N = self.field.T, self.field.N
        a, b, c, e = self.a, self.b, other.a, other.b
        return QuadElt(self.field, a * c - b * e * N, a * e + b * c + b * e * T)

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero has no inverse")
        conj = self.conjugate()
        return QuadElt(self.field, conj.a / n, conj.b / n)

    def __truediv__(self, other):
        other = coerce(self.field, other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = self.field.one
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        """The Galois conjugate ``a + b conj(w) = (a + bT) - b w``."""
        return QuadElt(self.field, self.a + self.b * self.field.T, -self.b)

    def norm(self):
        """``x * conj(x)``, as a Fraction."""
        F = self.field
        return self.a * self.a + self.a * self.b * F.T + self.b * self.b * F.N

    def trace(self):
        return 2 * self.a + self.b * self.field.T

    def is_integral(self):
        return self.a.denominator == 1 and self.b.denominator == 1

    def is_unit(self):
        return self.is_integral() and abs(self.norm()) == 1

    def is_rational(self):
        return self.b == 0

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def integer_coords(self):
        """Coordinates as ints; raise if the element is not integral."""
        if not self.is_integral():
            raise exceptions.IdealError("{} is not integral".format(self))
        return int(self.a), int(self.b)

    def sqrt_d_coords(self):
        """Rational ``(u, v)`` with ``x = u + v sqrt(d)``."""
        if self.field.T:
            half = self.b / 2
            return self.a + half, half
        return self.a, self.b

    def sign(self, place):
        """Exact sign (``-1``, ``0`` or ``1``) at a real place.

        Place ``0`` sends ``sqrt(d)`` to the positive root and place ``1`` to
        the negative root.
        """
        F = self.field
        if not F.is_real:
            raise exceptions.FieldError("{} has no real places".format(F))
        u, v = self.sqrt_d_coords()
        if place == 1:
            v = -v
        elif place != 0:
            raise ValueError("real places are 0 and 1; got {}".format(place))
        su, sv = _sign(u), _sign(v)
        if sv == 0 or su == sv:
            return su or sv
        if su == 0:
            return sv
        # Opposite signs: the larger of u^2 and d v^2 wins.
        return su if u * u > F.d * v * v else sv

    def is_positive_at(self, places):
        """Whether the element is positive at every place in ``places``."""
        return all(self.sign(place) == 1 for place in places)

    def real_value(self, place=0):
        """Floating-point value at a real place (for bounds only)."""
        u, v = self.sqrt_d_coords()
        root = math.sqrt(self.field.d)
        return float(u) + float(v) * (root if place == 0 else -root)

    def __eq__(self, other):
        if isinstance(other, QuadElt):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.field.d, self.a, self.b))

    def __str__(self):
        return fmt.fmt_quadratic(self.a, self.b)

    def __repr__(self):
        return fmt.make_repr(self, ["field", "a", "b"])

    def to_json(self):
        """Serialize as ``"a+b*w"`` with exact rationals."""
        sign = "-" if self.b < 0 else "+"
        return "{}{}{}*w".format(self.a, sign, abs(self.b))


def _sign(x):
    return (x > 0) - (x < 0)


def parse_element(field, text):
    """Inverse of ``QuadElt.to_json``."""
    text = text.strip()
    if not text.endswith("*w"):
        raise ValueError("malformed element {!r}".format(text))
    body = text[:-2]
    cut = max(body.rfind("+"), body.rfind("-"))
    if cut <= 0:
        raise ValueError("malformed element {!r}".format(text))
    a, b = body[:cut], body[cut:]
    return QuadElt(field, Fraction(a), Fraction(b))


# Ideals
# =============================================================================


def hermite_form(vectors):
    """Hermite normal form ``(a, b, c)`` of the rank-2 lattice spanned by
    integer ``vectors`` in Z^2.

    The lattice has basis ``(a, 0)`` and ``(b, c)`` with ``a, c > 0`` and
    ``0 <= b < a``.

    >>> hermite_form([(5, 0), (0, 5), (-2, 1), (1, 2)])
    (5, 3, 1)
    """
    a = 0
    pivot = None
    for x, y in vectors:
        if y == 0:
            a = gcd(a, x)
            continue
        if pivot is None:
            pivot = (x, y)
            continue
        px, py = pivot
        s, t, g = igcdex(py, y)
        pivot = (s * px + t * x, g)
        a = gcd(a, (y // g) * px - (py // g) * x)
    if pivot is None or a == 0:
        raise exceptions.IdealError("vectors {} do not span a lattice".format(vectors))
    b, c = pivot
    if c < 0:
        b, c = -b, -c
    return a, b % a, c


class Ideal(cmp.Orderable):
    """A nonzero integral ideal ``(a, b + c w)`` in Hermite normal form.

    Ideals are ordered by norm, then by ``(a, b, c)``; this is the *HNF
    order* used to break ties between candidate primes.
    """

    unorderable_unless_eq = ["field"]

    def __init__(self, field, a, b, c):
        if a <= 0 or c <= 0 or a % c or b % c or not 0 <= b < a:
            raise exceptions.IdealError(
                "({}, {} + {}w) is not in Hermite normal form".format(a, b, c)
            )
        self.field = field
        self.a, self.b, self.c = a, b, c

    @classmethod
    def from_generators(cls, field, generators):
        """The ideal generated by integral ``generators``."""
        vectors = []
        for g in generators:
            g = coerce(field, g)
            if not g:
                continue
            vectors.append(g.integer_coords())
            vectors.append((g * field.w).integer_coords())
        if not vectors:
            raise exceptions.IdealError("the zero ideal is not allowed")
        return cls(field, *hermite_form(vectors))

    @classmethod
    def principal(cls, field, x):
        """The principal ideal ``(x)``."""
        return cls.from_generators(field, [x])

    @classmethod
    def unit(cls, field):
        return cls(field, 1, 0, 1)

    def order_by(self):
        return (self.norm, self.a, self.b, self.c)

    @property
    def norm(self):
        return self.a * self.c

    @property
    def content(self):
        """Largest rational integer dividing the ideal."""
        return self.c

    def basis(self):
        F = self.field
        return (F(self.a), F(self.b, self.c))

    def contains(self, x):
        x = coerce(self.field, x)
        if not x.is_integral():
            return False
        return self.contains_coords(*x.integer_coords())

    def contains_coords(self, u, v):
        """Membership of the integral element ``u + v w``."""
        return v % self.c == 0 and (u - self.b * (v // self.c)) % self.a == 0

    __contains__ = contains

    def __mul__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return Ideal.from_generators(
            self.field, [x * y for x in self.basis() for y in other.basis()]
        )

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Ideal.unit(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        return Ideal.from_generators(self.field, [x.conjugate() for x in self.basis()])

    def divides(self, other):
        """Whether ``self`` divides ``other``, that is ``other`` is contained
        in ``self``.
        """
        return all(x in self for x in other.basis())

    def is_unit(self):
        return self.norm == 1

    def primitive_part(self):
        """``(a/c, b/c + w)``, the ideal divided by its content."""
        return Ideal(self.field, self.a // self.c, self.b // self.c, 1)

    def form(self):
        """The binary quadratic form attached to the primitive part."""
        P = self.primitive_part()
        return forms.ideal_form(P.a, P.b, self.field.T, self.field.N)

    def __str__(self):
        return "({}, {})".format(self.a, fmt.fmt_quadratic(self.b, self.c))

    def __repr__(self):
        return fmt.make_repr(self, ["field", "a", "b", "c"])

    def to_json(self):
        return "({}, {})".format(self.a, self.field(self.b, self.c).to_json())


# Prime splitting
# =============================================================================


class PrimeSplitting(
    collections.namedtuple("PrimeSplitting", ["p", "kind", "e", "f", "ideal"])
):
    """Decomposition type of a rational prime.

    Attributes:
        p (int): The rational prime.
        kind (SplittingKind): Split, inert or ramified.
        e (int): Ramification index.
        f (int): Residue degree.
        ideal (Ideal): The distinguished prime above ``p``. For split primes
            it is ``(p, w - r)`` with ``r`` the smallest root of the minimal
            polynomial of ``w`` modulo ``p``.
    """

    __slots__ = ()

    @property
    def count(self):
        """Number of primes above ``p``."""
        return 2 // (self.e * self.f)

    def to_json(self):
        return {
            "p": self.p,
            "kind": self.kind,
            "e": self.e,
            "f": self.f,
            "ideal": self.ideal,
        }


def _ideal_for_root(F, p, r):
    return Ideal.from_generators(F, [F(p), F(-r, 1)])


def splitting_type(F, p):
    """Return the ``PrimeSplitting`` of the rational prime ``p`` in ``F``.

    >>> splitting_type(make_field(-1), 5).kind
    <SplittingKind.SPLIT: 1>
    """
    validate.prime(p)
    kind = SplittingKind(utils.kronecker(F.disc, p))
    if kind is SplittingKind.INERT:
        return PrimeSplitting(p, kind, 1, 2, Ideal(F, p, 0, p))
    root = F.minpoly_roots(p)[0]
    e = 2 if kind is SplittingKind.RAMIFIED else 1
    return PrimeSplitting(p, kind, e, 1, _ideal_for_root(F, p, root))


def prime_ideals_above(F, p):
    """Every prime ideal above ``p``, distinguished prime first.

    Split primes are listed by increasing root ``r`` of the minimal
    polynomial, as ``(p, w - r)``; the first is ``splitting_type(F, p).ideal``.

    >>> [P.to_json() for P in prime_ideals_above(make_field(-1), 5)]
    ['(5, 3+1*w)', '(5, 2+1*w)']
    """
    validate.prime(p)
    roots = F.minpoly_roots(p)
    if not roots:
        return [Ideal(F, p, 0, p)]
    return [_ideal_for_root(F, p, r) for r in roots]


def residue_degree(P):
    """``f`` such that ``N(P) = p^f``."""
    return 2 if P.c > 1 else 1


def ideal_prime(P):
    """The rational prime below the prime ideal ``P``."""
    return P.a


def ramification_index(P):
    p = ideal_prime(P)
    return 2 if utils.kronecker(P.field.disc, p) == 0 else 1


def valuation(P, x):
    """The ``P``-adic valuation of a nonzero element ``x``."""
    F = P.field
    x = coerce(F, x)
    if not x:
        raise ValueError("0 has infinite valuation")
    p, e = ideal_prime(P), ramification_index(P)
    # Clear denominators with a rational integer.
    n = utils.lcm(x.a.denominator, x.b.denominator)
    y = x * n
    shift = -e * utils.valuation(n, p) if n > 1 else 0
    # v_P(y) is bounded by v_p(N(y)) / f.
    bound = utils.valuation(int(y.norm()), p) // residue_degree(P)
    k = 0
    power = P
    while k < bound and y in power:
        k += 1
        power = power * P
    return k + shift


# Units
# =============================================================================


class UnitGroup(
    collections.namedtuple(
        "UnitGroup", ["w", "torsion_generator", "fundamental", "sign_pattern"]
    )
):
    """The unit group of the ring of integers.

    Attributes:
        w (int): Number of roots of unity.
        torsion_generator (QuadElt): A generator of the roots of unity.
        fundamental (QuadElt): The fundamental unit ``eps > 1`` at place
            ``0``; ``None`` for imaginary fields.
        sign_pattern (tuple[int]): Signs of ``eps`` at places ``0`` and ``1``;
            empty for imaginary fields.
    """

    __slots__ = ()

    def representatives(self):
        """Representatives of the units modulo squares, used to adjust the
        signs of a generator: ``1, -1, eps, -eps`` for real fields.
        """
        if self.fundamental is None:
            zeta = self.torsion_generator
            return [zeta ** k for k in range(self.w)]
        eps = self.fundamental
        return [eps.field.one, -eps.field.one, eps, -eps]

    def to_json(self):
        return {
            "w": self.w,
            "torsion_generator": self.torsion_generator,
            "fundamental": self.fundamental,
            "norm": None if self.fundamental is None else self.fundamental.norm(),
            "sign_pattern": list(self.sign_pattern),
        }


def roots_of_unity_generator(F):
    """A generator of the roots of unity in ``F`` and their number."""
    if F.d == -1:
        return F.w, 4
    if F.d == -3:
        return F.w, 6
    return -F.one, 2


def fundamental_unit(F):
    """The fundamental unit of a real quadratic field.

    Runs the continued fraction of the reduced quadratic irrational
    ``(u + sqrt(disc))/2`` until its period closes; the product of the
    complete quotients over one period is the fundamental unit.

    Raises:
        FundamentalUnitError: If the period exceeds
            ``config.FUNDAMENTAL_UNIT_PERIOD_CAP``.

    >>> print(fundamental_unit(make_field(2)))
    1 + ω
    """
    if not F.is_real:
        raise exceptions.FieldError("{} has no fundamental unit".format(F))
    D = F.disc
    root = isqrt(D)
    u = root if (root - D) % 2 == 0 else root - 1
    P0, Q0 = u, 2
    P, Q = P0, Q0
    sqrt_disc = F.sqrt_disc
    eps = F.one
    cap = config.FUNDAMENTAL_UNIT_PERIOD_CAP
    for period in range(1, cap + 1):
        a = (P + root) // Q
        P = a * Q - P
        Q = (D - P * P) // Q
        eps = eps * ((sqrt_disc + P) / Q)
        if (P, Q) == (P0, Q0):
            log.debug("Fundamental unit of %s has period %s", F, period)
            return eps
    raise exceptions.FundamentalUnitError(F.d, cap)


@cache()
def unit_group(F):
    """Return the ``UnitGroup`` of ``F``.

    >>> ug = unit_group(make_field(3))
    >>> print(ug.fundamental)
    2 + ω
    >>> ug.fundamental.norm()
    Fraction(1, 1)
    """
    zeta, w = roots_of_unity_generator(F)
    if not F.is_real:
        return UnitGroup(w, zeta, None, ())
    eps = fundamental_unit(F)
    signs = (eps.sign(0), eps.sign(1))
    return UnitGroup(w, zeta, eps, signs)


# Principality
# =============================================================================


def _alternating(bound):
    """``0, 1, -1, 2, -2, ...`` up to ``bound`` in absolute value."""
    yield 0
    for y in range(1, bound + 1):
        yield y
        yield -y


def _elements_of_norm(F, n, y_values):
    """Integral elements ``x + y w`` with norm ``n`` for the given ``y``."""
    D = F.disc
    for y in y_values:
        # 4 N(x + y w) = (2x + T y)^2 - D y^2
        square = 4 * n + D * y * y
        if square < 0 or not utils.is_square(square):
            continue
        s = isqrt(square)
        for root in sorted({s, -s}, reverse=True):
            if (root - F.T * y) % 2 == 0:
                yield F((root - F.T * y) // 2, y)


def _imaginary_generator(F, I):
    P = I.primitive_part()
    if not forms.is_principal_form(I.form()):
        return None
    A = P.norm
    bound = isqrt(4 * A // abs(F.disc))
    for g in _elements_of_norm(F, A, _alternating(bound)):
        if g in P:
            return g * I.content
    raise exceptions.IdealError("{} has a principal form but no generator".format(I))


def generator_search_bound(F, n):
    """Coordinate bound ``Y`` such that some generator of every principal
    ideal of norm ``n`` has ``|y| <= Y``.
    """
    eps = unit_group(F).fundamental
    try:
        value = math.sqrt(n) * (eps.real_value(0) + 1) / math.sqrt(F.disc)
    except OverflowError:
        return math.inf
    return int(value) + 1


def _real_generator(F, I):
    n = I.norm
    needed = generator_search_bound(F, n)
    bound = config.GENERATOR_SEARCH_BOUND
    if needed > bound:
        raise exceptions.GeneratorSearchBoundError(I, needed, bound)
    for y in range(needed + 1):
        for target in (n, -n):
            for g in _elements_of_norm(F, target, [y]):
                if g in I:
                    return g
    return None


def any_generator(F, I):
    """A generator of ``I``, or ``None`` if ``I`` is not principal."""
    if F.is_real:
        return _real_generator(F, I)
    return _imaginary_generator(F, I)


def principal_generator(F, I, sigma=()):
    """Return a generator of ``I`` positive at every real place in ``sigma``.

    Imaginary fields decide principality exactly through reduced forms. Real
    fields search every generator candidate up to a complete coordinate
    bound, so ``None`` is a proof that no suitable generator exists.

    Args:
        F (QuadField): The field.
        I (Ideal): A nonzero integral ideal.
        sigma (Iterable[int]): Real places where the generator must be
            positive.

    Returns:
        QuadElt: The generator, or ``None``.

    Raises:
        GeneratorSearchBoundError: If the complete search region of a real
            field exceeds ``config.GENERATOR_SEARCH_BOUND``.
    """
    sigma = tuple(sigma)
    validate.sigma(F, sigma)
    g = any_generator(F, I)
    if g is None:
        return None
    if not sigma:
        return g
    for unit in unit_group(F).representatives():
        candidate = unit * g
        if candidate.is_positive_at(sigma):
            return candidate
    return None


def ideal_class_order(F, I, cap=None):
    """Smallest ``k >= 1`` with ``I^k`` principal, or ``None`` past ``cap``."""
    cap = config.PRINCIPAL_POWER_CAP if cap is None else cap
    if F.is_imaginary:
        return forms.class_order(I.form(), cap)
    for k in range(1, cap + 1):
        if any_generator(F, I ** k) is not None:
            return k
    return None


def class_number(F):
    """Class number of an imaginary quadratic field.

    >>> class_number(make_field(-5)), class_number(make_field(-23))
    (2, 3)
    """
    validate.imaginary(F)
    return len(forms.reduced_forms(F.disc))


# Norm equations
# =============================================================================


def _to_element(F, X, Y):
    # 4 N(x + y w) = (2x + T y)^2 + |D| y^2 with 2x + T y = X, y = Y.
    return F((X - F.T * Y) // 2, Y)


def _box_search(F, l):
    D = abs(F.disc)
    for Y in range(1, isqrt(4 * l // D) + 1):
        square = 4 * l - D * Y * Y
        if utils.is_square(square):
            return _to_element(F, isqrt(square), Y)
    return None


def cornacchia(F, l):
    """Solve ``N(pi) = l`` in an imaginary quadratic field.

    Uses the modified Cornacchia algorithm for ``X^2 + |D| Y^2 = 4l``.

    Returns:
        QuadElt: An element of norm ``l``, or ``None`` if there is none.

    >>> print(cornacchia(make_field(-1), 13))
    3 + 2ω
    """
    validate.imaginary(F)
    validate.prime(l, name="l")
    D = F.disc
    if l == 2:
        if utils.is_square(D + 8):
            return _to_element(F, isqrt(D + 8), 1)
        return None
    if utils.kronecker(D, l) == -1:
        return None
    if abs(D) >= 4 * l:
        return _box_search(F, l)
    x0 = min(sqrt_mod(D % l, l, all_roots=True))
    if (x0 - D) % 2:
        x0 = l - x0
    a, b = 2 * l, x0
    limit = isqrt(4 * l)
    while b > limit:
        a, b = b, a % b
    rest = 4 * l - b * b
    if rest % abs(D):
        return None
    rest //= abs(D)
    if not utils.is_square(rest):
        return None
    return _to_element(F, b, isqrt(rest))


def split_primes(F, start=2, stop=None):
    """Rational primes in ``[start, stop)`` that split in ``F``, in order."""
    p = nextprime(start - 1)
    while True:
        if stop is not None and p >= stop:
            return
        if utils.kronecker(F.disc, p) == 1:
            yield p
        p = nextprime(p)


def flatten_primes(F, items):
    """Expand rational primes into the primes above them; keep ideals."""
    return list(
        chain.from_iterable(
            [item] if isinstance(item, Ideal) else prime_ideals_above(F, item)
            for item in items
        )
    )


def parse_ideal(F, text):
    """Inverse of ``Ideal.to_json``; ``(a, b)`` abbreviates ``(a, b+1*w)``.

    >>> F = make_field(-1)
    >>> parse_ideal(F, '(5, 3)') == splitting_type(F, 5).ideal
    True

    Raises:
        ValueError: If ``text`` is malformed or not an ideal in HNF.
    """
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")) or text.count(",") != 1:
        raise ValueError("malformed ideal {!r}".format(text))
    first, second = (part.strip() for part in text[1:-1].split(","))
    x = parse_element(F, second) if second.endswith("*w") else F(int(second), 1)
    if x.a.denominator != 1 or x.b.denominator != 1:
        raise ValueError("{!r} has non-integral coordinates".format(text))
    ideal = Ideal(F, int(first), int(x.a), int(x.b))
    if Ideal.from_generators(F, [F(ideal.a), x]) != ideal:
        raise exceptions.IdealError("{!r} is not an ideal".format(text))
    return ideal


def parse_prime(F, text):
    """A rational prime, or a prime ideal in the form of ``parse_ideal``."""
    text = str(text).strip()
    if not text.startswith("("):
        p = int(text)
        validate.prime(p)
        return p
    P = parse_ideal(F, text)
    if P not in prime_ideals_above(F, ideal_prime(P)):
        raise exceptions.IdealError("{} is not a prime ideal".format(text))
    return P
