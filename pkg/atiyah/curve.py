# Copyright 2026 The atiyah developers
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.

"""Elliptic curves in long Weierstrass form over F_q.

A curve

    y**2 + a1*x*y + a3*y = x**3 + a2*x**2 + a4*x + a6

has the point at infinity O as the identity of its group law. O is also the
distinguished point Q of the bundle constructions.

Examples:
    >>> from atiyah import field_make, curve_make
    >>> F5 = field_make(5)
    >>> E = curve_make(F5, 0, 0, 0, 1, 1)
    >>> len(E.points())
    9
    >>> P = E.point(0, 1)
    >>> E.add(P, P)
    CurvePoint(4, 2)

"""
import collections.abc as abc
import logging
import math

from numbers import Integral
from typing import TYPE_CHECKING

import numpy as np

from atiyah.exceptions import PointNotOnCurve, SingularCurve

if TYPE_CHECKING:
    # avoid circular imports
    from atiyah.field import FieldSpec
    from atiyah.typing import ElementLike

__all__ = ['Curve', 'CurvePoint', 'Divisor', 'INFINITY',
           'curve_make', 'add_points', 'neg_point', 'scalar_mul',
           'enumerate_points', 'group_order', 'point_order', 'is_principal',
           ]

logger = logging.getLogger(__name__)


class CurvePoint:
    """A rational point, either O or an affine point (x, y).

    Coordinates are element codes of the curve's field. Use
    :meth:`Curve.point` to build validated affine points and
    :data:`INFINITY` for O.

    """
    __slots__ = ('x', 'y')

    def __init__(self, x=None, y=None):
        if (x is None) != (y is None):
            raise ValueError("either both or neither coordinate must be given")
        self.x = None if x is None else int(x)
        self.y = None if y is None else int(y)

    @property
    def is_infinity(self):
        return self.x is None

    def sort_key(self):
        """O first, then affine points by (x, y) in field enumeration order."""
        if self.x is None:
            return (-1, -1)
        return (self.x, self.y)

    def __repr__(self):
        if self.x is None:
            return 'INFINITY'
        return 'CurvePoint({}, {})'.format(self.x, self.y)

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __iter__(self):
        if self.x is None:
            raise TypeError("the point at infinity has no coordinates")
        yield self.x
        yield self.y


INFINITY = CurvePoint()


class Curve:
    """A smooth elliptic curve over F_q in long Weierstrass form.

    Use :func:`curve_make` to construct validated instances.

    Args:
        spec (:class:`~atiyah.field.FieldSpec`):
            The base field.

        a (tuple[int]):
            Element codes of (a1, a2, a3, a4, a6).

    """
    __slots__ = ('spec', 'a', '_points', '_order')

    def __init__(self, spec, a):
        self.spec = spec
        self.a = tuple(int(c) for c in a)
        self._points = None
        self._order = None

    def __repr__(self):
        return 'Curve({!r}, {})'.format(self.spec, self.a)

    def __str__(self):
        a1, a2, a3, a4, a6 = (self.spec.coords(c) if self.spec.k > 1 else c for c in self.a)
        return ('y^2 + {}xy + {}y = x^3 + {}x^2 + {}x + {} over {}'
                .format(a1, a3, a2, a4, a6, self.spec))

    def __eq__(self, other):
        if not isinstance(other, Curve):
            return NotImplemented
        return self.spec == other.spec and self.a == other.a

    def __hash__(self):
        return hash((self.spec, self.a))

    @property
    def coefficients(self):
        """(a1, a2, a3, a4, a6) as field elements."""
        return tuple(self.spec(c) for c in self.a)

    # invariants

    def b_invariants(self):
        """The codes of (b2, b4, b6, b8)."""
        F = self.spec
        a1, a2, a3, a4, a6 = self.a
        e = F.embed
        mul, add, sub = F.mul, F.add, F.sub

        b2 = add(mul(a1, a1), mul(e(4), a2))
        b4 = add(mul(e(2), a4), mul(a1, a3))
        b6 = add(mul(a3, a3), mul(e(4), a6))
        b8 = sub(add(add(mul(mul(a1, a1), a6), mul(e(4), mul(a2, a6))),
                     mul(a2, mul(a3, a3))),
                 add(mul(a1, mul(a3, a4)), mul(a4, a4)))
        return b2, b4, b6, b8

    def discriminant(self):
        """Code of -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6."""
        F = self.spec
        mul, add, sub, e = F.mul, F.add, F.sub, F.embed
        b2, b4, b6, b8 = self.b_invariants()
        delta = F.neg(mul(mul(b2, b2), b8))
        delta = sub(delta, mul(e(8), mul(b4, mul(b4, b4))))
        delta = sub(delta, mul(e(27), mul(b6, b6)))
        delta = add(delta, mul(e(9), mul(b2, mul(b4, b6))))
        return delta

    def j_invariant(self):
        """The j-invariant c4^3 / discriminant, as a field element."""
        F = self.spec
        b2, b4, _, _ = self.b_invariants()
        c4 = F.sub(F.mul(b2, b2), F.mul(F.embed(24), b4))
        return F(F.div(F.pow(c4, 3), self.discriminant()))

    # points

    def rhs(self, x):
        """x^3 + a2 x^2 + a4 x + a6 at the code x."""
        F = self.spec
        _, a2, _, a4, a6 = self.a
        acc = F.add(x, a2)
        acc = F.add(F.mul(acc, x), a4)
        return F.add(F.mul(acc, x), a6)

    def lhs(self, x, y):
        """y^2 + a1 x y + a3 y at the codes (x, y)."""
        F = self.spec
        a1, _, a3, _, _ = self.a
        return F.mul(y, F.add(F.add(y, F.mul(a1, x)), a3))

    def contains(self, P):
        if P.is_infinity:
            return True
        q = self.spec.q
        if not (0 <= P.x < q and 0 <= P.y < q):
            return False
        return self.lhs(P.x, P.y) == self.rhs(P.x)

    def point(self, x: 'ElementLike' = None, y: 'ElementLike' = None) -> 'CurvePoint':
        """A validated point; without arguments, the point at infinity."""
        if x is None and y is None:
            return INFINITY
        P = CurvePoint(self.spec.code(x), self.spec.code(y))
        if not self.contains(P):
            raise PointNotOnCurve("{} is not on {}".format(P, self))
        return P

    def check_point(self, P):
        if not isinstance(P, CurvePoint):
            raise TypeError("expected a CurvePoint, received {!r}".format(P))
        if not self.contains(P):
            raise PointNotOnCurve("{} is not on {}".format(P, self))

    def lift_x(self, x: 'ElementLike'):
        """All points with x-coordinate `x`, sorted by y."""
        F = self.spec
        x = F.code(x)
        a1, _, a3, _, _ = self.a
        b = F.add(F.mul(a1, x), a3)
        c = self.rhs(x)
        return [CurvePoint(x, y) for y in _solve_quadratic(F, b, c, self._root_tables())]

    def _root_tables(self):
        # square roots, and roots of z^2 + z, indexed by value
        F = self.spec
        sq = {}
        art = {}
        for z in F.codes():
            sq.setdefault(F.mul(z, z), []).append(z)
            if F.p == 2:
                art.setdefault(F.add(F.mul(z, z), z), []).append(z)
        return sq, art

    def points(self, cap=None):
        """All rational points: O first, then affine points sorted by (x, y).

        Raises:
            :exc:`.FieldTooLarge`: if q exceeds the field cap.

        """
        if self._points is None or cap is not None:
            F = self.spec
            codes = F.codes(cap)
            a1, _, a3, _, _ = self.a
            tables = self._root_tables()
            points = [INFINITY]
            for x in codes:
                b = F.add(F.mul(a1, x), a3)
                points.extend(CurvePoint(x, y)
                              for y in _solve_quadratic(F, b, self.rhs(x), tables))
            logger.debug("enumerated %d points on %s", len(points), self)
            self._points = tuple(points)
        return list(self._points)

    def affine_points(self, cap=None):
        return self.points(cap)[1:]

    def random_point(self, random_state=None):
        """A uniformly random rational point."""
        if not isinstance(random_state, np.random.RandomState):
            random_state = np.random.RandomState(random_state)
        points = self.points()
        return points[random_state.randint(len(points))]

    # group law

    def neg(self, P):
        if P.is_infinity:
            return P
        F = self.spec
        a1, _, a3, _, _ = self.a
        return CurvePoint(P.x, F.sub(F.neg(P.y), F.add(F.mul(a1, P.x), a3)))

    def is_two_torsion(self, P):
        """True for affine points with P = -P."""
        return not P.is_infinity and self.neg(P) == P

    def chord(self, P, R):
        """Slope and intercept (lambda, nu) of the line through P and R.

        The tangent is used when P == R. Returns None when the line is
        vertical, that is when R == -P.

        """
        F = self.spec
        a1, a2, a3, a4, _ = self.a
        if P.x == R.x:
            if R == self.neg(P):
                return None
            # tangent
            num = F.add(F.mul(F.embed(3), F.mul(P.x, P.x)), F.mul(F.embed(2), F.mul(a2, P.x)))
            num = F.sub(F.add(num, a4), F.mul(a1, P.y))
            den = F.add(F.add(F.mul(F.embed(2), P.y), F.mul(a1, P.x)), a3)
        else:
            num = F.sub(R.y, P.y)
            den = F.sub(R.x, P.x)
        lam = F.div(num, den)
        nu = F.sub(P.y, F.mul(lam, P.x))
        return lam, nu

    def add(self, P, R):
        if P.is_infinity:
            return R
        if R.is_infinity:
            return P
        line = self.chord(P, R)
        if line is None:
            return INFINITY
        lam, nu = line
        F = self.spec
        a1, a2, a3, _, _ = self.a
        x3 = F.sub(F.sub(F.sub(F.add(F.mul(lam, lam), F.mul(a1, lam)), a2), P.x), R.x)
        y3 = F.sub(F.sub(F.neg(F.mul(F.add(lam, a1), x3)), nu), a3)
        return CurvePoint(x3, y3)

    def sub(self, P, R):
        return self.add(P, self.neg(R))

    def mul(self, n, P):
        """[n]P by double-and-add; negative n multiplies -P."""
        if n < 0:
            n, P = -n, self.neg(P)
        result = INFINITY
        while n:
            if n & 1:
                result = self.add(result, P)
            P = self.add(P, P)
            n >>= 1
        return result

    def sum(self, points):
        total = INFINITY
        for P in points:
            total = self.add(total, P)
        return total

    def order(self, cap=None):
        """Number of rational points."""
        if self._order is None or cap is not None:
            self._order = len(self.points(cap))
        return self._order

    def point_order(self, P):
        """Smallest n > 0 with [n]P = O."""
        N = self.order()
        for d in _divisors(N):
            if self.mul(d, P).is_infinity:
                return d
        raise AssertionError("point order must divide the group order")  # pragma: no cover

    def points_of_order(self, n):
        return [P for P in self.points() if self.point_order(P) == n]

    def group_structure(self):
        """Histogram {order: number of points of that order}."""
        hist = {}
        for P in self.points():
            d = self.point_order(P)
            hist[d] = hist.get(d, 0) + 1
        return dict(sorted(hist.items()))

    # serialization

    def to_serializable(self):
        from atiyah.serialization.json import encode_element
        F = self.spec
        return dict(type='Curve',
                    p=F.p,
                    k=F.k,
                    modulus=list(F.modulus),
                    a=[encode_element(F, c) for c in self.a])

    @classmethod
    def from_serializable(cls, obj):
        from atiyah.serialization.json import load_curve
        return load_curve(obj)


def _solve_quadratic(F, b, c, tables):
    """Sorted codes y with y^2 + b*y = c."""
    sq, art = tables
    if F.p != 2:
        # (2y + b)^2 = b^2 + 4c
        disc = F.add(F.mul(b, b), F.mul(F.embed(4), c))
        inv2 = F.inv(F.embed(2))
        return sorted({F.mul(F.sub(s, b), inv2) for s in sq.get(disc, ())})
    if not b:
        return sorted(sq.get(c, ()))
    # y = b*z with z^2 + z = c/b^2
    target = F.div(c, F.mul(b, b))
    return sorted(F.mul(b, z) for z in art.get(target, ()))


def _divisors(n):
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def curve_make(spec: 'FieldSpec', a1: 'ElementLike', a2: 'ElementLike',
               a3: 'ElementLike', a4: 'ElementLike', a6: 'ElementLike') -> 'Curve':
    """Construct a validated smooth curve.

    Args:
        spec (:class:`~atiyah.field.FieldSpec`):
            The base field.

        a1, a2, a3, a4, a6 (int/sequence/:class:`~atiyah.field.FieldElement`):
            Weierstrass coefficients, anything :meth:`FieldSpec.code` accepts.

    Returns:
        :class:`.Curve`

    Raises:
        :exc:`.SingularCurve`: if the discriminant vanishes.

    Examples:
        >>> from atiyah import field_make, curve_make
        >>> curve_make(field_make(5), 0, 0, 0, 0, 0)
        Traceback (most recent call last):
            ...
        atiyah.exceptions.SingularCurve: discriminant of ... vanishes

    """
    curve = Curve(spec, [spec.code(a) for a in (a1, a2, a3, a4, a6)])
    if curve.discriminant() == 0:
        raise SingularCurve("discriminant of {} vanishes".format(curve))
    return curve


def add_points(curve, P, R):
    """P + R in the group law, after checking both points lie on the curve."""
    curve.check_point(P)
    curve.check_point(R)
    return curve.add(P, R)


def neg_point(curve, P):
    curve.check_point(P)
    return curve.neg(P)


def scalar_mul(curve, n, P):
    curve.check_point(P)
    return curve.mul(n, P)


def enumerate_points(curve, cap=None):
    """All rational points of the curve, O first.

    The count always satisfies the Hasse bound |N - (q + 1)| <= 2 sqrt(q).

    Raises:
        :exc:`.FieldTooLarge`: if q exceeds the field cap.

    """
    return curve.points(cap)


def group_order(curve, cap=None):
    return curve.order(cap)


def point_order(curve, P):
    curve.check_point(P)
    return curve.point_order(P)


class Divisor(abc.Mapping):
    """A divisor supported on rational points, as an immutable mapping.

    Entries with multiplicity zero are dropped.

    Examples:
        >>> from atiyah import Divisor, INFINITY, CurvePoint
        >>> D = Divisor({CurvePoint(0, 1): 1, CurvePoint(0, 4): 1, INFINITY: -2})
        >>> D.degree
        0

    """
    __slots__ = ('_data',)

    def __init__(self, data=()):
        counts = {}
        items = data.items() if isinstance(data, abc.Mapping) else data
        for P, n in items:
            if not isinstance(P, CurvePoint):
                raise TypeError("divisor support must be CurvePoints, received {!r}".format(P))
            if not isinstance(n, Integral):
                raise TypeError("multiplicities must be integers, received {!r}".format(n))
            counts[P] = counts.get(P, 0) + int(n)
        self._data = {P: counts[P] for P in sorted(counts) if counts[P]}

    @classmethod
    def from_points(cls, points):
        """The divisor p_1 + ... + p_n."""
        return cls((P, 1) for P in points)

    def __getitem__(self, P):
        return self._data[P]

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __repr__(self):
        return 'Divisor({!r})'.format(self._data)

    def __eq__(self, other):
        if isinstance(other, Divisor):
            return self._data == other._data
        if isinstance(other, abc.Mapping):
            return self == Divisor(other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._data.items()))

    def __add__(self, other):
        return Divisor(list(self.items()) + list(other.items()))

    def __neg__(self):
        return Divisor((P, -n) for P, n in self.items())

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, n):
        return Divisor((P, n * m) for P, m in self.items())

    __rmul__ = __mul__

    @property
    def degree(self):
        return sum(self._data.values())

    @property
    def support(self):
        return list(self._data)

    def affine_part(self):
        return Divisor((P, n) for P, n in self.items() if not P.is_infinity)

    def point_sum(self, curve):
        """The group sum of [n_i]P_i."""
        total = INFINITY
        for P, n in self.items():
            total = curve.add(total, curve.mul(n, P))
        return total


def is_principal(curve, divisor):
    """True if the divisor is the divisor of a rational function.

    On an elliptic curve with O as identity this holds if and only if the
    degree is 0 and the group sum of [n_i]P_i is O.

    Raises:
        :exc:`.PointNotOnCurve`: if a support point is not on the curve.

    """
    for P in divisor:
        curve.check_point(P)
    return divisor.degree == 0 and divisor.point_sum(curve).is_infinity
