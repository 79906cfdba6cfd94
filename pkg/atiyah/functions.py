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

"""The function field of an elliptic curve.

Every function is written u(x) + v(x)*y with u, v in F_q(x). Products are
reduced with the curve relation y**2 = h(x) - s(x)*y where

    s = a1*x + a3,    h = x**3 + a2*x**2 + a4*x + a6.

Valuations are computed exactly from norms and degrees. Local expansions use
the uniformizer t = x/y at O, x - x_P at affine points with P != -P and
y - y_P at affine 2-torsion points.

Examples:
    >>> from atiyah import field_make, curve_make, CurveFunction, ord_at, INFINITY
    >>> E = curve_make(field_make(5), 0, 0, 0, 1, 1)
    >>> x, y = CurveFunction.x(E), CurveFunction.y(E)
    >>> ord_at(E, x / y, INFINITY)
    1

"""
import functools
import logging
import math

from numbers import Integral

from atiyah.curve import INFINITY, Divisor, is_principal
from atiyah.exceptions import (NotPrincipal, PoleAtPoint, PrecisionTooLow,
                               ZeroFunction)
from atiyah.field import FieldElement
from atiyah.laurent import LaurentSeries
from atiyah.polynomials import Polynomial, RationalFunction, poly_lcm

__all__ = ['CurveFunction',
           'uniformizer_at', 'ord_at', 'func_eval', 'expand_at', 'divisor_of',
           'miller_build', 'line_through', 'vertical_line',
           'conjugate', 'norm', 'trace', 'is_regular_affine',
           'coordinate_expansions',
           ]

logger = logging.getLogger(__name__)


def _s_poly(curve):
    a1, _, a3, _, _ = curve.a
    return Polynomial(curve.spec, (a3, a1))


def _h_poly(curve):
    _, a2, _, a4, a6 = curve.a
    return Polynomial(curve.spec, (a6, a4, a2, 1))


def _as_rational(curve, value):
    F = curve.spec
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Polynomial):
        return RationalFunction(value)
    if isinstance(value, FieldElement):
        return RationalFunction.constant(F, F.code(value))
    if isinstance(value, Integral):
        return RationalFunction.constant(F, F.embed(int(value)))
    return RationalFunction(Polynomial(F, (F.code(c) for c in value)))


class CurveFunction:
    """A rational function u(x) + v(x)*y on an elliptic curve.

    Args:
        curve (:class:`~atiyah.curve.Curve`):
            The curve.

        u (:class:`~atiyah.polynomials.RationalFunction`/:class:`~atiyah.polynomials.Polynomial`):
            The part free of y.

        v (:class:`~atiyah.polynomials.RationalFunction`/:class:`~atiyah.polynomials.Polynomial`, optional):
            The coefficient of y. Defaults to 0.

    Examples:
        >>> from atiyah import field_make, curve_make, CurveFunction
        >>> E = curve_make(field_make(5), 0, 0, 0, 1, 1)
        >>> y = CurveFunction.y(E)
        >>> y * y
        CurveFunction(x^3 + x + 1)

    """
    __slots__ = ('curve', 'u', 'v')

    def __init__(self, curve, u, v=None):
        self.curve = curve
        self.u = _as_rational(curve, u)
        self.v = _as_rational(curve, 0 if v is None else v)

    # constructors

    @classmethod
    def constant(cls, curve, c):
        return cls(curve, RationalFunction.constant(curve.spec, curve.spec.code(c)))

    @classmethod
    def x(cls, curve):
        return cls(curve, Polynomial.variable(curve.spec))

    @classmethod
    def y(cls, curve):
        return cls(curve, 0, 1)

    @classmethod
    def from_polynomials(cls, curve, u_num=(), u_den=(1,), v_num=(), v_den=(1,)):
        """Build (u_num/u_den) + (v_num/v_den)*y from coefficient sequences."""
        F = curve.spec

        def poly(coeffs):
            if isinstance(coeffs, Polynomial):
                return coeffs
            return Polynomial(F, (F.code(c) for c in coeffs))

        return cls(curve,
                   RationalFunction(poly(u_num), poly(u_den)),
                   RationalFunction(poly(v_num), poly(v_den)))

    # structure

    @property
    def spec(self):
        return self.curve.spec

    def is_zero(self):
        return self.u.is_zero() and self.v.is_zero()

    def split(self):
        """Polynomials (A, B, D) with f = (A + B*y)/D and D monic."""
        D = poly_lcm(self.u.den, self.v.den)
        A = self.u.num * (D // self.u.den)
        B = self.v.num * (D // self.v.den)
        return A, B, D

    def is_polynomial(self):
        """True if u and v are both polynomials in x."""
        return self.u.is_polynomial() and self.v.is_polynomial()

    def leading_at_infinity(self):
        """(ord_O(f), code of the leading coefficient in t = x/y)."""
        if self.is_zero():
            raise ZeroFunction("the zero function has no leading term")
        A, B, D = self.split()
        # x = t^-2 + ..., y = t^-3 + ...
        ord_a = -2 * A.degree if A else math.inf
        ord_b = -2 * B.degree - 3 if B else math.inf
        lead = A.lead if ord_a < ord_b else B.lead
        order = min(ord_a, ord_b) + 2 * D.degree
        return order, self.spec.div(lead, D.lead)

    def _coerce(self, other):
        if isinstance(other, CurveFunction):
            if other.curve != self.curve:
                from atiyah.exceptions import FieldMismatch
                raise FieldMismatch("functions on different curves")
            return other
        if isinstance(other, (Integral, FieldElement)):
            return CurveFunction(self.curve, other)
        return NotImplemented

    def __repr__(self):
        parts = []
        if not self.u.is_zero():
            parts.append(_rational_str(self.u))
        if not self.v.is_zero():
            v = _rational_str(self.v)
            parts.append('y' if v == '1' else '({})*y'.format(v))
        return 'CurveFunction({})'.format(' + '.join(parts) or '0')

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash((self.curve, self.u, self.v))

    def __bool__(self):
        return not self.is_zero()

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CurveFunction(self.curve, self.u + other.u, self.v + other.v)

    __radd__ = __add__

    def __neg__(self):
        return CurveFunction(self.curve, -self.u, -self.v)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CurveFunction(self.curve, self.u - other.u, self.v - other.v)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        s = RationalFunction(_s_poly(self.curve))
        h = RationalFunction(_h_poly(self.curve))
        vv = self.v * other.v
        U = self.u * other.u + vv * h
        V = self.u * other.v + other.u * self.v - vv * s
        return CurveFunction(self.curve, U, V)

    __rmul__ = __mul__

    def scale(self, c):
        """Multiply by the element code `c`."""
        return CurveFunction(self.curve, self.u.scale(c), self.v.scale(c))

    def inverse(self):
        """1/f = conjugate(f)/norm(f).

        Raises:
            :exc:`.DivisionByZero`: for the zero function.

        """
        if self.is_zero():
            from atiyah.exceptions import DivisionByZero
            raise DivisionByZero("the zero function has no inverse")
        n = norm(self)
        c = conjugate(self)
        return CurveFunction(self.curve, c.u / n, c.v / n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = CurveFunction(self.curve, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # serialization

    def to_serializable(self):
        """JSON-compatible form; the curve is serialized separately."""
        from atiyah.serialization.json import encode_element

        def enc(poly):
            return [encode_element(self.spec, c) for c in poly.coeffs]

        return dict(type='CurveFunction',
                    u=[enc(self.u.num), enc(self.u.den)],
                    v=[enc(self.v.num), enc(self.v.den)])

    @classmethod
    def from_serializable(cls, obj, curve):
        from atiyah.serialization.json import decode_element

        def dec(coeffs):
            return [decode_element(curve.spec, c) for c in coeffs]

        (un, ud), (vn, vd) = obj['u'], obj['v']
        return cls.from_polynomials(curve, dec(un), dec(ud), dec(vn), dec(vd))


def _poly_str(poly):
    F = poly.field
    terms = []
    for i in range(poly.degree, -1, -1):
        c = poly.coefficient(i)
        if not c:
            continue
        cs = str(c) if F.k == 1 else str(F.coords(c))
        mono = '' if i == 0 else ('x' if i == 1 else 'x^{}'.format(i))
        if not mono:
            terms.append(cs)
        else:
            terms.append(mono if c == 1 else '{}*{}'.format(cs, mono))
    return ' + '.join(terms) or '0'


def _rational_str(rf):
    if rf.is_polynomial():
        return _poly_str(rf.num)
    return '({})/({})'.format(_poly_str(rf.num), _poly_str(rf.den))


def conjugate(f):
    """The image u - v*s - v*y of f under the involution P -> -P."""
    s = RationalFunction(_s_poly(f.curve))
    return CurveFunction(f.curve, f.u - f.v * s, -f.v)


def norm(f):
    """f * conjugate(f) = u**2 - u*v*s - v**2*h, an element of F_q(x)."""
    s = RationalFunction(_s_poly(f.curve))
    h = RationalFunction(_h_poly(f.curve))
    return f.u * f.u - f.u * f.v * s - f.v * f.v * h


def trace(f):
    """f + conjugate(f) = 2u - v*s, an element of F_q(x)."""
    s = RationalFunction(_s_poly(f.curve))
    return f.u + f.u - f.v * s


def is_regular_affine(f):
    """True if f has no poles at affine points, over the algebraic closure.

    That is the case exactly when the trace and norm of f are polynomials.

    """
    return trace(f).is_polynomial() and norm(f).is_polynomial()


def _poly_norm(curve, A, B):
    # norm of A + B*y for polynomials A, B
    return A * A - A * B * _s_poly(curve) - B * B * _h_poly(curve)


def _val(poly, x0):
    return math.inf if poly.is_zero() else poly.valuation_at(x0)


def uniformizer_at(curve, P):
    """The local parameter used at P.

    Returns x/y at O, x - x_P at affine P with P != -P and y - y_P at affine
    2-torsion points.

    Raises:
        :exc:`.PointNotOnCurve`: if P is not on the curve.

    """
    curve.check_point(P)
    F = curve.spec
    if P.is_infinity:
        return CurveFunction.x(curve) / CurveFunction.y(curve)
    if curve.is_two_torsion(P):
        return CurveFunction.y(curve) - CurveFunction.constant(curve, P.y)
    return CurveFunction(curve, Polynomial(F, (F.neg(P.x), 1)))


def _uniformizer_tag(curve, P):
    if P.is_infinity:
        return 'x/y'
    if curve.is_two_torsion(P):
        return 'y - y_P'
    return 'x - x_P'


def ord_at(curve, f, P):
    """Order of vanishing of f at P, negative at poles.

    Raises:
        :exc:`.ZeroFunction`: if f is zero.
        :exc:`.PointNotOnCurve`: if P is not on the curve.

    """
    curve.check_point(P)
    if f.is_zero():
        raise ZeroFunction("the zero function has no order")
    if P.is_infinity:
        return f.leading_at_infinity()[0]

    A, B, D = f.split()
    x0 = P.x
    if curve.is_two_torsion(P):
        # x - x0 has order 2 at P and P is fixed by conjugation
        return _val(_poly_norm(curve, A, B), x0) - 2 * _val(D, x0)

    e = min(_val(A, x0), _val(B, x0))
    if e:
        linear = Polynomial(curve.spec, (curve.spec.neg(x0), 1)) ** e
        A, B = A // linear, B // linear
    F = curve.spec
    order = e - _val(D, x0)
    if not F.add(A(x0), F.mul(B(x0), P.y)):
        order += _val(_poly_norm(curve, A, B), x0)
    return order


def func_eval(curve, f, P):
    """Value of f at P as a field element.

    Raises:
        :exc:`.PoleAtPoint`: if f has a pole at P.

    """
    curve.check_point(P)
    F = curve.spec
    if f.is_zero():
        return F.zero
    if P.is_infinity:
        order, lead = f.leading_at_infinity()
        if order < 0:
            raise PoleAtPoint("f has a pole of order {} at O".format(-order))
        return F(lead if order == 0 else 0)

    A, B, D = f.split()
    d = D(P.x)
    if d:
        return F(F.div(F.add(A(P.x), F.mul(B(P.x), P.y)), d))
    order = ord_at(curve, f, P)
    if order < 0:
        raise PoleAtPoint("f has a pole of order {} at {}".format(-order, P))
    if order > 0:
        return F.zero
    return F(expand_at(curve, f, P, 1).coefficient(0))


def _const(F, c):
    return LaurentSeries(F, 0, (c,))


def _horner(F, poly, xs):
    acc = LaurentSeries.zero(F)
    for c in reversed(poly.coeffs):
        acc = acc * xs + _const(F, c)
    return acc


@functools.lru_cache(maxsize=256)
def coordinate_expansions(curve, P, prec):
    """Expansions (x(t), y(t)) at P in the local parameter of :func:`uniformizer_at`.

    Both series are known at least modulo t**prec.

    """
    F = curve.spec
    a1, a2, a3, a4, a6 = curve.a

    if P.is_infinity:
        # w = -1/y in z = -x/y satisfies w = z^3 + a1 z w + a2 z^2 w + a3 w^2 + a4 z w^2 + a6 w^3
        z = LaurentSeries.monomial(F, 1, 1)
        target = prec + 6
        w = LaurentSeries.zero(F, prec=3)
        while w.prec < target:
            w2 = w * w
            terms = [z ** 3]
            for c, term in ((a1, z * w), (a2, z * z * w), (a3, w2),
                            (a4, z * w2), (a6, w2 * w)):
                if c:
                    terms.append(term.scale(c))
            w = sum(terms[1:], terms[0]).truncate(target)
        winv = w.inverse()
        xs = (z * winv).rescale(F.neg(1))
        ys = (-winv).rescale(F.neg(1))
        return xs.truncate(prec), ys.truncate(prec)

    x0, y0 = P.x, P.y
    t = LaurentSeries.monomial(F, 1, 1)
    gy = F.add(F.add(F.mul(F.embed(2), y0), F.mul(a1, x0)), a3)
    gx = F.sub(F.sub(F.sub(F.mul(a1, y0), F.mul(F.embed(3), F.mul(x0, x0))),
                     F.mul(F.embed(2), F.mul(a2, x0))), a4)
    c2 = F.add(F.mul(F.embed(3), x0), a2)

    s = LaurentSeries.zero(F, prec=1)
    if gy:
        # t = x - x0, y = y0 + s(t)
        while s.prec < prec:
            rhs = t.scale(gx) + s * s + (t * s).scale(a1) - (t * t).scale(c2) - t ** 3
            s = rhs.scale(F.neg(F.inv(gy))).truncate(prec)
        return (_const(F, x0) + t).truncate(prec), (_const(F, y0) + s).truncate(prec)

    # 2-torsion: t = y - y0, x = x0 + s(t)
    while s.prec < prec:
        rhs = t * t + (s * t).scale(a1) - (s * s).scale(c2) - s ** 3
        s = rhs.scale(F.neg(F.inv(gx))).truncate(prec)
    return (_const(F, x0) + s).truncate(prec), (_const(F, y0) + t).truncate(prec)


def expand_at(curve, f, P, prec):
    """Laurent expansion of f at P modulo t**prec.

    The leading exponent of the result equals :func:`ord_at`. The working
    precision of the coordinate series is raised until the requested
    precision is certified.

    Raises:
        :exc:`.ZeroFunction`: if f is zero.
        :exc:`.PrecisionTooLow`: if prec <= ord_at(f, P).

    """
    order = ord_at(curve, f, P)
    if prec <= order:
        raise PrecisionTooLow("precision {} cannot show the leading term t^{}".format(prec, order))
    F = curve.spec
    A, B, D = f.split()

    extra = 4 + 2 * (max(A.degree, B.degree + 2, 0) + D.degree)
    for _ in range(8):
        work = prec + extra
        xs, ys = coordinate_expansions(curve, P, work)
        num = (_horner(F, A, xs) + _horner(F, B, xs) * ys).truncate(work)
        den = _horner(F, D, xs).truncate(work)
        series = num / den
        if series.prec >= prec and not series.is_zero() and series.val == order:
            return LaurentSeries(F, series.val, series.coeffs, prec, center=P,
                                 uniformizer=_uniformizer_tag(curve, P))
        logger.debug("raising expansion precision at %s from %d", P, work)
        extra *= 2
    raise PrecisionTooLow("could not certify {} terms of the expansion at {}".format(prec, P))


def divisor_of(curve, f):
    """The rational part of div(f) and the residual degree.

    Returns:
        tuple: (:class:`~atiyah.curve.Divisor`, int). The residual is the
        degree of the zeros minus the poles at non-rational points, so the
        rational degree plus the residual is 0.

    Raises:
        :exc:`.ZeroFunction`: if f is zero.

    """
    if f.is_zero():
        raise ZeroFunction("the zero function has no divisor")
    A, B, D = f.split()
    candidates = set(D.roots()) | set(_poly_norm(curve, A, B).roots())
    counts = {INFINITY: ord_at(curve, f, INFINITY)}
    for x0 in sorted(candidates):
        for P in curve.lift_x(x0):
            counts[P] = ord_at(curve, f, P)
    divisor = Divisor(counts)
    return divisor, -divisor.degree


def vertical_line(curve, P):
    """x - x_P, with divisor P + (-P) - 2O; the constant 1 when P is O."""
    if P.is_infinity:
        return CurveFunction(curve, 1)
    F = curve.spec
    return CurveFunction(curve, Polynomial(F, (F.neg(P.x), 1)))


def line_through(curve, P, R):
    """The line through P and R (the tangent when P == R).

    Its divisor is P + R + (-(P + R)) - 3O, or P + R - 2O when the line is
    vertical.

    """
    if P.is_infinity:
        return vertical_line(curve, R)
    if R.is_infinity:
        return vertical_line(curve, P)
    chord = curve.chord(P, R)
    if chord is None:
        return vertical_line(curve, P)
    lam, nu = chord
    F = curve.spec
    return CurveFunction(curve, Polynomial(F, (F.neg(nu), F.neg(lam))), 1)


def _add_point(curve, f, S, P):
    # div f = E - (S) - (c - 1)(O)  ->  div f' = E + P - (S + P) - c(O)
    if S.is_infinity:
        return f, P
    T = curve.add(S, P)
    g = line_through(curve, S, P)
    if not T.is_infinity:
        g = g / vertical_line(curve, T)
    return f * g, T


def miller_build(curve, divisor):
    """A function whose divisor is `divisor`.

    The result is normalized so that its leading coefficient at O in the
    uniformizer x/y is 1.

    Raises:
        :exc:`.NotPrincipal`: if the divisor is not principal.

    Examples:
        >>> from atiyah import field_make, curve_make, Divisor, INFINITY, miller_build
        >>> E = curve_make(field_make(5), 0, 0, 0, 1, 1)
        >>> P, R = E.point(0, 1), E.point(0, 4)
        >>> miller_build(E, Divisor({P: 1, R: 1, INFINITY: -2}))
        CurveFunction(x)

    """
    if not is_principal(curve, divisor):
        raise NotPrincipal("{} is not principal on {}".format(divisor, curve))
    f = CurveFunction(curve, 1)
    S = INFINITY
    for P, n in divisor.items():
        if P.is_infinity:
            continue
        for _ in range(abs(n)):
            if n > 0:
                f, S = _add_point(curve, f, S, P)
            else:
                f = f / vertical_line(curve, P)
                f, S = _add_point(curve, f, S, curve.neg(P))
    _, lead = f.leading_at_infinity()
    return f.scale(curve.spec.inv(lead))
