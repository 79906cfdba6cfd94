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

"""Truncated Laurent series over F_q.

A :class:`LaurentSeries` is known modulo t**prec. Exact series (finitely many
terms, known to all orders) have ``prec = math.inf``. Arithmetic tracks
precision the usual way:

* ``a + b`` is known to ``min(a.prec, b.prec)``
* ``a * b`` is known to ``min(a.val + b.prec, b.val + a.prec)``
* ``1 / a`` is known to ``a.prec - 2*a.val``

A series whose known coefficients all vanish has ``val == prec``.

Examples:
    >>> from atiyah import field_make
    >>> from atiyah.laurent import LaurentSeries
    >>> F5 = field_make(5)
    >>> t = LaurentSeries.monomial(F5, 1, 1)
    >>> (1 + t).truncate(4).inverse()
    LaurentSeries(F_5, 1 + 4*t + t^2 + 4*t^3 + O(t^4))

"""
import math

from atiyah.exceptions import DivisionByZero, FieldMismatch, PrecisionTooLow

__all__ = ['LaurentSeries']


class LaurentSeries:
    """A Laurent series sum c_i t**(val + i) known modulo t**prec.

    Args:
        spec (:class:`~atiyah.field.FieldSpec`):
            Coefficient field.

        val (int):
            Exponent of the first entry of `coeffs`.

        coeffs (iterable[int]):
            Element codes. Leading and trailing zeros are stripped.

        prec (int/float, optional, default=math.inf):
            The series is known modulo t**prec.

        center (:class:`~atiyah.curve.CurvePoint`, optional):
            Point the series is an expansion at. Metadata only.

        uniformizer (str, optional, default='t'):
            Name of the local parameter. Metadata only.

    """
    __slots__ = ('spec', 'val', 'coeffs', 'prec', 'center', 'uniformizer')

    def __init__(self, spec, val, coeffs, prec=math.inf, center=None, uniformizer='t'):
        coeffs = list(coeffs)
        if prec < math.inf:
            del coeffs[max(prec - val, 0):]
        start = 0
        while start < len(coeffs) and not coeffs[start]:
            start += 1
        coeffs = coeffs[start:]
        while coeffs and not coeffs[-1]:
            coeffs.pop()

        self.spec = spec
        self.prec = prec
        self.center = center
        self.uniformizer = uniformizer
        if coeffs:
            self.val = val + start
            self.coeffs = tuple(coeffs)
        else:
            self.val = prec
            self.coeffs = ()

    @classmethod
    def monomial(cls, spec, c, e, prec=math.inf):
        """The series c*t**e."""
        return cls(spec, e, (c,), prec)

    @classmethod
    def one(cls, spec):
        return cls(spec, 0, (1,))

    @classmethod
    def zero(cls, spec, prec=math.inf):
        return cls(spec, 0, (), prec)

    def _like(self, val, coeffs, prec):
        return LaurentSeries(self.spec, val, coeffs, prec, self.center, self.uniformizer)

    def _coerce(self, other):
        if isinstance(other, LaurentSeries):
            if other.spec != self.spec:
                raise FieldMismatch("series over {} and {}".format(self.spec, other.spec))
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentSeries(self.spec, 0, (self.spec.embed(other),))
        return NotImplemented

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.val + i
            cs = str(c) if self.spec.k == 1 else str(self.spec.coords(c))
            if e == 0:
                terms.append(cs)
            else:
                mono = self.uniformizer if e == 1 else '{}^{}'.format(self.uniformizer, e)
                terms.append(mono if c == 1 else '{}*{}'.format(cs, mono))
        if self.prec < math.inf:
            terms.append('O({}^{})'.format(self.uniformizer, self.prec))
        return 'LaurentSeries({}, {})'.format(self.spec, ' + '.join(terms) or '0')

    # accessors

    @property
    def is_exact(self):
        return self.prec == math.inf

    def is_zero(self):
        """True if every known coefficient vanishes."""
        return not self.coeffs

    @property
    def lead(self):
        """The leading coefficient code, 0 for the zero series."""
        return self.coeffs[0] if self.coeffs else 0

    def coefficient(self, e):
        """Code of the coefficient of t**e.

        Raises:
            :exc:`.PrecisionTooLow`: if e >= prec.

        """
        if e >= self.prec:
            raise PrecisionTooLow("coefficient of t^{} requested from a series known "
                                  "modulo t^{}".format(e, self.prec))
        i = e - self.val
        if i < 0 or i >= len(self.coeffs):
            return 0
        return self.coeffs[i]

    def terms(self):
        """Nonzero terms as (exponent, code) pairs, in increasing exponent."""
        return [(self.val + i, c) for i, c in enumerate(self.coeffs) if c]

    def truncate(self, prec):
        """The same series known only modulo t**prec."""
        prec = min(prec, self.prec)
        return self._like(self.val, self.coeffs, prec)

    def shift(self, n):
        """Multiply by t**n."""
        return self._like(self.val + n, self.coeffs, self.prec + n)

    def scale(self, c):
        mul = self.spec.mul
        return self._like(self.val, (mul(c, a) for a in self.coeffs), self.prec)

    def rescale(self, c):
        """The series f(c*t), c a nonzero code."""
        F = self.spec
        out = []
        for i, a in enumerate(self.coeffs):
            out.append(F.mul(a, F.pow(c, self.val + i)))
        return self._like(self.val, out, self.prec)

    def agrees_with(self, other):
        """True if both series coincide modulo the smaller precision."""
        other = self._coerce(other)
        prec = min(self.prec, other.prec)
        lo = min(self.val, other.val)
        if lo == math.inf:
            return True
        hi = prec if prec < math.inf else max(self.val + len(self.coeffs),
                                             other.val + len(other.coeffs))
        return all(self.coefficient(e) == other.coefficient(e) for e in range(lo, hi))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.agrees_with(other)

    __hash__ = None

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prec = min(self.prec, other.prec)
        if self.is_zero():
            return other.truncate(prec)
        if other.is_zero():
            return self.truncate(prec)
        lo = min(self.val, other.val)
        hi = max(self.val + len(self.coeffs), other.val + len(other.coeffs))
        if prec < math.inf:
            hi = min(hi, prec)
        add = self.spec.add
        out = [0] * max(hi - lo, 0)
        for i, c in enumerate(self.coeffs):
            if self.val + i - lo < len(out):
                out[self.val + i - lo] = c
        for i, c in enumerate(other.coeffs):
            j = other.val + i - lo
            if j < len(out):
                out[j] = add(out[j], c)
        return self._like(lo, out, prec)

    __radd__ = __add__

    def __neg__(self):
        return self._like(self.val, map(self.spec.neg, self.coeffs), self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        prec = min(self.val + other.prec, other.val + self.prec)
        if self.is_zero() or other.is_zero():
            return self._like(0, (), prec)
        val = self.val + other.val
        n = len(self.coeffs) + len(other.coeffs) - 1
        if prec < math.inf:
            n = min(n, prec - val)
        F = self.spec
        out = [0] * max(n, 0)
        for i, a in enumerate(self.coeffs):
            if not a or i >= n:
                continue
            for j, b in enumerate(other.coeffs[:n - i]):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return self._like(val, out, prec)

    __rmul__ = __mul__

    def inverse(self):
        """The multiplicative inverse.

        Raises:
            :exc:`.DivisionByZero`: if no known coefficient is nonzero.
            ValueError: if the series is exact with more than one term, whose
                inverse has infinitely many terms. Truncate it first.

        """
        if self.is_zero():
            raise DivisionByZero("series with no known nonzero coefficient")
        F = self.spec
        v = self.val
        if self.is_exact:
            if len(self.coeffs) > 1:
                raise ValueError("the inverse of an exact non-monomial series needs "
                                 "a finite precision; truncate first")
            return self._like(-v, (F.inv(self.coeffs[0]),), math.inf)
        n = self.prec - v
        u = self.coeffs
        inv0 = F.inv(u[0])
        out = [inv0]
        for i in range(1, n):
            acc = 0
            for j in range(1, min(i, len(u) - 1) + 1):
                acc = F.add(acc, F.mul(u[j], out[i - j]))
            out.append(F.neg(F.mul(acc, inv0)))
        return self._like(-v, out, self.prec - 2 * v)

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
        result = LaurentSeries(self.spec, 0, (1,), math.inf, self.center, self.uniformizer)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result
