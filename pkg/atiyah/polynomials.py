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

"""Univariate polynomials over a finite field.

Coefficients are stored as integer element codes of the base field (see
:class:`~atiyah.field.FieldSpec`), lowest degree first, with trailing zeros
stripped. The base field is only accessed through its scalar methods
``add``, ``sub``, ``neg``, ``mul``, ``inv`` and ``elements``.

Examples:
    >>> from atiyah import field_make
    >>> from atiyah.polynomials import Polynomial
    >>> F5 = field_make(5)
    >>> x = Polynomial.variable(F5)
    >>> (x * x + Polynomial.constant(F5, 4)).roots()
    [1, 4]

"""
import itertools

__all__ = ['Polynomial', 'RationalFunction', 'poly_gcd', 'poly_lcm', 'is_irreducible']


class Polynomial:
    """A polynomial over a finite field.

    Args:
        field (:class:`~atiyah.field.FieldSpec`):
            The coefficient field.

        coeffs (iterable[int]):
            Element codes, lowest degree first.

    """
    __slots__ = ('field', 'coeffs')

    def __init__(self, field, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, field, c):
        """The constant polynomial with element code `c`."""
        return cls(field, (c,))

    @classmethod
    def variable(cls, field):
        """The polynomial x."""
        return cls(field, (0, 1))

    @classmethod
    def from_roots(cls, field, roots):
        """The monic polynomial with the given roots."""
        poly = cls.constant(field, 1)
        for root in roots:
            poly = poly * cls(field, (field.neg(root), 1))
        return poly

    @property
    def degree(self):
        """Degree of the polynomial, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self):
        """Leading coefficient, 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (1,)

    def coefficient(self, i):
        """Coefficient code of x**i."""
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.field != self.field:
            from atiyah.exceptions import FieldMismatch
            raise FieldMismatch("polynomials over different fields")
        return other

    def __repr__(self):
        return '{}({!r}, {!r})'.format(type(self).__name__, self.field, list(self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        add = self.field.add
        return Polynomial(self.field,
                          (add(a, b) for a, b in itertools.zip_longest(
                              self.coeffs, other.coeffs, fillvalue=0)))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        sub = self.field.sub
        return Polynomial(self.field,
                          (sub(a, b) for a, b in itertools.zip_longest(
                              self.coeffs, other.coeffs, fillvalue=0)))

    def __neg__(self):
        return Polynomial(self.field, map(self.field.neg, self.coeffs))

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Polynomial(self.field)
        F = self.field
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Polynomial(F, out)

    def scale(self, c):
        """Multiply every coefficient by the element code `c`."""
        mul = self.field.mul
        return Polynomial(self.field, (mul(c, a) for a in self.coeffs))

    def shift(self, n):
        """Multiply by x**n, n >= 0."""
        if not self.coeffs:
            return self
        return Polynomial(self.field, (0,) * n + self.coeffs)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers of polynomials are not polynomials")
        result = Polynomial.constant(self.field, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            from atiyah.exceptions import DivisionByZero
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return Polynomial(F), self
        quot = [0] * (len(rem) - dq)
        inv_lead = F.inv(other.lead)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if not c:
                continue
            c = F.mul(c, inv_lead)
            quot[i - dq] = c
            for j, b in enumerate(other.coeffs):
                rem[i - dq + j] = F.sub(rem[i - dq + j], F.mul(c, b))
        return Polynomial(F, quot), Polynomial(F, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        """The monic associate; the zero polynomial is returned unchanged."""
        if not self.coeffs or self.lead == 1:
            return self
        return self.scale(self.field.inv(self.lead))

    def powmod(self, e, modulus):
        """self**e reduced modulo `modulus`, by square-and-multiply."""
        result = Polynomial.constant(self.field, 1) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def derivative(self):
        F = self.field
        out = []
        for i, c in enumerate(self.coeffs[1:], start=1):
            out.append(F.mul(F.embed(i), c))
        return Polynomial(F, out)

    def __call__(self, x):
        """Evaluate at the element code `x` by Horner's rule."""
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def roots(self):
        """Distinct roots in the coefficient field, as sorted element codes."""
        if not self.coeffs:
            raise ValueError("every element is a root of the zero polynomial")
        if self.degree < 1:
            return []
        return [a for a in self.field.codes() if self(a) == 0]

    def valuation_at(self, a):
        """Multiplicity of the root `a` (0 if `a` is not a root)."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has infinite valuation")
        linear = Polynomial(self.field, (self.field.neg(a), 1))
        n = 0
        poly = self
        while True:
            quot, rem = divmod(poly, linear)
            if rem:
                return n
            n += 1
            poly = quot


def poly_gcd(a, b):
    """Monic greatest common divisor of two polynomials."""
    while b:
        a, b = b, a % b
    return a.monic()


def poly_lcm(a, b):
    """Monic least common multiple of two nonzero polynomials."""
    return (a * (b // poly_gcd(a, b))).monic()


def _prime_factors(n):
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


def is_irreducible(poly):
    """Rabin's irreducibility test over the coefficient field.

    A polynomial f of degree k over F_Q is irreducible if and only if f
    divides x**(Q**k) - x and is coprime to x**(Q**(k/l)) - x for every prime
    l dividing k.

    """
    k = poly.degree
    if k < 1:
        return False
    if k == 1:
        return True
    F = poly.field
    Q = F.q
    f = poly.monic()
    x = Polynomial.variable(F)

    for ell in _prime_factors(k):
        h = x.powmod(Q ** (k // ell), f) - x
        if poly_gcd(f, h).degree > 0:
            return False

    return (x.powmod(Q ** k, f) - x) % f == Polynomial(F)


class RationalFunction:
    """An element u = num/den of the rational function field F_q(x).

    Kept in lowest terms with a monic denominator, so equal functions have
    equal representations. The zero function is 0/1.

    Args:
        num (:class:`.Polynomial`):
            Numerator.

        den (:class:`.Polynomial`, optional):
            Denominator, nonzero. Defaults to 1.

    """
    __slots__ = ('num', 'den')

    def __init__(self, num, den=None):
        field = num.field
        if den is None:
            den = Polynomial.constant(field, 1)
        if den.is_zero():
            from atiyah.exceptions import DivisionByZero
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            den = Polynomial.constant(field, 1)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
            lead = den.lead
            if lead != 1:
                inv = field.inv(lead)
                num = num.scale(inv)
                den = den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, field, c):
        return cls(Polynomial.constant(field, c))

    @classmethod
    def variable(cls, field):
        return cls(Polynomial.variable(field))

    @property
    def field(self):
        return self.num.field

    @property
    def degree(self):
        """deg(num) - deg(den); the order of the pole at x = infinity."""
        return self.num.degree - self.den.degree

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_one()

    def __repr__(self):
        return 'RationalFunction({!r}, {!r})'.format(list(self.num.coeffs), list(self.den.coeffs))

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other):
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            from atiyah.exceptions import DivisionByZero
            raise DivisionByZero("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def scale(self, c):
        return RationalFunction(self.num.scale(c), self.den)

    def __call__(self, x):
        """Evaluate at the element code `x`."""
        d = self.den(x)
        if not d:
            from atiyah.exceptions import PoleAtPoint
            raise PoleAtPoint("x = {} is a pole".format(x))
        F = self.field
        return F.mul(self.num(x), F.inv(d))

    def valuation_at(self, a):
        """Order of vanishing at x = a (negative at poles)."""
        if self.num.is_zero():
            from atiyah.exceptions import ZeroFunction
            raise ZeroFunction("the zero function has no valuation")
        return self.num.valuation_at(a) - self.den.valuation_at(a)
