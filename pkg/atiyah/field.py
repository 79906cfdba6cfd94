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

"""Exact arithmetic in the finite field F_q, q = p**k.

An element of F_q is represented in the polynomial basis 1, w, ..., w**(k-1),
w a root of the modulus. Internally every element is an integer *code*

    c_0 + c_1*p + ... + c_{k-1}*p**(k-1)

with coordinates c_i in [0, p). The scalar methods of :class:`FieldSpec`
(``add``, ``mul``, ...) and the vectorized ones (``vadd``, ``vmul``, ...) work
on codes, the latter on NumPy integer arrays. :class:`FieldElement` wraps a
code for user-facing arithmetic.

Elements are enumerated in ascending code order, which is the lexicographic
order of the coordinate vectors read from the top coordinate down.

Examples:
    >>> from atiyah import field_make
    >>> F4 = field_make(2, 2)
    >>> F4.modulus
    (1, 1, 1)
    >>> w = F4([0, 1])
    >>> w * w == w + 1
    True

"""
import logging

from typing import TYPE_CHECKING

import numpy as np

from atiyah.config import resolve
from atiyah.exceptions import (DivisionByZero, FieldMismatch, FieldTooLarge,
                               NonPrime, ReducibleModulus)
from atiyah.polynomials import Polynomial, is_irreducible, _prime_factors

if TYPE_CHECKING:
    # avoid circular imports
    from atiyah.typing import ElementLike

__all__ = ['FieldSpec', 'FieldElement', 'field_make', 'field_enumerate', 'is_prime']

logger = logging.getLogger(__name__)


def is_prime(n):
    """Deterministic primality test by trial division."""
    if not isinstance(n, (int, np.integer)) or n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """The finite field F_q with q = p**k.

    Use :func:`field_make` to construct validated instances.

    Args:
        p (int):
            The characteristic.

        k (int):
            Extension degree.

        modulus (tuple[int]):
            Monic irreducible polynomial of degree k over F_p, coefficients
            lowest degree first. Empty for prime fields.

    """
    __slots__ = ('p', 'k', 'q', 'modulus', '_exp', '_log', '_exp_arr', '_log_arr',
                 '_digit_places')

    def __init__(self, p, k=1, modulus=()):
        self.p = int(p)
        self.k = int(k)
        self.q = self.p ** self.k
        self.modulus = tuple(int(c) for c in modulus) if self.k > 1 else ()
        self._exp = self._log = self._exp_arr = self._log_arr = None
        self._digit_places = [self.p ** i for i in range(self.k)]

    def __repr__(self):
        if self.k == 1:
            return 'FieldSpec({})'.format(self.p)
        return 'FieldSpec({}, {}, {})'.format(self.p, self.k, self.modulus)

    def __str__(self):
        return 'F_{}'.format(self.q)

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __len__(self):
        return self.q

    def __call__(self, value: 'ElementLike') -> 'FieldElement':
        """Construct an element from a code, a coordinate sequence or an element."""
        return FieldElement(self, self.code(value))

    @property
    def zero(self):
        return FieldElement(self, 0)

    @property
    def one(self):
        return FieldElement(self, 1)

    # codes

    def code(self, value: 'ElementLike') -> int:
        """Convert an int, a coordinate sequence or a FieldElement to a code."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldMismatch("element of {} used in {}".format(value.spec, self))
            return value.value
        if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
            value = int(value)
            if self.k == 1:
                return value % self.p
            if not 0 <= value < self.q:
                raise ValueError("element code {} out of range for {}".format(value, self))
            return value
        try:
            coords = [int(c) for c in value]
        except TypeError:
            raise TypeError("cannot interpret {!r} as an element of {}".format(value, self)) from None
        if len(coords) > self.k:
            raise ValueError("expected at most {} coordinates, received {}".format(
                self.k, len(coords)))
        if any(not 0 <= c < self.p for c in coords):
            raise ValueError("coordinates must lie in [0, {}), received {}".format(self.p, coords))
        return sum(c * place for c, place in zip(coords, self._digit_places))

    def coords(self, a):
        """The length-k coordinate vector of the code `a`, lowest degree first."""
        return tuple((a // place) % self.p for place in self._digit_places)

    def embed(self, n):
        """The code of the integer n, that is n*1."""
        return n % self.p

    def codes(self, cap=None):
        """All codes, in enumeration order, after checking the field cap."""
        cap = resolve('field_cap', cap)
        if self.q > cap:
            raise FieldTooLarge("q = {} exceeds the field cap {}".format(self.q, cap))
        return range(self.q)

    # tables

    def _tables(self):
        if self._exp is None:
            self._build_tables()
        return self._exp, self._log

    def _build_tables(self):
        q = self.q
        if q > resolve('field_cap'):
            raise FieldTooLarge("q = {} exceeds the field cap {}".format(q, resolve('field_cap')))

        Fp = FieldSpec(self.p)
        modulus = Polynomial(Fp, self.modulus)
        order = q - 1
        factors = _prime_factors(order)

        def as_poly(a):
            return Polynomial(Fp, self.coords(a))

        def as_code(poly):
            return sum(c * place for c, place in zip(poly.coeffs, self._digit_places))

        for g in range(2, q):
            gp = as_poly(g)
            if all(not gp.powmod(order // ell, modulus).is_one() for ell in factors):
                break
        else:  # pragma: no cover
            raise RuntimeError("no primitive element found for {!r}".format(self))

        logger.debug("building log tables for %s with primitive element %d", self, g)

        gp = as_poly(g)
        exp = [0] * (2 * order)
        log = [0] * q
        power = Polynomial.constant(Fp, 1)
        for i in range(order):
            a = as_code(power)
            exp[i] = exp[i + order] = a
            log[a] = i
            power = (power * gp) % modulus

        self._exp_arr = np.asarray(exp, dtype=np.int64)
        self._log_arr = np.asarray(log, dtype=np.int64)
        self._log = log
        self._exp = exp

    def primitive_element(self):
        """A generator of the multiplicative group, as a FieldElement."""
        if self.k == 1:
            factors = _prime_factors(self.p - 1)
            for g in range(1, self.p):
                if all(pow(g, (self.p - 1) // ell, self.p) != 1 for ell in factors):
                    return FieldElement(self, g)
        exp, _ = self._tables()
        return FieldElement(self, exp[1])

    # scalar arithmetic on codes

    def add(self, a, b):
        p = self.p
        if self.k == 1:
            return (a + b) % p
        if p == 2:
            return a ^ b
        out = 0
        for place in self._digit_places:
            out += (((a // place) + (b // place)) % p) * place
        return out

    def neg(self, a):
        p = self.p
        if self.k == 1:
            return -a % p
        if p == 2:
            return a
        out = 0
        for place in self._digit_places:
            out += (-(a // place) % p) * place
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.k == 1:
            return (a * b) % self.p
        if not a or not b:
            return 0
        exp, log = self._tables()
        return exp[log[a] + log[b]]

    def inv(self, a):
        if not a:
            raise DivisionByZero("zero has no inverse in {}".format(self))
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        exp, log = self._tables()
        return exp[(self.q - 1 - log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        """a**n by square-and-multiply; negative n inverts first."""
        if n < 0:
            a = self.inv(a)
            n = -n
        result = 1
        while n:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def sqrt(self, a):
        """All square roots of `a`, as sorted codes."""
        return sorted(b for b in self.codes() if self.mul(b, b) == a)

    # vectorized arithmetic on arrays of codes

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        p = self.p
        if self.k == 1:
            return (a + b) % p
        if p == 2:
            return np.bitwise_xor(a, b)
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for place in self._digit_places:
            out += (((a // place) + (b // place)) % p) * place
        return out

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        p = self.p
        if self.k == 1:
            return -a % p
        if p == 2:
            return a.copy()
        out = np.zeros(a.shape, dtype=np.int64)
        for place in self._digit_places:
            out += (-(a // place) % p) * place
        return out

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.k == 1:
            return (a * b) % self.p
        self._tables()
        prod = self._exp_arr[self._log_arr[a] + self._log_arr[b]]
        return np.where((a == 0) | (b == 0), 0, prod)

    def matmul(self, a, b):
        """Matrix product of two 2-dimensional code arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if a.shape[1] != b.shape[0]:
            raise ValueError("shapes {} and {} are not aligned".format(a.shape, b.shape))
        if self.k == 1:
            return (a @ b) % self.p
        out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
        for i in range(a.shape[1]):
            out = self.vadd(out, self.vmul(a[:, i:i+1], b[i:i+1, :]))
        return out


class FieldElement:
    """An immutable element of a finite field.

    Arithmetic with another element of the same field or with a Python int
    (read as n*1) is supported.

    Examples:
        >>> from atiyah import field_make
        >>> F7 = field_make(7)
        >>> F7(3).inv()
        FieldElement(F_7, 5)

    """
    __slots__ = ('spec', 'value')

    def __init__(self, spec, value):
        self.spec = spec
        self.value = value

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatch("cannot combine elements of {} and {}".format(
                    self.spec, other.spec))
            return other.value
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return self.spec.embed(int(other))
        return NotImplemented

    def __repr__(self):
        if self.spec.k == 1:
            return 'FieldElement({}, {})'.format(self.spec, self.value)
        return 'FieldElement({}, {})'.format(self.spec, list(self.coeffs))

    def __str__(self):
        if self.spec.k == 1:
            return str(self.value)
        return str(tuple(self.coeffs))

    @property
    def coeffs(self):
        """Polynomial-basis coordinates, lowest degree first."""
        return self.spec.coords(self.value)

    def __int__(self):
        return self.value

    __index__ = __int__

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return self.value == self.spec.embed(int(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.value))

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.sub(b, self.value))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.spec, self.spec.div(b, self.value))

    def __pow__(self, n):
        return FieldElement(self.spec, self.spec.pow(self.value, int(n)))

    def inv(self):
        return FieldElement(self.spec, self.spec.inv(self.value))


def _default_modulus(p, k):
    Fp = FieldSpec(p)
    # monic degree-k polynomials in ascending code order
    for code in range(p ** k, 2 * p ** k):
        coeffs = [(code // p ** i) % p for i in range(k + 1)]
        if is_irreducible(Polynomial(Fp, coeffs)):
            return tuple(coeffs)
    raise RuntimeError("no irreducible polynomial of degree {} over F_{}".format(k, p))  # pragma: no cover


def field_make(p, k=1, modulus=None):
    """Construct a validated finite field F_{p**k}.

    Args:
        p (int):
            The characteristic, a prime.

        k (int, optional, default=1):
            Extension degree.

        modulus (sequence[int], optional):
            Monic irreducible polynomial of degree k over F_p, coefficients
            lowest degree first. Ignored for k = 1. If omitted, the monic
            irreducible polynomial with the smallest code is used, that is the
            lexicographically smallest one read from the top coefficient down.

    Returns:
        :class:`.FieldSpec`

    Raises:
        :exc:`.NonPrime`: if p is not prime.
        :exc:`.ReducibleModulus`: if the modulus is not monic of degree k or
            is reducible.

    Examples:
        >>> from atiyah import field_make
        >>> field_make(2, 3).modulus
        (1, 1, 0, 1)

    """
    if not is_prime(p):
        raise NonPrime("characteristic must be prime, received {!r}".format(p))
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ValueError("extension degree must be a positive integer, received {!r}".format(k))
    p = int(p)
    k = int(k)

    if k == 1:
        return FieldSpec(p)

    if modulus is None:
        return FieldSpec(p, k, _default_modulus(p, k))

    modulus = tuple(int(c) for c in modulus)
    if len(modulus) != k + 1 or modulus[-1] != 1:
        raise ReducibleModulus("modulus must be monic of degree {}, received {}".format(k, list(modulus)))
    if any(not 0 <= c < p for c in modulus):
        raise ReducibleModulus("modulus coefficients must lie in [0, {}), received {}".format(
            p, list(modulus)))
    if not is_irreducible(Polynomial(FieldSpec(p), modulus)):
        raise ReducibleModulus("modulus {} is reducible over F_{}".format(list(modulus), p))
    return FieldSpec(p, k, modulus)


def field_enumerate(spec, cap=None):
    """All elements of the field, in ascending code order.

    Args:
        spec (:class:`.FieldSpec`):
            The field.

        cap (int, optional):
            Overrides the ``field_cap`` option.

    Returns:
        list[:class:`.FieldElement`]

    Raises:
        :exc:`.FieldTooLarge`: if q exceeds the cap.

    """
    return [FieldElement(spec, a) for a in spec.codes(cap)]
