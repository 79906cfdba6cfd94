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

import itertools
import unittest

import numpy as np

from parameterized import parameterized

import atiyah

from atiyah import field_make, field_enumerate


FIELDS = [(2, 1), (5, 1), (13, 1), (2, 2), (2, 3), (3, 2), (5, 2)]


class TestFieldMake(unittest.TestCase):
    def test_prime(self):
        F = field_make(7)
        self.assertEqual(F.q, 7)
        self.assertEqual(F.modulus, ())
        self.assertEqual(str(F), 'F_7')

    def test_non_prime(self):
        for p in (0, 1, 4, 9, 15):
            with self.subTest(p=p):
                with self.assertRaises(atiyah.NonPrime):
                    field_make(p)

    def test_default_modulus(self):
        self.assertEqual(field_make(2, 2).modulus, (1, 1, 1))
        self.assertEqual(field_make(2, 3).modulus, (1, 1, 0, 1))
        self.assertEqual(field_make(3, 2).modulus, (1, 0, 1))

    def test_explicit_modulus(self):
        F = field_make(2, 3, (1, 0, 1, 1))
        self.assertEqual(F.modulus, (1, 0, 1, 1))
        self.assertNotEqual(F, field_make(2, 3))

    def test_reducible_modulus(self):
        with self.assertRaises(atiyah.ReducibleModulus):
            field_make(2, 2, (1, 0, 1))  # (x + 1)^2
        with self.assertRaises(atiyah.ReducibleModulus):
            field_make(3, 2, (2, 0, 1))  # x^2 - 1
        with self.assertRaises(atiyah.ReducibleModulus):
            field_make(2, 2, (1, 1, 0))  # not monic of degree 2

    def test_bad_degree(self):
        with self.assertRaises(ValueError):
            field_make(5, 0)

    def test_input_errors_are_value_errors(self):
        with self.assertRaises(ValueError):
            field_make(6)

    def test_is_prime(self):
        self.assertEqual([n for n in range(20) if atiyah.is_prime(n)], [2, 3, 5, 7, 11, 13, 17, 19])
        self.assertFalse(atiyah.is_prime(91))


class TestArithmetic(unittest.TestCase):
    def test_f4_table(self):
        F = field_make(2, 2)
        # alpha = code 2 satisfies alpha^2 = alpha + 1
        self.assertEqual(F.mul(2, 2), 3)
        self.assertEqual(F.mul(2, 3), 1)
        self.assertEqual(F.inv(2), 3)
        self.assertEqual(F.add(2, 3), 1)

    def test_prime_inverse(self):
        F = field_make(7)
        self.assertEqual(F(3).inv(), 5)
        self.assertEqual(F(3) * 5, 1)

    def test_division_by_zero(self):
        for F in (field_make(5), field_make(2, 2)):
            with self.subTest(F=F):
                with self.assertRaises(atiyah.DivisionByZero):
                    F.inv(0)
                with self.assertRaises(ZeroDivisionError):
                    F.one / 0

    def test_embed(self):
        F = field_make(3, 2)
        self.assertEqual(F.embed(7), 1)
        self.assertEqual(F.embed(-1), 2)

    def test_code_reduces_prime_field_ints(self):
        F = field_make(5)
        self.assertEqual(F.code(-1), 4)
        self.assertEqual(F.code(12), 2)

    def test_code_from_coordinates(self):
        F = field_make(3, 2)
        self.assertEqual(F.code([1, 2]), 7)
        self.assertEqual(F.coords(7), (1, 2))
        with self.assertRaises(ValueError):
            F.code([3, 0])
        with self.assertRaises(ValueError):
            F.code(9)

    def test_field_mismatch(self):
        a = field_make(5).one
        b = field_make(7).one
        with self.assertRaises(atiyah.FieldMismatch):
            a + b

    def test_sqrt(self):
        F = field_make(5)
        self.assertEqual(F.sqrt(4), [2, 3])
        self.assertEqual(F.sqrt(2), [])

    @parameterized.expand(FIELDS)
    def test_axioms(self, p, k):
        F = field_make(p, k)
        codes = list(F.codes())
        for a, b in itertools.product(codes, repeat=2):
            self.assertEqual(F.add(a, b), F.add(b, a))
            self.assertEqual(F.mul(a, b), F.mul(b, a))
            self.assertEqual(F.sub(F.add(a, b), b), a)
            if b:
                self.assertEqual(F.mul(F.div(a, b), b), a)
        for a in codes:
            self.assertEqual(F.add(a, F.neg(a)), 0)

    @parameterized.expand(FIELDS)
    def test_distributive(self, p, k):
        F = field_make(p, k)
        rng = np.random.RandomState(p * 10 + k)
        for a, b, c in rng.randint(F.q, size=(50, 3)).tolist():
            self.assertEqual(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)))

    @parameterized.expand(FIELDS)
    def test_fermat(self, p, k):
        F = field_make(p, k)
        for a in range(1, F.q):
            self.assertEqual(F.pow(a, F.q - 1), 1)
        g = F.primitive_element().value
        self.assertEqual({F.pow(g, i) for i in range(F.q - 1)}, set(range(1, F.q)))

    @parameterized.expand(FIELDS)
    def test_vectorized(self, p, k):
        F = field_make(p, k)
        a, b = np.meshgrid(np.arange(F.q), np.arange(F.q))
        expected_mul = [[F.mul(x, y) for x, y in zip(row_a, row_b)]
                        for row_a, row_b in zip(a.tolist(), b.tolist())]
        expected_add = [[F.add(x, y) for x, y in zip(row_a, row_b)]
                        for row_a, row_b in zip(a.tolist(), b.tolist())]
        np.testing.assert_array_equal(F.vmul(a, b), expected_mul)
        np.testing.assert_array_equal(F.vadd(a, b), expected_add)
        np.testing.assert_array_equal(F.vsub(F.vadd(a, b), b), a)
        np.testing.assert_array_equal(F.vneg(a), [[F.neg(x) for x in row] for row in a.tolist()])

    def test_matmul(self):
        F = field_make(2, 2)
        a = np.array([[1, 2], [3, 0]])
        b = np.array([[2], [2]])
        # 1*a + a*a = a + a + 1 = 1
        np.testing.assert_array_equal(F.matmul(a, b), [[1], [1]])
        with self.assertRaises(ValueError):
            F.matmul(a, np.ones((3, 1)))

    def test_primitive_element(self):
        F = field_make(5)
        g = F.primitive_element()
        self.assertEqual(sorted(int(g ** i) for i in range(4)), [1, 2, 3, 4])


class TestEnumerate(unittest.TestCase):
    def test_order(self):
        F = field_make(3, 2)
        elements = field_enumerate(F)
        self.assertEqual([int(a) for a in elements], list(range(9)))

    def test_cap(self):
        with self.assertRaises(atiyah.FieldTooLarge):
            field_enumerate(field_make(5), cap=3)
        with atiyah.options(field_cap=4):
            with self.assertRaises(atiyah.FieldTooLarge):
                field_make(5).codes()


class TestFieldElement(unittest.TestCase):
    def test_equality_with_int(self):
        F = field_make(5)
        self.assertEqual(F(7), 2)
        self.assertEqual(F(7), F(2))
        self.assertNotEqual(F(1), F(2))

    def test_repr(self):
        self.assertEqual(repr(field_make(5)(3)), 'FieldElement(F_5, 3)')
        self.assertEqual(repr(field_make(2, 2)(2)), 'FieldElement(F_4, [0, 1])')

    def test_operators(self):
        F = field_make(7)
        a = F(3)
        self.assertEqual(a + 5, 1)
        self.assertEqual(5 - a, 2)
        self.assertEqual(-a, 4)
        self.assertEqual(a ** -1, 5)
        self.assertEqual(1 / a, 5)
        self.assertEqual(bool(F.zero), False)
