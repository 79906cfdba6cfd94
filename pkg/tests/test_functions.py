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

import unittest

import numpy as np

from parameterized import parameterized

import atiyah

from atiyah import (INFINITY, CurveFunction, CurvePoint, Divisor, Polynomial,
                    RationalFunction, conjugate, coordinate_expansions, divisor_of,
                    expand_at, func_eval, is_regular_affine, line_through, miller_build,
                    norm, ord_at, trace, uniformizer_at, vertical_line)
from atiyah.generators import curve_corpus, random_function
from atiyah.testing import assert_divisor

CORPUS = curve_corpus()
SMALL = ['F2', 'F3', 'F4', 'F5a', 'F5b', 'F7']


class TestCurveFunction(unittest.TestCase):
    def test_reduction(self):
        E = CORPUS['F5a']
        y = CurveFunction.y(E)
        self.assertEqual(y * y, CurveFunction(E, Polynomial(E.spec, [1, 1, 0, 1])))
        self.assertEqual(repr(y * y), 'CurveFunction(x^3 + x + 1)')

    def test_inverse(self):
        E = CORPUS['F7']
        f = CurveFunction.x(E) + CurveFunction.y(E)
        self.assertEqual(f * f.inverse(), 1)
        self.assertEqual(f / f, CurveFunction.constant(E, 1))
        with self.assertRaises(atiyah.DivisionByZero):
            CurveFunction(E, 0).inverse()

    @parameterized.expand([(name,) for name in SMALL])
    def test_norm(self, name):
        E = CORPUS[name]
        f = random_function(E, 5, random_state=3)
        self.assertEqual(f * conjugate(f), CurveFunction(E, norm(f)))

    def test_curves_must_match(self):
        with self.assertRaises(atiyah.FieldMismatch):
            CurveFunction.x(CORPUS['F5a']) + CurveFunction.x(CORPUS['F5b'])

    def test_serializable(self):
        E = CORPUS['F4']
        f = random_function(E, 4, random_state=5, rational=True)
        self.assertEqual(CurveFunction.from_serializable(f.to_serializable(), E), f)


class TestOrder(unittest.TestCase):
    @parameterized.expand([(name,) for name in CORPUS])
    def test_coordinates_at_infinity(self, name):
        E = CORPUS[name]
        x, y = CurveFunction.x(E), CurveFunction.y(E)
        self.assertEqual(ord_at(E, x, INFINITY), -2)
        self.assertEqual(ord_at(E, y, INFINITY), -3)
        self.assertEqual(ord_at(E, x / y, INFINITY), 1)
        self.assertEqual(expand_at(E, x, INFINITY, 0).coefficient(-2), 1)
        self.assertEqual(expand_at(E, y, INFINITY, 0).coefficient(-3), 1)

    @parameterized.expand([(name,) for name in SMALL])
    def test_uniformizers(self, name):
        E = CORPUS[name]
        for P in E.points():
            with self.subTest(P=P):
                self.assertEqual(ord_at(E, uniformizer_at(E, P), P), 1)

    def test_zero_function(self):
        E = CORPUS['F5a']
        with self.assertRaises(atiyah.ZeroFunction):
            ord_at(E, CurveFunction(E, 0), INFINITY)
        with self.assertRaises(atiyah.ZeroFunction):
            divisor_of(E, CurveFunction(E, 0))

    @parameterized.expand([(name, seed) for name in SMALL for seed in range(3)])
    def test_multiplicative(self, name, seed):
        E = CORPUS[name]
        rng = np.random.RandomState(seed)
        f = random_function(E, 4, rng, rational=True)
        g = random_function(E, 3, rng)
        for P in E.points():
            self.assertEqual(ord_at(E, f * g, P), ord_at(E, f, P) + ord_at(E, g, P))

    @parameterized.expand([(name,) for name in CORPUS])
    def test_expansion_agrees(self, name):
        E = CORPUS[name]
        points = E.points()
        rng = np.random.RandomState(5)
        pairs = 0
        while pairs < 200:
            f = random_function(E, 4, rng, rational=True)
            for P in points:
                pairs += 1
                with self.subTest(f=f, P=P):
                    order = ord_at(E, f, P)
                    series = expand_at(E, f, P, order + 3)
                    self.assertEqual(series.val, order)
                    self.assertEqual(series.prec, order + 3)
                    if order < 0:
                        with self.assertRaises(atiyah.PoleAtPoint):
                            func_eval(E, f, P)
                    elif order > 0:
                        self.assertEqual(func_eval(E, f, P), 0)
                    else:
                        self.assertEqual(func_eval(E, f, P), series.coefficient(0))

    def test_expansion_precision(self):
        E = CORPUS['F5a']
        with self.assertRaises(atiyah.PrecisionTooLow):
            expand_at(E, CurveFunction.x(E), INFINITY, -2)


class TestEvaluation(unittest.TestCase):
    def test_values(self):
        E = CORPUS['F5a']
        x, y = CurveFunction.x(E), CurveFunction.y(E)
        self.assertEqual(func_eval(E, x, E.point(2, 1)), 2)
        self.assertEqual(func_eval(E, x * y, E.point(4, 3)), 2)
        self.assertEqual(func_eval(E, CurveFunction.constant(E, 3), INFINITY), 3)
        self.assertEqual(func_eval(E, x / y, INFINITY), 0)

    def test_poles(self):
        E = CORPUS['F5a']
        x = CurveFunction.x(E)
        with self.assertRaises(atiyah.PoleAtPoint):
            func_eval(E, 1 / x, E.point(0, 1))
        with self.assertRaises(atiyah.PoleAtPoint):
            func_eval(E, x, INFINITY)

    def test_removable_denominator(self):
        E = CORPUS['F5a']
        P = E.point(0, 1)
        x, y = CurveFunction.x(E), CurveFunction.y(E)
        # (y - 1)/x has a zero of y - 1 cancelling the zero of x at (0, 1)
        f = (y - 1) / x
        self.assertGreaterEqual(ord_at(E, f, P), 0)
        # (y - 1)/x = (x^2 + 1)/(y + 1), which is 1/2 at (0, 1)
        self.assertEqual(func_eval(E, f, P), 3)

    def test_point_validation(self):
        E = CORPUS['F5a']
        with self.assertRaises(atiyah.PointNotOnCurve):
            func_eval(E, CurveFunction.x(E), CurvePoint(0, 0))


class TestDivisors(unittest.TestCase):
    def test_vertical(self):
        E = CORPUS['F5a']
        P, R = E.point(0, 1), E.point(0, 4)
        D, residual = divisor_of(E, CurveFunction.x(E))
        self.assertEqual(D, Divisor({P: 1, R: 1, INFINITY: -2}))
        self.assertEqual(residual, 0)

    def test_non_rational_zeros(self):
        E = CORPUS['F5b']
        D, residual = divisor_of(E, CurveFunction.y(E))
        self.assertEqual(D, Divisor({E.point(4, 0): 1, INFINITY: -3}))
        self.assertEqual(residual, 2)

    @parameterized.expand([(name,) for name in SMALL])
    def test_lines(self, name):
        E = CORPUS[name]
        points = E.points()
        for P in points:
            assert_divisor(E, vertical_line(E, P),
                           Divisor([(P, 1), (E.neg(P), 1), (INFINITY, -2)]))
            for R in points:
                S = E.add(P, R)
                expected = Divisor([(P, 1), (R, 1), (E.neg(S), 1), (INFINITY, -3)])
                assert_divisor(E, line_through(E, P, R), expected)

    @parameterized.expand([(name,) for name in CORPUS])
    def test_miller(self, name):
        E = CORPUS[name]
        rng = np.random.RandomState(23)
        two_torsion = E.points_of_order(2)
        for i in range(200):
            P, Q, R = (E.random_point(rng) for _ in range(3))
            if i % 4 == 1:
                Q = P
            if i % 4 == 2 and two_torsion:
                R = two_torsion[i % len(two_torsion)]
            S = E.sum([P, Q, R])
            D = Divisor([(P, 1), (Q, 1), (R, 1), (S, -1), (INFINITY, -2)])
            with self.subTest(P=P, Q=Q, R=R):
                f = miller_build(E, D)
                assert_divisor(E, f, D)
                self.assertEqual(f.leading_at_infinity()[1], 1)
                if S.is_infinity:
                    self.assertTrue(is_regular_affine(f))

    def test_miller_not_principal(self):
        E = CORPUS['F5a']
        with self.assertRaises(atiyah.NotPrincipal):
            miller_build(E, Divisor({E.point(0, 1): 1, INFINITY: -1}))

    def test_miller_example(self):
        E = CORPUS['F5a']
        P, R = E.point(0, 1), E.point(0, 4)
        self.assertEqual(miller_build(E, Divisor({P: 1, R: 1, INFINITY: -2})),
                         CurveFunction.x(E))

    def test_two_torsion_square(self):
        E = CORPUS['F5b']
        T = E.point(4, 0)
        f = miller_build(E, Divisor({T: 2, INFINITY: -2}))
        self.assertEqual(f, CurveFunction(E, Polynomial(E.spec, [1, 1])))


class TestConjugation(unittest.TestCase):
    def test_y(self):
        E = curve_corpus()['F5a']
        F = E.spec
        y = CurveFunction.y(E)
        self.assertTrue((conjugate(y) + y).is_zero())
        self.assertEqual(norm(y), RationalFunction(Polynomial(F, [4, 4, 0, 4])))
        self.assertTrue(trace(y).is_zero())

    def test_x(self):
        E = curve_corpus()['F5a']
        x = CurveFunction.x(E)
        self.assertEqual(trace(x), RationalFunction(Polynomial(E.spec, [0, 2])))

    def test_characteristic_two(self):
        # y + conjugate(y) = -a3 on y^2 + y = x^3
        E = curve_corpus()['F4']
        y = CurveFunction.y(E)
        self.assertEqual(trace(y), RationalFunction(Polynomial(E.spec, [1])))


class TestCoordinateExpansions(unittest.TestCase):
    def test_infinity(self):
        E = curve_corpus()['F7']
        x, y = coordinate_expansions(E, INFINITY, 4)
        self.assertEqual((x.val, x.coefficient(-2)), (-2, 1))
        self.assertEqual(y.val, -3)

    def test_affine(self):
        E = curve_corpus()['F5a']
        x, y = coordinate_expansions(E, E.point(2, 1), 4)
        self.assertEqual((x.coefficient(0), y.coefficient(0)), (2, 1))
        self.assertGreaterEqual(x.prec, 4)
