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

import atiyah

from atiyah import (INFINITY, ConfigQuery, CurveFunction, Divisor, EvalConfig, find_config,
                    section_basis)
from atiyah.generators import curve_corpus
from atiyah.testing import (assert_config_conditions, assert_distance_identity,
                            assert_divisor, assert_group_axioms, assert_hasse_bound,
                            assert_section_basis)

CORPUS = curve_corpus()


class TestGroupAxioms(unittest.TestCase):
    def test_pass(self):
        E = CORPUS['F5a']
        P, Q, R = E.affine_points()[:3]
        assert_group_axioms(E, P, Q, R)
        assert_group_axioms(E, P, P, INFINITY)

    def test_hasse(self):
        for E in CORPUS.values():
            assert_hasse_bound(E)


class TestSectionBasis(unittest.TestCase):
    def test_pass(self):
        assert_section_basis(section_basis(CORPUS['F7'], 3, 2))


class TestDivisor(unittest.TestCase):
    def test_vertical(self):
        E = CORPUS['F5a']
        x = CurveFunction.x(E)
        expected = Divisor([(E.point(0, 1), 1), (E.point(0, 4), 1), (INFINITY, -2)])
        assert_divisor(E, x, expected)

    def test_fail(self):
        E = CORPUS['F5a']
        x = CurveFunction.x(E)
        with self.assertRaises(AssertionError):
            assert_divisor(E, x, Divisor([(E.point(0, 1), 2), (INFINITY, -2)]))


class TestConfigConditions(unittest.TestCase):
    def test_mds2(self):
        E = CORPUS['F5b']
        cfg = EvalConfig.from_points(E, 2, 2, [(4, 0), (1, 2), (1, 3)])
        assert_config_conditions(cfg, 'mds2')
        assert_config_conditions(cfg, mode=atiyah.MDS2)
        with self.assertRaises(AssertionError):
            assert_config_conditions(cfg.permute([1, 0, 2]), 'mds2')

    def test_theorem9(self):
        E = CORPUS['F5a']
        cfg = find_config(ConfigQuery(E, 2, 2, 6))
        assert_config_conditions(cfg, 'theorem9')
        with self.assertRaises(AssertionError):
            assert_config_conditions(cfg, 'mds2')

    def test_invalid_mode(self):
        E = CORPUS['F5b']
        cfg = EvalConfig.from_points(E, 2, 2, [(4, 0), (1, 2), (1, 3)])
        with self.assertRaises(TypeError):
            assert_config_conditions(cfg, 'mds')


class TestDistanceIdentity(unittest.TestCase):
    def test_pass(self):
        E = CORPUS['F7']
        assert_distance_identity(EvalConfig(E, 2, 2, E.affine_points()[:5]))
