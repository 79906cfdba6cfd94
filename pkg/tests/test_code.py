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

from atiyah import (INFINITY, ConfigQuery, CurvePoint, EvalConfig, check_mds2_conditions,
                    check_theorem9_conditions, code_build, code_params, find_config,
                    find_mds2, func_eval, is_section, mds2_witness, min_distance_exact,
                    singleton_defect, verify_mds2, verify_theorem9, zero_count_max)
from atiyah.generators import curve_corpus, random_config
from atiyah.testing import assert_distance_identity

CORPUS = curve_corpus()


def expected_distance(cfg):
    """n - m if some m points of D sum to O, n - m + 1 otherwise (n > m)."""
    E, m = cfg.curve, cfg.m
    if any(E.sum(subset).is_infinity for subset in itertools.combinations(cfg.points, m)):
        return cfg.n - m
    return cfg.n - m + 1


RANDOM_CONFIGS = [
    ('F2', 2, 1, 3),
    ('F2', 1, 2, 3),
    ('F3', 2, 2, 5),
    ('F3', 3, 1, 6),
    ('F4', 2, 2, 6),
    ('F5a', 2, 2, 6),
    ('F5a', 3, 2, 7),
    ('F5a', 1, 3, 8),
    ('F5b', 2, 2, 3),
    ('F7', 2, 2, 5),
    ('F7', 1, 4, 7),
    ('F11', 2, 2, 9),
]


class TestEvalConfig(unittest.TestCase):
    def test_from_points(self):
        E = CORPUS['F5a']
        cfg = EvalConfig.from_points(E, 2, 1, [(0, 1), E.point(2, 1)])
        self.assertEqual(cfg.points, (CurvePoint(0, 1), CurvePoint(2, 1)))
        self.assertEqual(cfg.n, 2)
        self.assertEqual(cfg.ell, 4)
        self.assertEqual(cfg.divisor().degree, 2)

    def test_point_at_infinity(self):
        E = CORPUS['F5a']
        with self.assertRaises(atiyah.PointAtQ):
            EvalConfig(E, 2, 1, (E.point(0, 1), INFINITY))

    def test_duplicates(self):
        E = CORPUS['F5a']
        with self.assertRaises(atiyah.DuplicatePoints):
            EvalConfig(E, 2, 1, (E.point(0, 1), E.point(0, 1)))

    def test_not_on_curve(self):
        E = CORPUS['F5a']
        with self.assertRaises(atiyah.PointNotOnCurve):
            EvalConfig(E, 2, 1, (CurvePoint(0, 0),))
        with self.assertRaises(atiyah.PointNotOnCurve):
            EvalConfig.from_points(E, 2, 1, [(1, 1)])

    def test_empty(self):
        with self.assertRaises(ValueError):
            EvalConfig(CORPUS['F5a'], 2, 1, ())

    def test_permute(self):
        E = CORPUS['F5a']
        cfg = EvalConfig.from_points(E, 1, 1, E.affine_points()[:3])
        self.assertEqual(cfg.permute([2, 0, 1]).points,
                         (cfg.points[2], cfg.points[0], cfg.points[1]))

    def test_serializable(self):
        E = CORPUS['F5a']
        cfg = EvalConfig.from_points(E, 2, 1, [(0, 1), (4, 3)])
        self.assertEqual(cfg.to_serializable(),
                         dict(type='EvalConfig', curve=E.to_serializable(), r=2, m=1,
                              points=[[0, 1], [4, 3]]))


class TestCodeBuild(unittest.TestCase):
    def test_repetition(self):
        E = CORPUS['F5a']
        code = code_build(EvalConfig.from_points(E, 1, 1, E.affine_points()[:3]))
        np.testing.assert_array_equal(code.generator, [[1, 1, 1]])
        self.assertEqual(code_params(code), (3, 1, 3))

    def test_rank_two_constants(self):
        E = CORPUS['F5a']
        code = code_build(EvalConfig.from_points(E, 2, 1, E.affine_points()[:3]))
        self.assertEqual({tuple(row) for row in code.generator.tolist()},
                         {(1, 0, 1, 0, 1, 0), (0, 1, 0, 1, 0, 1)})
        self.assertEqual(min_distance_exact(code), 3)

    @parameterized.expand(RANDOM_CONFIGS)
    def test_parameters(self, name, r, m, n):
        cfg = random_config(CORPUS[name], r, m, n, random_state=r + m + n)
        code = code_build(cfg)
        self.assertEqual(code.ell, r * n)
        self.assertEqual(code.k, r * m)
        self.assertEqual(min_distance_exact(code), expected_distance(cfg))
        self.assertGreaterEqual(singleton_defect(code), 0)

    @parameterized.expand([(name, r, m, n, seed) for name, r, m, n in RANDOM_CONFIGS
                           for seed in (0, 1)])
    def test_distance_identity(self, name, r, m, n, seed):
        assert_distance_identity(random_config(CORPUS[name], r, m, n, random_state=seed))

    @parameterized.expand([('F5a', 2, 2, 6, 'theorem9'),
                           ('F3', 2, 2, 4, 'theorem9'),
                           ('F5b', 2, 2, 3, 'mds2'),
                           ('F5a', 2, 3, 4, 'mds2')])
    def test_distance_identity_searched(self, name, r, m, n, mode):
        try:
            cfg = find_config(ConfigQuery(CORPUS[name], r, m, n, mode))
        except atiyah.ConfigNotFound:
            self.skipTest("no configuration on {}".format(name))
        assert_distance_identity(cfg)

    def test_kernel(self):
        E = CORPUS['F5a']
        cfg = EvalConfig.from_points(E, 1, 3, [(0, 1), (2, 1)])
        with self.assertLogs('atiyah.code', level='WARNING'):
            code = code_build(cfg)
        self.assertEqual(code.k, 2)
        self.assertEqual(len(code.basis), 3)

    def test_permutation(self):
        E = CORPUS['F7']
        cfg = random_config(E, 2, 2, 5, random_state=11)
        order = [3, 0, 4, 1, 2]
        G = code_build(cfg).generator
        H = code_build(cfg.permute(order)).generator
        for i, j in enumerate(order):
            np.testing.assert_array_equal(H[:, 2 * i:2 * i + 2], G[:, 2 * j:2 * j + 2])

    def test_serializable(self):
        E = CORPUS['F5a']
        code = code_build(EvalConfig.from_points(E, 1, 1, [(0, 1), (2, 1)]))
        obj = code.to_serializable()
        self.assertEqual(obj['type'], 'LinearCode')
        self.assertEqual(obj['generator'], [[1, 1]])


class TestEnumeration(unittest.TestCase):
    def test_cap(self):
        E = CORPUS['F5a']
        cfg = EvalConfig.from_points(E, 2, 2, E.affine_points()[:4])
        code = code_build(cfg)
        with self.assertRaises(atiyah.SpaceTooLarge):
            min_distance_exact(code, cap=10)
        with self.assertRaises(atiyah.SpaceTooLarge):
            zero_count_max(cfg, cap=10)
        with atiyah.options(enumeration_cap=10):
            with self.assertRaises(atiyah.SpaceTooLarge):
                code_params(code)

    def test_threads_agree(self):
        E = CORPUS['F13']
        cfg = random_config(E, 2, 2, 5, random_state=2)
        code = code_build(cfg)
        single = code.weight_distribution_min(jobs=1)
        threaded = code.weight_distribution_min(jobs=3)
        self.assertEqual(single[:2], threaded[:2])
        self.assertEqual(single[0], expected_distance(cfg))

    def test_first_minimum(self):
        E = CORPUS['F5a']
        cfg = random_config(E, 2, 2, 6, random_state=5)
        code = code_build(cfg)
        d, index, section = code.weight_distribution_min()
        codeword = code.codewords(index, index + 1)[0]
        self.assertEqual(np.count_nonzero(codeword), d)
        earlier = code.codewords(1, index)
        self.assertTrue((np.count_nonzero(earlier, axis=1) > d).all())

        self.assertTrue(is_section(E, 2, 2, section.comps))
        values = [int(func_eval(E, f, P)) for P in cfg.points for f in section.comps]
        self.assertEqual(values, codeword.tolist())

    def test_message(self):
        E = CORPUS['F5a']
        code = code_build(EvalConfig.from_points(E, 2, 1, E.affine_points()[:3]))
        self.assertEqual(code.message(7).tolist(), [1, 2])
        self.assertEqual(code.codewords().shape, (25, 6))


class TestConditions(unittest.TestCase):
    def test_theorem9_short(self):
        E = CORPUS['F5a']
        cfg = EvalConfig.from_points(E, 3, 2, E.affine_points()[:3])
        self.assertEqual(check_theorem9_conditions(cfg), {'1': True, '2': False, '3': False})

    def test_theorem9(self):
        E = CORPUS['F5a']
        P = E.point(0, 1)
        R = E.point(0, 4)
        # the suffix sum from j = m is the whole prefix sum, which is O
        cfg = EvalConfig(E, 2, 1, (P, R, E.point(2, 1)))
        self.assertEqual(check_theorem9_conditions(cfg), {'1': True, '2': True, '3': False})

    def test_mds2_outside(self):
        E = CORPUS['F5b']
        cfg = EvalConfig.from_points(E, 3, 2, E.affine_points())
        self.assertEqual(check_mds2_conditions(cfg),
                         {'0': True, '1': False, '2': False, '3': False, '4': False})

    def test_mds2(self):
        E = CORPUS['F5b']
        cfg = EvalConfig.from_points(E, 2, 2, [(4, 0), (1, 2), (1, 3)])
        self.assertTrue(all(check_mds2_conditions(cfg).values()))
        swapped = cfg.permute([1, 0, 2])
        self.assertFalse(check_mds2_conditions(swapped)['3'])


class TestTheorem9Report(unittest.TestCase):
    @parameterized.expand([('F5a', 2, 2, 6), ('F5a', 3, 2, 6), ('F7', 2, 2, 5), ('F4', 2, 2, 5)])
    def test_formula_fails(self, name, r, m, n):
        cfg = find_config(ConfigQuery(CORPUS[name], r, m, n))
        with self.assertWarns(atiyah.DBalancedAssumptionWarning):
            report = verify_theorem9(cfg)
        self.assertTrue(all(report['conditions'].values()))
        self.assertEqual(report['predicted'], dict(k=r * m, d=r * (n - m) - r * (r - 1) // 2))
        self.assertEqual(report['computed']['k'], r * m)
        # the first m - 1 points and the suffix sum S_m sum to O
        self.assertEqual(report['computed']['d'], n - m)
        self.assertEqual(report['zero_count_max'], r * n - (n - m))
        self.assertEqual(report['d_balanced'], 'assumed')
        self.assertFalse(report['passed'])
        counterexample = report['counterexample']
        self.assertEqual(counterexample['weight'], n - m)
        self.assertEqual(len(counterexample['zero_positions']), r * n - (n - m))
        self.assertEqual(len(counterexample['section']), r)

    def test_hypothesis(self):
        E = CORPUS['F5a']
        cfg = EvalConfig.from_points(E, 3, 1, E.affine_points()[:4])
        with self.assertRaises(atiyah.HypothesisViolated):
            verify_theorem9(cfg)


class TestMds2Report(unittest.TestCase):
    def test_order_four(self):
        E = CORPUS['F5b']
        cfg = find_mds2(ConfigQuery(E, 2, 2, 3, 'mds2'))
        with self.assertWarns(atiyah.DBalancedAssumptionWarning):
            report = verify_mds2(cfg)
        self.assertTrue(all(report['conditions'].values()))
        witness = report['witness']
        self.assertTrue(witness['is_section'])
        self.assertEqual((witness['zeros_f1'], witness['zeros_f2']), (1, 2))
        self.assertEqual(witness['expected_zeros'], dict(f1=1, f2=2))
        self.assertEqual(report['predicted'], dict(k=4, d=3, defect=0))
        # (1, 2) + (1, 3) = O
        self.assertEqual(report['computed'], dict(ell=6, k=4, d=1, defect=2))
        self.assertFalse(report['mds'])
        self.assertFalse(report['passed'])
        self.assertEqual(report['counterexample']['weight'], 1)

    @parameterized.expand([('F5a', 3, 4), ('F7', 2, 4), ('F5b', 2, 3)])
    def test_witness(self, name, m, n):
        E = CORPUS[name]
        cfg = find_mds2(ConfigQuery(E, 2, m, n, 'mds2'))
        witness = mds2_witness(cfg)
        self.assertTrue(witness['is_section'])
        self.assertEqual(witness['zeros_f1'], m - 1)
        self.assertEqual(witness['zeros_f2'], m)
        f2, neg_f1 = witness['section'].comps
        self.assertEqual(neg_f1.leading_at_infinity(), (-m, E.spec.neg(1)))
        self.assertEqual(f2.leading_at_infinity(), (-m - 1, 1))

    def test_never_mds(self):
        E = CORPUS['F5a']
        cfg = find_mds2(ConfigQuery(E, 2, 3, 4, 'mds2'))
        with self.assertWarns(atiyah.DBalancedAssumptionWarning):
            report = verify_mds2(cfg)
        self.assertEqual(report['computed']['d'], expected_distance(cfg))
        self.assertGreater(report['computed']['defect'], 0)

    def test_hypothesis(self):
        E = CORPUS['F5b']
        cfg = EvalConfig.from_points(E, 3, 2, E.affine_points())
        with self.assertRaises(atiyah.HypothesisViolated):
            verify_mds2(cfg)
        with self.assertRaises(atiyah.HypothesisViolated):
            mds2_witness(cfg)
        with self.assertRaises(atiyah.HypothesisViolated):
            mds2_witness(EvalConfig.from_points(E, 2, 1, E.affine_points()))

    def test_not_principal(self):
        E = CORPUS['F5b']
        cfg = EvalConfig.from_points(E, 2, 2, [(1, 2), (4, 0), (1, 3)])
        with self.assertRaises(atiyah.NotPrincipal):
            mds2_witness(cfg)
        with self.assertWarns(atiyah.DBalancedAssumptionWarning):
            report = verify_mds2(cfg)
        self.assertIsNone(report['witness'])
