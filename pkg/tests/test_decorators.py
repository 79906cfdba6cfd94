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

from atiyah import MDS2, THEOREM9
from atiyah.decorators import mode_argument, rank_twist_argument


class TestModeArgument(unittest.TestCase):
    def test_default_name(self):
        @mode_argument()
        def f(mode):
            return mode

        self.assertIs(f('mds2'), MDS2)
        self.assertIs(f(mode='THEOREM9'), THEOREM9)

    def test_several(self):
        @mode_argument('a', 'b')
        def f(a, b, c=None):
            return a, b, c

        self.assertEqual(f('mds2', 'theorem9'), (MDS2, THEOREM9, None))
        self.assertEqual(f('mds2', b=MDS2, c='mds2'), (MDS2, MDS2, 'mds2'))

    def test_invalid(self):
        @mode_argument('mode')
        def f(mode):
            return mode

        with self.assertRaises(TypeError):
            f('mds3')

    def test_missing(self):
        @mode_argument('kind')
        def f(mode):
            return mode

        with self.assertRaises(TypeError):
            f('mds2')


class TestRankTwistArgument(unittest.TestCase):
    def test_pass_through(self):
        @rank_twist_argument()
        def f(curve, r, m):
            return curve, r, m

        self.assertEqual(f(None, 2, 3), (None, 2, 3))
        self.assertEqual(f(None, m=-3, r=1), (None, 1, -3))
        self.assertEqual(f.__name__, 'f')

    def test_rank_too_small(self):
        @rank_twist_argument(min_rank=2)
        def f(r, m):
            return r

        with self.assertRaises(atiyah.RankTooSmall):
            f(1, 1)

    def test_caps(self):
        @rank_twist_argument()
        def f(r, m):
            return r, m

        with self.assertRaises(atiyah.RankOrTwistTooLarge):
            f(9, 1)
        with self.assertRaises(atiyah.RankOrTwistTooLarge):
            f(2, -17)
        with atiyah.options(max_rank=20, max_twist=20):
            self.assertEqual(f(9, -17), (9, -17))

    def test_no_twist(self):
        @rank_twist_argument(twist=None, rank='size')
        def f(size, spec=None):
            return size

        self.assertEqual(f(3), 3)
        with atiyah.options(max_rank=2):
            with self.assertRaises(atiyah.RankOrTwistTooLarge):
                f(3)
        with self.assertRaises(atiyah.RankTooSmall):
            f(0)
