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

from parameterized import parameterized

import atiyah

from atiyah import MDS2, THEOREM9, SearchMode, as_mode


class TestCopy(unittest.TestCase):
    def test_modes(self):
        from copy import deepcopy

        self.assertIs(MDS2, deepcopy(MDS2))
        self.assertIs(THEOREM9, deepcopy(THEOREM9))


class TestAsMode(unittest.TestCase):
    @parameterized.expand([
        (THEOREM9, THEOREM9),
        ('theorem9', THEOREM9),
        ('THEOREM9', THEOREM9),
        ('mds2', MDS2),
        ('Mds2', MDS2),
        (SearchMode.MDS2, MDS2),
    ])
    def test_cast(self, mode, expected):
        self.assertIs(as_mode(mode), expected)

    @parameterized.expand([('theorem', 'theorem'), ('int', 2), ('none', None)])
    def test_invalid(self, name, mode):
        with self.assertRaises(TypeError):
            as_mode(mode)

    def test_namespace(self):
        self.assertIs(atiyah.MDS2, SearchMode.MDS2)
        self.assertEqual([mode.value for mode in SearchMode], ['theorem9', 'mds2'])
