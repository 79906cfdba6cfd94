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


import typing
import unittest

import atiyah
import atiyah.typing

from atiyah import Curve, EvalConfig, FieldSpec, curve_make
from atiyah.typing import ElementLike, PointLike


class TestAnnotations(unittest.TestCase):
    def hints(self, obj):
        namespace = dict(vars(atiyah), **vars(atiyah.typing))
        return typing.get_type_hints(obj, localns=namespace)

    def test_field_code(self):
        self.assertEqual(self.hints(FieldSpec.code), {'value': ElementLike, 'return': int})

    def test_curve_make(self):
        hints = self.hints(curve_make)
        for name in ('a1', 'a2', 'a3', 'a4', 'a6'):
            self.assertEqual(hints[name], ElementLike)
        self.assertEqual(hints['return'], Curve)

    def test_curve_point(self):
        annotations = Curve.point.__annotations__
        self.assertEqual(annotations['x'], 'ElementLike')
        self.assertEqual(annotations['y'], 'ElementLike')

    def test_from_points(self):
        hints = self.hints(EvalConfig.from_points)
        self.assertEqual(hints['points'], typing.Iterable[PointLike])
        self.assertEqual(hints['return'], EvalConfig)

    def test_aliases_accepted(self):
        E = curve_make(atiyah.field_make(5), 0, 0, 0, 1, 1)
        cfg = EvalConfig.from_points(E, 1, 1, [(0, 1), E.point(2, 1)])
        self.assertEqual(cfg.n, 2)
