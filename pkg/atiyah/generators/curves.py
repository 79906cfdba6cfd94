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

import collections

import numpy as np

from atiyah.bundle import lbasis_mO
from atiyah.code import EvalConfig
from atiyah.curve import Curve, curve_make
from atiyah.exceptions import SingularCurve
from atiyah.field import FieldSpec, field_make
from atiyah.functions import CurveFunction
from atiyah.typing import RandomStateLike

__all__ = ['curve_corpus', 'random_curve', 'random_config', 'random_function']

# name: (p, k, (a1, a2, a3, a4, a6))
_CORPUS = [
    ('F2', (2, 1, (1, 0, 0, 0, 1))),    # y^2 + xy = x^3 + 1, Z/4
    ('F3', (3, 1, (0, 0, 0, 2, 1))),    # y^2 = x^3 + 2x + 1, Z/7
    ('F4', (2, 2, (0, 0, 1, 0, 0))),    # y^2 + y = x^3, 9 points
    ('F5a', (5, 1, (0, 0, 0, 1, 1))),   # y^2 = x^3 + x + 1, Z/9
    ('F5b', (5, 1, (0, 0, 0, 1, 2))),   # y^2 = x^3 + x + 2, Z/4
    ('F7', (7, 1, (0, 0, 0, 3, 0))),    # y^2 = x^3 + 3x, Z/2 x Z/4
    ('F11', (11, 1, (0, 0, 0, 1, 1))),  # y^2 = x^3 + x + 1, 14 points
    ('F13', (13, 1, (0, 0, 0, 1, 1))),  # y^2 = x^3 + x + 1, 18 points
]


def curve_corpus() -> 'collections.OrderedDict[str, Curve]':
    """The fixed corpus of smooth curves over small fields.

    Returns:
        :class:`collections.OrderedDict`: curves by name, covering the
        fields F_2, F_3, F_4, F_5, F_7, F_11 and F_13. F2, F5b and F7 have a
        point of order 4; F3 has a group of odd order.

    Examples:
        >>> from atiyah.generators import curve_corpus
        >>> [E.order() for E in curve_corpus().values()]
        [4, 7, 9, 9, 4, 8, 14, 18]

    """
    corpus = collections.OrderedDict()
    for name, (p, k, a) in _CORPUS:
        corpus[name] = curve_make(field_make(p, k), *a)
    return corpus


def _random_state(random_state):
    if not isinstance(random_state, np.random.RandomState):
        random_state = np.random.RandomState(random_state)
    return random_state


def random_curve(spec: FieldSpec, random_state: RandomStateLike = None) -> Curve:
    """A random smooth curve over a field.

    Coefficients are drawn uniformly until the discriminant is nonzero.

    Args:
        spec:
            The field.

        random_state:
            A random seed or a random state generator.

    Returns:
        :class:`~atiyah.curve.Curve`

    """
    random_state = _random_state(random_state)
    while True:
        a = random_state.randint(spec.q, size=5)
        try:
            return curve_make(spec, *(int(c) for c in a))
        except SingularCurve:
            continue


def random_config(curve: Curve, r: int, m: int, n: int,
                  random_state: RandomStateLike = None) -> EvalConfig:
    """n distinct random affine points, in random order.

    Raises:
        ValueError: if the curve has fewer than n affine points.

    """
    random_state = _random_state(random_state)
    affine = curve.affine_points()
    if n > len(affine):
        raise ValueError("cannot choose {} points out of {}".format(n, len(affine)))
    index = random_state.choice(len(affine), size=n, replace=False)
    return EvalConfig(curve, r, m, tuple(affine[i] for i in index))


def _random_element(curve, degree, random_state):
    basis = lbasis_mO(curve, degree)
    while True:
        coeffs = random_state.randint(curve.spec.q, size=len(basis))
        if coeffs.any():
            break
    f = CurveFunction(curve, 0)
    for c, g in zip(coeffs, basis):
        if c:
            f = f + g.scale(int(c))
    return f


def random_function(curve: Curve, degree: int, random_state: RandomStateLike = None,
                    rational: bool = False) -> CurveFunction:
    """A random nonzero function.

    Args:
        curve:
            The curve.

        degree:
            Poles are bounded by degree*O, degree >= 0.

        random_state:
            A random seed or a random state generator.

        rational:
            If True, return the quotient of two random elements of
            L(degree*O), which generally has affine poles.

    Returns:
        :class:`~atiyah.functions.CurveFunction`

    """
    if degree < 0:
        raise ValueError("degree must be non-negative, received {}".format(degree))
    random_state = _random_state(random_state)
    f = _random_element(curve, degree, random_state)
    if rational:
        f = f / _random_element(curve, degree, random_state)
    return f
