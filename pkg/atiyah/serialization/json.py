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

"""
JSON-encoding of atiyah objects, curve-spec files and points files.

Field elements of prime fields are written as integers, elements of extension
fields as coefficient lists, lowest degree first. Points are written as
``"O"`` or ``[x, y]``.

A curve-spec document looks like

.. code-block:: json

    {"p": 2, "k": 2, "modulus": [1, 1, 1], "a": [0, 0, 1, 0, 0]}

with ``k`` and ``modulus`` optional. Malformed documents raise
:exc:`~atiyah.exceptions.CurveSpecError` with the location of the offending
entry, for example ``a[3]``.

Examples:

    >>> import json
    >>> from atiyah import field_make, curve_make
    >>> from atiyah.serialization.json import AtiyahEncoder, AtiyahDecoder
    ...
    >>> E = curve_make(field_make(5), 0, 0, 0, 1, 1)
    >>> s = json.dumps(E, cls=AtiyahEncoder)
    >>> json.loads(s, cls=AtiyahDecoder) == E
    True

"""
import enum
import json
import math

from numbers import Integral

import numpy as np

from atiyah.curve import Curve, CurvePoint, INFINITY, curve_make
from atiyah.exceptions import CurveSpecError
from atiyah.field import field_make

__all__ = ['AtiyahEncoder', 'AtiyahDecoder', 'atiyah_object_hook',
           'encode_element', 'decode_element', 'encode_point', 'decode_point',
           'encode_series', 'load_curve', 'load_points',
           ]


def _is_int(value):
    return isinstance(value, Integral) and not isinstance(value, bool)


def encode_element(spec, code):
    """An int for prime fields, a coefficient list for extension fields."""
    code = int(code)
    if spec.k == 1:
        return code
    return list(spec.coords(code))


def decode_element(spec, value, location='value'):
    """The code of a JSON-encoded element.

    Both an int code and a coefficient list are accepted, for any field.
    Integers are reduced modulo p for prime fields.

    Raises:
        :exc:`.CurveSpecError`: if `value` is neither.

    """
    if _is_int(value):
        if spec.k == 1:
            return int(value) % spec.p
        if not 0 <= value < spec.q:
            raise CurveSpecError(location, "element code must lie in [0, {}), received {}".format(
                spec.q, value))
        return int(value)
    if isinstance(value, (list, tuple)):
        if len(value) != spec.k:
            raise CurveSpecError(location, "expected {} coefficients, received {}".format(
                spec.k, len(value)))
        for i, c in enumerate(value):
            if not _is_int(c) or not 0 <= c < spec.p:
                raise CurveSpecError('{}[{}]'.format(location, i),
                                     "coefficient must be an integer in [0, {}), "
                                     "received {!r}".format(spec.p, c))
        return spec.code(list(value))
    raise CurveSpecError(location, "expected an integer or a coefficient list, "
                                   "received {!r}".format(value))


def encode_point(spec, P):
    if P.is_infinity:
        return 'O'
    return [encode_element(spec, P.x), encode_element(spec, P.y)]


def decode_point(curve, value, location='point'):
    """The validated point of a JSON-encoded ``"O"`` or ``[x, y]``.

    Raises:
        :exc:`.CurveSpecError`: if `value` is malformed.
        :exc:`.PointNotOnCurve`: if the point is not on the curve.

    """
    if value == 'O':
        return INFINITY
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise CurveSpecError(location, "expected \"O\" or [x, y], received {!r}".format(value))
    F = curve.spec
    x = decode_element(F, value[0], '{}[0]'.format(location))
    y = decode_element(F, value[1], '{}[1]'.format(location))
    return curve.point(x, y)


def encode_series(series):
    F = series.spec
    return dict(type='LaurentSeries',
                val=None if series.is_zero() else series.val,
                coeffs=[encode_element(F, c) for c in series.coeffs],
                prec=None if series.prec == math.inf else series.prec,
                uniformizer=series.uniformizer)


def load_curve(obj):
    """Parse a curve-spec document.

    Args:
        obj (dict):
            A document with keys ``p``, ``a`` and, for extension fields, ``k``
            and optionally ``modulus``.

    Returns:
        :class:`~atiyah.curve.Curve`

    Raises:
        :exc:`.CurveSpecError`: if the document is malformed.
        :exc:`.NonPrime`: if p is not prime.
        :exc:`.ReducibleModulus`: if the modulus is reducible.
        :exc:`.SingularCurve`: if the curve is singular.

    """
    if not isinstance(obj, dict):
        raise CurveSpecError('$', "expected an object, received {}".format(type(obj).__name__))
    if obj.get('type', 'Curve') != 'Curve':
        raise CurveSpecError('type', "expected 'Curve', received {!r}".format(obj['type']))

    unknown = set(obj).difference(('type', 'p', 'k', 'modulus', 'a'))
    if unknown:
        raise CurveSpecError(sorted(unknown)[0], "unknown key")

    if 'p' not in obj:
        raise CurveSpecError('p', "missing")
    p = obj['p']
    if not _is_int(p):
        raise CurveSpecError('p', "expected an integer, received {!r}".format(p))

    k = obj.get('k', 1)
    if not _is_int(k) or k < 1:
        raise CurveSpecError('k', "expected a positive integer, received {!r}".format(k))

    modulus = obj.get('modulus')
    if modulus is not None:
        if not isinstance(modulus, list):
            raise CurveSpecError('modulus', "expected a list, received {!r}".format(modulus))
        for i, c in enumerate(modulus):
            if not _is_int(c):
                raise CurveSpecError('modulus[{}]'.format(i),
                                     "expected an integer, received {!r}".format(c))
        if k == 1 and modulus:
            raise CurveSpecError('modulus', "must be empty for a prime field")
        if k == 1:
            modulus = None

    spec = field_make(p, k, modulus)

    if 'a' not in obj:
        raise CurveSpecError('a', "missing")
    a = obj['a']
    if not isinstance(a, list) or len(a) != 5:
        raise CurveSpecError('a', "expected the five coefficients [a1, a2, a3, a4, a6]")
    coeffs = [decode_element(spec, c, 'a[{}]'.format(i)) for i, c in enumerate(a)]
    return curve_make(spec, *coeffs)


def load_points(curve, obj):
    """Parse a points document, a list of points or ``{"points": [...]}``.

    Raises:
        :exc:`.CurveSpecError`: if the document is malformed.
        :exc:`.PointNotOnCurve`: if a point is not on the curve.

    """
    if isinstance(obj, dict):
        if 'points' not in obj:
            raise CurveSpecError('points', "missing")
        obj = obj['points']
    if not isinstance(obj, list):
        raise CurveSpecError('points', "expected a list, received {}".format(type(obj).__name__))
    return [decode_point(curve, P, 'points[{}]'.format(i)) for i, P in enumerate(obj)]


class AtiyahEncoder(json.JSONEncoder):
    """Subclass the JSONEncoder for atiyah objects.

    Objects with a ``to_serializable`` method are encoded through it; NumPy
    scalars and arrays, enums and points are handled as well.
    """
    def default(self, obj):
        if hasattr(obj, 'to_serializable'):
            return obj.to_serializable()
        if isinstance(obj, CurvePoint):
            return 'O' if obj.is_infinity else [obj.x, obj.y]
        if isinstance(obj, enum.Enum):
            return obj.value
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.bool_):
            return bool(obj)
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        return json.JSONEncoder.default(self, obj)


def _config(obj):
    from atiyah.code import EvalConfig

    curve = obj['curve'] if isinstance(obj['curve'], Curve) else load_curve(obj['curve'])
    points = load_points(curve, obj['points'])
    return EvalConfig(curve, obj['r'], obj['m'], tuple(points))


def atiyah_object_hook(obj):
    """JSON-decoding for atiyah objects.

    Curves, configs, queries and linear codes are decoded; codes are rebuilt
    from their config.

    See Also:
        :class:`json.JSONDecoder` for using custom decoders.

    """
    kind = obj.get('type', '')
    if kind == 'Curve':
        return load_curve(obj)
    elif kind == 'EvalConfig':
        return _config(obj)
    elif kind == 'ConfigQuery':
        from atiyah.search import ConfigQuery
        curve = obj['curve'] if isinstance(obj['curve'], Curve) else load_curve(obj['curve'])
        return ConfigQuery(curve, obj['r'], obj['m'], obj['n'], obj['mode'])
    elif kind == 'LinearCode':
        from atiyah.code import code_build
        config = obj['config'] if not isinstance(obj['config'], dict) else _config(obj['config'])
        return code_build(config)
    return obj


class AtiyahDecoder(json.JSONDecoder):
    """Subclass the JSONDecoder for atiyah objects.

    Uses :func:`.atiyah_object_hook`.
    """
    def __init__(self, *args, **kwargs):
        json.JSONDecoder.__init__(self, object_hook=atiyah_object_hook, *args, **kwargs)
