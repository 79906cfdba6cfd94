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
A plain-text export of generator matrices.

The first line is the header ``q r m n k``, followed by k rows of r*n field
elements separated by spaces. Elements of prime fields are written as
integers, elements of extension fields as coefficient tuples, lowest degree
first, without spaces.

Examples:

    >>> from atiyah import field_make, curve_make, EvalConfig, code_build
    >>> from atiyah.serialization import generator
    >>> E = curve_make(field_make(5), 0, 0, 0, 1, 1)
    >>> code = code_build(EvalConfig.from_points(E, 1, 1, E.affine_points()[:3]))
    >>> print(generator.dumps(code))
    5 1 1 3 1
    1 1 1

    Loading returns the header and the matrix of element codes.

    >>> gm = generator.loads('4 1 1 2 1\\n(1,0) (0,1)')
    >>> gm.q, gm.matrix.tolist()
    (4, [[1, 2]])

"""
import collections

import numpy as np
import pyparsing as pp

from atiyah.exceptions import CurveSpecError
from atiyah.field import field_make
from atiyah.polynomials import _prime_factors

__all__ = ['GeneratorMatrix', 'dump', 'dumps', 'load', 'loads']


GeneratorMatrix = collections.namedtuple('GeneratorMatrix', ['q', 'r', 'm', 'n', 'k', 'matrix'])
"""Header fields and the k x (r*n) array of element codes of an export."""


def _make_grammar():
    integer = pp.Word(pp.nums).setParseAction(lambda toks: int(toks[0]))
    coefficients = pp.Group(pp.Suppress('(') + pp.delimitedList(integer) + pp.Suppress(')'))
    element = integer | coefficients
    header = pp.And([integer] * 5) + pp.StringEnd()
    row = pp.OneOrMore(element) + pp.StringEnd()
    return header, row


_HEADER, _ROW = _make_grammar()


def _format(spec, code):
    if spec.k == 1:
        return str(int(code))
    return '({})'.format(','.join(map(str, spec.coords(int(code)))))


def _iter_lines(code):
    cfg = code.config
    spec = code.spec
    yield '{} {} {} {} {}'.format(spec.q, cfg.r, cfg.m, cfg.n, code.k)
    for row in code.generator:
        yield ' '.join(_format(spec, c) for c in row)


def dumps(code):
    """Dump the generator matrix of a linear code to a string."""
    return '\n'.join(_iter_lines(code))


def dump(code, fp):
    """Dump the generator matrix of a linear code to a file."""
    for line in _iter_lines(code):
        fp.write('%s\n' % line)


def loads(s, spec=None):
    """Load a generator matrix from a string."""
    return load(s.split('\n'), spec=spec)


def _field(q, spec):
    if spec is not None:
        if spec.q != q:
            raise CurveSpecError('line 1', "header field size {} does not match {}".format(q, spec))
        return spec
    factors = _prime_factors(q) if q > 1 else []
    if len(factors) != 1:
        raise CurveSpecError('line 1', "field size must be a prime power, received {}".format(q))
    p = factors[0]
    k = 0
    while p ** k < q:
        k += 1
    return field_make(p, k)


def load(fp, spec=None):
    """Load a generator matrix from a file.

    Args:
        fp (iterable[str]):
            Lines of the export.

        spec (:class:`~atiyah.field.FieldSpec`, optional):
            The field. Defaults to the field of size q with the default
            modulus.

    Returns:
        :class:`.GeneratorMatrix`

    Raises:
        :exc:`.CurveSpecError`: with the line number of a malformed line.

    """
    lines = [(i, line.strip()) for i, line in enumerate(fp, 1) if line.strip()]
    if not lines:
        raise CurveSpecError('line 1', "missing header 'q r m n k'")

    lineno, text = lines[0]
    try:
        q, r, m, n, k = _HEADER.parseString(text)
    except pp.ParseException as err:
        raise CurveSpecError('line {}'.format(lineno),
                             "expected header 'q r m n k': {}".format(err.msg)) from None
    spec = _field(q, spec)

    rows = lines[1:]
    if len(rows) != k:
        raise CurveSpecError('line {}'.format(lineno), "header announces {} rows, "
                             "found {}".format(k, len(rows)))

    matrix = np.zeros((k, r * n), dtype=np.int64)
    for i, (lineno, text) in enumerate(rows):
        location = 'line {}'.format(lineno)
        try:
            tokens = _ROW.parseString(text)
        except pp.ParseException as err:
            raise CurveSpecError(location, err.msg) from None
        if len(tokens) != r * n:
            raise CurveSpecError(location, "expected {} elements, found {}".format(
                r * n, len(tokens)))
        for j, tok in enumerate(tokens):
            if isinstance(tok, int):
                if spec.k > 1 or not 0 <= tok < spec.q:
                    raise CurveSpecError('{}, column {}'.format(location, j + 1),
                                         "invalid element {}".format(tok))
                matrix[i, j] = tok
            else:
                coords = list(tok)
                if len(coords) != spec.k or any(c >= spec.p for c in coords):
                    raise CurveSpecError('{}, column {}'.format(location, j + 1),
                                         "invalid element {}".format(tuple(coords)))
                matrix[i, j] = spec.code(coords)
    return GeneratorMatrix(q, r, m, n, k, matrix)
