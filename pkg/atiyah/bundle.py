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

"""Atiyah bundles I_r(mQ) with Q the point at infinity O.

The bundle I_r is the iterated non-split extension of the structure sheaf by
itself. It is represented by a local matrix at O, the identity elsewhere,

    [[1, t^-1,    0, ...],
     [0,    1, t^-1, ...],
     ...
     [0,    0,  ...,  1]]

with t = x/y. A global section of I_r(mQ) is a tuple (f_r, ..., f_1) of
functions regular away from O with every entry of g * (f_r, ..., f_1)^T of
order at least -m at O, that is

    ord_O(f_1) >= -m,    ord_O(f_j + t^-1 f_{j-1}) >= -m  for j = 2..r.

It follows that f_j lies in L((m + j - 1)O). The section space is computed as
the kernel of the linear conditions on the principal parts of these
candidates; it has dimension r*m for m >= 1.

Examples:
    >>> from atiyah import field_make, curve_make, section_basis
    >>> E = curve_make(field_make(5), 0, 0, 0, 1, 1)
    >>> len(section_basis(E, 2, 2))
    4

"""
import functools
import logging

from collections import namedtuple

import numpy as np

from atiyah.config import resolve
from atiyah.curve import INFINITY
from atiyah.decorators import rank_twist_argument
from atiyah.exceptions import (HypothesisViolated, RankTooSmall, ShapeMismatch,
                               SpaceTooLarge)
from atiyah.field import FieldSpec
from atiyah.functions import CurveFunction, expand_at, is_regular_affine, ord_at
from atiyah.laurent import LaurentSeries
from atiyah.linalg import coefficient_vectors, nullspace, rank, rref
from atiyah.polynomials import Polynomial

__all__ = ['LocalMatrix', 'ExtensionClass', 'Section', 'SectionBasis', 'PoleTable',
           'lbasis_mO', 'extension_class', 'atiyah_local_matrix', 'block_extend',
           'kappa_block', 'local_matrix_apply', 'section_basis', 'pole_table',
           'h0_h1', 'is_section', 'extreme_family_dimension', 'restrict_top',
           'pole_orders',
           ]

logger = logging.getLogger(__name__)


# Riemann-Roch spaces L(mO)

def pole_orders(m):
    """Pole orders at O realized by L(mO): 0, 2, 3, ..., m."""
    if m < 0:
        return []
    return [0] + list(range(2, m + 1))


def _monomial(curve, n):
    # the monomial of L(nO) with pole order exactly n
    F = curve.spec
    if n == 0:
        return CurveFunction(curve, 1)
    if n % 2 == 0:
        return CurveFunction(curve, Polynomial(F, (0,) * (n // 2) + (1,)))
    return CurveFunction(curve, 0, Polynomial(F, (0,) * ((n - 3) // 2) + (1,)))


def lbasis_mO(curve, m):
    """Monomial basis of L(mO), by increasing pole order.

    The basis is 1, x, y, x**2, x*y, x**3, ..., with pole orders 0, 2, 3, 4,
    5, 6, ...; pole order 1 never occurs.

    Args:
        curve (:class:`~atiyah.curve.Curve`):
            The curve.

        m (int):
            The multiple of O.

    Returns:
        list[:class:`~atiyah.functions.CurveFunction`]: m functions for
        m >= 1, the constant 1 for m = 0 and none for m < 0.

    Examples:
        >>> from atiyah import field_make, curve_make, lbasis_mO
        >>> E = curve_make(field_make(5), 0, 0, 0, 1, 1)
        >>> lbasis_mO(E, 3)
        [CurveFunction(1), CurveFunction(x), CurveFunction(y)]

    """
    return [_monomial(curve, n) for n in pole_orders(m)]


@functools.lru_cache(maxsize=1024)
def _monomial_series(curve, n, prec):
    return expand_at(curve, _monomial(curve, n), INFINITY, max(prec, 1 - n))


# local matrices

class LocalMatrix:
    """An r x r matrix of Laurent series at O.

    The implicit local component at every point other than O is the
    identity.

    Args:
        entries (list[list[:class:`~atiyah.laurent.LaurentSeries`]]):
            Square array of series over a common field.

    """
    __slots__ = ('entries',)

    def __init__(self, entries):
        entries = [list(row) for row in entries]
        r = len(entries)
        if any(len(row) != r for row in entries):
            raise ShapeMismatch("local matrices must be square, received rows of "
                                "lengths {}".format([len(row) for row in entries]))
        self.entries = entries

    @classmethod
    def identity(cls, spec, r):
        return cls([[LaurentSeries(spec, 0, (int(i == j),)) for j in range(r)]
                    for i in range(r)])

    @property
    def r(self):
        return len(self.entries)

    @property
    def shape(self):
        return (self.r, self.r)

    @property
    def spec(self):
        return self.entries[0][0].spec if self.entries else None

    def __getitem__(self, index):
        i, j = index
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, LocalMatrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))

    __hash__ = None

    def __repr__(self):
        return 'LocalMatrix({!r})'.format(self.entries)

    def determinant(self):
        """The determinant, by cofactor expansion along the first column."""
        return _det([row[:] for row in self.entries])

    def apply(self, vector):
        """The product of the matrix with a column of series."""
        if len(vector) != self.r:
            raise ShapeMismatch("expected a vector of length {}, received {}".format(
                self.r, len(vector)))
        out = []
        for row in self.entries:
            acc = None
            for a, f in zip(row, vector):
                if a.is_zero() and a.is_exact:
                    continue
                term = a * f
                acc = term if acc is None else acc + term
            out.append(acc if acc is not None else LaurentSeries.zero(self.spec))
        return out

    def twist(self, m):
        """The local matrix t**m * g of the twist by mO."""
        return LocalMatrix([[a.shift(m) for a in row] for row in self.entries])

    def to_serializable(self):
        from atiyah.serialization.json import encode_series
        return dict(type='LocalMatrix',
                    r=self.r,
                    entries=[[encode_series(a) for a in row] for row in self.entries])


def _det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    spec = rows[0][0].spec
    total = LaurentSeries.zero(spec)
    for i in range(n):
        a = rows[i][0]
        if a.is_zero() and a.is_exact:
            continue
        minor = [row[1:] for k, row in enumerate(rows) if k != i]
        term = a * _det(minor)
        total = total + term if i % 2 == 0 else total - term
    return total


def _spec_or_default(spec):
    # the Atiyah representatives have entries in the prime field
    return FieldSpec(2) if spec is None else spec


@rank_twist_argument(min_rank=1, twist=None)
def atiyah_local_matrix(r, spec=None):
    """The local matrix of I_r at O: 1 on the diagonal, t^-1 above it.

    Args:
        r (int):
            The rank.

        spec (:class:`~atiyah.field.FieldSpec`, optional):
            Field of the series entries. The entries 0, 1 and t^-1 exist over
            every field; F_2 is used when no field is given.

    Returns:
        :class:`.LocalMatrix`

    """
    spec = _spec_or_default(spec)
    rows = []
    for i in range(r):
        row = []
        for j in range(r):
            if i == j:
                row.append(LaurentSeries(spec, 0, (1,)))
            elif j == i + 1:
                row.append(LaurentSeries(spec, -1, (1,)))
            else:
                row.append(LaurentSeries.zero(spec))
        rows.append(row)
    return LocalMatrix(rows)


class ExtensionClass(namedtuple('ExtensionClass', ['r', 'kappa'])):
    """Extension class of O_X by I_{r-1} defining I_r.

    Attributes:
        r (int): rank of the extension.
        kappa (tuple[:class:`~atiyah.laurent.LaurentSeries`]): the local
            component at O, of length r - 1. The components at every other
            point vanish.

    """
    __slots__ = ()

    def to_serializable(self):
        from atiyah.serialization.json import encode_series
        return dict(type='ExtensionClass', r=self.r,
                    kappa=[encode_series(a) for a in self.kappa])


@rank_twist_argument(min_rank=2, twist=None)
def extension_class(r, spec=None):
    """The class (t^-1, 0, ..., 0) at O of the extension defining I_r.

    Raises:
        :exc:`.RankTooSmall`: if r < 2.

    """
    spec = _spec_or_default(spec)
    kappa = [LaurentSeries(spec, -1, (1,))] + [LaurentSeries.zero(spec)] * (r - 2)
    return ExtensionClass(r, tuple(kappa))


def kappa_block(ext):
    """Embed an extension class as the upper-right column of :func:`block_extend`.

    The class is listed with the component nearest to O_X last, so the
    column is the reversed vector (0, ..., 0, t^-1).

    """
    return [[a] for a in reversed(ext.kappa)]


def block_extend(g1, g3, kappa):
    """The block matrix [[g1, kappa], [0, g3]].

    Args:
        g1 (:class:`.LocalMatrix`):
            Local matrix of the subbundle, r1 x r1.

        g3 (:class:`.LocalMatrix`):
            Local matrix of the quotient, r3 x r3.

        kappa (list[list[:class:`~atiyah.laurent.LaurentSeries`]]):
            The r1 x r3 upper-right block.

    Returns:
        :class:`.LocalMatrix`

    Raises:
        :exc:`.ShapeMismatch`: if kappa is not r1 x r3.

    Examples:
        >>> from atiyah import atiyah_local_matrix, block_extend, extension_class, kappa_block
        >>> g = block_extend(atiyah_local_matrix(2), atiyah_local_matrix(1),
        ...                  kappa_block(extension_class(3)))
        >>> g == atiyah_local_matrix(3)
        True

    """
    r1, r3 = g1.r, g3.r
    kappa = [list(row) for row in kappa]
    if len(kappa) != r1 or any(len(row) != r3 for row in kappa):
        raise ShapeMismatch("expected a {}x{} block, received {}x{}".format(
            r1, r3, len(kappa), len(kappa[0]) if kappa else 0))
    spec = g1.spec
    rows = [g1.entries[i] + kappa[i] for i in range(r1)]
    rows.extend([LaurentSeries.zero(spec)] * r1 + g3.entries[i] for i in range(r3))
    return LocalMatrix(rows)


def local_matrix_apply(g, comps):
    """Apply a local matrix to a section given as expansions at O."""
    return g.apply(list(comps))


# sections

class Section:
    """A global section (f_r, ..., f_1) of I_r(mQ).

    Args:
        comps (iterable[:class:`~atiyah.functions.CurveFunction`]):
            The components, top component f_r first.

    """
    __slots__ = ('comps',)

    def __init__(self, comps):
        self.comps = tuple(comps)

    @property
    def r(self):
        return len(self.comps)

    def component(self, j):
        """The component f_j, 1 <= j <= r."""
        if not 1 <= j <= self.r:
            raise IndexError("component index must lie in [1, {}], received {}".format(self.r, j))
        return self.comps[self.r - j]

    def __iter__(self):
        return iter(self.comps)

    def __len__(self):
        return len(self.comps)

    def __eq__(self, other):
        if not isinstance(other, Section):
            return NotImplemented
        return self.comps == other.comps

    def __hash__(self):
        return hash(self.comps)

    def __repr__(self):
        return 'Section({!r})'.format(list(self.comps))

    def is_zero(self):
        return all(f.is_zero() for f in self.comps)

    def pole_orders(self):
        """The orders ord_O(f_j), top component first, None for zero components."""
        return [None if f.is_zero() else ord_at(f.curve, f, INFINITY) for f in self.comps]

    def to_serializable(self):
        return [f.to_serializable() for f in self.comps]


def _columns(r, m):
    # unknown coefficients: f_j in L((m + j - 1)O), pole order descending
    return [(j, n) for j in range(1, r + 1) for n in reversed(pole_orders(m + j - 1))]


def _constraints(curve, r, m, columns):
    index = {col: i for i, col in enumerate(columns)}
    rows = []
    for j in range(2, r + 1):
        for e in range(-(m + j - 1), -m):
            row = np.zeros(len(columns), dtype=np.int64)
            for n in pole_orders(m + j - 1):
                row[index[j, n]] = _monomial_series(curve, n, -m + 1).coefficient(e)
            for n in pole_orders(m + j - 2):
                c = _monomial_series(curve, n, -m + 1).coefficient(e + 1)
                row[index[j - 1, n]] = c
            rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(columns))


def _solve(curve, r, m):
    columns = _columns(r, m)
    if not columns:
        return columns, np.zeros((0, 0), dtype=np.int64)
    kernel = nullspace(curve.spec, _constraints(curve, r, m, columns), ncols=len(columns))
    if len(kernel):
        kernel, _ = rref(curve.spec, kernel)
    return columns, kernel


def _section_from_vector(curve, r, columns, vector):
    F = curve.spec
    us = {j: {} for j in range(1, r + 1)}
    vs = {j: {} for j in range(1, r + 1)}
    for (j, n), c in zip(columns, vector):
        c = int(c)
        if not c:
            continue
        if n % 2 == 0:
            us[j][n // 2] = F.add(us[j].get(n // 2, 0), c)
        else:
            vs[j][(n - 3) // 2] = F.add(vs[j].get((n - 3) // 2, 0), c)

    def poly(terms):
        if not terms:
            return Polynomial(F)
        coeffs = [0] * (max(terms) + 1)
        for k, c in terms.items():
            coeffs[k] = c
        return Polynomial(F, coeffs)

    comps = [CurveFunction(curve, poly(us[j]), poly(vs[j])) for j in range(r, 0, -1)]
    return Section(comps)


class SectionBasis:
    """An echelonized basis of H^0(I_r(mQ)).

    Each section is stored by its coefficients on the monomial candidates
    f_j in L((m + j - 1)O). Columns are ordered by component f_1 first and,
    within a component, by decreasing pole order, so the pivots fall on the
    most negative orders of f_1 first.

    Attributes:
        curve (:class:`~atiyah.curve.Curve`): the curve.
        r (int): the rank.
        m (int): the twist.
        columns (list[tuple]): the (j, pole order) label of every column.
        coefficients (:class:`numpy.ndarray`): one row of codes per section.
        uniformizer (str): the local parameter at O, ``'x/y'``.

    """
    uniformizer = 'x/y'

    def __init__(self, curve, r, m, columns, coefficients):
        self.curve = curve
        self.r = r
        self.m = m
        self.columns = list(columns)
        self.coefficients = np.asarray(coefficients, dtype=np.int64).reshape(-1, len(self.columns))
        self.sections = [_section_from_vector(curve, r, self.columns, row)
                         for row in self.coefficients]

    def __len__(self):
        return len(self.sections)

    def __iter__(self):
        return iter(self.sections)

    def __getitem__(self, i):
        return self.sections[i]

    def __repr__(self):
        return 'SectionBasis(r={}, m={}, dim={})'.format(self.r, self.m, len(self))

    @property
    def dimension(self):
        return len(self.sections)

    def component_columns(self, j):
        """Indices of the columns of component f_j, by decreasing pole order."""
        return [i for i, (jj, _) in enumerate(self.columns) if jj == j]

    def combination(self, coeffs):
        """The section sum c_i * basis[i] for element codes c_i."""
        coeffs = np.asarray(coeffs, dtype=np.int64).reshape(1, -1)
        vector = self.curve.spec.matmul(coeffs, self.coefficients)[0]
        return _section_from_vector(self.curve, self.r, self.columns, vector)

    def monomial_values(self, points):
        """Array of the values of every column monomial at every point."""
        F = self.curve.spec
        values = np.zeros((len(self.columns), len(points)), dtype=np.int64)
        for i, (_, n) in enumerate(self.columns):
            for k, P in enumerate(points):
                if n == 0:
                    values[i, k] = 1
                elif n % 2 == 0:
                    values[i, k] = F.pow(P.x, n // 2)
                else:
                    values[i, k] = F.mul(F.pow(P.x, (n - 3) // 2), P.y)
        return values

    def evaluate(self, points):
        """Values of the basis sections at affine points.

        Returns:
            :class:`numpy.ndarray`: array of shape (dim, len(points), r), the
            last axis ordered f_r, ..., f_1.

        """
        F = self.curve.spec
        values = self.monomial_values(points)
        out = np.zeros((len(self), len(points), self.r), dtype=np.int64)
        for j in range(1, self.r + 1):
            cols = self.component_columns(j)
            out[:, :, self.r - j] = F.matmul(self.coefficients[:, cols], values[cols])
        return out

    def to_serializable(self):
        return dict(type='SectionBasis',
                    curve=self.curve.to_serializable(),
                    r=self.r,
                    m=self.m,
                    uniformizer=self.uniformizer,
                    sections=[s.to_serializable() for s in self.sections])


@rank_twist_argument(min_rank=1)
def section_basis(curve, r, m):
    """Basis of the global sections of I_r(mQ).

    Args:
        curve (:class:`~atiyah.curve.Curve`):
            The curve.

        r (int):
            The rank, at most the ``max_rank`` option.

        m (int):
            The twist, 1 <= m <= ``max_twist``.

    Returns:
        :class:`.SectionBasis`: r*m sections.

    Raises:
        :exc:`.RankOrTwistTooLarge`: if r or m exceeds its cap.

    """
    if m < 1:
        raise HypothesisViolated("section bases are computed for m >= 1, received {}".format(m))
    columns, kernel = _solve(curve, r, m)
    logger.debug("section space of I_%d(%dO): %d unknowns, dimension %d",
                 r, m, len(columns), len(kernel))
    return SectionBasis(curve, r, m, columns, kernel)


@rank_twist_argument(min_rank=1)
def h0_h1(curve, r, m):
    """Dimensions (h0, h1) of the cohomology of I_r(mQ).

    h0 is the dimension of the solution space (0 for m < 0) and
    h1 = h0 - r*m by Riemann-Roch on a curve of genus 1.

    """
    if m < 0:
        h0 = 0
    else:
        h0 = len(_solve(curve, r, m)[1])
    return h0, h0 - r * m


def is_section(curve, r, m, comps):
    """True if (f_r, ..., f_1) is a global section of I_r(mQ).

    Checks regularity away from O and that every entry of
    g_{I_r} * (f_r, ..., f_1)^T has order at least -m at O.

    """
    comps = list(comps)
    if len(comps) != r:
        raise ShapeMismatch("expected {} components, received {}".format(r, len(comps)))
    if not all(f.is_zero() or is_regular_affine(f) for f in comps):
        return False
    F = curve.spec
    series = []
    for f in comps:
        if f.is_zero():
            series.append(LaurentSeries.zero(F))
        else:
            prec = max(ord_at(curve, f, INFINITY) + 1, -m + 2)
            series.append(expand_at(curve, f, INFINITY, prec))
    for entry in atiyah_local_matrix(r, F).apply(series):
        if not entry.is_zero() and entry.val < -m:
            return False
    return True


def _dim_where(basis, constraints):
    # dimension of {sections : the listed coefficient columns vanish}
    if not constraints:
        return len(basis)
    return len(basis) - rank(basis.curve.spec, basis.coefficients[:, constraints])


def extreme_family_dimension(basis):
    """Codimension of {ord_O(f_1) > -m} in the section space.

    For r = 2 this is the dimension of the family realizing the extreme
    pole-order pair (-m, -(m + 1)); it is 1 for m >= 2 and 0 for m = 1.

    """
    cols = [i for i, (j, n) in enumerate(basis.columns) if j == 1 and n == basis.m]
    if not cols or not len(basis):
        return 0
    return rank(basis.curve.spec, basis.coefficients[:, cols])


def restrict_top(basis):
    """The image of the map forgetting f_r, as a basis of rank r - 1.

    Raises:
        :exc:`.RankTooSmall`: if the basis has rank 1.

    """
    if basis.r < 2:
        raise RankTooSmall("cannot forget the top component of a rank-1 section")
    cols = [i for i, (j, _) in enumerate(basis.columns) if j < basis.r]
    image, _ = rref(basis.curve.spec, basis.coefficients[:, cols])
    return SectionBasis(basis.curve, basis.r - 1, basis.m,
                        [basis.columns[i] for i in cols], image)


# pole tables

def _labels(max_pole):
    return [0] + [-n for n in range(2, max_pole + 1)]


class PoleTable:
    """Occupancy of the pole-order pairs (ord_O(f_{r-1}), ord_O(f_r)).

    The label 0 stands for ord >= 0, the zero function included.

    Attributes:
        r (int): the rank.
        m (int): the twist.
        row_labels (list[int]): orders of f_{r-1}, 0 first then decreasing.
        col_labels (list[int]): orders of f_r, 0 first then decreasing.
        cells (:class:`numpy.ndarray`): boolean occupancy, rows by f_{r-1}.
        method (str): ``'rank'`` or ``'exhaustive'``.

    """
    def __init__(self, r, m, row_labels, col_labels, cells, method):
        self.r = r
        self.m = m
        self.row_labels = list(row_labels)
        self.col_labels = list(col_labels)
        self.cells = np.asarray(cells, dtype=bool)
        self.method = method

    def __contains__(self, pair):
        a, b = pair
        try:
            return bool(self.cells[self.row_labels.index(a), self.col_labels.index(b)])
        except ValueError:
            return False

    def __eq__(self, other):
        if not isinstance(other, PoleTable):
            return NotImplemented
        return (self.row_labels == other.row_labels and self.col_labels == other.col_labels
                and np.array_equal(self.cells, other.cells))

    __hash__ = None

    def __repr__(self):
        return 'PoleTable(r={}, m={}, realized={})'.format(self.r, self.m, self.realized())

    def realized(self):
        """Realized pairs (ord f_{r-1}, ord f_r) in table order."""
        return [(a, b) for i, a in enumerate(self.row_labels)
                for k, b in enumerate(self.col_labels) if self.cells[i, k]]

    def to_text(self):
        """The table with O for realized and X for absent pairs."""
        width = max(len(str(label)) for label in self.row_labels + self.col_labels) + 1
        head = 'f{}\\f{}'.format(self.r - 1, self.r).rjust(width + 2)
        lines = [head + ''.join(str(b).rjust(width) for b in self.col_labels)]
        for i, a in enumerate(self.row_labels):
            marks = ''.join(('O' if self.cells[i, k] else 'X').rjust(width)
                            for k in range(len(self.col_labels)))
            lines.append(str(a).rjust(width + 2) + marks)
        return '\n'.join(lines)

    def to_serializable(self):
        return dict(type='PoleTable', r=self.r, m=self.m, method=self.method,
                    rows=self.row_labels, cols=self.col_labels,
                    realized=[list(pair) for pair in self.realized()])


def _constrained_columns(basis, j, label):
    # columns of f_j that must vanish for ord_O(f_j) >= label
    return [i for i, (jj, n) in enumerate(basis.columns) if jj == j and n > -label]


def _pole_table_rank(basis, rows, cols):
    r = basis.r
    dims = {}

    def dim(a, b):
        if (a, b) not in dims:
            dims[a, b] = _dim_where(basis, _constrained_columns(basis, r - 1, a)
                                    + _constrained_columns(basis, r, b))
        return dims[a, b]

    cells = np.zeros((len(rows), len(cols)), dtype=bool)
    for i, a in enumerate(rows):
        for k, b in enumerate(cols):
            d = dim(a, b)
            # a vector space is never the union of two proper subspaces
            above_a = dim(rows[i - 1], b) if i else -1
            above_b = dim(a, cols[k - 1]) if k else -1
            cells[i, k] = d > above_a and d > above_b
    return cells


def _leading_orders(values, ncols):
    # values: (N, ncols) coefficients of one component, pole order descending
    nonzero = values != 0
    first = np.where(nonzero.any(axis=1), nonzero.argmax(axis=1), ncols)
    return first


def _pole_table_exhaustive(basis, rows, cols, cap):
    F = basis.curve.spec
    r = basis.r
    dim = len(basis)
    total = F.q ** dim
    if total > cap:
        raise SpaceTooLarge("{} sections exceed the enumeration cap {}".format(total, cap))

    cells = np.zeros((len(rows), len(cols)), dtype=bool)
    comps = []
    for j in (r - 1, r):
        idx = basis.component_columns(j)
        orders = [basis.columns[i][1] for i in idx] + [0]
        comps.append((idx, np.array([-n if n > 1 else 0 for n in orders], dtype=np.int64)))

    row_pos = {a: i for i, a in enumerate(rows)}
    col_pos = {b: k for k, b in enumerate(cols)}
    chunk = 1 << 14
    for start in range(0, total, chunk):
        combos = coefficient_vectors(F.q, dim, start, min(start + chunk, total))
        coeffs = F.matmul(combos, basis.coefficients)
        labels = []
        for idx, order_of in comps:
            first = _leading_orders(coeffs[:, idx], len(idx))
            labels.append(order_of[first])
        for a, b in set(zip(labels[0].tolist(), labels[1].tolist())):
            cells[row_pos[a], col_pos[b]] = True
    return cells


@rank_twist_argument(min_rank=2)
def pole_table(curve, r, m, method='rank', cap=None):
    """Which pole-order pairs (ord_O(f_{r-1}), ord_O(f_r)) occur among sections.

    Args:
        curve (:class:`~atiyah.curve.Curve`):
            The curve.

        r (int):
            The rank, at least 2.

        m (int):
            The twist, at least 1.

        method (str, optional, default='rank'):
            ``'rank'`` decides every cell by comparing the dimensions of the
            subspaces {ord f_{r-1} >= a, ord f_r >= b}; it is exact for every
            q. ``'exhaustive'`` scans all q**(r*m) sections.

        cap (int, optional):
            Overrides the ``enumeration_cap`` option for the exhaustive scan.

    Returns:
        :class:`.PoleTable`

    Raises:
        :exc:`.SpaceTooLarge`: if the exhaustive scan exceeds the cap.

    """
    basis = section_basis(curve, r, m)
    rows = _labels(m + r - 2)
    cols = _labels(m + r - 1)
    if method == 'rank':
        cells = _pole_table_rank(basis, rows, cols)
    elif method == 'exhaustive':
        cells = _pole_table_exhaustive(basis, rows, cols, resolve('enumeration_cap', cap))
    else:
        raise ValueError("method must be 'rank' or 'exhaustive', received {!r}".format(method))
    return PoleTable(r, m, rows, cols, cells, method)
