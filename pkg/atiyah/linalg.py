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

"""Row reduction over F_q on NumPy arrays of element codes."""
import numpy as np

__all__ = ['rref', 'rank', 'nullspace', 'row_space_contains', 'coefficient_vectors']


def rref(spec, matrix):
    """Reduced row echelon form.

    Args:
        spec (:class:`~atiyah.field.FieldSpec`):
            The field.

        matrix (array-like):
            2-dimensional array of element codes.

    Returns:
        tuple: A 2-tuple of the reduced matrix with its zero rows removed and
        the list of pivot columns.

    Examples:
        >>> from atiyah import field_make
        >>> from atiyah.linalg import rref
        >>> R, pivots = rref(field_make(5), [[2, 4], [1, 2]])
        >>> R.tolist(), pivots
        ([[1, 2]], [0])

    """
    M = np.array(matrix, dtype=np.int64, ndmin=2)
    nrows, ncols = M.shape
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        nonzero = np.flatnonzero(M[row:, col])
        if not len(nonzero):
            continue
        r = row + nonzero[0]
        if r != row:
            M[[row, r]] = M[[r, row]]
        M[row] = spec.vmul(M[row], spec.inv(int(M[row, col])))

        factors = M[:, col:col+1].copy()
        factors[row] = 0
        M = spec.vsub(M, spec.vmul(factors, M[row:row+1]))

        pivots.append(col)
        row += 1
    return M[:row], pivots


def rank(spec, matrix):
    """Rank of a matrix of element codes."""
    M = np.array(matrix, dtype=np.int64, ndmin=2)
    if not M.size:
        return 0
    return len(rref(spec, M)[1])


def nullspace(spec, matrix, ncols=None):
    """Basis of the right kernel {v : matrix @ v = 0}.

    One basis vector per free column, in increasing free-column order, with
    a 1 in its free column.

    Args:
        spec (:class:`~atiyah.field.FieldSpec`):
            The field.

        matrix (array-like):
            2-dimensional array of element codes, possibly with no rows.

        ncols (int, optional):
            Number of columns, required when `matrix` has no rows.

    Returns:
        :class:`numpy.ndarray`: array of shape (kernel dimension, ncols).

    """
    M = np.array(matrix, dtype=np.int64)
    if ncols is None:
        ncols = M.shape[1]
    if M.size:
        R, pivots = rref(spec, M.reshape(-1, ncols))
    else:
        R, pivots = np.zeros((0, ncols), dtype=np.int64), []

    free = [c for c in range(ncols) if c not in set(pivots)]
    kernel = np.zeros((len(free), ncols), dtype=np.int64)
    for i, c in enumerate(free):
        kernel[i, c] = 1
        for r, p in enumerate(pivots):
            kernel[i, p] = spec.neg(int(R[r, c]))
    return kernel


def row_space_contains(spec, basis, vectors):
    """True if every row of `vectors` lies in the row space of `basis`."""
    basis = np.array(basis, dtype=np.int64, ndmin=2)
    vectors = np.array(vectors, dtype=np.int64, ndmin=2)
    return rank(spec, np.vstack([basis, vectors])) == rank(spec, basis)


def coefficient_vectors(q, k, start, stop):
    """Rows start..stop-1 of the lexicographic enumeration of F_q**k.

    Index i maps to the base-q digits of i, the first coordinate being the
    most significant digit. For prime fields the digits are the elements
    themselves; for extension fields they are element codes.

    """
    index = np.arange(start, stop, dtype=np.int64)[:, np.newaxis]
    places = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    return (index // places) % q
