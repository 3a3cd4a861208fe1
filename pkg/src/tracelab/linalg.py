"""Exact dense linear algebra over a prime field F_p.

Vectors are tuples of ints in [0, p), matrices are tuples of row vectors.
Everything here is pure and allocation-light; the ambient dimensions in this
package are tiny, so clarity beats asymptotics.
"""

from __future__ import annotations


def rref(rows, p):
    """Reduced row echelon form.

    Returns (matrix, pivots) where matrix is a tuple of nonzero rows with
    leading coefficient 1 and pivots is the tuple of pivot column indices.
    """
    mat = [[x % p for x in row] for row in rows]
    if not mat:
        return (), ()
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = pow(mat[r][c], p - 2, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(row) for row in mat[:r]), tuple(pivots)


def reduce_vector(matrix, pivots, vec, p):
    """Residual of vec after elimination against an rref matrix."""
    res = list(vec)
    for row, c in zip(matrix, pivots):
        f = res[c] % p
        if f:
            res = [(x - f * y) % p for x, y in zip(res, row)]
    return tuple(x % p for x in res)


def in_rowspace(matrix, pivots, vec, p):
    return not any(reduce_vector(matrix, pivots, vec, p))


def coordinates(matrix, pivots, vec, p):
    """Coordinates of vec in the rref row basis.  vec must lie in the row space."""
    coords = tuple(vec[c] % p for c in pivots)
    if any(reduce_vector(matrix, pivots, vec, p)):
        raise ValueError("vector outside the row space")
    return coords


def right_kernel(rows, ncols, p):
    """Basis (tuple of vectors x) of {x : rows @ x = 0}."""
    mat, pivots = rref(rows, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * ncols
        vec[f] = 1
        for row, c in zip(mat, pivots):
            vec[c] = (-row[f]) % p
        basis.append(tuple(vec))
    return tuple(basis)


def left_kernel(rows, nrows, p):
    """Basis of {x : x @ rows = 0} for a matrix given as nrows row vectors."""
    if not rows:
        return tuple(tuple(1 if i == j else 0 for j in range(nrows)) for i in range(nrows))
    transposed = [tuple(row[i] for row in rows) for i in range(len(rows[0]))]
    return right_kernel(transposed, nrows, p)


def rank(rows, p):
    return len(rref(rows, p)[0])


def is_invertible(square_rows, p):
    n = len(square_rows)
    return n == 0 or rank(square_rows, p) == n
