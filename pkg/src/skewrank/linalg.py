"""Row reduction over any field of a tower.

Matrices are tuples of row tuples of packed field values.  Reduction is
plain Gauss-Jordan through the tower's arithmetic; no floating point, no
pivot strategy beyond first-nonzero, so the reduced form is canonical and
usable as a set identity for row spaces.
"""
from __future__ import annotations


def rref(K, rows, ncols: int):
    """Reduced row echelon form.

    Returns (reduced_rows, pivot_columns); zero rows are dropped, so the
    result is the canonical basis of the row space.
    """
    mat = [list(r) for r in rows if any(r)]
    pivots = []
    rpos = 0
    for col in range(ncols):
        sel = None
        for i in range(rpos, len(mat)):
            if mat[i][col]:
                sel = i
                break
        if sel is None:
            continue
        mat[rpos], mat[sel] = mat[sel], mat[rpos]
        inv = K.inv(mat[rpos][col])
        if inv != 1:
            mat[rpos] = [K.mul(inv, v) for v in mat[rpos]]
        prow = mat[rpos]
        for i in range(len(mat)):
            if i != rpos and mat[i][col]:
                c = mat[i][col]
                row = mat[i]
                mat[i] = [K.sub(a, K.mul(c, b)) for a, b in zip(row, prow)]
        pivots.append(col)
        rpos += 1
        if rpos == len(mat):
            break
    reduced = tuple(tuple(r) for r in mat[:rpos] if any(r))
    return reduced, tuple(pivots)


def rank(K, rows, ncols: int) -> int:
    return len(rref(K, rows, ncols)[0])


def right_kernel(K, rows, ncols: int):
    """Canonical basis of {v : M v = 0}, from the RREF free columns."""
    red, pivots = rref(K, rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [0] * ncols
        v[free] = 1
        for prow, pcol in zip(red, pivots):
            v[pcol] = K.neg(prow[free])
        basis.append(tuple(v))
    return basis


def in_row_space(K, rows, ncols: int, vec) -> bool:
    """Membership test by reducing vec against the RREF of rows."""
    red, pivots = rref(K, rows, ncols)
    w = list(vec)
    for prow, pcol in zip(red, pivots):
        if w[pcol]:
            c = w[pcol]
            w = [K.sub(a, K.mul(c, b)) for a, b in zip(w, prow)]
    return not any(w)


def solve_matrix_right(K, rows_u, rows_r, ncols: int):
    """Solve U A = R for A with ncols rows, or return None when no solution
    exists.  Rows of U and R are paired.

    Reduce the block [U | R]; a pivot landing in the R half means some row
    combination gives 0 = nonzero, hence inconsistency.  Otherwise setting
    row c_i of A to the reduced R row of pivot column c_i (all other rows
    zero) satisfies the reduced system, and the original one too since row
    operations are invertible.
    """
    if not rows_r:
        return []
    width = len(rows_r[0])
    aug = [list(u) + list(t) for u, t in zip(rows_u, rows_r)]
    red, pivots = rref(K, aug, ncols + width)
    a = [[0] * width for _ in range(ncols)]
    for prow, pcol in zip(red, pivots):
        if pcol >= ncols:
            return None
        a[pcol] = list(prow[ncols:])
    return [tuple(r) for r in a]


def transpose(rows):
    return [tuple(col) for col in zip(*rows)] if rows else []
