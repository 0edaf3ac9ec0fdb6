"""Exact dense linear algebra over a field.

Matrices are lists of row lists whose entries come from one field object
(anything with zero()/one() and exact element arithmetic).  Elimination is
plain Gaussian with division; pivots are chosen as the first nonzero entry
scanning columns left to right and rows top down, ties to the lowest row
index, so every result is deterministic.
"""

from __future__ import annotations

from .errors import SingularMatrixError


def identity_matrix(field, n: int):
    z, o = field.zero(), field.one()
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def zero_matrix(field, rows: int, cols: int):
    z = field.zero()
    return [[z] * cols for _ in range(rows)]


def mat_mul(A, B, field):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    z = field.zero()
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(m):
            acc = z
            for t in range(k):
                a = Ai[t]
                if not a.is_zero():
                    acc = acc + a * B[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(A, v, field):
    z = field.zero()
    out = []
    for row in A:
        acc = z
        for a, x in zip(row, v):
            if not a.is_zero() and not x.is_zero():
                acc = acc + a * x
        out.append(acc)
    return out


def transpose(A):
    return [list(col) for col in zip(*A)]


def rref(rows, field):
    """Reduced row echelon form.

    Returns (reduced nonzero rows, pivot column indices).
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        sel = None
        for row in range(r, len(m)):
            if not m[row][col].is_zero():
                sel = row
                break
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = field.one() / m[r][col]
        m[r] = [c * inv for c in m[r]]
        for row in range(len(m)):
            if row != r and not m[row][col].is_zero():
                f = m[row][col]
                m[row] = [a - f * b for a, b in zip(m[row], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows, field) -> int:
    return len(rref(rows, field)[0])


def solve(A, b, field):
    """One exact solution of A x = b, or None (free variables set to zero)."""
    if not A:
        return [] if all(c.is_zero() for c in b) else None
    ncols = len(A[0])
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    red, pivots = rref(aug, field)
    if ncols in pivots:
        return None
    x = [field.zero()] * ncols
    for row, col in zip(red, pivots):
        x[col] = row[-1]
    return x


def nullspace(A, field):
    """Basis of the right nullspace of A (list of coordinate vectors)."""
    if not A:
        return []
    ncols = len(A[0])
    red, pivots = rref(A, field)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [field.zero()] * ncols
        v[free] = field.one()
        for row, col in zip(red, pivots):
            v[col] = -row[free]
        basis.append(v)
    return basis


def inverse(A, field):
    n = len(A)
    aug = [list(row) + ident_row
           for row, ident_row in zip(A, identity_matrix(field, n))]
    red, pivots = rref(aug, field)
    if len(red) < n or pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is not invertible")
    return [row[n:] for row in red]


def det(A, field):
    n = len(A)
    if n == 0:
        return field.one()
    m = [list(r) for r in A]
    sign_flip = False
    acc = field.one()
    for col in range(n):
        sel = None
        for row in range(col, n):
            if not m[row][col].is_zero():
                sel = row
                break
        if sel is None:
            return field.zero()
        if sel != col:
            m[col], m[sel] = m[sel], m[col]
            sign_flip = not sign_flip
        acc = acc * m[col][col]
        inv = field.one() / m[col][col]
        for row in range(col + 1, n):
            if not m[row][col].is_zero():
                f = m[row][col] * inv
                m[row] = [a - f * b for a, b in zip(m[row], m[col])]
    return -acc if sign_flip else acc


def express_in_rows(rows, pivots, v, field):
    """Coordinates of v in a row-reduced basis, or None if outside the span.

    rows/pivots must come from rref; reduced rows make this a direct read.
    """
    residual = list(v)
    coords = []
    for row, col in zip(rows, pivots):
        c = residual[col]
        coords.append(c)
        if not c.is_zero():
            residual = [a - c * b for a, b in zip(residual, row)]
    if any(not c.is_zero() for c in residual):
        return None
    return coords


def complement_indices(pivots, n: int) -> list[int]:
    """Standard basis indices completing a row space to the whole space."""
    pivot_set = set(pivots)
    return [i for i in range(n) if i not in pivot_set]
