"""Exact Gaussian elimination over the rationals.

Matrices are lists of rows of Fractions.  Pivots are chosen by smallest
combined bit-length of numerator and denominator (ties by row index), which
keeps intermediate coefficients small; the results are exact either way, and
the echelon form is deterministic for a fixed input.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .scalars import ONE, ZERO, rat

Matrix = List[List[Fraction]]
Vector = List[Fraction]


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def mat(rows: Sequence[Sequence]) -> Matrix:
    return [[rat(x) for x in row] for row in rows]


def mat_copy(a: Matrix) -> Matrix:
    return [row[:] for row in a]


def transpose(a: Matrix) -> Matrix:
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0])} * {len(b)}x{len(b[0])}")
    if not a or not b:
        return zeros(len(a), len(b[0]) if b else 0)
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col) if x and y), ZERO) for col in bt] for row in a]


def mat_vec(a: Matrix, v: Vector) -> Vector:
    if a and len(a[0]) != len(v):
        raise ValueError("shape mismatch in mat_vec")
    return [sum((x * y for x, y in zip(row, v) if x and y), ZERO) for row in a]


def _pivot_weight(q: Fraction) -> int:
    return abs(q.numerator).bit_length() + q.denominator.bit_length()


def rref(a: Matrix) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form.  Returns (R, pivot column indices)."""
    m = mat_copy(a)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        best = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                w = _pivot_weight(m[i][c])
                if best is None or w < best[0]:
                    best = (w, i)
        if best is None:
            continue
        i = best[1]
        if i != r:
            m[r], m[i] = m[i], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Matrix) -> int:
    return len(rref(a)[1])


def nullspace(a: Matrix, ncols: Optional[int] = None) -> List[Vector]:
    """Basis of the kernel of a (acting on column vectors), echelon-ordered.

    The basis vector attached to free column j has entry 1 at j and zeros at
    the other free columns; vectors are returned by increasing free column.
    Pass ncols explicitly when a may have zero rows.
    """
    if ncols is None:
        if not a:
            raise ValueError("nullspace of empty matrix needs explicit ncols")
        ncols = len(a[0])
    if not a:
        return [unit_vector(ncols, j) for j in range(ncols)]
    r, pivots = rref(a)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    basis = []
    for j in free:
        v = [ZERO] * ncols
        v[j] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -r[i][j]
        basis.append(v)
    return basis


def unit_vector(n: int, j: int) -> Vector:
    v = [ZERO] * n
    v[j] = ONE
    return v


def solve(a: Matrix, b: Vector) -> Optional[Vector]:
    """One solution of a x = b, or None if inconsistent (free variables -> 0)."""
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    if len(b) != nrows:
        raise ValueError("rhs length mismatch")
    aug = [a[i][:] + [b[i]] for i in range(nrows)]
    if not aug:
        return [ZERO] * ncols
    r, pivots = rref(aug)
    for i, pc in enumerate(pivots):
        if pc == ncols:
            return None  # pivot in the augmented column: inconsistent
    x = [ZERO] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = r[i][ncols]
    return x


def solve_affine(a: Matrix, b: Vector, ncols: Optional[int] = None) -> Tuple[Optional[Vector], List[Vector]]:
    """Full solution set of a x = b as (particular, kernel basis)."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    if not a:
        return [ZERO] * ncols, [unit_vector(ncols, j) for j in range(ncols)]
    part = solve(a, b)
    if part is None:
        return None, []
    return part, nullspace(a, ncols)


def column_space_basis(a: Matrix) -> List[Vector]:
    """Columns of a forming a basis of its column space (pivot columns of rref)."""
    if not a:
        return []
    _, pivots = rref(a)
    return [[row[j] for row in a] for j in pivots]


def columns_matrix(cols: Sequence[Vector], nrows: int) -> Matrix:
    """Assemble column vectors into a matrix."""
    m = zeros(nrows, len(cols))
    for j, col in enumerate(cols):
        if len(col) != nrows:
            raise ValueError("column length mismatch")
        for i, x in enumerate(col):
            m[i][j] = x
    return m


def extend_basis(base: Sequence[Vector], candidates: Sequence[Vector], nrows: int) -> List[int]:
    """Indices of candidates that extend span(base) to span(base + candidates).

    Computed from one rref of [base | candidates]: a candidate column is kept
    iff it is a pivot column.
    """
    allcols = list(base) + list(candidates)
    if not allcols:
        return []
    m = columns_matrix(allcols, nrows)
    _, pivots = rref(m)
    nb = len(base)
    return [p - nb for p in pivots if p >= nb]


def in_span(vectors: Sequence[Vector], v: Vector, nrows: int) -> Optional[Vector]:
    """Coordinates of v in span(vectors), or None."""
    return solve(columns_matrix(vectors, nrows), v)
