"""Small dense exact linear algebra (Gaussian elimination over Q or Q(sqrt(-3)))."""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .scalar import QQ, Scalar, as_scalar, scalar_inverse

Matrix = List[List[Scalar]]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[as_scalar(c) for c in row] for row in rows]


def rref(rows: Sequence[Sequence]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    a = to_matrix(rows)
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = scalar_inverse(a[r][col])
        a[r] = [v * inv for v in a[r]]
        for i in range(nrows):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return a, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis of ``{v : rows * v = 0}`` (one vector per free column)."""
    if not rows:
        return [[QQ(1) if i == j else QQ(0) for i in range(ncols or 0)] for j in range(ncols or 0)]
    red, pivots = rref(rows)
    n = len(red[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [QQ(0)] * n
        v[f] = QQ(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][f]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence], b: Sequence) -> List[Scalar]:
    """Unique solution of a square non-singular system ``a x = b``."""
    n = len(a)
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular or inconsistent system")
    return [red[i][n] for i in range(n)]


def det(a: Sequence[Sequence]) -> Scalar:
    m = to_matrix(a)
    n = len(m)
    result: Scalar = QQ(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            return QQ(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            result = -result
        p = m[col][col]
        result = result * p
        inv = scalar_inverse(p)
        for i in range(col + 1, n):
            if m[i][col] != 0:
                f = m[i][col] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return result


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), QQ(0)) for j in range(len(b[0]))]
            for i in range(len(a))]


def inverse(a: Sequence[Sequence]) -> Matrix:
    n = len(a)
    aug = [list(row) + [QQ(1) if i == j else QQ(0) for j in range(n)] for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def identity(n: int) -> Matrix:
    return [[QQ(1) if i == j else QQ(0) for j in range(n)] for i in range(n)]
