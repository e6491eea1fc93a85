"""Exact linear algebra, generic over the package's scalar fields.

Everything here works for both scalar types (symbolic rational functions and
specialized Gaussian rationals): the only operations used are +, -, *, /,
``is_zero()`` and the ``zero()``/``one()`` classmethods. Matrices are plain
lists of row lists.

Pivoting contract for :func:`rref`: the pivot of each row is its
lowest-index nonzero coordinate, rows come out sorted by pivot column, pivots
are normalized to 1 and eliminated above and below, and zero rows are
dropped. The result is the unique reduced row echelon basis of the row span.
"""
from __future__ import annotations

from typing import Sequence, TypeVar

S = TypeVar("S")
Matrix = list  # list[list[S]]

__all__ = [
    "identity",
    "zeros",
    "mat_mul",
    "mat_add",
    "mat_sub",
    "mat_scale",
    "mat_is_zero",
    "nonzero_entries",
    "rref",
    "rank",
    "mat_inverse",
    "solve",
]


def identity(n: int, scalar_cls) -> Matrix:
    z, o = scalar_cls.zero(), scalar_cls.one()
    return [[o if i == j else z for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int, scalar_cls) -> Matrix:
    z = scalar_cls.zero()
    return [[z] * cols for _ in range(rows)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0])
    z = type(a[0][0]).zero()
    out = [[z] * m for _ in range(n)]
    for i in range(n):
        ai, oi = a[i], out[i]
        for t in range(k):
            f = ai[t]
            if f.is_zero():
                continue
            bt = b[t]
            for j in range(m):
                e = bt[j]
                if not e.is_zero():
                    oi[j] = oi[j] + f * e
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a: Matrix, c) -> Matrix:
    return [[x * c for x in row] for row in a]


def mat_is_zero(a: Matrix) -> bool:
    return all(x.is_zero() for row in a for x in row)


def nonzero_entries(a: Matrix) -> list[tuple[int, int, object]]:
    return [
        (i, j, x) for i, row in enumerate(a) for j, x in enumerate(row) if not x.is_zero()
    ]


def rref(rows: Sequence[Sequence[S]]) -> tuple[list[list[S]], list[int]]:
    """Reduced row echelon form of the given row vectors.

    Returns (rows, pivot_columns); zero rows are dropped.
    """
    work = [list(r) for r in rows]
    m = len(work)
    if m == 0:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = None
        for k in range(r, m):
            if not work[k][c].is_zero():
                pr = k
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        pv = work[r][c]
        work[r] = [x / pv for x in work[r]]
        prow = work[r]
        for k in range(m):
            if k != r:
                f = work[k][c]
                if not f.is_zero():
                    work[k] = [x - f * y for x, y in zip(work[k], prow)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return work[:r], pivots


def rank(rows: Sequence[Sequence[S]]) -> int:
    return len(rref(rows)[0])


def mat_inverse(a: Matrix) -> Matrix:
    n = len(a)
    cls = type(a[0][0])
    aug = [list(row) + ident_row for row, ident_row in zip(a, identity(n, cls))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) != n:
        raise ArithmeticError("matrix is singular")
    return [row[n:] for row in red]


def solve(a: Matrix, b: Sequence[S]) -> list[S] | None:
    """One exact solution x of a @ x = b, or None when inconsistent.

    Free variables are set to zero.
    """
    if not a:
        return [] if all(x.is_zero() for x in b) else None
    n = len(a[0])
    cls = type(a[0][0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    x = [cls.zero()] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return x
