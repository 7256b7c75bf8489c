"""Gaussian elimination over a finite field on lists of canonical integers."""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, Inconsistent, RankDeficient
from .gf import Field


def rref(F: Field, M) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    if F.has_tables and len(M):
        return _rref_tables(F, M)
    return _rref_scalar(F, M)


def _rref_tables(F: Field, M):
    A = np.array(M, dtype=np.int64)
    if A.ndim != 2 or A.shape[1] == 0:
        return A.tolist(), []
    add, mul, neg = F.add_table, F.mul_table, F.neg_table
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        nz = np.flatnonzero(A[r:, c])
        if not len(nz):
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = mul[F.inv(int(A[r, c])), A[r]]
        rows = np.flatnonzero(A[:, c])
        rows = rows[rows != r]
        if len(rows):
            # A[i] <- A[i] - A[i, c] * A[r]
            A[rows] = add[A[rows], neg[mul[A[rows, c][:, None], A[r][None, :]]]]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return A.tolist(), pivots


def _rref_scalar(F: Field, M):
    A = [[int(x) for x in row] for row in M]
    if not A:
        return A, []
    ncols = len(A[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = F.inv(A[r][c])
        A[r] = [F.mul(inv, x) for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A, pivots


def rank(F: Field, M) -> int:
    return len(rref(F, M)[1])


def nullspace(F: Field, M, ncols: int | None = None) -> list[list[int]]:
    """Basis of ``{x : M x = 0}`` as row vectors."""
    if not M:
        n = ncols or 0
        return [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    R, pivots = rref(F, M)
    n = len(R[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for row, pc in zip(R, pivots):
            v[pc] = F.neg(row[fc])
        basis.append(v)
    return basis


def solve(F: Field, A, b) -> list[int]:
    """The unique ``x`` with ``A x = b``.

    Raises :class:`RankDeficient` when the solution is not unique and
    :class:`Inconsistent` when none exists.
    """
    if len(A) != len(b):
        raise DimensionMismatch("right-hand side length differs from row count")
    if not A:
        raise RankDeficient("empty system")
    n = len(A[0])
    R, pivots = rref(F, [list(row) + [int(bi)] for row, bi in zip(A, b)])
    if n in pivots:
        raise Inconsistent("system has no solution")
    if len(pivots) < n:
        raise RankDeficient(f"rank {len(pivots)} < {n} unknowns")
    return [R[i][n] for i in range(n)]


def matvec(F: Field, M, x) -> list[int]:
    out = []
    for row in M:
        acc = 0
        for a, b in zip(row, x):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out


def vecmat(F: Field, x, M) -> list[int]:
    """Row vector times matrix."""
    if not M:
        return []
    out = [0] * len(M[0])
    for a, row in zip(x, M):
        if a:
            out = [F.add(o, F.mul(a, m)) for o, m in zip(out, row)]
    return out
