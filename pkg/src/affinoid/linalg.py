"""Exact linear algebra over the rationals.

Row reduction runs with full pivoting on Fraction entries, so results are
exact and deterministic.  linsolve reports an inconsistent system as a
NoSolution value rather than raising; callers branch on the type.  Matrix
helpers (matmul, det, adjugate) are written against the ring operations
+, -, * only, so they work for Fraction and Poly entries alike.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, TypeVar

Row = list[Fraction]
T = TypeVar("T")


def _copy(mat: Sequence[Sequence[Fraction]]) -> list[Row]:
    return [[Fraction(x) for x in row] for row in mat]


def rref(mat: Sequence[Sequence[Fraction]]) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form and pivot column indices."""
    m = _copy(mat)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def matrix_rank(mat: Sequence[Sequence[Fraction]]) -> int:
    if not mat or not mat[0]:
        return 0
    return len(rref(mat)[1])


@dataclass(frozen=True)
class Solution:
    """A consistent linear system: one particular solution plus a basis of
    the homogeneous kernel (free variable set to 1, pivots back-filled)."""
    rank: int
    particular: tuple[Fraction, ...]
    kernel: tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class NoSolution:
    """An inconsistent system.  A value, not an error."""
    rank: int


def kernel_basis(mat: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Basis of {x : mat x = 0}."""
    if not mat:
        raise ValueError("kernel_basis needs at least one row to fix the width")
    cols = len(mat[0])
    if cols == 0:
        return []
    red, pivots = rref(mat)
    free = [c for c in range(cols) if c not in pivots]
    basis: list[list[Fraction]] = []
    for fc in free:
        vec = [Fraction(0)] * cols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -red[r][fc]
        basis.append(vec)
    return basis


def linsolve(mat: Sequence[Sequence[Fraction]],
             rhs: Sequence[Fraction]) -> Solution | NoSolution:
    """Solve mat x = rhs exactly."""
    rows = len(mat)
    if rows != len(rhs):
        raise ValueError("matrix and right-hand side disagree on row count")
    cols = len(mat[0]) if rows else 0
    aug = [list(map(Fraction, row)) + [Fraction(v)] for row, v in zip(mat, rhs)]
    red, pivots = rref(aug) if rows else ([], [])
    if cols in pivots:
        return NoSolution(rank=len(pivots) - 1)
    rank = len(pivots)
    particular = [Fraction(0)] * cols
    for r, pc in enumerate(pivots):
        particular[pc] = red[r][cols]
    if cols:
        kern = kernel_basis([row[:cols] for row in red] or [[Fraction(0)] * cols])
    else:
        kern = []
    return Solution(rank=rank,
                    particular=tuple(particular),
                    kernel=tuple(tuple(v) for v in kern))


# -- ring-generic matrix helpers ----------------------------------------------

def transpose(mat: Sequence[Sequence[T]]) -> list[list[T]]:
    if not mat:
        return []
    return [list(col) for col in zip(*mat)]


def mat_mul(a: Sequence[Sequence[T]], b: Sequence[Sequence[T]]) -> list[list[T]]:
    if a and b and len(a[0]) != len(b):
        raise ValueError("inner dimensions disagree")
    if not a or not b or not b[0]:
        return [[] for _ in a]
    out = []
    for row in a:
        new = []
        for j in range(len(b[0])):
            acc = row[0] * b[0][j]
            for k in range(1, len(b)):
                acc = acc + row[k] * b[k][j]
            new.append(acc)
        out.append(new)
    return out


def mat_vec(a: Sequence[Sequence[T]], v: Sequence[T]) -> list[T]:
    if a and len(a[0]) != len(v):
        raise ValueError("dimensions disagree")
    out = []
    for row in a:
        acc = row[0] * v[0]
        for k in range(1, len(v)):
            acc = acc + row[k] * v[k]
        out.append(acc)
    return out


def det(mat: Sequence[Sequence[T]], zero: T, one: T) -> T:
    """Determinant by Laplace expansion; fine at the sizes used here."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return one
    if n == 1:
        return mat[0][0]
    if n == 2:
        return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    total = zero
    rest = [list(row) for row in mat[1:]]
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in rest]
        sub = det(minor, zero, one)
        term = mat[0][j] * sub
        total = total + term if j % 2 == 0 else total - term
    return total


def adjugate(mat: Sequence[Sequence[T]], zero: T, one: T) -> list[list[T]]:
    """adj(M) with M @ adj(M) = det(M) * I."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("adjugate of a non-square matrix")
    if n == 0:
        return []
    rows = [list(row) for row in mat]
    adj = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(rows) if k != i]
            c = det(minor, zero, one)
            adj[j][i] = c if (i + j) % 2 == 0 else zero - c
    return adj
