"""Exact dense linear algebra over a :class:`~curvereg.polyring.Field`."""

from __future__ import annotations

from typing import Sequence

from .polyring import Field


def rref(rows: Sequence[Sequence], field: Field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    norm = field.normalizer()
    mat = [[field(x) for x in r] for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [norm(x * inv) for x in mat[r]]
        prow = mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                row = mat[i]
                mat[i] = [norm(a - f * b) for a, b in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Sequence[Sequence], field: Field) -> int:
    """Rank by forward elimination (no back substitution)."""
    norm = field.normalizer()
    mat = [[field(x) for x in r] for r in rows if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = field.inv(mat[r][c])
        prow = [norm(x * inv) for x in mat[r]]
        mat[r] = prow
        for i in range(r + 1, len(mat)):
            f = mat[i][c]
            if f:
                mat[i] = [norm(a - f * b) for a, b in zip(mat[i], prow)]
        r += 1
        if r == len(mat):
            break
    return r


def nullspace(rows: Sequence[Sequence], ncols: int, field: Field) -> list[list]:
    """Basis of ``{v : rows @ v = 0}``."""
    red, pivots = rref(rows, field) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    norm = field.normalizer()
    basis = []
    for fc in free:
        v = [field(0)] * ncols
        v[fc] = field(1)
        for r, pc in zip(red, pivots):
            v[pc] = norm(-r[fc])
        basis.append(v)
    return basis


def left_inverse(cols: Sequence[Sequence], field: Field) -> list[list]:
    """For a matrix ``A`` given by its columns (independent), return ``B`` with ``B A = I``.

    ``A`` is ``m x k`` (``k`` columns of length ``m``); ``B`` is ``k x m``.
    """
    k = len(cols)
    m = len(cols[0])
    # Solve A^T-based system: augment rows of A (m x k) with identity (m x m)
    aug = [[cols[j][i] for j in range(k)] + [1 if t == i else 0 for t in range(m)] for i in range(m)]
    red, pivots = rref(aug, field)
    if pivots[:k] != list(range(k)):
        raise ValueError("columns are linearly dependent")
    # rows 0..k-1 of red: e_j^T = (row j of red)[k:] @ A
    return [list(red[j][k:]) for j in range(k)]


def solve_in_span(cols: Sequence[Sequence], target: Sequence, field: Field) -> list | None:
    """Coefficients ``c`` with ``sum c_j cols[j] = target``, or None."""
    k = len(cols)
    m = len(target)
    aug = [[cols[j][i] for j in range(k)] + [target[i]] for i in range(m)]
    red, pivots = rref(aug, field)
    if k in pivots:
        return None
    sol = [field(0)] * k
    for r, pc in zip(red, pivots):
        sol[pc] = r[k]
    return sol
