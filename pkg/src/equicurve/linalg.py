"""Exact Gaussian elimination over any field-like coefficient type.

Entries must support +, -, *, /, bool() (zero test).  Used for the
bounded-degree subalgebra searches and for small solves over Q(zeta_m).
"""
from __future__ import annotations


def solve_linear(rows: list[list], rhs: list):
    """Solve rows @ x = rhs exactly.

    Returns the canonical solution with all free variables set to zero, or
    None when the system is inconsistent.  Column order is the input order,
    so the result is deterministic.
    """
    n = len(rows)
    if n == 0:
        return []
    ncol = len(rows[0])
    mat = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    pivots = []
    r = 0
    for col in range(ncol):
        sel = next((i for i in range(r, n) if mat[i][col]), None)
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = mat[r][col]
        mat[r] = [v / inv for v in mat[r]]
        for i in range(n):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == n:
            break
    for i in range(r, n):
        if mat[i][ncol]:
            return None
    zero = rhs[0] - rhs[0] if rhs else None
    if zero is None:
        zero = rows[0][0] - rows[0][0]
    out = [zero] * ncol
    for i, col in enumerate(pivots):
        out[col] = mat[i][ncol]
    return out
