"""Exact sparse linear algebra over Gaussian rationals."""

from __future__ import annotations

from .scalars import ONE, ZERO, Scalar

__all__ = ["solve_square", "row_echelon", "rank", "nullspace", "solve_least", "in_span"]


def row_echelon(rows: list[dict]) -> tuple[list[dict], list[int]]:
    """Reduced row echelon form of sparse rows ``{column: Scalar}``.

    Returns (reduced rows, pivot columns); pivot rows are normalized to 1.
    """
    pivots: dict[int, dict] = {}
    order: list[int] = []
    for r in rows:
        row = {k: v for k, v in r.items() if v}
        # eliminate existing pivots
        for p in order:
            c = row.get(p)
            if c:
                for k, v in pivots[p].items():
                    nv = row.get(k, ZERO) - c * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        if not row:
            continue
        p = min(row)
        inv = row[p].inverse()
        row = {k: v * inv for k, v in row.items()}
        # back-substitute into earlier pivot rows
        for q in order:
            c = pivots[q].get(p)
            if c:
                tgt = pivots[q]
                for k, v in row.items():
                    nv = tgt.get(k, ZERO) - c * v
                    if nv:
                        tgt[k] = nv
                    else:
                        tgt.pop(k, None)
        pivots[p] = row
        order.append(p)
    order.sort()
    return [pivots[p] for p in order], order


def rank(rows: list[dict]) -> int:
    return len(row_echelon(rows)[1])


def nullspace(rows: list[dict], ncols: int) -> list[dict]:
    """Basis of {v : row . v = 0 for all rows}, as sparse vectors."""
    red, piv = row_echelon(rows)
    pivset = set(piv)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = {free: ONE}
        for p, row in zip(piv, red):
            c = row.get(free)
            if c:
                vec[p] = -c
        basis.append(vec)
    return basis


def solve_square(M: list[list[Scalar]]) -> list[list[Scalar]]:
    """Inverse of a dense square matrix."""
    n = len(M)
    aug = [{**{j: v for j, v in enumerate(M[i]) if v}, n + i: ONE} for i in range(n)]
    red, piv = row_echelon(aug)
    if piv[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [[red[i].get(n + j, ZERO) for j in range(n)] for i in range(n)]


def solve_least(columns: list[dict], target: dict) -> list[Scalar] | None:
    """Find coefficients c with sum c_i columns[i] = target, or None."""
    keys = sorted({k for c in columns for k in c} | set(target))
    idx = {k: i for i, k in enumerate(keys)}
    m = len(columns)
    rows = []
    for k in keys:
        row = {}
        for i, col in enumerate(columns):
            v = col.get(k)
            if v:
                row[i] = v
        t = target.get(k)
        if t:
            row[m] = t
        if row:
            rows.append(row)
    red, piv = row_echelon(rows)
    if m in piv:
        return None
    sol = [ZERO] * m
    for p, row in zip(piv, red):
        sol[p] = row.get(m, ZERO)
    return sol


def in_span(columns: list[dict], target: dict) -> bool:
    return solve_least(columns, target) is not None
