"""Exact matrices over ``Q(parameters)``.

Matrices are lists of rows; entries are :class:`RatFunc`.  Determinants and
ranks are computed by Bareiss fraction-free elimination on a polynomial
lift (each row multiplied by the lcm of its denominators), so the only
divisions are exact polynomial divisions.
"""

from __future__ import annotations

from .multipoly import MultiPoly, poly_gcd
from .ratfunc import RatFunc, ratfunc_reduce


class NotSquare(ValueError):
    pass


def _shape(m) -> tuple:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if any(len(r) != cols for r in m):
        raise ValueError("ragged matrix")
    return rows, cols


def _vars_of(m):
    for row in m:
        for f in row:
            return f.vars
    return None


def _lcm(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    if a.is_constant():
        return b
    if b.is_constant():
        return a
    return a * b.divexact(poly_gcd(a, b))


def _lift_rows(m):
    """Polynomial rows and the per-row multipliers that produced them."""
    lifted, mults = [], []
    for row in m:
        den = MultiPoly.constant(row[0].vars, 1)
        for f in row:
            den = _lcm(den, f.den)
        lifted.append([f.num * den.divexact(f.den) if not f.num.is_zero() else f.num for f in row])
        mults.append(den)
    return lifted, mults


def _bareiss(rows: list):
    """In-place fraction-free elimination; returns ``(rank, sign, pivots)``.

    For a square nonsingular input, the last pivot is the determinant
    (times ``sign``).
    """
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    prev = None
    sign = 1
    r = 0
    pivots = []
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if not rows[i][c].is_zero()), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
            sign = -sign
        piv = rows[r][c]
        for i in range(r + 1, nr):
            a = rows[i][c]
            for j in range(c + 1, nc):
                v = piv * rows[i][j] - a * rows[r][j]
                rows[i][j] = v if prev is None else v.divexact(prev)
            rows[i][c] = MultiPoly.zero(piv.vars)
        prev = piv
        pivots.append((r, c))
        r += 1
    return r, sign, pivots


def det(m) -> RatFunc:
    """Exact determinant (Bareiss on the polynomial lift)."""
    n, nc = _shape(m)
    if n != nc:
        raise NotSquare(f"determinant of a {n}x{nc} matrix")
    if n == 0:
        raise ValueError("empty matrix")
    vars = _vars_of(m)
    rows, mults = _lift_rows(m)
    rank, sign, _ = _bareiss(rows)
    if rank < n:
        return RatFunc.constant(vars, 0)
    num = rows[n - 1][n - 1] * sign
    den = MultiPoly.constant(vars, 1)
    for d in mults:
        den = den * d
    return ratfunc_reduce(num, den)


def det_cofactor(m) -> RatFunc:
    """Determinant by Laplace expansion along the first row (small matrices only)."""
    n, nc = _shape(m)
    if n != nc:
        raise NotSquare(f"determinant of a {n}x{nc} matrix")
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = RatFunc.constant(_vars_of(m), 0)
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * det_cofactor(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def rank(m) -> int:
    """Generic rank: a minor counts as nonzero iff it is a nonzero rational function."""
    nr, nc = _shape(m)
    if nr == 0 or nc == 0:
        return 0
    rows, _ = _lift_rows(m)
    r, _, _ = _bareiss(rows)
    return r


def columns_to_matrix(vectors) -> list:
    """Matrix whose columns are the given coordinate vectors."""
    if not vectors:
        return []
    n = len(vectors[0])
    return [[v[i] for v in vectors] for i in range(n)]


def identity(vars, n: int) -> list:
    one, zero = RatFunc.constant(vars, 1), RatFunc.constant(vars, 0)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def matmul(a, b) -> list:
    n, k = _shape(a)
    k2, m = _shape(b)
    if k != k2:
        raise ValueError(f"cannot multiply {n}x{k} by {k2}x{m}")
    zero = RatFunc.constant(_vars_of(a), 0)
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = zero
            for t in range(k):
                if not a[i][t].is_zero() and not b[t][j].is_zero():
                    acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def matvec(a, v) -> list:
    return [row[0] for row in matmul(a, [[x] for x in v])]


def matadd(a, b) -> list:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matsub(a, b) -> list:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matdiff(a, name: str) -> list:
    return [[x.diff(name) for x in row] for row in a]


def is_zero_matrix(a) -> bool:
    return all(x.is_zero() for row in a for x in row)
