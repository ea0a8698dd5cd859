"""Exact linear algebra over Q (fractions.Fraction) and over prime fields F_p.

Matrices are lists of rows; a matrix with zero rows is [] and a matrix with zero
columns is [[], [], ...].  Shapes are passed explicitly where they cannot be
inferred.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Mat = List[List[Fraction]]
Vec = List[Fraction]

Q0 = Fraction(0)
Q1 = Fraction(1)


def zeros(m: int, n: int) -> Mat:
    return [[Q0] * n for _ in range(m)]


def identity(n: int) -> Mat:
    return [[Q1 if i == j else Q0 for j in range(n)] for i in range(n)]


def shape(a: Mat, ncols: Optional[int] = None) -> Tuple[int, int]:
    if a:
        return len(a), len(a[0])
    return 0, (0 if ncols is None else ncols)


def mat_from(rows: Sequence[Sequence]) -> Mat:
    return [[Fraction(x) for x in row] for row in rows]


def mat_neg(a: Mat) -> Mat:
    return [[-x for x in row] for row in a]


def mat_add(a: Mat, b: Mat) -> Mat:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Mat, b: Mat) -> Mat:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c: Fraction, a: Mat) -> Mat:
    return [[c * x for x in row] for row in a]


def mat_mul(a: Mat, b: Mat, *, inner: Optional[int] = None) -> Mat:
    """a @ b where a is (m, k) and b is (k, n); `inner` disambiguates k = 0."""
    m = len(a)
    k = len(a[0]) if a else (len(b) if b else (inner or 0))
    n = len(b[0]) if b else 0
    if k != len(b) and b:
        raise ValueError("shape mismatch in mat_mul")
    out = zeros(m, n)
    for i in range(m):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c:
                bt = b[t]
                for j in range(n):
                    if bt[j]:
                        oi[j] += c * bt[j]
    return out


def mat_vec(a: Mat, v: Vec) -> Vec:
    return [sum((c * x for c, x in zip(row, v)), Q0) for row in a]


def transpose(a: Mat, ncols: Optional[int] = None) -> Mat:
    m, n = shape(a, ncols)
    return [[a[i][j] for i in range(m)] for j in range(n)]


def hstack(blocks: Sequence[Mat], nrows: int) -> Mat:
    out = [[] for _ in range(nrows)]
    for b in blocks:
        for i in range(nrows):
            out[i] = out[i] + list(b[i] if b else [])
    return out


def vstack(blocks: Sequence[Mat]) -> Mat:
    out: Mat = []
    for b in blocks:
        out.extend([list(r) for r in b])
    return out


def block_diag(blocks: Sequence[Tuple[Mat, int, int]]) -> Mat:
    """Blocks given as (matrix, nrows, ncols); zero-sized blocks allowed."""
    total_r = sum(r for _, r, _ in blocks)
    total_c = sum(c for _, _, c in blocks)
    out = zeros(total_r, total_c)
    r0 = c0 = 0
    for b, r, c in blocks:
        for i in range(r):
            for j in range(c):
                out[r0 + i][c0 + j] = b[i][j]
        r0 += r
        c0 += c
    return out


def is_zero(a: Mat) -> bool:
    return all(not x for row in a for x in row)


def rref(a: Mat, ncols: Optional[int] = None) -> Tuple[Mat, List[int]]:
    """Reduced row echelon form; returns (R, pivot_columns)."""
    m, n = shape(a, ncols)
    r = [list(row) for row in a]
    pivots: List[int] = []
    row = 0
    for col in range(n):
        sel = None
        for i in range(row, m):
            if r[i][col]:
                sel = i
                break
        if sel is None:
            continue
        r[row], r[sel] = r[sel], r[row]
        inv = Q1 / r[row][col]
        r[row] = [x * inv for x in r[row]]
        for i in range(m):
            if i != row and r[i][col]:
                c = r[i][col]
                r[i] = [x - c * y for x, y in zip(r[i], r[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    return r, pivots


def rank(a: Mat, ncols: Optional[int] = None) -> int:
    return len(rref(a, ncols)[1])


def nullspace(a: Mat, ncols: int) -> List[Vec]:
    """Basis of {v : a v = 0}, one vector per free column."""
    r, pivots = rref(a, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis: List[Vec] = []
    for f in free:
        v = [Q0] * ncols
        v[f] = Q1
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def solve(a: Mat, b: Vec, ncols: int) -> Optional[Vec]:
    """One solution of a x = b, or None."""
    m = len(a)
    aug = [list(a[i]) + [b[i]] for i in range(m)]
    r, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Q0] * ncols
    for i, p in enumerate(pivots):
        x[p] = r[i][ncols]
    return x


def inverse(a: Mat) -> Optional[Mat]:
    n = len(a)
    if n == 0:
        return []
    if len(a[0]) != n:
        return None
    aug = [list(a[i]) + identity(n)[i] for i in range(n)]
    r, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in r[:n]]


def column_space_pivots(a: Mat, ncols: int) -> List[int]:
    """Indices of a maximal independent set of columns."""
    return rref(a, ncols)[1]


# ---------------------------------------------------------------------------
# F_p arithmetic (matrices of ints reduced mod p)

def fp_rref(a: List[List[int]], ncols: int, p: int) -> Tuple[List[List[int]], List[int]]:
    m = len(a)
    r = [[x % p for x in row] for row in a]
    pivots: List[int] = []
    row = 0
    for col in range(ncols):
        sel = None
        for i in range(row, m):
            if r[i][col]:
                sel = i
                break
        if sel is None:
            continue
        r[row], r[sel] = r[sel], r[row]
        inv = pow(r[row][col], p - 2, p)
        r[row] = [(x * inv) % p for x in r[row]]
        for i in range(m):
            if i != row and r[i][col]:
                c = r[i][col]
                r[i] = [(x - c * y) % p for x, y in zip(r[i], r[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    return r, pivots


def fp_rank(a: List[List[int]], ncols: int, p: int) -> int:
    return len(fp_rref(a, ncols, p)[1])


def fp_nullity(a: List[List[int]], ncols: int, p: int) -> int:
    return ncols - fp_rank(a, ncols, p)


def fp_mat_mul(a: List[List[int]], b: List[List[int]], p: int) -> List[List[int]]:
    m = len(a)
    k = len(a[0]) if a else 0
    n = len(b[0]) if b else 0
    out = [[0] * n for _ in range(m)]
    for i in range(m):
        for t in range(k):
            c = a[i][t]
            if c:
                for j in range(n):
                    out[i][j] = (out[i][j] + c * b[t][j]) % p
    return out
