"""Exact linear algebra over Q with Fraction entries.

Matrices are lists of row lists; functions never mutate their arguments.
Reduced row echelon form is the canonical representative used for subspace
equality throughout the package.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SingularMatrix

ZERO = Fraction(0)
ONE = Fraction(1)


def mat_identity(n: int) -> list:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def mat_copy(a: list) -> list:
    return [list(row) for row in a]


def mat_mul(a: list, b: list) -> list:
    n, m, p = len(a), len(b), len(b[0])
    out = [[ZERO] * p for _ in range(n)]
    for i in range(n):
        row = a[i]
        out_i = out[i]
        for k in range(m):
            c = row[k]
            if c:
                bk = b[k]
                for j in range(p):
                    if bk[j]:
                        out_i[j] += c * bk[j]
    return out


def mat_vec(a: list, v) -> tuple:
    return tuple(sum((c * x for c, x in zip(row, v) if c and x), ZERO) for row in a)


def mat_trace(a: list) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), ZERO)


def rref(rows: list) -> tuple[list, list]:
    """Reduced row echelon form.

    Returns (nonzero rows, pivot column indices); rows come out with leading
    coefficient 1 and cleared pivot columns, so equal row spaces give equal
    outputs.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(work)):
            if work[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        lead = work[r][col]
        if lead != 1:
            work[r] = [x / lead for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    work = [row for row in work if any(row)]
    return work, pivots


def rank(rows: list) -> int:
    return len(rref(rows)[0])


def reduce_against(basis_rows: list, pivots: list, v) -> tuple:
    """Residual of v after eliminating the pivot columns of an rref basis."""
    res = list(v)
    for row, p in zip(basis_rows, pivots):
        c = res[p]
        if c:
            for j in range(len(res)):
                if row[j]:
                    res[j] -= c * row[j]
    return tuple(res)


def mat_inverse(a: list) -> list:
    n = len(a)
    work = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot_row = None
        for i in range(col, n):
            if work[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            raise SingularMatrix("matrix is singular over Q")
        work[col], work[pivot_row] = work[pivot_row], work[col]
        lead = work[col][col]
        if lead != 1:
            work[col] = [x / lead for x in work[col]]
        for i in range(n):
            if i != col and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return [row[n:] for row in work]


def mat_det(a: list) -> Fraction:
    n = len(a)
    work = mat_copy(a)
    det = ONE
    for col in range(n):
        pivot_row = None
        for i in range(col, n):
            if work[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            return ZERO
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            det = -det
        lead = work[col][col]
        det *= lead
        inv = 1 / lead
        for i in range(col + 1, n):
            if work[i][col]:
                f = work[i][col] * inv
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return det


def nullspace(rows: list) -> list:
    """Basis of {v : rows @ v = 0}, canonical via rref free columns."""
    if not rows:
        return []
    ncols = len(rows[0])
    basis_rows, pivots = rref(rows)
    pivot_set = set(pivots)
    out = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for row, p in zip(basis_rows, pivots):
            if row[free]:
                v[p] = -row[free]
        out.append(tuple(v))
    return out


def char_poly(a: list) -> dict:
    """Monic characteristic polynomial det(x*I - a) as {exponent: Fraction}.

    Computed by the Faddeev-LeVerrier recursion; exact over Q.
    """
    n = len(a)
    coeffs = {n: ONE}
    m = mat_copy(a)
    c = ONE
    for k in range(1, n + 1):
        if k > 1:
            for i in range(n):
                m[i][i] += c
            m = mat_mul(a, m)
        c = -mat_trace(m) / k
        if c:
            coeffs[n - k] = c
    return coeffs
