"""Exact linear algebra over the integers and rationals.

Matrices are plain sequences of sequences of Python ints (arbitrary
precision, so nothing can overflow silently); functions return tuples of
tuples.  Rationals are fractions.Fraction.  All pivot strategies are fixed
so every result is reproducible byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


Mat = tuple  # tuple[tuple[int, ...], ...]


def freeze(mat) -> Mat:
    return tuple(tuple(int(x) for x in row) for row in mat)


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(mat) -> Mat:
    return tuple(zip(*[tuple(r) for r in mat])) if mat else ()


def mat_mul(a, b) -> Mat:
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a, v) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_add(a, b) -> Mat:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a, c) -> Mat:
    return tuple(tuple(c * x for x in row) for row in a)


def is_square(mat) -> bool:
    return all(len(row) == len(mat) for row in mat)


def is_symmetric(mat) -> bool:
    if not is_square(mat):
        return False
    n = len(mat)
    return all(mat[i][j] == mat[j][i] for i in range(n) for j in range(i + 1, n))


def bareiss_det(mat) -> int:
    """Fraction-free determinant; exact for any integer matrix."""
    n = len(mat)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SNFResult:
    """U @ mat @ V = D with U, V unimodular; diag holds the diagonal of D."""

    diag: tuple
    U: Mat
    V: Mat
    U_inv: Mat
    V_inv: Mat
    rows: int
    cols: int

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d != 0)

    @property
    def D(self) -> Mat:
        return tuple(
            tuple(self.diag[i] if i == j and i < len(self.diag) else 0 for j in range(self.cols))
            for i in range(self.rows)
        )

    @property
    def invariant_factors(self) -> tuple:
        return tuple(d for d in self.diag if d not in (0, 1))


def snf(mat) -> SNFResult:
    """Smith normal form with transforms and their exact inverses.

    Pivot strategy: the minimal-|entry| element of the remaining block,
    ties broken by (row, col).  The divisibility chain d_i | d_{i+1} is
    enforced, diagonal entries are non-negative.
    """
    a = [list(map(int, row)) for row in mat]
    r = len(a)
    c = len(a[0]) if r else 0
    if any(len(row) != c for row in a):
        raise ValueError("ragged matrix")
    u = [list(row) for row in identity(r)]
    ui = [list(row) for row in identity(r)]
    v = [list(row) for row in identity(c)]
    vi = [list(row) for row in identity(c)]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        for k in range(r):
            ui[k][i], ui[k][j] = ui[k][j], ui[k][i]

    def row_sub(i, t, q):
        # row_i -= q * row_t
        ai, at = a[i], a[t]
        for k in range(c):
            ai[k] -= q * at[k]
        uu, ut = u[i], u[t]
        for k in range(r):
            uu[k] -= q * ut[k]
        for k in range(r):
            ui[k][t] += q * ui[k][i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        for k in range(r):
            ui[k][i] = -ui[k][i]

    def col_swap(i, j):
        for k in range(r):
            a[k][i], a[k][j] = a[k][j], a[k][i]
        for k in range(c):
            v[k][i], v[k][j] = v[k][j], v[k][i]
        vi[i], vi[j] = vi[j], vi[i]

    def col_sub(j, t, q):
        # col_j -= q * col_t
        for k in range(r):
            a[k][j] -= q * a[k][t]
        for k in range(c):
            v[k][j] -= q * v[k][t]
        vt, vj = vi[t], vi[j]
        for k in range(c):
            vt[k] += q * vj[k]

    t = 0
    limit = min(r, c)
    while t < limit:
        piv = None
        for i in range(t, r):
            for j in range(t, c):
                x = a[i][j]
                if x and (piv is None or abs(x) < piv[0]):
                    piv = (abs(x), i, j)
        if piv is None:
            break
        _, pi, pj = piv
        if pi != t:
            row_swap(t, pi)
        if pj != t:
            col_swap(t, pj)

        dirty = False
        for i in range(t + 1, r):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                if q:
                    row_sub(i, t, q)
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, c):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                if q:
                    col_sub(j, t, q)
                if a[t][j]:
                    dirty = True
        if dirty:
            continue

        bad = next(
            ((i, j) for i in range(t + 1, r) for j in range(t + 1, c) if a[i][j] % a[t][t]),
            None,
        )
        if bad is not None:
            row_sub(t, bad[0], -1)  # row_t += row_bad
            continue
        if a[t][t] < 0:
            row_neg(t)
        t += 1

    diag = tuple(a[i][i] for i in range(limit))
    return SNFResult(diag, freeze(u), freeze(v), freeze(ui), freeze(vi), r, c)


def smith_normal_form(mat):
    """Return (D, U, V) with U @ mat @ V = D diagonal, d_i | d_{i+1}."""
    res = snf(mat)
    return res.D, res.U, res.V


def kernel_basis(mat) -> tuple:
    """Basis of {x : mat @ x = 0} over Z, as rows.  Always saturated."""
    res = snf(mat)
    cols = len(res.V)
    vt = transpose(res.V)
    rows = [vt[j] for j in range(res.rank, cols)]
    return hnf_rows(rows)


def row_saturation(rows_in, ambient_dim=None) -> tuple:
    """Saturated Z-span of the given rows: (span_Q intersect Z^n)."""
    rows = [tuple(r) for r in rows_in]
    if not rows:
        return ()
    res = snf(rows)
    basis = [res.V_inv[i] for i in range(res.rank)]
    return hnf_rows(basis)


def row_span_index(rows) -> int:
    """Index of the row span inside its saturation (0 if rows dependent)."""
    rows = [tuple(r) for r in rows]
    if not rows:
        return 1
    res = snf(rows)
    if res.rank < len(rows):
        return 0
    prod = 1
    for d in res.diag:
        prod *= d
    return abs(prod)


def hnf_rows(rows_in) -> tuple:
    """Canonical row Hermite form: positive pivots, reduced above, no zero rows."""
    rows = [list(map(int, r)) for r in rows_in if any(r)]
    if not rows:
        return ()
    n = len(rows[0])
    m = len(rows)
    r = 0
    for j in range(n):
        while True:
            nz = [i for i in range(r, m) if rows[i][j]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(rows[i][j]), i))
            rows[r], rows[i0] = rows[i0], rows[r]
            done = True
            for i in range(r + 1, m):
                if rows[i][j]:
                    q = rows[i][j] // rows[r][j]
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                    if rows[i][j]:
                        done = False
            if done:
                break
        if any(rows[i][j] for i in range(r, m)):
            if rows[r][j] < 0:
                rows[r] = [-x for x in rows[r]]
            for i in range(r):
                q = rows[i][j] // rows[r][j]
                if q:
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
            r += 1
            if r == m:
                break
    return tuple(tuple(row) for row in rows[:r] if any(row))


def span_equal(rows_a, rows_b) -> bool:
    return hnf_rows(rows_a) == hnf_rows(rows_b)


def in_row_span(vec, rows) -> bool:
    """Membership of vec in the Z-span of rows."""
    h = hnf_rows(rows)
    work = list(map(int, vec))
    for row in h:
        j = next(k for k, x in enumerate(row) if x)
        if work[j] % row[j]:
            return False
        q = work[j] // row[j]
        if q:
            work = [x - q * y for x, y in zip(work, row)]
    return not any(work)


def rank_of(mat) -> int:
    return snf(mat).rank if mat else 0


def inverse_frac(mat) -> tuple:
    """Exact inverse as a matrix of Fractions (via SNF: M^-1 = V D^-1 U)."""
    res = snf(mat)
    n = len(mat)
    if res.rows != res.cols or res.rank != n:
        raise ZeroDivisionError("matrix is singular")
    inv = []
    for i in range(n):
        inv.append(
            tuple(
                sum(Fraction(res.V[i][k] * res.U[k][j], res.diag[k]) for k in range(n))
                for j in range(n)
            )
        )
    return tuple(inv)


def frac_mat_vec(mat, vec) -> tuple:
    return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in mat)


def dot(gram, x, y):
    """Bilinear form value x^T G y; works for int or Fraction coordinates."""
    total = 0
    for i, xi in enumerate(x):
        if xi:
            row = gram[i]
            total += xi * sum(row[j] * y[j] for j in range(len(y)) if y[j])
    return total
