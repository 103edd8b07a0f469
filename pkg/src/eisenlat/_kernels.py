"""Short-vector enumeration backends.

The hot loop is a Fincke-Pohst style walk over the LDL^T cone of a positive
definite Gram matrix.  Three backends share one algorithm:

  * "numba"  - @njit compiled, the default when numba imports
  * "numpy"  - same loop in plain Python/NumPy (fallback)
  * "exact"  - Fraction arithmetic with exact integer interval bounds

The float backends widen every level bound by PAD = 0.5, far beyond any
float64 rounding error at the magnitudes seen here, so no true solution is
ever pruned; every candidate is then re-checked with exact integer
arithmetic by the caller.  Set EISENLAT_NO_NUMBA=1 to force the numpy path.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

PAD = 0.5


def numba_enabled() -> bool:
    return HAVE_NUMBA and os.environ.get("EISENLAT_NO_NUMBA", "") != "1"


def ldl_fractions(gram):
    """Exact LDL^T data: q[i][i] = D_i and q[i][j] (j>i) the unit-triangular
    coefficients, so x^T G x = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2.

    Raises ValueError unless G is positive definite.
    """
    n = len(gram)
    q = [[Fraction(gram[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("matrix is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    for i in range(n):
        for j in range(i):
            q[i][j] = Fraction(0)
    return q


def _fp_float(q, nu, pad, out):
    """Collect integer candidates x with x^T G x <= nu (+ slack) into out.

    Returns the candidate count, or -1 if out was exhausted.
    """
    n = q.shape[0]
    x = np.zeros(n, np.int64)
    rem = np.zeros(n, np.float64)
    shift = np.zeros(n, np.float64)
    high = np.zeros(n, np.int64)
    count = 0
    i = n - 1
    rem[i] = nu
    shift[i] = 0.0
    s = math.sqrt(max(rem[i], 0.0) / q[i, i]) + pad
    high[i] = int(math.floor(s - shift[i]))
    x[i] = int(math.ceil(-s - shift[i]))
    while True:
        if x[i] > high[i]:
            i += 1
            if i >= n:
                return count
            x[i] += 1
            continue
        if i == 0:
            if count >= out.shape[0]:
                return -1
            for j in range(n):
                out[count, j] = x[j]
            count += 1
            x[0] += 1
            continue
        t = rem[i] - q[i, i] * (x[i] + shift[i]) ** 2
        i -= 1
        acc = 0.0
        for j in range(i + 1, n):
            acc += q[i, j] * x[j]
        shift[i] = acc
        rem[i] = t
        s = math.sqrt(max(t, 0.0) / q[i, i]) + pad
        high[i] = int(math.floor(s - shift[i]))
        x[i] = int(math.ceil(-s - shift[i]))


if HAVE_NUMBA:
    _fp_float_numba = njit(cache=True)(_fp_float)


def _exact_bounds(qii, shift, rem):
    """Integer interval [lo, hi] with qii*(x+shift)^2 <= rem, exactly."""
    if rem < 0:
        return 1, 0

    def upper_ok(v):
        w = v + shift
        return w <= 0 or qii * w * w <= rem

    def lower_ok(v):
        w = v + shift
        return w >= 0 or qii * w * w <= rem

    s = math.sqrt(float(rem / qii)) if rem > 0 else 0.0
    c = -float(shift)
    hi = int(math.floor(c + s))
    lo = int(math.ceil(c - s))
    while upper_ok(hi + 1):
        hi += 1
    while not upper_ok(hi):
        hi -= 1
    while lower_ok(lo - 1):
        lo -= 1
    while not lower_ok(lo):
        lo += 1
    return lo, hi


def _fp_exact(gram, nu, max_count):
    """Exact-rational version of the same walk; returns (solutions, hit_cap)."""
    n = len(gram)
    q = ldl_fractions(gram)
    nu = Fraction(nu)
    sols = []

    def walk(i, rem, xs):
        qii = q[i][i]
        shift = sum((q[i][j] * xs[j] for j in range(i + 1, n)), Fraction(0))
        lo, hi = _exact_bounds(qii, shift, rem)
        for xi in range(lo, hi + 1):
            xs[i] = xi
            t = rem - qii * (xi + shift) ** 2
            if i == 0:
                if t == 0:
                    if len(sols) >= max_count:
                        return False
                    sols.append(tuple(xs))
            else:
                if not walk(i - 1, t, xs):
                    return False
        xs[i] = 0
        return True

    ok = True
    if n:
        ok = walk(n - 1, nu, [0] * n)
    return sols, not ok


def enumerate_short(gram, nu, budget, backend=None):
    """All integer vectors x with x^T G x == nu, G positive definite.

    Returns a lexicographically sorted list of int tuples, or raises
    BudgetExceeded via the caller when the candidate cap is hit (signalled
    here by returning None).
    """
    n = len(gram)
    if n == 0:
        return [()] if nu == 0 else []
    if nu < 0:
        return []
    if backend is None:
        backend = "numba" if numba_enabled() else "numpy"

    if backend == "exact":
        sols, hit_cap = _fp_exact(gram, nu, budget)
        if hit_cap:
            return None
        return sorted(sols)

    q = ldl_fractions(gram)
    qf = np.array([[float(x) for x in row] for row in q], dtype=np.float64)
    out = np.empty((budget, n), dtype=np.int64)
    core = _fp_float_numba if (backend == "numba" and HAVE_NUMBA) else _fp_float
    count = core(qf, float(nu), PAD, out)
    if count < 0:
        return None
    sols = []
    for row in out[:count]:
        x = tuple(int(v) for v in row)
        total = 0
        for i, xi in enumerate(x):
            if xi:
                gi = gram[i]
                total += xi * sum(gi[j] * x[j] for j in range(n) if x[j])
        if total == nu:
            sols.append(x)
    sols.sort()
    return sols
