"""Eisenstein module structure on a lattice with an order-3 fixed-point-free
isometry.

Numbers a + b*zeta live over the basis {1, zeta} with zeta^2 = -1 - zeta;
the cube root zeta is *defined* as the action of the isometry, which fixes
the sign convention once and for all.  The hermitian form is

    H(x, y) = [(x,y) - (theta/3)(x, rho^2 y - rho y)] / 2,  theta = zeta - zeta^2,

so that 2 Re H(x, y) = (x, y) identically and H(rho x, y) = zeta H(x, y).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import EisenlatError, HasFixedVectors, OddRank, WrongOrder
from .intmat import bareiss_det, identity, rank_of, row_saturation, row_span_index, snf
from .isometry import Isometry, fixed_sublattice, make_isometry
from .lattice import Lattice


@dataclass(frozen=True)
class EisNum:
    """Exact element a + b*zeta of Q(zeta), zeta a primitive cube root of 1."""

    a: Fraction
    b: Fraction

    @staticmethod
    def of(a, b=0) -> "EisNum":
        return EisNum(Fraction(a), Fraction(b))

    def __add__(self, other):
        return EisNum(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return EisNum(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return EisNum(-self.a, -self.b)

    def __mul__(self, other):
        # (a + b z)(c + d z) with z^2 = -1 - z
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisNum(a * c - b * d, a * d + b * c - b * d)

    def conjugate(self) -> "EisNum":
        return EisNum(self.a - self.b, -self.b)

    def inverse(self) -> "EisNum":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(zeta)")
        conj = self.conjugate()
        return EisNum(conj.a / n, conj.b / n)

    def real(self) -> Fraction:
        return self.a - self.b / 2

    def norm(self) -> Fraction:
        """Field norm a^2 - a b + b^2 = |a + b zeta|^2."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    @property
    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    @property
    def is_unit(self) -> bool:
        return self.is_integral and self.norm() == 1

    def __repr__(self):
        return f"EisNum({self.a}, {self.b})"


ZERO = EisNum.of(0)
ONE = EisNum.of(1)
ZETA = EisNum.of(0, 1)


@dataclass(frozen=True)
class EModule:
    """Free Eisenstein module: lattice, order-3 fpf isometry rho, and an
    E-basis (b_i) such that {b_i, rho b_i} is a Z-basis of the lattice."""

    lattice: Lattice
    rho: Isometry
    e_basis: tuple

    @property
    def e_rank(self) -> int:
        return len(self.e_basis)

    def scalar_apply(self, num: EisNum, vec):
        """(a + b zeta) . x = a x + b rho(x); needs integral a, b."""
        if not num.is_integral:
            raise ValueError("module action needs Eisenstein integers")
        rx = self.rho.apply(vec)
        return tuple(num.a * x + num.b * r for x, r in zip(vec, rx))


def as_e_module(lat: Lattice, rho: Isometry) -> EModule:
    """Extract an E-basis greedily (unit vectors first, keeping the chosen
    span saturated), repairing through the quotient module when no unit
    vector works.  The final Z-basis determinant check makes correctness
    unconditional."""
    n = lat.rank
    if n % 2:
        raise OddRank(f"rank {n} is odd")
    if rho.power(3) != identity(n):
        raise WrongOrder("isometry must have order dividing 3")
    if fixed_sublattice(lat, rho)[0] != ():
        raise HasFixedVectors("isometry fixes a nonzero sublattice")
    m = n // 2
    chosen = []
    span = []
    while len(chosen) < m:
        pick = None
        for i in range(n):
            b = lat.basis_vector(i)
            rb = rho.apply(b)
            trial = span + [b, rb]
            if rank_of(trial) == len(span) + 2 and row_span_index(trial) == 1:
                pick = (b, rb)
                break
        if pick is None:
            pick = _repair_pick(lat, rho, span)
        chosen.append(pick[0])
        span.extend(pick)
    if abs(bareiss_det(span)) != 1:
        raise EisenlatError("extracted vectors do not form a Z-basis")
    return EModule(lat, rho, tuple(chosen))


def _repair_pick(lat: Lattice, rho: Isometry, span):
    """The greedy span is a proper sublattice of its saturation; pick the
    next vector from the saturated overlattice instead."""
    n = lat.rank
    b0 = next(
        lat.basis_vector(i)
        for i in range(n)
        if rank_of(span + [lat.basis_vector(i), rho.apply(lat.basis_vector(i))])
        == len(span) + 2
    )
    sat = row_saturation(span + [b0, rho.apply(b0)])
    u1, u2 = _completion_pair(span, sat)
    for radius in range(1, 50):
        for c1, c2 in itertools.product(range(-radius, radius + 1), repeat=2):
            if max(abs(c1), abs(c2)) != radius:
                continue
            b = tuple(c1 * x + c2 * y for x, y in zip(u1, u2))
            rb = rho.apply(b)
            trial = span + [b, rb]
            if rank_of(trial) == len(span) + 2 and row_span_index(trial) == 1:
                return b, rb
    raise EisenlatError("E-basis repair failed")


def _completion_pair(span, sat_basis):
    """Two rows of sat_basis's span completing span to the full saturation."""
    if not span:
        return sat_basis[0], sat_basis[1]
    coords = [_coords_in_hnf(v, sat_basis) for v in span]
    res = snf(coords)
    k = len(span)
    rows = []
    for j in (k, k + 1):
        w = res.V_inv[j]
        rows.append(
            tuple(
                sum(w[t] * sat_basis[t][s] for t in range(len(sat_basis)))
                for s in range(len(sat_basis[0]))
            )
        )
    return rows


def _coords_in_hnf(vec, hnf_basis):
    work = list(vec)
    coords = [0] * len(hnf_basis)
    for idx, row in enumerate(hnf_basis):
        j = next(k for k, x in enumerate(row) if x)
        if work[j] % row[j]:
            raise EisenlatError("vector not in sublattice")
        q = work[j] // row[j]
        coords[idx] = q
        if q:
            work = [x - q * y for x, y in zip(work, row)]
    if any(work):
        raise EisenlatError("vector not in sublattice")
    return tuple(coords)


def hermitian_form(mod: EModule, x, y, require_integral: bool = True) -> EisNum:
    """H(x, y), exactly.

    theta*H is always an Eisenstein integer on lattice vectors (because
    1 + rho + rho^2 = 0 forces (x,y) = (x, rho y + rho^2 y) mod 2), so H
    lands in (1/theta) Z[zeta] in general and in Z[zeta] itself precisely
    when every twisted pairing (x, rho^2 y - rho y) is divisible by 3;
    that holds for the unimodular-over-E modules and their twists (A2,
    U+U(3), K12) but not, e.g., for the module structure on E8.  With
    require_integral a non-integral value is an error, never a silent
    rational.
    """
    lat, rho = mod.lattice, mod.rho
    p = Fraction(lat.dot(x, y))
    ry = rho.apply(y)
    r2y = rho.apply(ry)
    q = Fraction(lat.dot(x, tuple(a - b for a, b in zip(r2y, ry))))
    value = EisNum(p / 2 - q / 6, -q / 3)
    if require_integral and not value.is_integral:
        raise ArithmeticError(f"H(x, y) = {value} is not an Eisenstein integer")
    return value


def hermitian_gram(mod: EModule, require_integral: bool = True):
    """m x m conjugate-symmetric matrix H(b_i, b_j) on the E-basis."""
    m = mod.e_rank
    return tuple(
        tuple(
            hermitian_form(mod, mod.e_basis[i], mod.e_basis[j], require_integral)
            for j in range(m)
        )
        for i in range(m)
    )


def hermitian_det(mod: EModule) -> EisNum:
    """Determinant of the hermitian Gram, by exact elimination over Q(zeta)."""
    h = [list(row) for row in hermitian_gram(mod, require_integral=False)]
    m = len(h)
    det = ONE
    for k in range(m):
        piv = next((i for i in range(k, m) if h[i][k].norm() != 0), None)
        if piv is None:
            return ZERO
        if piv != k:
            h[k], h[piv] = h[piv], h[k]
            det = -det
        det = det * h[k][k]
        inv = h[k][k].inverse()
        for i in range(k + 1, m):
            factor = h[i][k] * inv
            h[i] = [h[i][j] - factor * h[k][j] for j in range(m)]
    return det


def is_unimodular_over_E(mod: EModule) -> bool:
    """True iff the hermitian determinant is a unit of Z[zeta]."""
    return hermitian_det(mod).norm() == 1


def e_module_from_matrix(lat: Lattice, matrix) -> EModule:
    return as_e_module(lat, make_isometry(lat, matrix))
