"""Even integer lattices presented by Gram matrices.

Everything is exact: Gram matrices are Python-int tuples, dual objects use
Fractions.  A Lattice is immutable after construction and safe to share.
Sign convention follows the root-lattice literature: A_n, D_n, E_n are
negative definite, U is the hyperbolic plane.
"""

from __future__ import annotations

import cmath
import itertools
import json
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from importlib import resources

from . import _kernels
from .errors import (
    BudgetExceeded,
    EisenlatError,
    DegenerateForm,
    DependentInput,
    GroupTooLarge,
    IndefiniteLattice,
    NonIntegralScale,
    NotEven,
    NotSymmetric,
    UnknownName,
    ZeroScale,
)
from . import intmat
from .intmat import (
    bareiss_det,
    dot,
    freeze,
    inverse_frac,
    kernel_basis,
    rank_of,
    row_saturation,
    row_span_index,
    snf,
)

DEFAULT_BUDGET = 1_000_000
DEFAULT_GROUP_CAP = 100_000


def resolve_budget(budget=None) -> int:
    if budget is not None:
        return int(budget)
    env = os.environ.get("EISENLAT_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class Signature:
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def rank(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero

    def as_tuple(self):
        return (self.n_plus, self.n_minus, self.n_zero)

    @property
    def is_definite(self) -> bool:
        return self.n_zero == 0 and (self.n_plus == 0 or self.n_minus == 0)


@dataclass(frozen=True)
class DiscriminantGroup:
    """A_L = L*/L: invariant factors d_1 | d_2 | ... (each > 1) and dual-basis
    representatives of the generators, in lattice coordinates."""

    invariant_factors: tuple
    generators: tuple

    @property
    def order(self) -> int:
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def elements(self):
        return itertools.product(*(range(d) for d in self.invariant_factors))


class FiniteQuadraticForm:
    """Discriminant quadratic form q: A_L -> Q/2Z, fully tabulated."""

    def __init__(self, group: DiscriminantGroup, q_values, pair_matrix):
        self.group = group
        self.q_values = q_values  # dict: coords tuple -> Fraction in [0, 2)
        self._pairs = pair_matrix  # (gen_i, gen_j) values, Fractions

    @property
    def order(self) -> int:
        return self.group.order

    def q(self, coords) -> Fraction:
        return self.q_values[tuple(c % d for c, d in zip(coords, self.group.invariant_factors))]

    def b(self, x, y) -> Fraction:
        """Bilinear form b(x, y) mod 1."""
        total = Fraction(0)
        for i, xi in enumerate(x):
            for j, yj in enumerate(y):
                total += xi * yj * self._pairs[i][j]
        return total % 1

    def gauss_sum(self) -> complex:
        return sum(cmath.exp(1j * math.pi * float(qv)) for qv in self.q_values.values())

    def signature_mod8(self, tol: float = 1e-6) -> int:
        """Milgram: sum exp(pi i q(x)) = sqrt|A| exp(2 pi i sig/8)."""
        s = self.gauss_sum()
        root = math.sqrt(self.order)
        sig = round(4 * cmath.phase(s) / math.pi) % 8
        expected = root * cmath.exp(1j * math.pi * sig / 4)
        if abs(s - expected) > tol * max(root, 1.0):
            raise ArithmeticError(
                f"Gauss sum {s} is not sqrt({self.order}) times an 8th root of unity"
            )
        return sig


class Lattice:
    """Even lattice given by its Gram matrix (possibly degenerate)."""

    def __init__(self, gram, name=None):
        gram = freeze(gram)
        if not intmat.is_square(gram):
            raise NotSymmetric("Gram matrix must be square")
        if not intmat.is_symmetric(gram):
            raise NotSymmetric("Gram matrix must be symmetric")
        for i in range(len(gram)):
            if gram[i][i] % 2:
                raise NotEven(f"odd diagonal entry {gram[i][i]} at index {i}")
        self.gram = gram
        self.name = name

    @property
    def rank(self) -> int:
        return len(self.gram)

    @cached_property
    def det(self) -> int:
        return bareiss_det(self.gram)

    @cached_property
    def signature(self) -> Signature:
        return _signature_of_gram(self.gram)

    def dot(self, x, y):
        return dot(self.gram, x, y)

    def norm(self, x):
        return dot(self.gram, x, x)

    def basis_vector(self, i):
        return tuple(1 if j == i else 0 for j in range(self.rank))

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.gram == other.gram

    def __hash__(self):
        return hash(self.gram)

    def __repr__(self):
        label = self.name or f"rank {self.rank}"
        return f"Lattice({label})"


def make_lattice(gram, name=None) -> Lattice:
    return Lattice(gram, name=name)


def _signature_of_gram(gram) -> Signature:
    """Exact congruence diagonalization; zero-diagonal blocks get the
    standard symmetric row+column fix before pivoting."""
    n = len(gram)
    m = [[Fraction(x) for x in row] for row in gram]
    active = list(range(n))
    pos = neg = zero = 0
    while active:
        piv = next((i for i in active if m[i][i] != 0), None)
        if piv is None:
            pair = None
            for ai, i in enumerate(active):
                for j in active[ai + 1:]:
                    if m[i][j] != 0:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                zero += len(active)
                break
            i, j = pair
            for k in active:
                m[i][k] += m[j][k]
            for k in active:
                m[k][i] += m[k][j]
            continue
        d = m[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(piv)
        prow = {j: m[piv][j] for j in active}
        for i in active:
            ci = m[i][piv] / d
            if ci:
                mi = m[i]
                for j in active:
                    mi[j] -= ci * prow[j]
    return Signature(pos, neg, zero)


def signature(lat: Lattice) -> Signature:
    return lat.signature


def direct_sum(*lattices: Lattice) -> Lattice:
    """Block-diagonal sum; rank adds, determinant multiplies."""
    total = sum(l.rank for l in lattices)
    rows = []
    offset = 0
    for lat in lattices:
        for row in lat.gram:
            rows.append((0,) * offset + row + (0,) * (total - offset - lat.rank))
        offset += lat.rank
    names = [l.name for l in lattices]
    name = "+".join(names) if names and all(names) else None
    return Lattice(rows if rows else (), name=name)


def twist(lat: Lattice, alpha: int) -> Lattice:
    if alpha == 0:
        raise ZeroScale("twist scale must be nonzero")
    name = f"{lat.name}({alpha})" if lat.name else None
    return Lattice(intmat.mat_scale(lat.gram, alpha), name=name)


def dual_scaled(lat: Lattice, p: int) -> Lattice:
    """Gram p * G^-1 in the dual basis; must land on an even integral matrix."""
    try:
        inv = inverse_frac(lat.gram)
    except ZeroDivisionError:
        raise DegenerateForm("dual of a degenerate lattice") from None
    scaled = [[p * x for x in row] for row in inv]
    for i, row in enumerate(scaled):
        for j, x in enumerate(row):
            if x.denominator != 1:
                raise NonIntegralScale(f"entry ({i},{j}) = {x} is not integral")
    gram = [[int(x) for x in row] for row in scaled]
    for i in range(len(gram)):
        if gram[i][i] % 2:
            raise NonIntegralScale(f"diagonal entry {gram[i][i]} is odd")
    name = f"{lat.name}*({p})" if lat.name else None
    return Lattice(gram, name=name)


def discriminant_group(lat: Lattice) -> DiscriminantGroup:
    if lat.rank == 0:
        return DiscriminantGroup((), ())
    res = snf(lat.gram)
    if res.rank < lat.rank:
        raise DegenerateForm("discriminant group needs a nondegenerate form")
    factors = []
    gens = []
    for j, d in enumerate(res.diag):
        if d > 1:
            factors.append(d)
            gens.append(tuple(Fraction(res.V[i][j], d) for i in range(lat.rank)))
    return DiscriminantGroup(tuple(factors), tuple(gens))


def a_invariant(lat: Lattice, p: int) -> int:
    group = discriminant_group(lat)
    return sum(1 for d in group.invariant_factors if d % p == 0)


def is_p_elementary(lat: Lattice, p: int) -> bool:
    group = discriminant_group(lat)
    return all(d == p for d in group.invariant_factors)


def discriminant_form(lat: Lattice, max_order: int = DEFAULT_GROUP_CAP) -> FiniteQuadraticForm:
    group = discriminant_group(lat)
    if group.order > max_order:
        raise GroupTooLarge(f"|A_L| = {group.order} exceeds cap {max_order}")
    r = len(group.invariant_factors)
    pairs = [
        [dot(lat.gram, group.generators[i], group.generators[j]) for j in range(r)]
        for i in range(r)
    ]
    q_values = {}
    for coords in group.elements():
        total = Fraction(0)
        for i in range(r):
            ci = coords[i]
            if ci:
                total += ci * ci * pairs[i][i]
                for j in range(i + 1, r):
                    if coords[j]:
                        total += 2 * ci * coords[j] * pairs[i][j]
        q_values[coords] = total % 2
    return FiniteQuadraticForm(group, q_values, pairs)


def orthogonal_complement(lat: Lattice, span_rows):
    """Saturated sublattice orthogonal to the given vectors, with its Gram."""
    rows = [tuple(map(int, r)) for r in span_rows]
    for r in rows:
        if len(r) != lat.rank:
            raise DependentInput("vector length does not match lattice rank")
    if rows and rank_of(rows) < len(rows):
        raise DependentInput("spanning vectors are linearly dependent")
    if not rows:
        basis = tuple(lat.basis_vector(i) for i in range(lat.rank))
    else:
        pairing = intmat.mat_mul(rows, lat.gram)
        basis = kernel_basis(pairing)
    induced = intmat.mat_mul(intmat.mat_mul(basis, lat.gram), intmat.transpose(basis)) if basis else ()
    return basis, Lattice(induced)


def saturation(lat: Lattice, span_rows):
    rows = [tuple(map(int, r)) for r in span_rows]
    if rows and rank_of(rows) < len(rows):
        raise DependentInput("spanning vectors are linearly dependent")
    return row_saturation(rows)


def is_primitive(lat: Lattice, span_rows) -> bool:
    rows = [tuple(map(int, r)) for r in span_rows]
    idx = row_span_index(rows)
    if idx == 0:
        raise DependentInput("spanning vectors are linearly dependent")
    return idx == 1


def sublattice(lat: Lattice, basis_rows) -> Lattice:
    """Lattice induced on the span of the given (independent) rows."""
    rows = [tuple(map(int, r)) for r in basis_rows]
    induced = intmat.mat_mul(intmat.mat_mul(rows, lat.gram), intmat.transpose(rows)) if rows else ()
    return Lattice(induced)


def enumerate_vectors_of_norm(lat: Lattice, nu: int, budget=None, backend=None):
    """All x with (x, x) = nu, sorted lexicographically.

    Only definite lattices are supported; a negative definite lattice is
    handled by flipping the global sign.
    """
    if lat.rank == 0:
        return [()] if nu == 0 else []
    sig = lat.signature
    if not sig.is_definite:
        raise IndefiniteLattice(f"signature {sig.as_tuple()} is not definite")
    gram, target = lat.gram, nu
    if sig.n_minus == lat.rank:
        gram, target = intmat.mat_scale(gram, -1), -nu
    if target < 0 or target % 2:
        return []
    cap = resolve_budget(budget)
    sols = _kernels.enumerate_short(gram, target, cap, backend=backend)
    if sols is None:
        raise BudgetExceeded(f"enumeration exceeded budget {cap}")
    return sols


# ---------------------------------------------------------------------------
# standard lattices

def _cartan_neg(adjacency, n):
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = -2
    for i, j in adjacency:
        gram[i][j] = gram[j][i] = 1
    return gram


def _a_n(n):
    return _cartan_neg([(i, i + 1) for i in range(n - 1)], n)


def _d_n(n):
    edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    return _cartan_neg(edges, n)


_E_EDGES = {
    6: [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)],
    7: [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 3)],
    8: [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)],
}


def _e_n(n):
    return _cartan_neg(_E_EDGES[n], n)


_U = ((0, 1), (1, 0))


def _load_k12_gram():
    text = resources.files("eisenlat.data").joinpath("k12_gram.json").read_text()
    data = json.loads(text)
    return data["gram"]


def _k12() -> Lattice:
    """Coxeter-Todd lattice, vendored and re-verified on every construction."""
    lat = Lattice(_load_k12_gram(), name="K12")
    checks = (
        (lat.rank == 12, "rank 12"),
        (lat.signature.as_tuple() == (0, 12, 0), "negative definite"),
        (abs(lat.det) == 3 ** 6, "|det| = 729"),
        (is_p_elementary(lat, 3) and a_invariant(lat, 3) == 6, "3-elementary with a = 6"),
    )
    for ok, what in checks:
        if not ok:
            raise EisenlatError(f"vendored K12 Gram failed re-verification: {what}")
    return lat


def standard_lattice(name: str, scale=None) -> Lattice:
    """Named building blocks: U, A_n, D_n, E6/E7/E8 (negative definite),
    A2(-1), E6*(3), K12 and the K3 lattice U^3 + E8^2."""
    base = None
    if name == "U":
        base = Lattice(_U, name="U")
    elif name == "A2(-1)":
        base = Lattice(((2, -1), (-1, 2)), name="A2(-1)")
    elif name == "E6*(3)":
        base = dual_scaled(standard_lattice("E6"), 3)
    elif name == "K12":
        base = _k12()
    elif name == "L_K3":
        u = standard_lattice("U")
        e8 = standard_lattice("E8")
        base = direct_sum(u, u, u, e8, e8)
        base.name = "L_K3"
    elif name in ("E6", "E7", "E8"):
        base = Lattice(_e_n(int(name[1])), name=name)
    elif name.startswith("A") and name[1:].isdigit():
        n = int(name[1:])
        if n < 1:
            raise UnknownName(name)
        base = Lattice(_a_n(n), name=name)
    elif name.startswith("D") and name[1:].isdigit():
        n = int(name[1:])
        if n < 4:
            raise UnknownName(f"{name}: D_n needs n >= 4")
        base = Lattice(_d_n(n), name=name)
    if base is None:
        raise UnknownName(name)
    if scale is not None and scale != 1:
        base = twist(base, scale)
    return base


def lattice_from_descriptor(desc: str) -> Lattice:
    """Parse sums like "U+U(3)+A2^5" or "A2(-1)" into a lattice."""
    parts = []
    for token in desc.split("+"):
        token = token.strip()
        if not token:
            raise UnknownName(f"empty summand in {desc!r}")
        power = 1
        if "^" in token:
            token, exp = token.split("^", 1)
            power = int(exp)
        if token in ("A2(-1)", "E6*(3)"):
            lat = standard_lattice(token)
        elif token.endswith(")") and "(" in token:
            base, arg = token[:-1].split("(", 1)
            lat = standard_lattice(base, scale=int(arg))
        else:
            lat = standard_lattice(token)
        parts.extend([lat] * power)
    return direct_sum(*parts) if len(parts) > 1 else parts[0]
