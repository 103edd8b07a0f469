"""Lattice isometries, specialized to order-3 fixed-point-free actions.

Matrices act on column coordinate vectors, so column i is the image of the
i-th basis vector and the defining condition is M^T G M = G.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .errors import (
    BudgetExceeded,
    IndefiniteLattice,
    InvalidIsometry,
    NotFound,
    RankMismatch,
    UnknownName,
    WrongOrder,
)
from . import intmat
from .intmat import freeze, identity, kernel_basis, mat_mul, mat_vec, span_equal, transpose
from .lattice import (
    Lattice,
    discriminant_group,
    enumerate_vectors_of_norm,
    lattice_from_descriptor,
    orthogonal_complement,
    resolve_budget,
    standard_lattice,
    sublattice,
)

ORDER_BOUND = 12


@dataclass(frozen=True)
class Isometry:
    lattice: Lattice
    matrix: tuple

    @property
    def rank(self) -> int:
        return len(self.matrix)

    def apply(self, vec):
        return mat_vec(self.matrix, vec)

    def power(self, k: int):
        m = identity(self.rank)
        for _ in range(k):
            m = mat_mul(self.matrix, m)
        return m


@dataclass(frozen=True)
class IsometryCheck:
    valid: bool
    order: int | None  # None means "> ORDER_BOUND"


def verify_isometry(lat: Lattice, matrix) -> IsometryCheck:
    matrix = freeze(matrix)
    n = lat.rank
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise RankMismatch(f"matrix is not {n}x{n}")
    valid = mat_mul(mat_mul(transpose(matrix), lat.gram), matrix) == lat.gram
    order = None
    power = matrix
    ident = identity(n)
    for k in range(1, ORDER_BOUND + 1):
        if power == ident:
            order = k
            break
        power = mat_mul(matrix, power)
    return IsometryCheck(valid, order)


def make_isometry(lat: Lattice, matrix) -> Isometry:
    check = verify_isometry(lat, matrix)
    if not check.valid:
        raise InvalidIsometry("matrix does not preserve the Gram form")
    return Isometry(lat, freeze(matrix))


def fixed_sublattice(lat: Lattice, iso: Isometry):
    """Saturated kernel of (rho - 1) with its induced Gram."""
    _require_valid(lat, iso)
    n = lat.rank
    delta = tuple(
        tuple(iso.matrix[i][j] - (1 if i == j else 0) for j in range(n)) for i in range(n)
    )
    basis = kernel_basis(delta)
    return basis, sublattice(lat, basis)


def coinvariant_sublattice(lat: Lattice, iso: Isometry):
    """Saturated kernel of (1 + rho + rho^2); equals the orthogonal
    complement of the fixed sublattice, which is re-checked here."""
    _require_valid(lat, iso)
    if iso.power(3) != identity(lat.rank):
        raise WrongOrder("isometry must satisfy rho^3 = 1")
    norm_map = intmat.mat_add(
        intmat.mat_add(identity(lat.rank), iso.matrix), mat_mul(iso.matrix, iso.matrix)
    )
    basis = kernel_basis(norm_map)
    fixed_basis, _ = fixed_sublattice(lat, iso)
    comp_basis, _ = orthogonal_complement(lat, fixed_basis)
    if not span_equal(basis, comp_basis):
        raise InvalidIsometry("coinvariant lattice differs from the complement of the fixed part")
    return basis, sublattice(lat, basis)


def acts_trivially_on_discriminant(lat: Lattice, iso: Isometry) -> bool:
    """True iff (rho - 1) maps every generator of A_L into L."""
    _require_valid(lat, iso)
    group = discriminant_group(lat)  # raises DegenerateForm if needed
    for gen in group.generators:
        image = mat_vec(iso.matrix, gen)
        if any((image[i] - gen[i]).denominator != 1 for i in range(lat.rank)):
            return False
    return True


def _require_valid(lat: Lattice, iso: Isometry):
    if iso.lattice.gram != lat.gram:
        raise InvalidIsometry("isometry belongs to a different lattice")


def direct_sum_isometry(*isos: Isometry) -> Isometry:
    """Blockwise direct sum, on the direct sum of the underlying lattices."""
    from .lattice import direct_sum

    total = sum(iso.rank for iso in isos)
    rows = []
    offset = 0
    for iso in isos:
        for row in iso.matrix:
            rows.append((0,) * offset + row + (0,) * (total - offset - iso.rank))
        offset += iso.rank
    lat = direct_sum(*(iso.lattice for iso in isos))
    return make_isometry(lat, rows)


# ---------------------------------------------------------------------------
# standard order-3 matrices

# e -> f, f -> -e - f on the A2 Gram [[-2,1],[1,-2]]; the same matrix is an
# isometry of any scaled copy A2(alpha).
A2_MATRIX = ((0, -1), (1, -1))

# On U + U(3) with basis (e1, e2, f1, f2), (e1,e2) = 1, (f1,f2) = 3:
#   e1 -> e1 - f1, e2 -> -2 e2 - f2, f1 -> -2 f1 + 3 e1, f2 -> f2 + 3 e2.
UU3_MATRIX = (
    (1, 0, 3, 0),
    (0, -2, 0, 3),
    (-1, 0, -2, 0),
    (0, -1, 0, 1),
)

# Induced on U + U via the index-3 embedding U + U(3) < U + U (f1 = 3u, f2 = v).
UU_MATRIX = (
    (1, 0, 1, 0),
    (0, -2, 0, 3),
    (-3, 0, -2, 0),
    (0, -1, 0, 1),
)


def _load_vendored(name: str):
    text = resources.files("eisenlat.data").joinpath(f"{name}_isometry.json").read_text()
    return json.loads(text)["matrix"]


def standard_isometry(name: str) -> Isometry:
    """Verified order-3 fixed-point-free isometries acting trivially on the
    discriminant group.  E6/E8 matrices were produced once by
    find_order3_isometry, the K12 matrix by multiplication with a cube root
    of unity in its Eisenstein model; all are re-verified here."""
    if name == "A2":
        iso = make_isometry(standard_lattice("A2"), A2_MATRIX)
    elif name == "A2(-1)":
        iso = make_isometry(standard_lattice("A2(-1)"), A2_MATRIX)
    elif name == "U+U(3)":
        iso = make_isometry(lattice_from_descriptor("U+U(3)"), UU3_MATRIX)
    elif name == "U+U":
        iso = make_isometry(lattice_from_descriptor("U+U"), UU_MATRIX)
    elif name in ("E6", "E8", "K12"):
        iso = make_isometry(standard_lattice(name), _load_vendored(name.lower()))
    else:
        raise UnknownName(name)
    check = verify_isometry(iso.lattice, iso.matrix)
    if check.order != 3:
        raise InvalidIsometry(f"{name}: vendored matrix does not have order 3")
    if fixed_sublattice(iso.lattice, iso)[0] != ():
        raise InvalidIsometry(f"{name}: vendored matrix has fixed vectors")
    if not acts_trivially_on_discriminant(iso.lattice, iso):
        raise InvalidIsometry(f"{name}: vendored matrix moves the discriminant group")
    return iso


# ---------------------------------------------------------------------------
# search

def find_order3_isometry(
    lat: Lattice,
    require_fpf: bool = True,
    require_trivial_disc: bool = False,
    budget=None,
) -> Isometry:
    """Backtracking search for an order-3 isometry on a definite lattice.

    Images of the basis vectors are drawn from the short-vector lists in
    lexicographic order and the first complete solution satisfying the flags
    is returned, so the result is deterministic.  With require_fpf the
    identity rho^2 + rho + 1 = 0 forces (e_i, rho e_i) = -(e_i, e_i)/2 and
    pins all products between chosen images, which prunes hard.
    """
    n = lat.rank
    sig = lat.signature
    if not sig.is_definite or n == 0:
        raise IndefiniteLattice("search needs a definite lattice of positive rank")
    if n > 12:
        raise BudgetExceeded("search is budgeted for rank <= 12")
    cap = resolve_budget(budget)

    gram = np.array(lat.gram, dtype=np.int64)
    norms = [lat.gram[i][i] for i in range(n)]
    cand_lists = {}
    for nu in sorted(set(norms)):
        vecs = enumerate_vectors_of_norm(lat, nu, budget=cap)
        cand_lists[nu] = np.array(vecs, dtype=np.int64).reshape(len(vecs), n)

    # products of candidates with the basis: cand_prod[nu][t] = cands . G e_t
    cand_prod = {nu: arr @ gram for nu, arr in cand_lists.items()}

    nodes = 0
    chosen = np.zeros((n, n), dtype=np.int64)  # row d = image of e_d

    def final_checks(matrix) -> bool:
        check = verify_isometry(lat, matrix)
        if not check.valid or check.order != 3:
            return False
        if require_fpf:
            iso = Isometry(lat, matrix)
            if fixed_sublattice(lat, iso)[0] != ():
                return False
        if require_trivial_disc:
            if not acts_trivially_on_discriminant(lat, Isometry(lat, matrix)):
                return False
        return True

    def search(depth: int):
        nonlocal nodes
        if depth == n:
            matrix = transpose(tuple(tuple(int(x) for x in row) for row in chosen))
            if final_checks(matrix):
                return matrix
            return None
        cands = cand_lists[norms[depth]]
        prods = cand_prod[norms[depth]]
        mask = np.ones(len(cands), dtype=bool)
        # Gram preservation against previously chosen images.
        for j in range(depth):
            mask &= (prods @ chosen[j]) == lat.gram[depth][j]
        if require_fpf:
            # (v_d, e_d) = -G_dd/2 and (v_d, e_j) = -G_dj - (e_d, v_j).
            mask &= prods[:, depth] == -lat.gram[depth][depth] // 2
            for j in range(depth):
                mask &= prods[:, j] == -lat.gram[depth][j] - int(
                    np.dot(gram[depth], chosen[j])
                )
        for idx in np.nonzero(mask)[0]:
            nodes += 1
            if nodes > cap:
                raise BudgetExceeded(f"search exceeded budget {cap}")
            chosen[depth] = cands[idx]
            found = search(depth + 1)
            if found is not None:
                return found
        return None

    matrix = search(0)
    if matrix is None:
        raise NotFound("no order-3 isometry with the requested properties")
    return Isometry(lat, matrix)
