"""Generate the vendored data files under src/eisenlat/data/.

* e6_isometry.json, e8_isometry.json: lexicographically-first order-3
  fixed-point-free isometries found by the backtracking search.
* k12_gram.json, k12_isometry.json: the Coxeter-Todd lattice built from the
  hexacode over F4 = E/2E, with multiplication by the cube root of unity as
  its order-3 isometry.

Every artifact is verified here before it is written, and the library
re-verifies on load, so nothing is trusted blindly.
"""

import itertools
import json
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from eisenlat.eisenstein import as_e_module, is_unimodular_over_E
from eisenlat.intmat import bareiss_det, hnf_rows, inverse_frac, mat_mul, transpose
from eisenlat.isometry import (
    acts_trivially_on_discriminant,
    find_order3_isometry,
    fixed_sublattice,
    make_isometry,
    verify_isometry,
)
from eisenlat.lattice import (
    a_invariant,
    enumerate_vectors_of_norm,
    is_p_elementary,
    make_lattice,
    standard_lattice,
)

DATA = Path(__file__).resolve().parent.parent / "src" / "eisenlat" / "data"


# --- F4 arithmetic over the basis {1, w}, w^2 = w + 1 (bit pairs a + 2b) ---

def f4_mul(x, y):
    a, b = x & 1, x >> 1
    c, d = y & 1, y >> 1
    return ((a * c + b * d) & 1) | ((((a * d) + (b * c) + (b * d)) & 1) << 1)


def f4_add(x, y):
    return x ^ y


def f4_conj(x):  # Frobenius: z -> z^2
    return f4_mul(x, x)


W = 2  # the element w
W2 = f4_mul(W, W)


def hexacode():
    """All 64 words (a, b, c, f(1), f(w), f(w^2)) with f(y) = a y^2 + b y + c."""
    words = []
    for a, b, c in itertools.product(range(4), repeat=3):
        def f(y):
            return f4_add(f4_add(f4_mul(a, f4_mul(y, y)), f4_mul(b, y)), c)

        words.append((a, b, c, f(1), f(W), f(W2)))
    return words


def check_hexacode(words):
    assert len(set(words)) == 64
    weights = sorted(set(sum(1 for x in w if x) for w in words if any(w)))
    assert min(weights) == 4, weights
    # hermitian self-orthogonality: sum_i u_i conj(v_i) = 0 for all pairs
    for u in words:
        for v in words:
            acc = 0
            for ui, vi in zip(u, v):
                acc = f4_add(acc, f4_mul(ui, f4_conj(vi)))
            assert acc == 0, (u, v)
    # closure under scalar multiplication (F4-linearity)
    wset = set(words)
    for u in words:
        assert tuple(f4_mul(W, x) for x in u) in wset
    print("hexacode: 64 words, min weight 4, hermitian self-dual")


# --- Eisenstein lattice E^6 -> Z^12, coordinates (a1, b1, ..., a6, b6) ---

def lift(x):
    """F4 -> E representative: 0, 1, w -> zeta, w^2 -> 1 + zeta."""
    return {0: (0, 0), 1: (1, 0), 2: (0, 1), 3: (1, 1)}[x]


def word_to_z12(word):
    out = []
    for x in word:
        out.extend(lift(x))
    return tuple(out)


def zeta_mult_ambient():
    """Multiplication by zeta on Z^12: per block (a, b) -> (-b, a - b)."""
    block = ((0, -1), (1, -1))
    rows = []
    for i in range(6):
        for r in range(2):
            row = [0] * 12
            row[2 * i] = block[r][0]
            row[2 * i + 1] = block[r][1]
            rows.append(tuple(row))
    return tuple(rows)


def build_k12():
    words = hexacode()
    check_hexacode(words)
    zmul = zeta_mult_ambient()

    # Z-generators: three hexacode generators and their zeta-multiples,
    # plus 2 E^6 (all unit vectors doubled).
    gens = []
    for a, b, c in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        w = next(x for x in words if x[:3] == (a, b, c))
        v = word_to_z12(w)
        gens.append(v)
        gens.append(tuple(sum(zmul[i][j] * v[j] for j in range(12)) for i in range(12)))
    for i in range(12):
        gens.append(tuple(2 if j == i else 0 for j in range(12)))

    basis = hnf_rows(gens)
    assert len(basis) == 12
    index = abs(bareiss_det(basis))
    assert index == 64, index  # [Z^12 : Lambda] = 4^3

    # Gram of Re sum x_i conj(y_i): per-block [[1,-1/2],[-1/2,1]]
    q = [[Fraction(0)] * 12 for _ in range(12)]
    for i in range(6):
        q[2 * i][2 * i] = q[2 * i + 1][2 * i + 1] = Fraction(1)
        q[2 * i][2 * i + 1] = q[2 * i + 1][2 * i] = Fraction(-1, 2)
    gram = []
    for u in basis:
        row = []
        for v in basis:
            val = sum(u[i] * q[i][j] * v[j] for i in range(12) for j in range(12))
            assert val.denominator == 1, val
            row.append(int(val))
        gram.append(row)

    pos = make_lattice(gram, name="K12(+)")
    assert pos.signature.as_tuple() == (12, 0, 0)
    assert pos.det == 3 ** 6
    assert is_p_elementary(pos, 3) and a_invariant(pos, 3) == 6
    assert enumerate_vectors_of_norm(pos, 2) == []
    minvecs = enumerate_vectors_of_norm(pos, 4)
    assert len(minvecs) == 756, len(minvecs)
    print("K12: rank 12, det 3^6, 3-elementary a=6, min norm 4 with 756 vectors")

    # isometry: conjugate ambient zeta-multiplication into the basis
    bt = transpose(basis)
    bt_inv = inverse_frac(bt)
    amb = mat_mul(zmul, bt)
    conj = [[sum(bt_inv[i][k] * amb[k][j] for k in range(12)) for j in range(12)] for i in range(12)]
    for row in conj:
        for x in row:
            assert x.denominator == 1
    matrix = tuple(tuple(int(x) for x in row) for row in conj)

    neg = make_lattice([[-x for x in row] for row in gram], name="K12")
    iso = make_isometry(neg, matrix)
    check = verify_isometry(neg, matrix)
    assert check.valid and check.order == 3
    assert fixed_sublattice(neg, iso)[0] == ()
    assert acts_trivially_on_discriminant(neg, iso)
    mod = as_e_module(neg, iso)
    assert mod.e_rank == 6
    assert is_unimodular_over_E(mod)
    print("K12 isometry: order 3, fixed point free, trivial on A_L, unimodular over E")
    return neg.gram, matrix


def searched_isometry(name):
    lat = standard_lattice(name)
    iso = find_order3_isometry(lat, require_fpf=True, require_trivial_disc=True)
    assert acts_trivially_on_discriminant(lat, iso)
    print(f"{name} isometry found by search")
    return iso.matrix


def main():
    DATA.mkdir(exist_ok=True)
    gram, k12_matrix = build_k12()
    (DATA / "k12_gram.json").write_text(
        json.dumps({"name": "K12", "gram": [list(r) for r in gram]}) + "\n"
    )
    (DATA / "k12_isometry.json").write_text(
        json.dumps({"lattice": "K12", "matrix": [list(r) for r in k12_matrix]}) + "\n"
    )
    for name in ("E6", "E8"):
        matrix = searched_isometry(name)
        (DATA / f"{name.lower()}_isometry.json").write_text(
            json.dumps({"lattice": name, "matrix": [list(r) for r in matrix]}) + "\n"
        )
    print("vendored data written to", DATA)


if __name__ == "__main__":
    main()
