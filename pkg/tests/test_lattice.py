import itertools
import random
from fractions import Fraction

import pytest

from eisenlat.errors import (
    BudgetExceeded,
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
from eisenlat.intmat import mat_mul, transpose
from eisenlat.lattice import (
    Lattice,
    a_invariant,
    direct_sum,
    discriminant_form,
    discriminant_group,
    dual_scaled,
    enumerate_vectors_of_norm,
    is_p_elementary,
    is_primitive,
    lattice_from_descriptor,
    make_lattice,
    orthogonal_complement,
    saturation,
    standard_lattice,
    sublattice,
    twist,
)

U = standard_lattice("U")
A2 = standard_lattice("A2")
E6 = standard_lattice("E6")
E8 = standard_lattice("E8")


def brute_force_norm_vectors(gram, nu, box):
    """Independent oracle: full coordinate box scan."""
    n = len(gram)
    out = []
    for x in itertools.product(range(-box, box + 1), repeat=n):
        norm = sum(x[i] * gram[i][j] * x[j] for i in range(n) for j in range(n))
        if norm == nu:
            out.append(x)
    return sorted(out)


def test_make_lattice_validation():
    assert make_lattice([[0, 1], [1, 0]]).gram == ((0, 1), (1, 0))
    assert make_lattice([[-2, 1], [1, -2]]).det == 3
    with pytest.raises(NotEven):
        make_lattice([[1, 0], [0, 1]])
    with pytest.raises(NotSymmetric):
        make_lattice([[0, 1], [2, 0]])
    with pytest.raises(NotSymmetric):
        make_lattice([[0, 1, 0], [1, 0, 0]])
    # degenerate forms are allowed at construction time
    zero = make_lattice([[0, 0], [0, 0]])
    assert zero.signature.as_tuple() == (0, 0, 2)
    with pytest.raises(DegenerateForm):
        discriminant_group(zero)


def test_standard_lattices():
    assert standard_lattice("U", 3).gram == ((0, 3), (3, 0))
    assert a_invariant(standard_lattice("U", 3), 3) == 2
    assert E8.rank == 8 and E8.det == 1 and E8.signature.as_tuple() == (0, 8, 0)
    assert E6.det == 3 and a_invariant(E6, 3) == 1
    assert standard_lattice("E7").det == -2
    assert standard_lattice("A3").det == -4
    assert standard_lattice("D4").det == 4
    e6s3 = standard_lattice("E6*(3)")
    assert discriminant_group(e6s3).invariant_factors == (3,) * 5
    k12 = standard_lattice("K12")
    assert k12.rank == 12 and abs(k12.det) == 729 and a_invariant(k12, 3) == 6
    lk3 = standard_lattice("L_K3")
    assert lk3.rank == 22 and lk3.det == -1 and lk3.signature.as_tuple() == (3, 19, 0)
    with pytest.raises(UnknownName):
        standard_lattice("F4")
    with pytest.raises(UnknownName):
        standard_lattice("D2")


def test_direct_sum():
    s = direct_sum(U, standard_lattice("U", 3))
    assert s.rank == 4
    assert s.det == U.det * standard_lattice("U", 3).det == 9
    empty = make_lattice(())
    assert direct_sum(A2, empty).gram == A2.gram
    assert lattice_from_descriptor("U+U+U+E8+E8") == standard_lattice("L_K3")


def test_twist():
    assert twist(U, 3).gram == ((0, 3), (3, 0))
    a2m = twist(A2, -1)
    assert a2m.signature.as_tuple() == (2, 0, 0)
    assert a2m == standard_lattice("A2(-1)")
    assert twist(A2, 1).gram == A2.gram
    with pytest.raises(ZeroScale):
        twist(U, 0)


def test_discriminant_group():
    assert discriminant_group(A2).invariant_factors == (3,)
    assert discriminant_group(U).invariant_factors == ()
    gen = discriminant_group(A2).generators[0]
    assert all(x.denominator == 3 for x in gen)
    # generator times its invariant factor lands in the lattice
    assert all((3 * x).denominator == 1 for x in gen)
    n30 = lattice_from_descriptor("U(3)+E6*(3)")
    assert a_invariant(n30, 3) == 7
    assert is_p_elementary(n30, 3)
    assert a_invariant(E8, 3) == 0 and is_p_elementary(E8, 3)
    assert not is_p_elementary(standard_lattice("A3"), 2)  # A_L = Z/4


def test_order_equals_det():
    for lat in (U, A2, E6, E8, standard_lattice("U", 3), standard_lattice("E6*(3)"),
                standard_lattice("K12"), lattice_from_descriptor("U+U(3)+A2^3")):
        assert discriminant_group(lat).order == abs(lat.det)


def test_discriminant_form_values():
    form = discriminant_form(A2)
    assert form.order == 3
    # q(g) = -2/3 mod 2Z = 4/3 on both nonzero elements
    assert form.q((1,)) == Fraction(4, 3)
    assert form.q((2,)) == Fraction(4, 3)
    form_pos = discriminant_form(standard_lattice("A2(-1)"))
    assert form_pos.q((1,)) == Fraction(2, 3)
    assert discriminant_form(U).order == 1
    # q(x+y) - q(x) - q(y) = 2 b(x,y) mod 2Z
    n30 = lattice_from_descriptor("U(3)+E6*(3)")
    f = discriminant_form(n30)
    elems = list(f.group.elements())
    rng = random.Random(11)
    facs = f.group.invariant_factors
    for _ in range(40):
        x = rng.choice(elems)
        y = rng.choice(elems)
        s = tuple((a + b) % d for a, b, d in zip(x, y, facs))
        lhs = (f.q(s) - f.q(x) - f.q(y)) % 2
        rhs = (2 * f.b(x, y)) % 2
        assert lhs == rhs


def test_milgram_signatures():
    # Gauss sum signature mod 8 equals the lattice signature mod 8
    for lat in (A2, standard_lattice("A2(-1)"), E6, E8, standard_lattice("U", 3),
                standard_lattice("E6*(3)"), standard_lattice("K12")):
        sig = lat.signature
        assert discriminant_form(lat).signature_mod8() == (sig.n_plus - sig.n_minus) % 8


def test_group_too_large():
    big = direct_sum(*[standard_lattice("U", 3)] * 6)  # |A_L| = 3^12
    with pytest.raises(GroupTooLarge):
        discriminant_form(big)
    with pytest.raises(GroupTooLarge):
        discriminant_form(A2, max_order=2)
    assert discriminant_form(A2, max_order=3).order == 3


def test_signature():
    assert U.signature.as_tuple() == (1, 1, 0)
    t01 = lattice_from_descriptor("U+U(3)+E8+E8")
    assert t01.signature.as_tuple() == (2, 18, 0)
    assert standard_lattice("A2(-1)").signature.as_tuple() == (2, 0, 0)
    assert make_lattice([[0, 0, 0], [0, 0, 1], [0, 1, 0]]).signature.as_tuple() == (1, 1, 1)


def test_signature_unimodular_invariance(seed):
    rng = random.Random(seed)
    for lat in (U, A2, standard_lattice("U", 3), lattice_from_descriptor("U+A2^2")):
        n = lat.rank
        for _ in range(10):
            p = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
            for _ in range(3 * n):
                i, j = rng.randrange(n), rng.randrange(n)
                if i != j:
                    c = rng.choice([-2, -1, 1, 2])
                    for col in range(n):
                        p[i][col] += c * p[j][col]
            transformed = mat_mul(mat_mul(p, lat.gram), transpose(p))
            assert Lattice(transformed).signature == lat.signature


def test_signature_against_eigenvalue_oracle(seed):
    import numpy as np

    rng = random.Random(seed)
    done = 0
    while done < 40:
        n = rng.randint(1, 7)
        sym = [[0] * n for _ in range(n)]
        for i in range(n):
            sym[i][i] = 2 * rng.randint(-4, 4)
            for j in range(i + 1, n):
                sym[i][j] = sym[j][i] = rng.randint(-4, 4)
        eigs = np.linalg.eigvalsh(np.array(sym, dtype=float))
        if min(abs(e) for e in eigs) < 1e-8 and any(e != 0 for e in eigs):
            continue  # numerically ambiguous zero, skip
        want = (
            int((eigs > 1e-8).sum()),
            int((eigs < -1e-8).sum()),
            int((abs(eigs) <= 1e-8).sum()),
        )
        assert Lattice(sym).signature.as_tuple() == want
        done += 1


def test_dual_scaled():
    assert dual_scaled(E6, 3) == standard_lattice("E6*(3)")
    assert a_invariant(dual_scaled(E6, 3), 3) == 5
    assert dual_scaled(U, 3).gram == ((0, 3), (3, 0))
    # scaled dual of U(3) is U again (a goes to rank - a = 0)
    assert dual_scaled(standard_lattice("U", 3), 3).gram == ((0, 1), (1, 0))
    with pytest.raises(NonIntegralScale):
        dual_scaled(E6, 2)
    with pytest.raises(DegenerateForm):
        dual_scaled(make_lattice([[0, 0], [0, 0]]), 3)


def test_dual_scaled_duality_property():
    for name in ("U", "A2", "E6", "E8", "E6*(3)", "K12"):
        lat = standard_lattice(name)
        assert a_invariant(dual_scaled(lat, 3), 3) == lat.rank - a_invariant(lat, 3)
    u3 = standard_lattice("U", 3)
    assert a_invariant(dual_scaled(u3, 3), 3) == u3.rank - a_invariant(u3, 3)


def test_orthogonal_complement():
    basis, comp = orthogonal_complement(U, [(1, 0)])
    assert basis == ((1, 0),)  # isotropic vector is its own complement
    assert comp.gram == ((0,),)

    ua2 = direct_sum(U, A2)
    basis, comp = orthogonal_complement(ua2, [(1, 0, 0, 0), (0, 1, 0, 0)])
    assert comp.gram == A2.gram

    lk3 = standard_lattice("L_K3")
    basis, comp = orthogonal_complement(lk3, [(1, 0) + (0,) * 20, (0, 1) + (0,) * 20])
    t02 = lattice_from_descriptor("U+U+E8+E8")
    assert comp.rank == 20
    assert comp.signature == t02.signature
    assert comp.det == t02.det
    assert discriminant_group(comp).invariant_factors == ()

    with pytest.raises(DependentInput):
        orthogonal_complement(U, [(1, 0), (2, 0)])


def test_complement_rank_property():
    ua2 = direct_sum(U, A2)
    span = [(1, 1, 0, 1)]
    basis, comp = orthogonal_complement(ua2, span)
    if sublattice(ua2, span).det != 0:
        assert len(span) + len(basis) == ua2.rank
    # S subset (S^perp)^perp, equality for saturated S
    basis2, _ = orthogonal_complement(ua2, basis)
    from eisenlat.intmat import in_row_span
    assert all(in_row_span(v, basis2) for v in span)


def test_saturation_and_primitivity():
    assert saturation(U, [(2, 0)]) == ((1, 0),)
    assert not is_primitive(U, [(2, 0)])
    assert is_primitive(U, [(1, 1)])
    with pytest.raises(DependentInput):
        is_primitive(U, [(1, 0), (2, 0)])
    # SNF-derived kernel bases are saturated
    basis, _ = orthogonal_complement(direct_sum(U, A2), [(0, 0, 1, 0)])
    assert is_primitive(direct_sum(U, A2), basis)


def test_enumerate_root_counts():
    assert len(enumerate_vectors_of_norm(A2, -2)) == 6
    assert len(enumerate_vectors_of_norm(E6, -2)) == 72
    assert len(enumerate_vectors_of_norm(E8, -2)) == 240
    assert enumerate_vectors_of_norm(A2, -3) == []  # odd parity
    assert enumerate_vectors_of_norm(A2, 2) == []   # wrong sign
    assert enumerate_vectors_of_norm(A2, 0) == [(0, 0)]
    with pytest.raises(IndefiniteLattice):
        enumerate_vectors_of_norm(U, 2)
    with pytest.raises(BudgetExceeded):
        enumerate_vectors_of_norm(E8, -2, budget=10)


def test_enumerate_matches_brute_force():
    cases = [
        (A2, -2, 2), (A2, -6, 3), (A2, -8, 3),
        (standard_lattice("A2(-1)"), 2, 2),
        (standard_lattice("A3"), -4, 3),
        (standard_lattice("D4"), -2, 3),
    ]
    for lat, nu, box in cases:
        got = enumerate_vectors_of_norm(lat, nu)
        want = brute_force_norm_vectors(lat.gram, nu, box)
        assert got == want, (lat.name, nu)
        assert all(max(abs(c) for c in v) < box for v in got)


def test_enumerate_sorted_deterministic():
    roots = enumerate_vectors_of_norm(E6, -2)
    assert roots == sorted(roots)
    assert roots == enumerate_vectors_of_norm(E6, -2)
