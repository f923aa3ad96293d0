import json
import random

import pytest

from heckesym.exactnum import GENERIC_Q, cyclotomic_field
from heckesym.heckealg import antisymmetrizer, basis_element, generator, partial_y, unit
from heckesym.linalg import MatrixF, Subspace, vec_scale
from heckesym.permgroup import Composition, enumerate_perms, longest_rho
from heckesym.symmetry import (
    HeckeSymmetry,
    SymmetryError,
    check_braid,
    check_hecke,
    dj_standard,
    flip,
    index_word,
    kron_vec,
    tensor_index,
)

F = GENERIC_Q
q = F.q()


@pytest.fixture(scope="module")
def dj2():
    return dj_standard(2)


@pytest.fixture(scope="module")
def dj3():
    return dj_standard(3)


def test_tensor_indexing():
    N, n = 3, 3
    for idx in range(N ** n):
        w = index_word(idx, n, N)
        assert tensor_index(w, N) == idx
    assert tensor_index((1, 1), 2) == 0
    assert tensor_index((2, 1), 2) == 2


def test_relation_checks_pass_for_catalog(dj2):
    assert check_hecke(dj2.R, dj2.q) == (True, "")
    assert check_braid(dj2.R) == (True, "")
    fl = flip(2)
    assert check_hecke(fl.R, fl.q)[0] and check_braid(fl.R)[0]


def test_scalar_operator_is_a_symmetry():
    R = MatrixF.identity(4, F).scale(q)
    sym = HeckeSymmetry(2, q, R)
    assert sym.upsilon(2).dim == 0


def test_perturbed_matrix_fails_with_witness(dj2):
    entries = list(dj2.R.entries)
    entries[3] = F.one()  # corner entry of the 4x4
    bad = MatrixF(4, 4, entries, F)
    ok, witness = check_braid(bad)
    assert not ok and "entry" in witness
    with pytest.raises(SymmetryError):
        HeckeSymmetry(2, q, bad)


def test_dj2_matrix_block(dj2):
    # middle block [[q-1, 1], [q, 0]]: trace q-1, determinant -q
    blk = [[dj2.R[1, 1], dj2.R[1, 2]], [dj2.R[2, 1], dj2.R[2, 2]]]
    assert blk[0][0] + blk[1][1] == q - 1
    assert blk[0][0] * blk[1][1] - blk[0][1] * blk[1][0] == -q


def test_rep_matrix_examples(dj2):
    assert dj2.rep_matrix(unit(2), 2) == MatrixF.identity(4, F)
    h = generator(1, 2) * generator(1, 2)
    assert dj2.rep_matrix(h, 2) == dj2.generator_matrix(1, 2).scale(q - 1) + MatrixF.identity(4, F).scale(q)
    assert dj2.rep_matrix(antisymmetrizer(2), 2) == MatrixF.identity(4, F).scale(q) - dj2.R


def test_rep_is_multiplicative(dj2, dj3):
    rng = random.Random(3)
    perms = list(enumerate_perms(3))
    for sym in (dj2, dj3):
        for _ in range(6):
            h1 = basis_element(rng.choice(perms), F).scale(rng.randint(1, 3)) + basis_element(
                rng.choice(perms), F
            )
            h2 = basis_element(rng.choice(perms), F).scale(rng.randint(-3, -1)) + basis_element(
                rng.choice(perms), F
            )
            assert sym.rep_matrix(h1 * h2, 3) == sym.rep_matrix(h1, 3) * sym.rep_matrix(h2, 3)


def test_upsilon_dimensions(dj2, dj3):
    assert [dj2.upsilon(k).dim for k in range(4)] == [1, 2, 1, 0]
    assert [dj3.upsilon(k).dim for k in range(5)] == [1, 3, 3, 1, 0]


def test_upsilon_two_basis(dj2):
    t = dj2.upsilon(2).basis[0]
    assert t == (F.zero(), F.one(), -q, F.zero())


def test_ideal_component(dj2):
    I2 = dj2.ideal_component(2)
    expected = Subspace.from_vectors(
        [
            (F.one(), F.zero(), F.zero(), F.zero()),
            (F.zero(), F.zero(), F.zero(), F.one()),
            (F.zero(), F.one(), F.one(), F.zero()),
        ],
        4,
        F,
    )
    assert I2 == expected
    assert dj2.lambda_dim(2) == 1
    assert I2.dim + dj2.upsilon(2).dim == 4


def test_flip_ideal_is_symmetric_tensors():
    fl = flip(2)
    field = fl.field
    I2 = fl.ideal_component(2)
    sym_tensors = Subspace.from_vectors(
        [
            (field.one(), field.zero(), field.zero(), field.zero()),
            (field.zero(), field.zero(), field.zero(), field.one()),
            (field.zero(), field.one(), field.one(), field.zero()),
        ],
        4,
        field,
    )
    assert I2 == sym_tensors
    assert fl.lambda_dim(2) == 1


def test_star_unit_laws(dj2):
    one = (F.one(),)
    for b in dj2.upsilon(2).basis:
        assert dj2.star(one, 0, b, 2) == b
        assert dj2.star(b, 2, one, 0) == b


def test_star_degree_one_oracle(dj2):
    # u * v = (q Id - R)(u tensor v)
    op = MatrixF.identity(4, F).scale(q) - dj2.R
    e1, e2 = (F.one(), F.zero()), (F.zero(), F.one())
    for u in (e1, e2):
        for v in (e1, e2):
            assert dj2.star(u, 1, v, 1) == op.apply(kron_vec(u, v, F))


def test_star_associativity_random(dj2):
    rng = random.Random(8)
    for _ in range(6):
        u = tuple(F.scalar(rng.randint(-2, 2)) for _ in range(2))
        v = tuple(F.scalar(rng.randint(-2, 2)) for _ in range(2))
        w = tuple(F.scalar(rng.randint(-2, 2)) for _ in range(2))
        lhs = dj2.star(dj2.star(u, 1, v, 1), 2, w, 1)
        rhs = dj2.star(u, 1, dj2.star(v, 1, w, 1), 2)
        assert lhs == rhs


def test_star_membership_enforced(dj2):
    bad = (F.one(), F.zero(), F.zero(), F.zero())  # e1 e1 is not in upsilon(2)
    with pytest.raises(ValueError):
        dj2.star(bad, 2, (F.one(), F.zero()), 1)


def test_upsilon_nesting(dj2):
    # upsilon(k+n) sits inside upsilon(k) (x) upsilon(n)
    for k in range(0, 4):
        for n in range(0, 4 - k):
            big = dj2.upsilon(k + n)
            prod = Subspace.from_vectors(
                [
                    kron_vec(u, w, F)
                    for u in dj2.upsilon(k).basis
                    for w in dj2.upsilon(n).basis
                ],
                2 ** (k + n),
                F,
            )
            assert prod.contains_subspace(big)


def test_braiding_maps_mixed_spaces(dj2):
    # T_rho sends upsilon(k) (x) upsilon(n) into upsilon(n) (x) upsilon(k)
    for k in range(1, 3):
        for n in range(1, 5 - k):
            rho = longest_rho(k, n)
            word = rho.reduced_word()
            target = Subspace.from_vectors(
                [
                    kron_vec(u, w, F)
                    for u in dj2.upsilon(n).basis
                    for w in dj2.upsilon(k).basis
                ],
                2 ** (k + n),
                F,
            )
            for u in dj2.upsilon(k).basis:
                for w in dj2.upsilon(n).basis:
                    img = dj2.apply_perm_word(word, k + n, kron_vec(u, w, F))
                    assert target.contains(img)


def test_braiding_scalar_on_top_square(dj2):
    # with the top component in degree 2, T_rho scales upsilon(2) (x) upsilon(2) by q^3
    rho = longest_rho(2, 2)
    word = rho.reduced_word()
    t = dj2.upsilon(2).basis[0]
    u = kron_vec(t, t, F)
    img = dj2.apply_perm_word(word, 4, u)
    assert img == vec_scale(q ** 3, u)


def test_antisymmetrizer_acts_nonzero_dj3(dj3):
    Y = dj3.rep_matrix(antisymmetrizer(3), 3)
    assert not Y.is_zero()
    assert dj3.upsilon(3).dim == 1


def test_partial_antisymmetrizer_lands_in_upsilon(dj2):
    # y_(k+n / k,n) maps upsilon(k) (x) upsilon(n) into upsilon(k+n)
    for k in range(1, 3):
        for n in range(1, 4 - k):
            y = partial_y(k + n, Composition((k, n)), "left", F)
            for u in dj2.upsilon(k).basis:
                for w in dj2.upsilon(n).basis:
                    img = dj2.apply_hecke(y, k + n, kron_vec(u, w, F))
                    assert dj2.upsilon(k + n).contains(img)


def test_derived_symmetries(dj2):
    dual = dj2.dual()
    op = dj2.opposite()
    assert dual.R == dj2.R.transpose()
    assert op.opposite().R == dj2.R
    assert dj2.conjugate(MatrixF.identity(2, F)).R == dj2.R
    tau = MatrixF.from_rows([[F.zero(), F.one()], [F.one(), F.zero()]], F)
    conj = dj2.conjugate(tau)
    assert check_hecke(conj.R, q)[0] and check_braid(conj.R)[0]
    singular = MatrixF.from_rows([[F.one(), F.one()], [F.one(), F.one()]], F)
    with pytest.raises(ZeroDivisionError):
        dj2.conjugate(singular)


def test_json_roundtrip(dj2):
    doc = dj2.to_json_dict()
    again = HeckeSymmetry.from_json(json.dumps(doc))
    assert again.R == dj2.R and again.q == dj2.q
    # cyclotomic documents round-trip too
    C3q = cyclotomic_field(3, q_power=1)
    sym = dj_standard(2, C3q)
    again = HeckeSymmetry.from_json_dict(sym.to_json_dict())
    assert again.R == sym.R


def test_json_errors():
    with pytest.raises(SymmetryError):
        HeckeSymmetry.from_json_dict({"dim": 2})
    doc = dj_standard(2).to_json_dict()
    doc["matrix"] = doc["matrix"][:3]
    with pytest.raises(SymmetryError):
        HeckeSymmetry.from_json_dict(doc)


def test_dimension_caps():
    sym = dj_standard(2)
    with pytest.raises(SymmetryError):
        sym.upsilon(9)


def test_root_of_unity_construction():
    C3q = cyclotomic_field(3, q_power=1)
    sym = dj_standard(3, C3q)
    assert [sym.upsilon(k).dim for k in range(4)] == [1, 3, 3, 1]
