import random

import pytest

from heckesym.exactnum import GENERIC_Q, cyclotomic_field, qfact
from heckesym.heckealg import (
    antisymmetrizer,
    basis_element,
    embed,
    generator,
    partial_y,
    shift_element,
    unit,
    verify_identities,
)
from heckesym.permgroup import Composition, Perm, cycle, enumerate_perms, transposition

F = GENERIC_Q
q = F.q()


def test_generator_square():
    T1 = generator(1, 2)
    prod = T1 * T1
    assert prod.coefficient(transposition(1, 2)) == q - 1
    assert prod.coefficient(Perm((1, 2))) == q


def test_unit_acts_trivially():
    y = antisymmetrizer(3)
    assert unit(3) * y == y
    assert y * unit(3) == y


def test_length_additive_products_h3():
    for p in enumerate_perms(3):
        for s in enumerate_perms(3):
            if (p * s).length() == p.length() + s.length():
                assert basis_element(p) * basis_element(s) == basis_element(p * s)


def test_antisymmetrizer_small():
    y2 = antisymmetrizer(2)
    assert y2.coefficient(Perm((1, 2))) == q
    assert y2.coefficient(Perm((2, 1))) == -F.one()
    assert antisymmetrizer(1) == unit(1)
    y3 = antisymmetrizer(3)
    assert y3.support_size() == 6
    assert y3.coefficient(Perm((3, 2, 1))) == -F.one()


def test_square_identity_by_hand():
    # (q - T_1)^2 = q^2 - 2q T_1 + (q-1) T_1 + q = (1+q)(q - T_1)
    y2 = antisymmetrizer(2)
    assert y2 * y2 == y2.scale(1 + q)
    y3 = antisymmetrizer(3)
    assert y3 * y3 == y3.scale(qfact(3))


def test_sign_action():
    for n in (2, 3, 4):
        y = antisymmetrizer(n)
        for p in enumerate_perms(n):
            sign = -1 if p.length() % 2 else 1
            assert basis_element(p) * y == y.scale(sign)
            assert y * basis_element(p) == y.scale(sign)


def test_partial_y_trivial_cases():
    assert partial_y(3, Composition((3,)), "left") == unit(3)
    assert partial_y(3, Composition((3,)), "subgroup") == antisymmetrizer(3)


def test_partial_y_subgroup_split():
    for n in range(2, 6):
        for k in range(1, n):
            comp = Composition((k, n - k))
            lhs = partial_y(n, comp, "subgroup")
            rhs = shift_element(antisymmetrizer(k), 0, n - k) * shift_element(antisymmetrizer(n - k), k)
            assert lhs == rhs


def test_factorizations():
    for n in range(2, 5):
        y = antisymmetrizer(n)
        for k in range(1, n):
            comp = Composition((k, n - k))
            assert partial_y(n, comp, "left") * partial_y(n, comp, "subgroup") == y
            assert partial_y(n, comp, "subgroup") * partial_y(n, comp, "right") == y


def test_coset_recursion_instance():
    # degree 3 over degree 2, k = 1: the smallest nontrivial instance
    lhs = partial_y(3, Composition((1, 2)), "left")
    c = cycle(3, 1, 3)
    term1 = embed(partial_y(2, Composition((1, 1)), "left"), 3).scale(q)
    term2 = (embed(unit(2), 3) * basis_element(c)).scale(1)
    assert lhs == term1 + term2


def test_shift_element():
    assert shift_element(unit(2), 2) == unit(4)
    y2 = antisymmetrizer(2)
    s = shift_element(y2, 1)
    assert s.coefficient(Perm((1, 2, 3))) == q
    assert s.coefficient(Perm((1, 3, 2))) == -F.one()
    for p in enumerate_perms(3):
        assert shift_element(basis_element(p), 2).support_size() == 1


def test_associativity_random_h4():
    rng = random.Random(5)
    perms = list(enumerate_perms(4))

    def rand_elem():
        out = unit(4).scale(0)
        for _ in range(3):
            p = rng.choice(perms)
            c = F.scalar(rng.randint(-3, 3))
            out = out + basis_element(p).scale(c)
        return out

    for _ in range(8):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        assert (a * b) * c == a * (b * c)


def test_inductive_formulas():
    for n in range(2, 6):
        y = antisymmetrizer(n)
        y_prev = embed(antisymmetrizer(n - 1), n)
        left = unit(n).scale(0)
        right = unit(n).scale(0)
        for i in range(1, n + 1):
            coeff = q ** (i - 1)
            if (n - i) % 2:
                coeff = -coeff
            left = left + (basis_element(cycle(i, n, n)) * y_prev).scale(coeff)
            right = right + (y_prev * basis_element(cycle(n, i, n))).scale(coeff)
        assert left == y
        assert right == y


def test_mixed_degree_rejected():
    with pytest.raises(ValueError):
        unit(2) * unit(3)
    with pytest.raises(ValueError):
        unit(2, GENERIC_Q) * unit(2, cyclotomic_field(3, q_power=1))


def test_identity_suite_small():
    report = verify_identities(4)
    assert report.ok
    names = {c.name for c in report.checks}
    assert any(name.startswith("square") for name in names)
    assert any(name.startswith("three-block") for name in names)


def test_identity_suite_at_root_of_unity():
    report = verify_identities(3, cyclotomic_field(3, q_power=1))
    assert report.ok
