from fractions import Fraction

import pytest

from heckesym.exactnum import FieldSpec, PoleError, cyclotomic_field, primitive_root
from heckesym.linalg import MatrixF
from heckesym.multipoly import PolyRing
from heckesym.regular3 import (
    ProjectiveElement,
    SklParameters,
    action_on_parameters,
    center_extension,
    conjugacy_classes,
    conjugacy_report,
    cube_difference_factorization,
    generators_permute_inflections,
    hessian_field,
    hessian_generators,
    hessian_group,
    inflection_points,
    is_regular,
    is_type_A,
    j_invariant,
    preserves_relations,
    skl_relations,
    skl_symmetric_image,
    skl_tensor,
    symbolic_parameters,
    transform_point,
    translation_subgroup,
)

Q = FieldSpec("rational")


@pytest.fixture(scope="module")
def group():
    return hessian_group()


@pytest.fixture(scope="module")
def hessian_data():
    return conjugacy_report()


def test_relations_special_values():
    p = SklParameters.numeric(0, 0, 1)
    rels = skl_relations(p)
    # t_i = x_i^2: single diagonal slot each
    for i, t in enumerate(rels):
        nz = [k for k, x in enumerate(t) if not x.is_zero()]
        assert nz == [i * 3 + i]
    p = SklParameters.numeric(1, 1, 0)
    rels = skl_relations(p)
    for i, t in enumerate(rels):
        nz = sorted(k for k, x in enumerate(t) if not x.is_zero())
        up, dn = (i + 1) % 3, (i + 2) % 3
        assert nz == sorted([up * 3 + dn, dn * 3 + up])


def test_tensor_two_sided(monkeypatch=None):
    p, ring = symbolic_parameters()
    t = skl_tensor(p)
    rels = skl_relations(p)
    zero = ring.zero()
    left = [zero] * 27
    right = [zero] * 27
    for i in range(3):
        for w in range(9):
            left[i * 9 + w] = left[i * 9 + w] + rels[i][w]
            right[w * 3 + i] = right[w * 3 + i] + rels[i][w]
    assert list(t) == left
    assert list(t) == right


def test_tensor_coefficients():
    p, ring = symbolic_parameters()
    t = skl_tensor(p)

    def slot(i, j, k):
        return (i - 1) * 9 + (j - 1) * 3 + (k - 1)

    a, b, c = ring.vars()
    assert t[slot(3, 1, 2)] == a and t[slot(1, 2, 3)] == a and t[slot(2, 3, 1)] == a
    assert t[slot(2, 1, 3)] == b and t[slot(3, 2, 1)] == b and t[slot(1, 3, 2)] == b
    assert t[slot(1, 1, 1)] == c


def test_alternating_part_coefficient():
    # t - (symmetrized part) has alternating coefficient (a-b)/2
    p, ring = symbolic_parameters()
    t = skl_tensor(p)
    a, b = ring.var("a"), ring.var("b")
    half = ring.const(Fraction(1, 2))

    def slot(i, j, k):
        return (i - 1) * 9 + (j - 1) * 3 + (k - 1)

    even = [(1, 2, 3), (2, 3, 1), (3, 1, 2)]
    odd = [(2, 1, 3), (1, 3, 2), (3, 2, 1)]
    for (i, j, k) in even:
        minus = t[slot(i, j, k)] - half * (a + b)
        assert minus == half * (a - b)
    for (i, j, k) in odd:
        minus = t[slot(i, j, k)] - half * (a + b)
        assert minus == -(half * (a - b))


def test_symmetric_image():
    ring = PolyRing(("x1", "x2", "x3"))
    p = SklParameters.numeric(1, 1, 1)
    ts = skl_symmetric_image(p, ring)
    x1, x2, x3 = ring.vars()
    assert ts == 6 * x1 * x2 * x3 + x1 ** 3 + x2 ** 3 + x3 ** 3


def test_predicates():
    assert not is_regular(SklParameters.numeric(1, 1, 1))
    assert is_regular(SklParameters.numeric(1, 1, 0))
    assert not is_type_A(SklParameters.numeric(1, 1, 0))
    assert is_type_A(SklParameters.numeric(1, 1, 2))
    assert not is_regular(SklParameters.numeric(1, 0, 0))
    # (1+1+8)^3 = 1000 != 216 = 27*8
    assert is_type_A(SklParameters.numeric(1, 1, 2))
    with pytest.raises(ValueError):
        SklParameters.numeric(0, 0, 0)


def test_j_invariant():
    assert j_invariant(Q.scalar(0)).is_zero()
    assert j_invariant(Q.scalar(1)).is_zero()
    assert not j_invariant(Q.scalar(2)).is_zero()
    C3 = cyclotomic_field(3)
    eps = primitive_root(3, C3)
    assert j_invariant(eps).is_zero()  # kappa^3 = 1
    half = Q.scalar(Fraction(-1, 2))
    with pytest.raises(PoleError):
        j_invariant(half)


def test_factorization_identity():
    assert cube_difference_factorization()


def test_group_orders(group, hessian_data):
    report, data = hessian_data
    assert report.ok, report.failures()
    assert len(group) == 216
    assert data["group_order"] == 216
    assert data["translation_order"] == 9
    assert data["center_extension_order"] == 18
    assert data["quotient_order"] == 12
    assert data["order_census"] == {"1": 1, "2": 9, "3": 80, "4": 54, "6": 72}


def test_conjugacy_structure(group):
    classes = conjugacy_classes(group)
    assert sum(len(c) for c in classes) == 216
    by_order = {}
    for cls in classes:
        by_order.setdefault(cls[0].order(), []).append(len(cls))
    assert by_order[2] == [9]
    assert by_order[4] == [54]
    # the nonidentity translations form a single class of size 8
    assert 8 in by_order[3]
    T = translation_subgroup()
    nonident = [t for t in T if not t.is_identity()]
    cls8 = next(set(c) for c in classes if len(c) == 8)
    assert all(t in cls8 for t in nonident)


def test_translations_normal(group):
    T = set(translation_subgroup())
    for g in hessian_generators().values():
        for t in T:
            assert (g * t * g.inverse()) in T
    Z = center_extension()
    assert len(Z) == 18 and set(T) <= set(Z)


def test_projective_normalization():
    field = hessian_field()
    eps = primitive_root(3, field)
    M = MatrixF.identity(3, field).scale(eps)
    g = ProjectiveElement(M)
    assert g.is_identity()
    singular = MatrixF.zeros(3, 3, field)
    with pytest.raises(ValueError):
        ProjectiveElement(singular + MatrixF.zeros(3, 3, field))


def test_action_on_parameters():
    gens = hessian_generators()
    field = hessian_field()
    ident = MatrixF.identity(3, field)
    assert action_on_parameters(gens["diag"]) == ident
    assert action_on_parameters(gens["cycle"]) == ident
    sw = action_on_parameters(gens["swap"])
    # (a:b:c) -> (b:a:c)
    zero, one = field.zero(), field.one()
    assert sw == MatrixF.from_rows([[zero, one, zero], [one, zero, zero], [zero, zero, one]], field)
    # an operator moving the w-span is rejected
    shear = MatrixF.from_rows([[one, one, zero], [zero, one, zero], [zero, zero, one]], field)
    with pytest.raises(ValueError):
        action_on_parameters(ProjectiveElement(shear))


def test_preserves_relations_symbolic():
    gens = hessian_generators()
    p_sym, _ring = symbolic_parameters(order=3)
    ok, twisted = preserves_relations(gens["cycle"].matrix, p_sym)
    assert ok and twisted
    ok, twisted = preserves_relations(gens["diag"].matrix, p_sym)
    assert ok and twisted


def test_preserves_relations_numeric():
    field = hessian_field()
    gens = hessian_generators()
    p = SklParameters.numeric(1, 2, 1, field)
    ok, twisted = preserves_relations(gens["scale1"].matrix, p)
    assert not ok and twisted is False
    ok, twisted = preserves_relations(gens["swap"].matrix, p)
    assert not ok and twisted is False
    # with a = b the swap fixes the tensor line
    p_eq = SklParameters.numeric(1, 1, 2, field)
    ok, twisted = preserves_relations(gens["swap"].matrix, p_eq)
    assert ok and twisted is None


def test_inflection_points(group):
    pts = inflection_points()
    assert len(pts) == 9
    field = hessian_field()
    one = field.one()
    eps = primitive_root(3, field)
    assert any(p == (field.zero(), one, -one) for p in pts)
    # every point has a zero coordinate (lies on the three-line member)
    assert all(any(x.is_zero() for x in p) for p in pts)
    assert generators_permute_inflections()
    # the whole group permutes them as well (spot check a few elements)
    pset = set(pts)
    for g in group[:20]:
        assert {transform_point(g, p) for p in pset} == pset
