"""The three-generator quadratic family, its regularity predicates, and the
Hessian group of the cubic pencil.

The family has generators x_1, x_2, x_3 and relations

    t_i = a x_(i+1) x_(i-1) + b x_(i-1) x_(i+1) + c x_i^2,   indices mod 3.

Regularity holds when at least two parameters are nonzero and a^3, b^3, c^3
are not all equal; elliptic type A additionally needs abc != 0 and
(a^3+b^3+c^3)^3 != 27 a^3 b^3 c^3.  The degree-3 tensor t = sum x_i t_i
= sum t_i x_i spans the intersection of the two shifts of the relation
space, and its symmetric image is 3(a+b) x1 x2 x3 + c (x1^3+x2^3+x3^3).

The Hessian group is realized over Q(zeta_3) as the projective closure of
five explicit transformations; the closure order 216 and the subgroup and
conjugacy facts are asserted at runtime rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .exactnum import FieldSpec, Scalar, cyclotomic_field, primitive_root
from .exprio import format_scalar
from .linalg import MatrixF
from .multipoly import MultiPoly, PolyRing
from .report import CheckReport

__all__ = [
    "SklParameters",
    "ProjectiveElement",
    "symbolic_parameters",
    "skl_relations",
    "skl_tensor",
    "skl_symmetric_image",
    "is_regular",
    "is_type_A",
    "j_invariant",
    "hessian_field",
    "hessian_generators",
    "hessian_group",
    "translation_subgroup",
    "center_extension",
    "conjugacy_classes",
    "conjugacy_report",
    "action_on_parameters",
    "preserves_relations",
    "inflection_points",
    "transform_point",
    "generators_permute_inflections",
    "cube_difference_factorization",
]


@dataclass(frozen=True)
class SklParameters:
    """The triple (a, b, c), over any common coefficient domain."""

    a: object
    b: object
    c: object
    domain: object  # FieldSpec or PolyRing

    def __post_init__(self):
        if all(_entry_is_zero(v) for v in (self.a, self.b, self.c)):
            raise ValueError("(a, b, c) must not be identically zero")

    @staticmethod
    def numeric(a, b, c, field: Optional[FieldSpec] = None) -> "SklParameters":
        field = field or FieldSpec("rational")
        return SklParameters(field.scalar(a), field.scalar(b), field.scalar(c), field)


def _entry_is_zero(v) -> bool:
    return v.is_zero() if hasattr(v, "is_zero") else v == 0


def symbolic_parameters(order: int = 1, extra: Sequence[str] = ()) -> Tuple[SklParameters, PolyRing]:
    """Parameters a, b, c as polynomial variables (plus optional unknowns)."""
    ring = PolyRing(("a", "b", "c") + tuple(extra), order)
    return SklParameters(ring.var("a"), ring.var("b"), ring.var("c"), ring), ring


def _mod3(i: int) -> int:
    return (i - 1) % 3 + 1


def skl_relations(p: SklParameters) -> List[tuple]:
    """The degree-2 relation tensors t_1, t_2, t_3 as 9-vectors."""
    zero = p.domain.zero()
    out = []
    for i in (1, 2, 3):
        up, dn = _mod3(i + 1), _mod3(i - 1)
        vec = [zero] * 9
        vec[(up - 1) * 3 + (dn - 1)] = vec[(up - 1) * 3 + (dn - 1)] + p.a
        vec[(dn - 1) * 3 + (up - 1)] = vec[(dn - 1) * 3 + (up - 1)] + p.b
        vec[(i - 1) * 3 + (i - 1)] = vec[(i - 1) * 3 + (i - 1)] + p.c
        out.append(tuple(vec))
    return out


def skl_tensor(p: SklParameters) -> tuple:
    """t = sum_i (a x_(i-1) x_i x_(i+1) + b x_(i+1) x_i x_(i-1) + c x_i^3)."""
    zero = p.domain.zero()
    vec = [zero] * 27

    def slot(i, j, k):
        return (i - 1) * 9 + (j - 1) * 3 + (k - 1)

    for i in (1, 2, 3):
        up, dn = _mod3(i + 1), _mod3(i - 1)
        vec[slot(dn, i, up)] = vec[slot(dn, i, up)] + p.a
        vec[slot(up, i, dn)] = vec[slot(up, i, dn)] + p.b
        vec[slot(i, i, i)] = vec[slot(i, i, i)] + p.c
    return tuple(vec)


def skl_symmetric_image(p: SklParameters, ring: PolyRing) -> MultiPoly:
    """3(a+b) x1 x2 x3 + c (x1^3 + x2^3 + x3^3) in the given ring."""
    x1, x2, x3 = ring.var("x1"), ring.var("x2"), ring.var("x3")
    a, b, c = (_into_ring(v, ring) for v in (p.a, p.b, p.c))
    return 3 * (a + b) * x1 * x2 * x3 + c * (x1 ** 3 + x2 ** 3 + x3 ** 3)


def _into_ring(v, ring: PolyRing) -> MultiPoly:
    if isinstance(v, MultiPoly):
        if v.ring is ring or v.ring == ring:
            return v
        # re-express on the bigger variable set
        out = ring.zero()
        field = v.ring.coeff_field()
        for e, vec in v.terms.items():
            term = ring.const(field.from_cyc(vec))
            for name, k in zip(v.ring.variables, e):
                if k:
                    term = term * ring.var(name) ** k
            out = out + term
        return out
    return ring.const(v)


# ---------------------------------------------------------------------------
# predicates


def is_regular(p: SklParameters) -> bool:
    """At least two parameters nonzero, and not a^3 = b^3 = c^3."""
    a, b, c = p.a, p.b, p.c
    nonzero = sum(0 if _entry_is_zero(v) else 1 for v in (a, b, c))
    if nonzero < 2:
        return False
    a3, b3, c3 = a ** 3, b ** 3, c ** 3
    return not (a3 == b3 and b3 == c3)


def is_type_A(p: SklParameters) -> bool:
    """Regular with smooth elliptic point scheme."""
    if not is_regular(p):
        return False
    a, b, c = p.a, p.b, p.c
    if any(_entry_is_zero(v) for v in (a, b, c)):
        return False
    lhs = (a ** 3 + b ** 3 + c ** 3) ** 3
    rhs = 27 * a ** 3 * b ** 3 * c ** 3
    return lhs != rhs


def j_invariant(kappa: Scalar) -> Scalar:
    """j of the cubic x1^3+x2^3+x3^3+6 kappa x1x2x3 = 0."""
    field = kappa.field
    denom = (8 * kappa ** 3 + 1) ** 3
    if denom.is_zero():
        from .exactnum import PoleError

        raise PoleError("j-invariant has a pole at 8 kappa^3 = -1")
    return field.scalar(-(2 ** 12) * 27) * (kappa ** 3 - 1) ** 3 * kappa ** 3 / denom


def cube_difference_factorization(order: int = 3) -> bool:
    """(a^3+b^3+c^3)^3 - 27a^3b^3c^3 = prod_(i,j) (eps^i a + eps^j b + c)."""
    ring = PolyRing(("a", "b", "c"), order)
    a, b, c = ring.vars()
    eps = primitive_root(3, cyclotomic_field(order))
    prod = ring.one()
    for i in range(1, 4):
        for j in range(1, 4):
            prod = prod * (eps ** i * a + eps ** j * b + c)
    return prod == (a ** 3 + b ** 3 + c ** 3) ** 3 - 27 * (a * b * c) ** 3


# ---------------------------------------------------------------------------
# the Hessian group


def hessian_field() -> FieldSpec:
    return cyclotomic_field(3)


class ProjectiveElement:
    """A 3x3 invertible matrix modulo scalars, stored scalar-normalized."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: MatrixF, normalized: bool = False):
        if matrix.rows != 3 or matrix.cols != 3:
            raise ValueError("projective elements act on 3 coordinates")
        if not normalized:
            matrix = _normalize(matrix)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, *args):
        raise AttributeError("ProjectiveElement is immutable")

    def __mul__(self, other: "ProjectiveElement") -> "ProjectiveElement":
        return ProjectiveElement(self.matrix * other.matrix)

    def inverse(self) -> "ProjectiveElement":
        return ProjectiveElement(self.matrix.inverse())

    def is_identity(self) -> bool:
        return self.matrix == MatrixF.identity(3, self.matrix.domain)

    def order(self) -> int:
        acc = self
        k = 1
        while not acc.is_identity():
            acc = acc * self
            k += 1
            if k > 432:
                raise RuntimeError("order computation runaway")
        return k

    def __eq__(self, other):
        return isinstance(other, ProjectiveElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return "ProjectiveElement(%s)" % self.to_rows()

    def to_rows(self) -> list:
        return [[format_scalar(self.matrix[i, j]) for j in range(3)] for i in range(3)]


def _normalize(M: MatrixF) -> MatrixF:
    if M.det().is_zero():
        raise ValueError("projective element must be invertible")
    lead = None
    for x in M.entries:
        if not x.is_zero():
            lead = x
            break
    inv = lead.inverse()
    if inv.is_one():
        return M
    return M.scale(inv)


def _matrix(field: FieldSpec, rows) -> MatrixF:
    return MatrixF.from_rows(
        [[v if isinstance(v, Scalar) else field.scalar(v) for v in row] for row in rows], field
    )


def hessian_generators(field: Optional[FieldSpec] = None) -> Dict[str, ProjectiveElement]:
    """The five generating transformations (columns are images of x_j)."""
    field = field or hessian_field()
    eps = primitive_root(3, field)
    one, zero = field.one(), field.zero()
    gens = {
        # x1 -> x2 -> x3 -> x1
        "cycle": _matrix(field, [[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
        # x1 -> eps x1, x2 -> eps^2 x2, x3 -> x3
        "diag": _matrix(field, [[eps, zero, zero], [zero, eps * eps, zero], [zero, zero, one]]),
        # x1 -> eps x1
        "scale1": _matrix(field, [[eps, zero, zero], [zero, one, zero], [zero, zero, one]]),
        # x1 <-> x2
        "swap": _matrix(field, [[0, 1, 0], [1, 0, 0], [0, 0, 1]]),
        # x_j -> sum_i eps^(i j) x_i
        "fourier": _matrix(field, [[eps ** (i * j) for j in (1, 2, 3)] for i in (1, 2, 3)]),
    }
    return {name: ProjectiveElement(M) for name, M in gens.items()}


def _closure(generators: Sequence[ProjectiveElement], bound: int) -> List[ProjectiveElement]:
    seen = {g: None for g in generators}
    ident = None
    for g in generators:
        ident = ProjectiveElement(MatrixF.identity(3, g.matrix.domain))
        break
    if ident is not None:
        seen.setdefault(ident, None)
    frontier = list(seen)
    while frontier:
        new = []
        for g in frontier:
            for h in generators:
                prod = g * h
                if prod not in seen:
                    seen[prod] = None
                    new.append(prod)
        frontier = new
        if len(seen) > bound:
            raise RuntimeError("closure exceeded the expected bound %d" % bound)
    return list(seen)


def hessian_group(field: Optional[FieldSpec] = None) -> List[ProjectiveElement]:
    """Closure of the five generators; fails loudly unless the order is 216."""
    gens = hessian_generators(field)
    group = _closure(list(gens.values()), 216)
    if len(group) != 216:
        raise RuntimeError(
            "generator closure has order %d, not 216; the generating set "
            "assumption is violated (fallback: add a transformation permuting "
            "the nine inflection points found by search)" % len(group)
        )
    return group


def translation_subgroup(field: Optional[FieldSpec] = None) -> List[ProjectiveElement]:
    gens = hessian_generators(field)
    return _closure([gens["cycle"], gens["diag"]], 9)


def center_extension(field: Optional[FieldSpec] = None) -> List[ProjectiveElement]:
    gens = hessian_generators(field)
    return _closure([gens["cycle"], gens["diag"], gens["swap"]], 18)


def conjugacy_classes(group: List[ProjectiveElement], generators: Optional[Sequence[ProjectiveElement]] = None) -> List[List[ProjectiveElement]]:
    """Partition into conjugacy classes (orbits under generator conjugation)."""
    if generators is None:
        field = group[0].matrix.domain if group else hessian_field()
        generators = list(hessian_generators(field).values())
    gen_pairs = [(g, g.inverse()) for g in generators]
    unassigned = dict.fromkeys(group)
    classes = []
    while unassigned:
        seed = next(iter(unassigned))
        orbit = {seed: None}
        stack = [seed]
        while stack:
            g = stack.pop()
            for h, hinv in gen_pairs:
                cand = h * g * hinv
                if cand not in orbit:
                    orbit[cand] = None
                    stack.append(cand)
        for g in orbit:
            unassigned.pop(g, None)
        classes.append(list(orbit))
    classes.sort(key=lambda cls: (cls[0].order(), len(cls)))
    return classes


def conjugacy_report(field: Optional[FieldSpec] = None) -> Tuple[CheckReport, dict]:
    """Class structure of the Hessian group, with the facts asserted."""
    field = field or hessian_field()
    report = CheckReport("hessian-group")
    group = hessian_group(field)
    T = translation_subgroup(field)
    Z = center_extension(field)
    report.record("order", "|G| = 216", len(group) == 216, "got %d" % len(group))
    report.record("translations", "|T| = 9", len(T) == 9, "got %d" % len(T))
    report.record("center-extension", "|Z| = 18", len(Z) == 18, "got %d" % len(Z))
    report.record("quotient", "|G/Z| = 12", len(group) // len(Z) == 12 and len(group) % len(Z) == 0)
    t_set = set(T)
    normal = all((g * t * g.inverse()) in t_set for g in hessian_generators(field).values() for t in T)
    report.record("translations-normal", "T normal in G, |G/T| = 24", normal and len(group) // len(T) == 24)

    gens = list(hessian_generators(field).values())
    classes = conjugacy_classes(group, gens)
    orders = {}
    for g in group:
        orders[g] = g.order()
    census: Dict[int, int] = {}
    for g, o in orders.items():
        census[o] = census.get(o, 0) + 1

    def classes_of_order(k):
        return [cls for cls in classes if orders[cls[0]] == k]

    two_classes = classes_of_order(2)
    four_classes = classes_of_order(4)
    report.record(
        "order2-single-class",
        "all order-2 elements are conjugate",
        len(two_classes) == 1 and len(two_classes[0]) == census.get(2, 0),
        "classes: %s" % [len(c) for c in two_classes],
    )
    report.record(
        "order4-single-class",
        "all order-4 elements are conjugate",
        len(four_classes) == 1 and len(four_classes[0]) == census.get(4, 0),
        "classes: %s" % [len(c) for c in four_classes],
    )
    nonident_T = [t for t in T if not t.is_identity()]
    in_one = None
    for cls in classes:
        if nonident_T[0] in set(cls):
            in_one = set(cls)
            break
    report.record(
        "translations-conjugate",
        "the 8 nonidentity translations are conjugate in G",
        in_one is not None and all(t in in_one for t in nonident_T),
    )
    allowed = {1, 2, 3, 4, 6, 9, 12} & {d for d in range(1, 217) if 216 % d == 0}
    report.record(
        "order-census-support",
        "element orders lie in {1,2,3,4,6,9,12} and divide 216",
        all(o in allowed for o in census),
        "census %s" % census,
    )
    data = {
        "group_order": len(group),
        "translation_order": len(T),
        "center_extension_order": len(Z),
        "quotient_order": len(group) // len(Z),
        "order_census": {str(k): v for k, v in sorted(census.items())},
        "classes": [
            {
                "size": len(cls),
                "element_order": orders[cls[0]],
                "representative": cls[0].to_rows(),
            }
            for cls in classes
        ],
    }
    return report, data


# ---------------------------------------------------------------------------
# the action on parameters and the invariant data


def _w_basis_slots() -> List[List[int]]:
    def slot(i, j, k):
        return (i - 1) * 9 + (j - 1) * 3 + (k - 1)

    w1 = [slot(_mod3(i - 1), i, _mod3(i + 1)) for i in (1, 2, 3)]
    w2 = [slot(_mod3(i + 1), i, _mod3(i - 1)) for i in (1, 2, 3)]
    w3 = [slot(i, i, i) for i in (1, 2, 3)]
    return [w1, w2, w3]


def _apply_tensor_cube(tau: MatrixF, vec: Sequence) -> list:
    """tau^(x)3 applied to a 27-vector over the same field."""
    field_zero = tau.domain.zero()
    out = [field_zero] * 27
    cols = [[(i, tau[i, j]) for i in range(3) if not tau[i, j].is_zero()] for j in range(3)]
    for idx, x in enumerate(vec):
        if _entry_is_zero(x):
            continue
        i, rest = divmod(idx, 9)
        j, k = divmod(rest, 3)
        for a, ca in cols[i]:
            for b, cb in cols[j]:
                cab = ca * cb
                for c, cc in cols[k]:
                    tgt = a * 9 + b * 3 + c
                    out[tgt] = out[tgt] + (cab * cc) * x
    return out


def action_on_parameters(tau: ProjectiveElement) -> MatrixF:
    """Matrix of tau^(x)3 on the invariant 3-space spanned by
    w1 = sum x_(i-1) x_i x_(i+1), w2 = sum x_(i+1) x_i x_(i-1), w3 = sum x_i^3.

    The parameter triple transforms by this matrix: (a:b:c) -> M (a,b,c).
    """
    field = tau.matrix.domain
    zero, one = field.zero(), field.one()
    slots = _w_basis_slots()
    cols = []
    for w_slots in slots:
        vec = [zero] * 27
        for s in w_slots:
            vec[s] = one
        img = _apply_tensor_cube(tau.matrix, vec)
        # read off the (w1, w2, w3) coordinates and verify stability
        coords = [img[slots[r][0]] for r in range(3)]
        recon = [zero] * 27
        for r in range(3):
            if not coords[r].is_zero():
                for s in slots[r]:
                    recon[s] = recon[s] + coords[r]
        if any(img[i] != recon[i] for i in range(27)):
            raise ValueError("the invariant 3-space is not stable under this operator")
        cols.append(coords)
    return MatrixF.from_rows(cols, field).transpose()


def preserves_relations(theta: MatrixF, p: SklParameters) -> Tuple[bool, Optional[bool]]:
    """Whether theta^(x)3 fixes the line spanned by the degree-3 tensor.

    Returns (line_stable, det_twisted) where det_twisted reports, when
    a != b, whether theta maps the symmetric cubic to det(theta) times
    itself (the condition that actually extends theta to an automorphism);
    it is None when a = b.
    """
    t = skl_tensor(p)
    img = _apply_tensor_cube(theta, t) if isinstance(p.domain, FieldSpec) else _apply_tensor_cube_poly(theta, t, p.domain)
    line_stable = _proportional(img, t)
    det_twisted: Optional[bool] = None
    if p.a != p.b:
        if isinstance(p.domain, PolyRing):
            ring = PolyRing(p.domain.variables + ("x1", "x2", "x3"), p.domain.order)
        else:
            ring = PolyRing(("x1", "x2", "x3"), p.domain.order)
        ts = skl_symmetric_image(p, ring)
        sub = {}
        for j, name in enumerate(("x1", "x2", "x3")):
            acc = ring.zero()
            for i, iname in enumerate(("x1", "x2", "x3")):
                c = theta[i, j]
                if not c.is_zero():
                    acc = acc + c * ring.var(iname)
            sub[name] = acc
        det_twisted = ts.substitute(sub) == ring.const(theta.det()) * ts
    return line_stable, det_twisted


def _apply_tensor_cube_poly(tau: MatrixF, vec: Sequence, ring: PolyRing) -> list:
    out = [ring.zero()] * 27
    cols = [[(i, tau[i, j]) for i in range(3) if not tau[i, j].is_zero()] for j in range(3)]
    for idx, x in enumerate(vec):
        if _entry_is_zero(x):
            continue
        i, rest = divmod(idx, 9)
        j, k = divmod(rest, 3)
        for a, ca in cols[i]:
            for b, cb in cols[j]:
                cab = ca * cb
                for c, cc in cols[k]:
                    tgt = a * 9 + b * 3 + c
                    out[tgt] = out[tgt] + (cab * cc) * x
    return out


def _proportional(u: Sequence, v: Sequence) -> bool:
    """u and v span the same line (or u = 0)."""
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return True


def inflection_points(field: Optional[FieldSpec] = None) -> List[tuple]:
    """The nine common points of the cubic pencil, scalar-normalized."""
    field = field or hessian_field()
    eps = primitive_root(3, field)
    one, zero = field.one(), field.zero()
    pts = []
    for r in (one, eps, eps * eps):
        pts.append((zero, one, -r))
        pts.append((-r, zero, one))
        pts.append((one, -r, zero))
    return [_normalize_point(p) for p in pts]


def _normalize_point(p: tuple) -> tuple:
    for x in p:
        if not x.is_zero():
            inv = x.inverse()
            return tuple(inv * y for y in p)
    raise ValueError("zero point")


def transform_point(g: ProjectiveElement, p: tuple) -> tuple:
    return _normalize_point(tuple(g.matrix.apply(p)))


def generators_permute_inflections(field: Optional[FieldSpec] = None) -> bool:
    field = field or hessian_field()
    pts = set(inflection_points(field))
    for g in hessian_generators(field).values():
        if {transform_point(g, p) for p in pts} != pts:
            return False
    return True
