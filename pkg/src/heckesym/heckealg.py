"""The Iwahori-Hecke algebra H_n(q) of the symmetric group.

Elements are finite linear combinations of the standard basis {T_sigma}.
The generators satisfy the braid relations together with the quadratic
relation (T_i - q)(T_i + 1) = 0, so multiplication by a generator obeys

    T_i * T_sigma = T_(tau_i sigma)                       if the length goes up,
    T_i * T_sigma = (q-1) T_sigma + q T_(tau_i sigma)     otherwise.

General products reduce the left factor to reduced words (smallest left
descent first) and apply the generator rule; no multiplication table is
stored.  Antisymmetrizers and their partial factorizations over Young
subgroups follow the standard q-weighted signed sums.
"""

from __future__ import annotations

from typing import Dict, List

from .exactnum import FieldSpec, GENERIC_Q, Scalar, qfact
from .permgroup import (
    Composition,
    Perm,
    coset_reps,
    cycle,
    enumerate_perms,
    identity,
    shift,
    transposition,
    young_elements,
)
from .report import CheckReport

__all__ = [
    "HeckeElement",
    "basis_element",
    "unit",
    "generator",
    "antisymmetrizer",
    "partial_y",
    "shift_element",
    "verify_identities",
]


class HeckeElement:
    """A finite sum of scaled standard basis elements of H_n(q)."""

    __slots__ = ("n", "field", "terms")

    def __init__(self, n: int, field: FieldSpec, terms: Dict[Perm, Scalar]):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "terms", {p: c for p, c in terms.items() if not c.is_zero()})

    def __setattr__(self, *args):
        raise AttributeError("HeckeElement is immutable")

    def _check_compatible(self, other: "HeckeElement"):
        if self.n != other.n or self.field != other.field:
            raise ValueError("mixed ambient degree or field")

    def coefficient(self, p: Perm) -> Scalar:
        return self.terms.get(p, self.field.zero())

    def is_zero(self) -> bool:
        return not self.terms

    def support_size(self) -> int:
        return len(self.terms)

    # -- linear structure

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check_compatible(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            cur = out.get(p)
            out[p] = c if cur is None else cur + c
        return HeckeElement(self.n, self.field, out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.n, self.field, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        if not isinstance(c, Scalar):
            c = self.field.scalar(c)
        return HeckeElement(self.n, self.field, {p: c * v for p, v in self.terms.items()})

    # -- multiplication

    def _gen_mul(self, i: int) -> "HeckeElement":
        """Left multiplication by the generator T_i."""
        q = self.field.q()
        q_minus_1 = q - 1
        tau = transposition(i, self.n)
        out: Dict[Perm, Scalar] = {}

        def bump(p: Perm, c: Scalar):
            cur = out.get(p)
            out[p] = c if cur is None else cur + c

        for p, c in self.terms.items():
            # tau_i * p raises length iff the value i appears before i+1 in p
            tp = tau * p
            pinv_i = p.word.index(i)
            pinv_i1 = p.word.index(i + 1)
            if pinv_i < pinv_i1:
                bump(tp, c)
            else:
                bump(p, q_minus_1 * c)
                bump(tp, q * c)
        return HeckeElement(self.n, self.field, out)

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        self._check_compatible(other)
        out = HeckeElement(self.n, self.field, {})
        for p, c in self.terms.items():
            piece = other
            for i in reversed(p.reduced_word()):
                piece = piece._gen_mul(i)
            out = out + piece.scale(c)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, HeckeElement)
            and self.n == other.n
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.field, frozenset(self.terms.items())))

    def __repr__(self):
        from .exprio import format_scalar

        if not self.terms:
            return "HeckeElement(0, n=%d)" % self.n
        bits = []
        for p in sorted(self.terms, key=lambda w: (w.length(), w.word)):
            bits.append("(%s)*T%s" % (format_scalar(self.terms[p]), p.word))
        return "HeckeElement(%s)" % " + ".join(bits)


def basis_element(p: Perm, field: FieldSpec = GENERIC_Q) -> HeckeElement:
    return HeckeElement(p.degree, field, {p: field.one()})


def unit(n: int, field: FieldSpec = GENERIC_Q) -> HeckeElement:
    return basis_element(identity(n), field)


def generator(i: int, n: int, field: FieldSpec = GENERIC_Q) -> HeckeElement:
    return basis_element(transposition(i, n), field)


def antisymmetrizer(n: int, field: FieldSpec = GENERIC_Q) -> HeckeElement:
    """y_n = sum over S_n of (-1)^len q^(maxlen - len) T_sigma."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n == 0:
        return HeckeElement(0, field, {Perm(()): field.one()})
    q = field.q()
    maxlen = n * (n - 1) // 2
    terms = {}
    for p in enumerate_perms(n):
        l = p.length()
        c = q ** (maxlen - l)
        terms[p] = c if l % 2 == 0 else -c
    return HeckeElement(n, field, terms)


def partial_y(n: int, comp: Composition, which: str, field: FieldSpec = GENERIC_Q) -> HeckeElement:
    """Partial antisymmetrizer for a Young subgroup of S_n.

    which="subgroup" sums over the subgroup with exponent offset equal to
    its longest length; which="left" / "right" sum over the distinguished
    representatives of S_n over (resp. under) the subgroup with offset
    n(n-1)/2 minus the subgroup's longest length.
    """
    if comp.total != n:
        raise ValueError("composition must sum to %d" % n)
    q = field.q()
    sub_len = comp.longest_length()
    if which == "subgroup":
        support = young_elements(n, comp)
        offset = sub_len
    elif which in ("left", "right"):
        support = coset_reps(n, comp, which)
        offset = n * (n - 1) // 2 - sub_len
    else:
        raise ValueError("which must be 'subgroup', 'left' or 'right'")
    terms = {}
    for p in support:
        l = p.length()
        c = q ** (offset - l)
        terms[p] = c if l % 2 == 0 else -c
    return HeckeElement(n, field, terms)


def shift_element(h: HeckeElement, k: int, m: int = 0) -> HeckeElement:
    """Image of h under T_i -> T_(k+i), with m further fixed points on top."""
    n = h.n + k + m
    return HeckeElement(n, h.field, {shift(p, k, m): c for p, c in h.terms.items()})


def embed(h: HeckeElement, n: int) -> HeckeElement:
    """H_m as the subalgebra of H_n generated by the low T_i (m <= n)."""
    if n < h.n:
        raise ValueError("cannot embed into a smaller algebra")
    return shift_element(h, 0, n - h.n)


# ---------------------------------------------------------------------------
# identity suite


def _two_part_comps(n: int) -> List[Composition]:
    return [Composition((k, n - k)) for k in range(1, n)]


def verify_identities(n_max: int = 5, field: FieldSpec = GENERIC_Q) -> CheckReport:
    """Exact identity suite for the antisymmetrizers, degrees up to n_max."""
    if n_max > 6:
        raise ValueError("identity suite is desk scale: n_max <= 6")
    report = CheckReport("hecke-identities")

    def eq(name, rule, lhs, rhs):
        diff = lhs - rhs
        if diff.is_zero():
            report.record(name, rule, True)
        else:
            witness = next(iter(diff.terms))
            from .exprio import format_scalar

            report.record(
                name,
                rule,
                False,
                "first differing term T%s: %s vs %s"
                % (witness.word, format_scalar(lhs.coefficient(witness)), format_scalar(rhs.coefficient(witness))),
            )

    for n in range(1, n_max + 1):
        y = antisymmetrizer(n, field)

        eq("square.n%d" % n, "y_n^2 = [n]!_q y_n", y * y, y.scale(qfact(n, field)))

        for i in range(1, n):
            Ti = generator(i, n, field)
            eq("gen-left.n%d.i%d" % (n, i), "T_i y_n = -y_n", Ti * y, -y)
            eq("gen-right.n%d.i%d" % (n, i), "y_n T_i = -y_n", y * Ti, -y)

        for p in enumerate_perms(n):
            if p.length() in (0, 1):
                continue
            sign = -1 if p.length() % 2 else 1
            expected = y.scale(sign)
            eq(
                "basis-left.n%d.%s" % (n, "".join(map(str, p.word))),
                "T_sigma y_n = (-1)^len y_n",
                basis_element(p, field) * y,
                expected,
            )

        for comp in _two_part_comps(n):
            tag = "%d,%d" % comp.parts
            y_sub = partial_y(n, comp, "subgroup", field)
            eq(
                "factor-left.n%d.%s" % (n, tag),
                "y_n = y(S_n/S') y(S')",
                partial_y(n, comp, "left", field) * y_sub,
                y,
            )
            eq(
                "factor-right.n%d.%s" % (n, tag),
                "y_n = y(S') y(S'\\S_n)",
                y_sub * partial_y(n, comp, "right", field),
                y,
            )
            k, l = comp.parts
            eq(
                "subgroup-split.n%d.%s" % (n, tag),
                "y(S_(k,l)) = y_k shift(y_l, k)",
                y_sub,
                shift_element(antisymmetrizer(k, field), 0, l) * shift_element(antisymmetrizer(l, field), k),
            )

        # recursion in the top degree: y_(n/k,n-k) for the next degree up
        if n < n_max:
            for k in range(1, n + 1):
                lhs = partial_y(n + 1, Composition((k, n + 1 - k)), "left", field)
                c = cycle(n + 1, k, n + 1)
                term1 = embed(partial_y(n, Composition((k, n - k)) if k < n else Composition((n,)), "left", field), n + 1)
                term1 = term1.scale(field.q() ** k)
                if k > 1:
                    prefix = partial_y(n, Composition((k - 1, n + 1 - k)), "left", field)
                else:
                    prefix = unit(n, field)
                term2 = (embed(prefix, n + 1) * basis_element(c, field)).scale(
                    -1 if (n + 1 - k) % 2 else 1
                )
                eq(
                    "coset-recursion.n%d.k%d" % (n + 1, k),
                    "y_(n+1/k,n+1-k) = q^k y_(n/k,n-k) + (-1)^(n+1-k) y_(n/k-1,n+1-k) T_c",
                    lhs,
                    term1 + term2,
                )

        # inductive formulas via the one-row coset space
        if n >= 2:
            q = field.q()
            left = HeckeElement(n, field, {})
            right = HeckeElement(n, field, {})
            y_prev = embed(antisymmetrizer(n - 1, field), n)
            for i in range(1, n + 1):
                coeff = q ** (i - 1)
                if (n - i) % 2:
                    coeff = -coeff
                left = left + (basis_element(cycle(i, n, n), field) * y_prev).scale(coeff)
                right = right + (y_prev * basis_element(cycle(n, i, n), field)).scale(coeff)
            eq("induct-left.n%d" % n, "y_n = sum (-1)^(n-i) q^(i-1) T_(i~n) y_(n-1)", left, y)
            eq("induct-right.n%d" % n, "y_n = y_(n-1) sum (-1)^(n-i) q^(i-1) T_(n~i)", right, y)

    # three-block coset factorization (associativity of the star product)
    for k in range(0, n_max + 1):
        for l in range(0, n_max + 1 - k):
            for m in range(0, n_max + 1 - k - l):
                n = k + l + m
                if n < 2 or n > n_max:
                    continue
                lhs = _coset_y(n, k + l, m, field) * embed(_coset_y(k + l, k, l, field), n)
                rhs = _coset_y(n, k, l + m, field) * shift_element(_coset_y(l + m, l, m, field), k)
                eq(
                    "three-block.k%d.l%d.m%d" % (k, l, m),
                    "y_(n/k+l,m) y_(k+l/k,l) = y_(n/k,l+m) shift(y_(l+m/l,m), k)",
                    lhs,
                    rhs,
                )
    return report


def _coset_y(n: int, k: int, l: int, field: FieldSpec) -> HeckeElement:
    """y(S_n / S_(k,l)) allowing empty parts (the unit when k or l is 0)."""
    if k + l != n:
        raise ValueError("parts must sum to n")
    if n == 0:
        return HeckeElement(0, field, {Perm(()): field.one()})
    if k == 0 or l == 0:
        return unit(n, field)
    return partial_y(n, Composition((k, l)), "left", field)
