"""Exact scalar arithmetic for every computation in this package.

A scalar is a fraction num/den of polynomials in the parameter q whose
coefficients live in a cyclotomic extension Q(zeta_m) of the rationals
(m = 1 gives plain rationals).  Three field kinds are exposed:

  rational    -- Q; num and den are constants, den normalized to 1
  cyclotomic  -- Q(zeta_m), elements reduced modulo the m-th cyclotomic
                 polynomial; num and den constants, den = 1
  ratfunc_q   -- rational functions in a formal variable q over Q(zeta_m);
                 kept reduced (gcd removed) with monic denominator

Canonical form is unique per value, so == is reliable and scalars hash.
All values are immutable; operations are pure.

Cyclotomic coefficient vectors are dense tuples of Fraction of length
deg Phi_m.  Polynomials in q are tuples of such vectors, low degree first,
with no trailing zeros (the zero polynomial is the empty tuple).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

__all__ = [
    "FieldSpec",
    "Scalar",
    "PoleError",
    "qint",
    "qfact",
    "qbinom",
    "specialize",
    "primitive_root",
]

Cyc = Tuple[Fraction, ...]
QPoly = Tuple[Cyc, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class PoleError(ZeroDivisionError):
    """Raised when a rational function is evaluated at a zero of its denominator."""


# ---------------------------------------------------------------------------
# cyclotomic polynomials and reduction data, cached per order


def cyclotomic_polynomial(m: int) -> Tuple[int, ...]:
    """Integer coefficients of Phi_m, low degree first, monic."""
    if m < 1:
        raise ValueError("cyclotomic order must be >= 1")
    # start from x^m - 1 and strip Phi_d for each proper divisor d
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _zpoly_exact_div(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _zpoly_exact_div(num: list, den: list) -> list:
    """Exact division of integer polynomials, low degree first."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1] // den[-1]
        out[k] = c
        for j, dj in enumerate(den):
            num[k + j] -= c * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("non-exact polynomial division")
    return out


class _CycCtx:
    """Reduction tables for arithmetic modulo Phi_m."""

    __slots__ = ("m", "deg", "zero", "one", "reductions")

    def __init__(self, m: int):
        phi = cyclotomic_polynomial(m)
        d = len(phi) - 1
        self.m = m
        self.deg = d
        self.zero = (_ZERO,) * d
        self.one = (_ONE,) + (_ZERO,) * (d - 1)
        # x^j mod Phi_m for j = d .. 2d-2, as coefficient tuples
        reds = []
        cur = [Fraction(-phi[i], phi[d]) for i in range(d)]
        reds.append(tuple(cur))
        for _ in range(d - 2):
            nxt = [_ZERO] + cur[: d - 1]
            top = cur[d - 1]
            if top:
                for i in range(d):
                    nxt[i] += top * reds[0][i]
            cur = nxt
            reds.append(tuple(cur))
        self.reductions = tuple(reds)

    def root(self) -> Cyc:
        """The residue class of x, a primitive m-th root of unity."""
        if self.deg == 1:
            # Phi_1 = x-1, Phi_2 = x+1
            return (_ONE,) if self.m == 1 else (-_ONE,)
        out = [_ZERO] * self.deg
        out[1] = _ONE
        return tuple(out)

    def mul(self, a: Cyc, b: Cyc) -> Cyc:
        d = self.deg
        if d == 1:
            return (a[0] * b[0],)
        prod = [_ZERO] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        out = prod[:d]
        for j in range(d, 2 * d - 1):
            c = prod[j]
            if c:
                red = self.reductions[j - d]
                for i in range(d):
                    out[i] += c * red[i]
        return tuple(out)

    def inv(self, a: Cyc) -> Cyc:
        if not any(a):
            raise ZeroDivisionError("division by zero")
        if self.deg == 1:
            return (1 / a[0],)
        # extended Euclid in Q[x] against Phi_m
        phi = cyclotomic_polynomial(self.m)
        r0 = [Fraction(c) for c in phi]
        r1 = list(a)
        s0: list = [_ZERO]
        s1: list = [_ONE]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                c = 1 / r1[0]
                out = [x * c for x in s1]
                out += [_ZERO] * (self.deg - len(out))
                return tuple(out[: self.deg])
            q, r = _qpoly_divmod_frac(r0, r1)
            s0, s1 = s1, _frac_poly_sub(s0, _frac_poly_mul(q, s1))
            r0, r1 = r1, r

    def embed(self, a: Cyc, target: "_CycCtx") -> Cyc:
        """Image of a under zeta_m -> zeta_M^(M/m); requires m | M."""
        if target.m % self.m:
            raise ValueError("no embedding of Q(zeta_%d) into Q(zeta_%d)" % (self.m, target.m))
        step = target.m // self.m
        out = target.zero
        pw = target.one
        gen = target.root()
        gen_step = gen
        for _ in range(step - 1):
            gen_step = target.mul(gen_step, gen)
        for coeff in a:
            if coeff:
                term = tuple(coeff * x for x in pw)
                out = tuple(u + v for u, v in zip(out, term))
            pw = target.mul(pw, gen_step)
        return out


def _frac_poly_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _frac_poly_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    a = a + [_ZERO] * (n - len(a))
    b = b + [_ZERO] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _qpoly_divmod_frac(num: list, den: list) -> tuple:
    num = list(num)
    while den and not den[-1]:
        den = den[:-1]
    q = [_ZERO] * max(len(num) - len(den) + 1, 0)
    inv_lead = 1 / den[-1]
    for k in range(len(q) - 1, -1, -1):
        c = num[k + len(den) - 1] * inv_lead
        if c:
            q[k] = c
            for j, dj in enumerate(den):
                if dj:
                    num[k + j] -= c * dj
    rem = num[: len(den) - 1]
    while rem and not rem[-1]:
        rem.pop()
    return q, rem


_CYC_CACHE: dict = {}


def _cycctx(m: int) -> _CycCtx:
    ctx = _CYC_CACHE.get(m)
    if ctx is None:
        ctx = _CYC_CACHE[m] = _CycCtx(m)
    return ctx


# ---------------------------------------------------------------------------
# field specification


@dataclass(frozen=True)
class FieldSpec:
    """Which exact field a computation runs over.

    kind   -- "rational", "cyclotomic" or "ratfunc_q"
    order  -- cyclotomic order m of the coefficient field (1 for plain Q)
    qval   -- for non-generic kinds, the value bound to the symbol q,
              as a coefficient vector over Q(zeta_order); None if unbound
    """

    kind: str
    order: int = 1
    qval: Optional[Cyc] = None

    def __post_init__(self):
        if self.kind not in ("rational", "cyclotomic", "ratfunc_q"):
            raise ValueError("unknown field kind %r" % (self.kind,))
        if self.order < 1:
            raise ValueError("cyclotomic order must be >= 1")
        if self.kind == "rational" and self.order != 1:
            raise ValueError("rational field has order 1")
        if self.kind == "ratfunc_q" and self.qval is not None:
            raise ValueError("q is the formal variable of a ratfunc_q field")
        if self.qval is not None and len(self.qval) != _cycctx(self.order).deg:
            raise ValueError("bound q has wrong coefficient length")

    # -- constructors for scalars of this field

    def _ctx(self) -> _CycCtx:
        return _cycctx(self.order)

    def zero(self) -> "Scalar":
        return Scalar(self, (), (self._ctx().one,))

    def one(self) -> "Scalar":
        ctx = self._ctx()
        return Scalar(self, (ctx.one,), (ctx.one,))

    def scalar(self, value: Union[int, Fraction]) -> "Scalar":
        ctx = self._ctx()
        f = Fraction(value)
        if not f:
            return self.zero()
        num = ((f,) + (_ZERO,) * (ctx.deg - 1),)
        return Scalar(self, num, (ctx.one,))

    def from_cyc(self, coeffs) -> "Scalar":
        """Scalar from a coefficient vector over Q(zeta_order)."""
        ctx = self._ctx()
        vec = tuple(Fraction(c) for c in coeffs)
        if len(vec) != ctx.deg:
            raise ValueError("coefficient vector must have length %d" % ctx.deg)
        if not any(vec):
            return self.zero()
        return Scalar(self, (vec,), (ctx.one,))

    def q(self) -> "Scalar":
        """The parameter q: formal in ratfunc_q, else the bound value."""
        ctx = self._ctx()
        if self.kind == "ratfunc_q":
            return Scalar(self, (ctx.zero, ctx.one), (ctx.one,))
        if self.qval is None:
            raise ValueError("q is not bound in this field")
        if not any(self.qval):
            raise ValueError("q must be nonzero")
        return Scalar(self, (self.qval,), (ctx.one,))

    def e(self) -> "Scalar":
        """The primitive root of unity of the declared order."""
        ctx = self._ctx()
        return Scalar(self, (ctx.root(),), (ctx.one,))

    def with_q(self, q0: "Scalar") -> "FieldSpec":
        """Same field with q bound to the given constant."""
        if self.kind == "ratfunc_q":
            raise ValueError("cannot bind q in a ratfunc_q field")
        if q0.field != FieldSpec(self.kind, self.order):
            raise ValueError("q value must be a constant of this field")
        return FieldSpec(self.kind, self.order, q0.constant())


RATIONAL = FieldSpec("rational")
GENERIC_Q = FieldSpec("ratfunc_q")


def cyclotomic_field(order: int, q_power: Optional[int] = None) -> FieldSpec:
    """Q(zeta_order); optionally with q bound to zeta_order^q_power."""
    ctx = _cycctx(order)
    if q_power is None:
        return FieldSpec("cyclotomic", order)
    root = ctx.root()
    val = ctx.one
    for _ in range(q_power % order if order > 1 else 0):
        val = ctx.mul(val, root)
    if order == 1:
        val = ctx.one
    return FieldSpec("cyclotomic", order, val)


# ---------------------------------------------------------------------------
# polynomial helpers over a cyclotomic context (tuples, low degree first)


def _ptrim(coeffs: list) -> QPoly:
    n = len(coeffs)
    while n and not any(coeffs[n - 1]):
        n -= 1
    return tuple(coeffs[:n])


def _padd(ctx: _CycCtx, a: QPoly, b: QPoly) -> QPoly:
    if not a:
        return b
    if not b:
        return a
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else ctx.zero
        y = b[i] if i < len(b) else ctx.zero
        out.append(tuple(u + v for u, v in zip(x, y)))
    return _ptrim(out)


def _pneg(a: QPoly) -> QPoly:
    return tuple(tuple(-u for u in c) for c in a)


def _pmul(ctx: _CycCtx, a: QPoly, b: QPoly) -> QPoly:
    if not a or not b:
        return ()
    if len(a) == 1 and a[0] == ctx.one:
        return b
    if len(b) == 1 and b[0] == ctx.one:
        return a
    out = [ctx.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if any(ai):
            for j, bj in enumerate(b):
                if any(bj):
                    t = ctx.mul(ai, bj)
                    out[i + j] = tuple(u + v for u, v in zip(out[i + j], t))
    return _ptrim(out)


def _pdivmod(ctx: _CycCtx, num: QPoly, den: QPoly) -> tuple:
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    num_l = list(num)
    dn = len(den)
    if len(num_l) < dn:
        return (), num
    inv_lead = ctx.inv(den[-1])
    qcoeffs = [ctx.zero] * (len(num_l) - dn + 1)
    for k in range(len(qcoeffs) - 1, -1, -1):
        c = ctx.mul(num_l[k + dn - 1], inv_lead)
        if any(c):
            qcoeffs[k] = c
            for j in range(dn):
                if any(den[j]):
                    t = ctx.mul(c, den[j])
                    num_l[k + j] = tuple(u - v for u, v in zip(num_l[k + j], t))
    return _ptrim(qcoeffs), _ptrim(num_l[: dn - 1])


def _pgcd(ctx: _CycCtx, a: QPoly, b: QPoly) -> QPoly:
    while b:
        a, b = b, _pdivmod(ctx, a, b)[1]
    if not a:
        return ()
    inv_lead = ctx.inv(a[-1])
    return tuple(ctx.mul(c, inv_lead) for c in a)


def _pmonic_scale(ctx: _CycCtx, num: QPoly, den: QPoly) -> tuple:
    """Reduce the fraction num/den: gcd removed, monic denominator."""
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return (), (ctx.one,)
    if len(den) == 1 and den[0] == ctx.one:
        return num, den
    g = _pgcd(ctx, num, den)
    if len(g) > 1:
        num = _pdivmod(ctx, num, g)[0]
        den = _pdivmod(ctx, den, g)[0]
    lead = den[-1]
    if lead != ctx.one:
        inv = ctx.inv(lead)
        num = tuple(ctx.mul(c, inv) for c in num)
        den = tuple(ctx.mul(c, inv) for c in den)
    return num, den


# ---------------------------------------------------------------------------
# scalars


class Scalar:
    """Immutable element of an exact field; see the module docstring."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: FieldSpec, num: QPoly, den: QPoly):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *args):
        raise AttributeError("Scalar is immutable")

    # -- coercion

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise ValueError("mixed fields: %r vs %r" % (self.field, other.field))
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.scalar(other)
        return NotImplemented  # type: ignore[return-value]

    # -- predicates and accessors

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        ctx = self.field._ctx()
        return self.num == (ctx.one,) and self.den == (ctx.one,)

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant(self) -> Cyc:
        """Coefficient vector of a constant scalar."""
        if not self.is_constant():
            raise ValueError("scalar is not constant in q")
        ctx = self.field._ctx()
        if not self.num:
            return ctx.zero
        if self.den != (ctx.one,):
            return ctx.mul(self.num[0], ctx.inv(self.den[0]))
        return self.num[0]

    def rational(self) -> Fraction:
        """The value as a Fraction; requires a rational constant."""
        vec = self.constant()
        if any(vec[1:]):
            raise ValueError("scalar is not rational")
        return vec[0]

    # -- arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        ctx = self.field._ctx()
        if self.den == other.den:
            num = _padd(ctx, self.num, other.num)
            den = self.den
        else:
            num = _padd(ctx, _pmul(ctx, self.num, other.den), _pmul(ctx, other.num, self.den))
            den = _pmul(ctx, self.den, other.den)
        num, den = _pmonic_scale(ctx, num, den)
        return Scalar(self.field, num, den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, _pneg(self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        ctx = self.field._ctx()
        num = _pmul(ctx, self.num, other.num)
        if not num:
            return self.field.zero()
        den = _pmul(ctx, self.den, other.den)
        num, den = _pmonic_scale(ctx, num, den)
        return Scalar(self.field, num, den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        ctx = self.field._ctx()
        num, den = _pmonic_scale(ctx, self.den, self.num)
        return Scalar(self.field, num, den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.inverse()
            exponent = -exponent
        out = self.field.one()
        while exponent:
            if exponent & 1:
                out = out * base
            base = base * base
            exponent >>= 1
        return out

    # -- comparison and hashing

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.num == other.num and self.den == other.den

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.field, self.num, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        from .exprio import format_scalar

        return "Scalar(%s)" % format_scalar(self)

    def __bool__(self):
        return bool(self.num)


# ---------------------------------------------------------------------------
# q-combinatorics


def qint(n: int, field: FieldSpec = GENERIC_Q) -> Scalar:
    """[n]_q = 1 + q + ... + q^(n-1); 0 for n = 0."""
    if n < 0:
        raise ValueError("q-integer needs n >= 0")
    q = field.q()
    out = field.zero()
    power = field.one()
    for _ in range(n):
        out = out + power
        power = power * q
    return out


def qfact(n: int, field: FieldSpec = GENERIC_Q) -> Scalar:
    """[n]!_q = product of [k]_q for k = 1..n; 1 for n = 0."""
    if n < 0:
        raise ValueError("q-factorial needs n >= 0")
    out = field.one()
    for k in range(1, n + 1):
        out = out * qint(k, field)
    return out


def qbinom(n: int, k: int, field: FieldSpec = GENERIC_Q) -> Scalar:
    """Gaussian binomial coefficient via the q-Pascal recurrence."""
    if k < 0 or n < 0 or k > n:
        raise ValueError("q-binomial needs 0 <= k <= n")
    q = field.q()
    # row by row: [n k] = [n-1 k-1] + q^k [n-1 k]
    row = [field.one()]
    for m in range(1, n + 1):
        new = [field.one()]
        for j in range(1, m):
            new.append(row[j - 1] + q ** j * row[j])
        new.append(field.one())
        row = new
    return row[k]


def specialize(x: Scalar, q0: Scalar) -> Scalar:
    """Exact evaluation of a ratfunc_q scalar at q = q0 in q0's field."""
    if x.field.kind != "ratfunc_q":
        raise ValueError("specialize expects a ratfunc_q scalar")
    target = q0.field
    src_ctx = x.field._ctx()
    tgt_ctx = target._ctx()

    def eval_poly(p: QPoly) -> Scalar:
        out = target.zero()
        for c in reversed(p):
            out = out * q0 + target.from_cyc(src_ctx.embed(c, tgt_ctx))
        return out

    den = eval_poly(x.den)
    if den.is_zero():
        raise PoleError("denominator vanishes at the requested point")
    return eval_poly(x.num) / den


def primitive_root(m: int, field: FieldSpec) -> Scalar:
    """A fixed primitive m-th root of unity in the given field."""
    if m < 1:
        raise ValueError("root order must be >= 1")
    if m == 1:
        return field.one()
    if field.kind == "ratfunc_q" or field.order % m:
        raise ValueError("field of order %d has no primitive %d-th root" % (field.order, m))
    return field.e() ** (field.order // m)
