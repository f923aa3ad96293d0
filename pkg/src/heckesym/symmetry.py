"""Hecke symmetries and their action on tensor powers.

A Hecke symmetry is an operator R on V (x) V satisfying the braid equation
on V^(x)3 and the quadratic relation (R - q Id)(R + Id) = 0 with q nonzero.
T_i then acts on V^(x)n through R in tensor slots (i, i+1), making V^(x)n a
module over the Hecke algebra; this module exposes that action, the graded
subspaces

    upsilon(n) = intersection of the images of (T_i - q) on V^(x)n,
    ideal_component(n) = sum of the kernels of (T_i - q),

the star product a * b = y_(k+l/k,l)(a (x) b), duals/opposites/conjugates,
and a small built-in catalog.

Tensor basis indexing is lexicographic: the word (i_1,...,i_n) over 1..N
sits at position sum (i_k - 1) N^(n-k).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .exactnum import FieldSpec, GENERIC_Q, Scalar
from .exprio import format_scalar, parse_scalar
from .heckealg import HeckeElement, partial_y
from .linalg import MatrixF, Subspace
from .permgroup import Composition, Perm, identity, transposition

__all__ = [
    "HeckeSymmetry",
    "SymmetryError",
    "check_hecke",
    "check_braid",
    "dj_standard",
    "flip",
    "tensor_index",
    "index_word",
    "kron_vec",
    "TENSOR_DIM_CAP",
    "REP_DIM_CAP",
]

TENSOR_DIM_CAP = 256
REP_DIM_CAP = 20000


class SymmetryError(ValueError):
    """Input operator is not a Hecke symmetry, or a size bound was exceeded."""


def tensor_index(word: Sequence[int], N: int) -> int:
    """Position of e_(i1) (x) ... (x) e_(in) (1-based letters)."""
    idx = 0
    for i in word:
        if not 1 <= i <= N:
            raise ValueError("letter out of range")
        idx = idx * N + (i - 1)
    return idx


def index_word(idx: int, n: int, N: int) -> Tuple[int, ...]:
    out = []
    for _ in range(n):
        out.append(idx % N + 1)
        idx //= N
    return tuple(reversed(out))


def kron_vec(a: Sequence, b: Sequence, domain) -> tuple:
    zero = domain.zero()
    out = [zero] * (len(a) * len(b))
    lb = len(b)
    for i, x in enumerate(a):
        if not x.is_zero():
            base = i * lb
            for j, y in enumerate(b):
                if not y.is_zero():
                    out[base + j] = x * y
    return tuple(out)


def check_hecke(R: MatrixF, q: Scalar) -> Tuple[bool, str]:
    """Exact test of (R - q Id)(R + Id) = 0; witness entry on failure."""
    n = R.rows
    I = MatrixF.identity(n, R.domain)
    M = (R - I.scale(q)) * (R + I)
    for i in range(n):
        for j in range(n):
            if not M[i, j].is_zero():
                return False, "entry (%d,%d) = %s" % (i, j, format_scalar(M[i, j]))
    return True, ""


def check_braid(R: MatrixF) -> Tuple[bool, str]:
    """Exact test of the braid equation on V^(x)3; witness on failure."""
    import math

    N2 = R.rows
    N = math.isqrt(N2)
    if N * N != N2:
        raise ValueError("operator size is not a perfect square")
    I = MatrixF.identity(N, R.domain)
    R12 = R.kronecker(I)
    R23 = I.kronecker(R)
    lhs = R12 * R23 * R12
    rhs = R23 * R12 * R23
    D = lhs - rhs
    for i in range(D.rows):
        for j in range(D.cols):
            if not D[i, j].is_zero():
                return False, "entry (%d,%d) = %s" % (i, j, format_scalar(D[i, j]))
    return True, ""


class HeckeSymmetry:
    """A validated Hecke symmetry with cached tensor-power machinery."""

    __slots__ = ("N", "field", "q", "R", "_cols", "_upsilon", "_ideal", "_reps", "name")

    def __init__(self, N: int, q: Scalar, R: MatrixF, name: str = "", validate: bool = True):
        if N < 1:
            raise SymmetryError("dimension must be >= 1")
        if R.rows != N * N or R.cols != N * N:
            raise SymmetryError("operator must be N^2 x N^2")
        if q.is_zero():
            raise SymmetryError("q must be nonzero")
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "field", q.field)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "R", R)
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "_cols", None)
        object.__setattr__(self, "_upsilon", {})
        object.__setattr__(self, "_ideal", {})
        object.__setattr__(self, "_reps", {})
        if validate:
            ok, witness = check_hecke(R, q)
            if not ok:
                raise SymmetryError("quadratic relation fails: " + witness)
            ok, witness = check_braid(R)
            if not ok:
                raise SymmetryError("braid equation fails: " + witness)

    def __setattr__(self, *args):
        raise AttributeError("HeckeSymmetry is immutable")

    def __repr__(self):
        return "HeckeSymmetry(N=%d%s)" % (self.N, ", " + self.name if self.name else "")

    # -- sparse column structure of R, for fast vector application

    def _column_table(self) -> List[List[Tuple[int, Scalar]]]:
        cols = self._cols
        if cols is None:
            cols = []
            for j in range(self.N * self.N):
                col = []
                for i in range(self.N * self.N):
                    x = self.R[i, j]
                    if not x.is_zero():
                        col.append((i, x))
                cols.append(col)
            object.__setattr__(self, "_cols", cols)
        return cols

    # -- actions

    def apply_generator(self, i: int, n: int, vec: Sequence) -> tuple:
        """T_i acting on a vector of V^(x)n."""
        if not 1 <= i < n:
            raise ValueError("generator index out of range")
        N = self.N
        if len(vec) != N ** n:
            raise ValueError("vector length mismatch")
        cols = self._column_table()
        stride = N ** (n - i - 1)
        zero = self.field.zero()
        out = [zero] * len(vec)
        for idx, x in enumerate(vec):
            if x.is_zero():
                continue
            pair = (idx // stride) % (N * N)
            base = idx - pair * stride
            for tgt_pair, coeff in cols[pair]:
                tgt = base + tgt_pair * stride
                out[tgt] = out[tgt] + coeff * x
        return tuple(out)

    def apply_perm_word(self, word: Sequence[int], n: int, vec: Sequence) -> tuple:
        """T_sigma acting on a vector, sigma given by a reduced word."""
        for i in reversed(list(word)):
            vec = self.apply_generator(i, n, vec)
        return tuple(vec)

    def apply_hecke(self, h: HeckeElement, n: int, vec: Sequence) -> tuple:
        """A Hecke algebra element acting on a vector of V^(x)n."""
        if h.n > n:
            raise ValueError("element degree exceeds tensor degree")
        if h.field != self.field:
            raise ValueError("mixed fields")
        zero = self.field.zero()
        out = [zero] * len(vec)
        for p, c in h.terms.items():
            piece = self.apply_perm_word(p.reduced_word(), n, vec)
            for k, y in enumerate(piece):
                if not y.is_zero():
                    out[k] = out[k] + c * y
        return tuple(out)

    def generator_matrix(self, i: int, n: int) -> MatrixF:
        """Matrix of T_i = Id^(i-1) (x) R (x) Id^(n-i-1) on V^(x)n."""
        N = self.N
        dim = N ** n
        if dim > REP_DIM_CAP:
            raise SymmetryError("tensor dimension %d exceeds the cap %d" % (dim, REP_DIM_CAP))
        stride = N ** (n - i - 1)
        zero = self.field.zero()
        out = [zero] * (dim * dim)
        cols = self._column_table()
        for idx in range(dim):
            pair = (idx // stride) % (N * N)
            base = idx - pair * stride
            for tgt_pair, coeff in cols[pair]:
                out[(base + tgt_pair * stride) * dim + idx] = coeff
        return MatrixF(dim, dim, out, self.field)

    def perm_matrix(self, p: Perm, n: int) -> MatrixF:
        """Matrix of T_sigma on V^(x)n, memoized along the weak order."""
        key = (n, p)
        reps = self._reps
        got = reps.get(key)
        if got is not None:
            return got
        if p.is_identity():
            out = MatrixF.identity(self.N ** n, self.field)
        else:
            i = p.descent_left()
            rest = transposition(i, p.degree) * p
            out = self.generator_matrix(i, n) * self.perm_matrix(rest, n)
        reps[key] = out
        return out

    def rep_matrix(self, h: HeckeElement, n: int) -> MatrixF:
        """Matrix of a Hecke algebra element acting on V^(x)n."""
        if h.n > n:
            raise ValueError("element degree exceeds tensor degree")
        if h.field != self.field:
            raise ValueError("mixed fields")
        dim = self.N ** n
        if dim > REP_DIM_CAP:
            raise SymmetryError("tensor dimension %d exceeds the cap %d" % (dim, REP_DIM_CAP))
        out = MatrixF.zeros(dim, dim, self.field)
        for p, c in h.terms.items():
            padded = Perm(p.word + tuple(range(p.degree + 1, n + 1)))
            out = out + self.perm_matrix(padded, n).scale(c)
        return out

    # -- graded subspaces

    def _bound(self, n: int, cap: Optional[int]):
        dim = self.N ** n
        if dim > (cap if cap is not None else TENSOR_DIM_CAP):
            raise SymmetryError("tensor dimension %d exceeds the cap" % dim)

    def upsilon(self, n: int, cap: Optional[int] = None) -> Subspace:
        """Intersection of the images of (T_i - q) on V^(x)n."""
        if n < 0:
            raise ValueError("degree must be nonnegative")
        got = self._upsilon.get(n)
        if got is not None:
            return got
        self._bound(n, cap)
        N = self.N
        if n == 0:
            out = Subspace.full(1, self.field)
        elif n == 1:
            out = Subspace.full(N, self.field)
        else:
            out = None
            for i in range(1, n):
                M = self.generator_matrix(i, n) - MatrixF.identity(N ** n, self.field).scale(self.q)
                img = M.image()
                out = img if out is None else out.intersect(img)
                if out.is_zero():
                    break
        self._upsilon[n] = out
        return out

    def ideal_component(self, n: int, cap: Optional[int] = None) -> Subspace:
        """Sum of the kernels of (T_i - q) on V^(x)n (n >= 2)."""
        if n < 2:
            raise ValueError("ideal components start at degree 2")
        got = self._ideal.get(n)
        if got is not None:
            return got
        self._bound(n, cap)
        N = self.N
        out = Subspace.zero(N ** n, self.field)
        for i in range(1, n):
            M = self.generator_matrix(i, n) - MatrixF.identity(N ** n, self.field).scale(self.q)
            out = out.sum(M.kernel())
        self._ideal[n] = out
        return out

    def lambda_dim(self, n: int) -> int:
        """dim of degree n of the quotient by the q-eigenspace relations."""
        if n == 0:
            return 1
        if n == 1:
            return self.N
        return self.N ** n - self.ideal_component(n).dim

    # -- star product

    def star(self, a: Sequence, k: int, b: Sequence, l: int, check_membership: bool = True) -> tuple:
        """a * b = y_(k+l/k,l)(a (x) b) for a in upsilon(k), b in upsilon(l)."""
        if len(a) != self.N ** k or len(b) != self.N ** l:
            raise ValueError("vector length mismatch")
        if check_membership:
            if not self.upsilon(k).contains(a):
                raise ValueError("left factor is not in upsilon(%d)" % k)
            if not self.upsilon(l).contains(b):
                raise ValueError("right factor is not in upsilon(%d)" % l)
        ab = kron_vec(a, b, self.field)
        if k == 0 or l == 0:
            return ab
        y = partial_y(k + l, Composition((k, l)), "left", self.field)
        out = self.apply_hecke(y, k + l, ab)
        if check_membership and not self.upsilon(k + l).contains(out):
            raise ValueError("star product left upsilon(%d)" % (k + l))
        return out

    # -- derived symmetries

    def dual(self) -> "HeckeSymmetry":
        """The transpose, a Hecke symmetry on the dual space."""
        return HeckeSymmetry(self.N, self.q, self.R.transpose(), name=self.name + ".dual")

    def opposite(self) -> "HeckeSymmetry":
        """Conjugate by the flip of tensorands."""
        N = self.N
        entries = []
        for i in range(N * N):
            a, b = divmod(i, N)
            fi = b * N + a
            row = []
            for j in range(N * N):
                c, d = divmod(j, N)
                row.append(self.R[fi, d * N + c])
            entries.append(row)
        return HeckeSymmetry(N, self.q, MatrixF.from_rows(entries, self.field), name=self.name + ".op")

    def conjugate(self, tau: MatrixF) -> "HeckeSymmetry":
        """(tau (x) tau) R (tau^-1 (x) tau^-1)."""
        if tau.rows != self.N or tau.cols != self.N:
            raise ValueError("conjugating operator must be N x N")
        tinv = tau.inverse()
        T2 = tau.kronecker(tau)
        T2inv = tinv.kronecker(tinv)
        return HeckeSymmetry(self.N, self.q, T2 * self.R * T2inv, name=self.name + ".conj")

    # -- JSON document

    def to_json_dict(self) -> dict:
        field = {"kind": self.field.kind, "order": self.field.order}
        qstr = "q" if self.field.kind == "ratfunc_q" else format_scalar(self.q)
        matrix = [
            [format_scalar(self.R[i, j]) for j in range(self.N * self.N)]
            for i in range(self.N * self.N)
        ]
        return {"dim": self.N, "field": field, "q": qstr, "matrix": matrix}

    @staticmethod
    def from_json_dict(doc: dict, validate: bool = True) -> "HeckeSymmetry":
        try:
            N = int(doc["dim"])
            fkind = doc["field"]["kind"]
            forder = int(doc["field"].get("order", 1))
            qstr = doc["q"]
            matrix = doc["matrix"]
        except (KeyError, TypeError) as exc:
            raise SymmetryError("malformed document: missing %s" % exc) from None
        base = FieldSpec(fkind, forder)
        qval = parse_scalar(qstr, base)
        field = base if fkind == "ratfunc_q" else base.with_q(qval)
        if len(matrix) != N * N or any(len(r) != N * N for r in matrix):
            raise SymmetryError("matrix must be %d x %d" % (N * N, N * N))
        entries = [parse_scalar(s, field) for row in matrix for s in row]
        return HeckeSymmetry(N, field.q(), MatrixF(N * N, N * N, entries, field), validate=validate)

    @staticmethod
    def from_json(text: str, validate: bool = True) -> "HeckeSymmetry":
        return HeckeSymmetry.from_json_dict(json.loads(text), validate=validate)


# ---------------------------------------------------------------------------
# built-in catalog


def dj_standard(N: int, field: FieldSpec = GENERIC_Q) -> HeckeSymmetry:
    """The standard one-parameter deformation of the flip on k^N.

    e_i (x) e_i maps to q e_i (x) e_i; for i < j, e_i (x) e_j maps to
    q e_j (x) e_i + (q-1) e_i (x) e_j and e_j (x) e_i to e_i (x) e_j.
    """
    if N < 1:
        raise SymmetryError("dimension must be >= 1")
    q = field.q()
    zero = field.zero()
    dim = N * N
    entries = {}
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            col = (i - 1) * N + (j - 1)
            swapped = (j - 1) * N + (i - 1)
            if i == j:
                entries[(col, col)] = q
            elif i < j:
                entries[(swapped, col)] = q
                entries[(col, col)] = q - 1
            else:
                entries[(swapped, col)] = field.one()
    flat = [zero] * (dim * dim)
    for (r, c), v in entries.items():
        flat[r * dim + c] = v
    return HeckeSymmetry(N, q, MatrixF(dim, dim, flat, field), name="dj(%d)" % N)


def flip(N: int) -> HeckeSymmetry:
    """The plain flip of tensorands, an involutive symmetry with q = 1."""
    field = FieldSpec("rational", qval=(Fraction(1),))
    zero, one = field.zero(), field.one()
    dim = N * N
    flat = [zero] * (dim * dim)
    for a in range(N):
        for b in range(N):
            flat[(b * N + a) * dim + (a * N + b)] = one
    return HeckeSymmetry(N, field.q(), MatrixF(dim, dim, flat, field), name="flip(%d)" % N)
