"""Text form of scalars: a tiny expression grammar and its formatter.

Grammar (whitespace insignificant):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | atom ('^' INT)?
    atom   := INT | 'q' | 'e' | '(' expr ')'

`q` is the field parameter (formal in ratfunc_q fields, otherwise the bound
value) and `e` is the primitive root of unity of the field's declared
cyclotomic order.  Exponents are nonnegative integer literals.

format_scalar emits strings inside the same grammar, so every scalar
round-trips through parse_scalar exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from .exactnum import FieldSpec, Scalar

__all__ = ["parse_scalar", "format_scalar", "ExprError"]


class ExprError(ValueError):
    """Malformed scalar expression; carries a character position."""

    def __init__(self, message: str, pos: int):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


def _tokenize(text: str) -> List[Tuple[str, object, int]]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(text) and text[j].isalnum():
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ExprError("unexpected character %r" % ch, i)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens, field: FieldSpec):
        self.tokens = tokens
        self.pos = 0
        self.field = field

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise ExprError("expected %s, found %r" % (kind, tok[1]), tok[2])
        self.pos += 1
        return tok

    def expr(self) -> Scalar:
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Scalar:
        value = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ExprError("division by zero", pos)
                value = value / rhs
        return value

    def factor(self) -> Scalar:
        if self.peek()[0] == "-":
            self.take()
            return -self.factor()
        value = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("int")
            value = value ** tok[1]
        return value

    def atom(self) -> Scalar:
        kind, val, pos = self.take()
        if kind == "int":
            return self.field.scalar(val)
        if kind == "name":
            if val == "q":
                try:
                    return self.field.q()
                except ValueError as exc:
                    raise ExprError(str(exc), pos) from None
            if val == "e":
                return self.field.e()
            raise ExprError("unknown identifier %r" % val, pos)
        if kind == "(":
            value = self.expr()
            self.take(")")
            return value
        raise ExprError("unexpected token %r" % (val,), pos)


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    """Parse an expression into a scalar of the given field."""
    parser = _Parser(_tokenize(text), field)
    value = parser.expr()
    parser.take("end")
    return value


# ---------------------------------------------------------------------------
# formatting


def _format_fraction(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


def _format_cyc(vec, need_atom: bool) -> str:
    """Coefficient vector over Q(zeta_m) as a polynomial in e."""
    parts = []
    for k, coeff in enumerate(vec):
        if not coeff:
            continue
        if k == 0:
            parts.append(_format_fraction(coeff))
        else:
            mono = "e" if k == 1 else "e^%d" % k
            if coeff == 1:
                parts.append(mono)
            elif coeff == -1:
                parts.append("-" + mono)
            else:
                parts.append("%s*%s" % (_format_fraction(coeff), mono))
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    if need_atom and (len(parts) > 1 or "/" in out or "*" in out or out.startswith("-")):
        return "(" + out + ")"
    return out


def _format_qpoly(poly, need_atom: bool) -> str:
    if not poly:
        return "0"
    parts = []
    for k in range(len(poly) - 1, -1, -1):
        vec = poly[k]
        if not any(vec):
            continue
        mono = "" if k == 0 else ("q" if k == 1 else "q^%d" % k)
        nonzero = [c for c in vec if c]
        plain_one = len(nonzero) == 1 and not any(vec[1:])
        if not mono:
            parts.append(_format_cyc(vec, need_atom=False))
        elif plain_one and vec[0] == 1:
            parts.append(mono)
        elif plain_one and vec[0] == -1:
            parts.append("-" + mono)
        else:
            parts.append("%s*%s" % (_format_cyc(vec, need_atom=True), mono))
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    if need_atom and (len(parts) > 1 or out.startswith("-") or "/" in out or "*" in out):
        return "(" + out + ")"
    return out


def format_scalar(x: Scalar) -> str:
    """Round-trippable text for a scalar."""
    ctx = x.field._ctx()
    if not x.num:
        return "0"
    if x.den == (ctx.one,):
        return _format_qpoly(x.num, need_atom=False)
    return "%s/%s" % (_format_qpoly(x.num, need_atom=True), _format_qpoly(x.den, need_atom=True))
