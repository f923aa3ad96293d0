import random
from fractions import Fraction

import pytest

from heckesym.exactnum import FieldSpec, GENERIC_Q, cyclotomic_field
from heckesym.exprio import ExprError, format_scalar, parse_scalar

F = GENERIC_Q


def test_basic_parsing():
    q = F.q()
    assert parse_scalar("q^2 + q + 1", F) == 1 + q + q ** 2
    assert parse_scalar("  2*q -1 ", F) == 2 * q - 1
    assert parse_scalar("-q^3", F) == -(q ** 3)
    assert parse_scalar("(1+q)/(1-q)", F) == (1 + q) / (1 - q)
    assert parse_scalar("3/2", F) == F.scalar(Fraction(3, 2))
    assert parse_scalar("2^3", F) == F.scalar(8)


def test_precedence():
    q = F.q()
    assert parse_scalar("1+2*q^2", F) == 1 + 2 * q ** 2
    assert parse_scalar("-q^2", F) == -(q ** 2)
    assert parse_scalar("6/2/3", F) == F.one()
    assert parse_scalar("2-1-1", F).is_zero()


def test_e_identifier():
    C3 = cyclotomic_field(3)
    e = C3.e()
    assert parse_scalar("1 + e + e^2", C3).is_zero()
    assert parse_scalar("e^3", C3).is_one()
    # order 1 has e = 1
    assert parse_scalar("e", FieldSpec("rational")).is_one()


def test_q_binding():
    C3q = cyclotomic_field(3, q_power=1)
    assert parse_scalar("q", C3q) == C3q.e()
    with pytest.raises(ExprError):
        parse_scalar("q", cyclotomic_field(3))


def test_errors_carry_positions():
    with pytest.raises(ExprError) as exc:
        parse_scalar("1 + $", F)
    assert exc.value.pos == 4
    with pytest.raises(ExprError):
        parse_scalar("q^(2)", F)  # exponent must be an integer literal
    with pytest.raises(ExprError):
        parse_scalar("(1+q", F)
    with pytest.raises(ExprError):
        parse_scalar("1/0", F)
    with pytest.raises(ExprError):
        parse_scalar("zz", F)


def _random_scalar(field, rng):
    if field.kind == "ratfunc_q":
        qq = field.q()
        num = sum((field.scalar(Fraction(rng.randint(-6, 6), rng.randint(1, 4))) * qq ** k for k in range(4)), field.zero())
        den = field.one() + field.scalar(rng.randint(-2, 2)) * qq + field.scalar(rng.randint(0, 1)) * qq ** 2
        if den.is_zero():
            den = field.one()
        return num / den
    deg = field._ctx().deg
    return field.from_cyc([Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(deg)])


@pytest.mark.parametrize(
    "field", [FieldSpec("rational"), cyclotomic_field(3), cyclotomic_field(4), cyclotomic_field(12), GENERIC_Q]
)
def test_roundtrip(field):
    rng = random.Random(97)
    for _ in range(40):
        x = _random_scalar(field, rng)
        assert parse_scalar(format_scalar(x), field) == x
    assert parse_scalar(format_scalar(field.zero()), field).is_zero()
    assert parse_scalar(format_scalar(field.one()), field).is_one()
