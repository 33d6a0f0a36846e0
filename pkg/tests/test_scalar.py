from fractions import Fraction

import pytest

from qwatson.scalar import ConstraintError, PoleError, add, div, fmt, ipow, mul, parse, preview, scalar

from properties import check_power_laws


def test_ipow_negative_exponent():
    assert ipow(Fraction(2, 3), -2) == Fraction(9, 4)


def test_ipow_zero_exponent_is_one_even_for_zero():
    assert ipow(Fraction(0), 0) == 1


def test_ipow_of_zero_to_negative_power_is_a_pole():
    with pytest.raises(PoleError):
        ipow(Fraction(0), -1)


def test_div_by_zero_names_location():
    with pytest.raises(PoleError) as info:
        div(1, 0, where="(c;q)_3")
    assert "(c;q)_3" in str(info.value)
    assert isinstance(info.value, ZeroDivisionError)


def test_arithmetic_is_exact():
    assert add(Fraction(1, 3), Fraction(1, 6)) == Fraction(1, 2)
    assert mul(Fraction(2, 3), Fraction(3, 4)) == Fraction(1, 2)


@pytest.mark.parametrize(
    "text, value",
    [("1/2", Fraction(1, 2)), ("-3/5", Fraction(-3, 5)), ("4", Fraction(4)), ("two", None), ("", None)],
)
def test_parse(text, value):
    if value is None:
        with pytest.raises(ValueError):
            parse(text)
    else:
        assert parse(text) == value


def test_parse_rejects_zero_denominator():
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse("1/0")


def test_fmt_round_trips():
    for x in (Fraction(0), Fraction(-7, 3), Fraction(5)):
        assert parse(fmt(x)) == x
    assert fmt(Fraction(5)) == "5"
    assert fmt(Fraction(-7, 3)) == "-7/3"


def test_preview_is_a_short_decimal():
    assert preview(Fraction(1, 3)).startswith("0.3333")


def test_scalar_accepts_ints_and_strings():
    assert scalar(3) == 3 and scalar("2/6") == Fraction(1, 3)


def test_constraint_error_is_a_value_error():
    assert issubclass(ConstraintError, ValueError)


def test_power_laws():
    check_power_laws(1000)()
