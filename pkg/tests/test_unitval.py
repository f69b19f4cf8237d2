from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from reslat.unitval import ONE, ZERO, GridSpec, UnitValue, format_unit, parse_unit

units = st.fractions(min_value=0, max_value=1).map(UnitValue)


def test_construction_bounds():
    assert UnitValue(1, 3) == Fraction(1, 3)
    with pytest.raises(ValueError):
        UnitValue(-1, 2)
    with pytest.raises(ValueError):
        UnitValue(3, 2)
    with pytest.raises(TypeError):
        UnitValue(0.5)


def test_parse_and_format():
    assert parse_unit("3/10") == Fraction(3, 10)
    assert parse_unit("0.3") == Fraction(3, 10)
    assert parse_unit(" 1 ") == ONE
    assert format_unit(UnitValue(1, 3)) == "1/3"
    assert format_unit(UnitValue(1, 4), approx=True) == "1/4 (0.25)"


@given(units, units)
def test_clamped_ops_exact(x, y):
    assert x.add_clamped(y) == min(Fraction(1), Fraction(x) + Fraction(y))
    assert x.sub_clamped(y) == max(Fraction(0), Fraction(x) - Fraction(y))


@given(units)
def test_complement_involution(x):
    assert x.complement().complement() == x


def test_divide():
    assert UnitValue(1, 4).divide(UnitValue(1, 2)) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        UnitValue(1, 4).divide(ZERO)
    with pytest.raises(ValueError):
        UnitValue(3, 4).divide(UnitValue(1, 2))  # quotient escapes [0, 1]


def test_grid_points():
    g = GridSpec(4)
    assert g.points() == tuple(UnitValue(k, 4) for k in range(5))
    assert len(g) == 5
    assert GridSpec().denominator == 64
    with pytest.raises(ValueError):
        GridSpec(1)
