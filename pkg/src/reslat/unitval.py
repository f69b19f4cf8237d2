"""Exact rational values on the unit interval and finite sampling grids.

Every quantity in the core is a :class:`UnitValue`, a `Fraction` restricted
to [0, 1].  No floating point is ever involved, so all law checks are exact
equality/inequality tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class UnitValue(Fraction):
    """An exact rational number in [0, 1].

    Construction rejects anything outside the interval and refuses floats
    (which would smuggle rounding into the core).  Inherited Fraction
    arithmetic returns plain Fractions; use :meth:`add_clamped` and
    :meth:`sub_clamped` for the truncated operations that stay inside
    the interval.
    """

    __slots__ = ()

    def __new__(cls, numerator=0, denominator=None):
        if isinstance(numerator, float) or isinstance(denominator, float):
            raise TypeError("UnitValue does not accept floats; use a string or Fraction")
        self = super().__new__(cls, numerator, denominator)
        if self < 0 or self > 1:
            raise ValueError(f"value {Fraction(self)} outside [0, 1]")
        return self

    def add_clamped(self, other) -> "UnitValue":
        """min(1, self + other), exact."""
        total = self + Fraction(other)
        return UnitValue(total if total <= 1 else 1)

    def sub_clamped(self, other) -> "UnitValue":
        """max(0, self - other), exact."""
        diff = self - Fraction(other)
        return UnitValue(diff if diff >= 0 else 0)

    def complement(self) -> "UnitValue":
        """1 - self."""
        return UnitValue(1 - self)

    def multiply(self, other) -> "UnitValue":
        """self * other; products of unit values stay inside [0, 1]."""
        return UnitValue(self * Fraction(other))

    def divide(self, other) -> "UnitValue":
        """self / other; requires other != 0 and a quotient inside [0, 1]."""
        return UnitValue(self / Fraction(other))

    def __repr__(self) -> str:
        return f"UnitValue({self})"


ZERO = UnitValue(0)
ONE = UnitValue(1)


def parse_unit(text: str) -> UnitValue:
    """Parse 'p/q', an integer, or a finite decimal as an exact UnitValue."""
    return UnitValue(Fraction(text.strip()))


def format_unit(value: Fraction, approx: bool = False) -> str:
    """Render a rational as 'p/q'; with approx, append a decimal rendering."""
    base = str(value)
    if approx:
        return f"{base} ({float(value):.6g})"
    return base


@lru_cache(maxsize=None)
def _grid_points(denominator: int) -> tuple[UnitValue, ...]:
    return tuple(UnitValue(k, denominator) for k in range(denominator + 1))


@dataclass(frozen=True)
class GridSpec:
    """Uniform sampling grid {k/denominator : 0 <= k <= denominator}."""

    denominator: int = 64

    def __post_init__(self):
        if self.denominator < 2:
            raise ValueError("grid denominator must be >= 2")

    def points(self) -> tuple[UnitValue, ...]:
        return _grid_points(self.denominator)

    def __len__(self) -> int:
        return self.denominator + 1
