"""Exact scalars: the base field is the rationals, realized by fractions.Fraction.

Fraction already keeps numerator/denominator reduced with positive denominator,
so equality is structural and arithmetic is exact.  Floats are rejected
everywhere: every computation in this package is an exact certificate, and the
base field has characteristic zero by construction.
"""

from fractions import Fraction

Q = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(value) -> Fraction:
    """Coerce an int, a string like "3/2" or "-5", or a Fraction to Fraction.

    Floats are rejected on purpose: silent binary rounding would poison the
    exactness guarantees downstream.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational scalar")
    if isinstance(value, (int, str)):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise TypeError(f"not an exact rational: {value!r} ({type(value).__name__})")


def fmt(q: Fraction) -> str:
    """Render as "p/q" (or plain "p" when the denominator is 1)."""
    return str(q)
