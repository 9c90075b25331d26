import re
from fractions import Fraction
from typing import Annotated, Any, Iterable, List, Sequence, Tuple

import sympy
from pydantic import BeforeValidator, PlainSerializer

from neighborly.errors import InputError

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value: Any) -> Fraction:
    """Parse "p/q", an integer, or an existing Fraction into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"Not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, str):
        match = _RATIONAL_PATTERN.match(value)
        if not match:
            raise InputError(f"Not a rational string: {value!r}")
        numerator = int(match.group(1))
        denominator = int(match.group(2)) if match.group(2) is not None else 1
        if denominator == 0:
            raise InputError(f"Zero denominator in {value!r}")
        return Fraction(numerator, denominator)
    # numpy integers land here
    try:
        return Fraction(int(value))
    except (TypeError, ValueError):
        raise InputError(f"Not a rational: {value!r}")


def format_rational(value: Fraction) -> str:
    """Canonical "p/q" in lowest terms with q > 0."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


Rational = Annotated[
    Fraction,
    BeforeValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
]


def to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value: Any) -> Fraction:
    if not isinstance(value, sympy.Rational):
        raise InputError(f"Expected an exact rational, got {value}")
    return Fraction(int(value.p), int(value.q))


def fraction_vector(values: Iterable[Any]) -> Tuple[Fraction, ...]:
    return tuple(parse_rational(v) for v in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def sign_of(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def format_vector(values: Sequence[Fraction]) -> List[str]:
    return [format_rational(v) for v in values]
