"""
Polycategory Workbench Utilities
Common helper functions used across the package
"""
import itertools
import re
from fractions import Fraction
from typing import Iterable, Iterator, List, Sequence, Tuple

import sympy

from .exceptions import InputSyntaxError

_RATIONAL_PATTERN = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$')


def parse_rational(text) -> Fraction:
    """
    Parse a rational written as "p/q" or "p"

    Args:
        text: String (or int) to parse

    Returns:
        Reduced Fraction
    """
    if isinstance(text, bool):
        raise InputSyntaxError(f"Not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    match = _RATIONAL_PATTERN.match(str(text))
    if not match:
        raise InputSyntaxError(f"Not a rational: {text!r}")
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise InputSyntaxError(f"Zero denominator in {text!r}")
    return Fraction(int(match.group(1)), denominator)


def format_rational(value: Fraction) -> str:
    """Format a rational as "p/q" (always with a denominator)"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_vector(vector: Sequence[Fraction]) -> str:
    """Format a rational vector as "(p/q, ...)\""""
    return '(' + ', '.join(format_rational(x) for x in vector) + ')'


def to_sympy(value: Fraction) -> sympy.Rational:
    """Convert a Fraction to a sympy Rational"""
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_sympy(value) -> Fraction:
    """Convert a sympy Rational (or Integer) back to a Fraction"""
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def sympy_matrix(rows: Sequence[Sequence[Fraction]]) -> sympy.Matrix:
    """Build an exact sympy Matrix from rows of Fractions"""
    return sympy.Matrix([[to_sympy(x) for x in row] for row in rows])


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank of a list of rational row vectors (0 for no rows)"""
    if not rows:
        return 0
    return sympy_matrix(rows).rank()


def lists_up_to(symbols: Sequence[str], max_length: int, min_length: int = 0) -> Iterator[Tuple[str, ...]]:
    """
    Yield every list over symbols with length in [min_length, max_length]

    Args:
        symbols: Alphabet, iterated in the given order
        max_length: Longest list to produce
        min_length: Shortest list to produce

    Returns:
        Iterator over tuples, shortest first
    """
    for length in range(min_length, max_length + 1):
        yield from itertools.product(symbols, repeat=length)


def negate(vector: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    return tuple(-x for x in vector)


def symmetrize(vectors: Iterable[Sequence[Fraction]]) -> List[Tuple[Fraction, ...]]:
    """Close a vector family under negation, dropping zeros and duplicates"""
    seen = set()
    result = []
    for vector in vectors:
        vector = tuple(Fraction(x) for x in vector)
        if not any(vector):
            continue
        for candidate in (vector, negate(vector)):
            if candidate not in seen:
                seen.add(candidate)
                result.append(candidate)
    return sorted(result)


def dot(left: Sequence[Fraction], right: Sequence[Fraction]) -> Fraction:
    return sum((Fraction(a) * Fraction(b) for a, b in zip(left, right)), Fraction(0))


def random_rational(rng, numerators: int, denominators: int) -> Fraction:
    """Draw a small rational from a seeded random.Random"""
    return Fraction(rng.randint(-numerators, numerators), rng.randint(1, denominators))


def describe_list(items: Sequence[str]) -> str:
    """Render an object list the way reports print boundaries"""
    return ','.join(items) if items else '.'
