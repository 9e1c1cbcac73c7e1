"""Exact arithmetic for filling slopes on a torus.

A slope is a primitive rational class p/q in Q union {infinity}, with
infinity represented by 1/0.  All computations are exact integer
arithmetic; nothing in this module (or anything built on it) touches
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class Slope:
    """A slope p/q, stored in lowest terms with q >= 0 (and p = 1 when q = 0)."""

    p: int
    q: int = 1

    def __post_init__(self) -> None:
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise ValueError("slope 0/0 is not defined")
        g = gcd(p, q)
        p, q = p // g, q // g
        if q < 0:
            p, q = -p, -q
        elif q == 0:
            p = abs(p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @property
    def is_infinite(self) -> bool:
        return self.q == 0

    def __str__(self) -> str:
        return format_slope(self)


INFINITY = Slope(1, 0)


def distance(r1: Slope, r2: Slope) -> int:
    """Minimal geometric intersection number |p1 q2 - p2 q1| of two slopes."""
    return abs(r1.p * r2.q - r2.p * r1.q)


def continued_fraction(r: Slope) -> tuple[int, ...]:
    """Canonical continued fraction [a1, a2, ..., an] of a slope.

    Uses the floor expansion, so a1 is any integer, every later term is
    >= 1, and the final term is >= 2 unless the expansion is a single
    integer.  This makes the expansion unique.  Infinity maps to the
    empty tuple.
    """
    terms = []
    p, q = r.p, r.q
    while q != 0:
        a = p // q
        terms.append(a)
        p, q = q, p - a * q
    return tuple(terms)


def from_continued_fraction(terms: tuple[int, ...] | list[int]) -> Slope:
    """Evaluate a (not necessarily canonical) continued fraction to a slope.

    [a1, ..., an] means a1 + 1/(a2 + 1/(... + 1/an)); intermediate
    infinities are handled by the matrix recurrence, so arbitrary integer
    terms are allowed.  The empty sequence evaluates to infinity.
    """
    p, q = 1, 0
    for a in reversed(terms):
        p, q = a * p + q, p
    return Slope(p, q)


def apply_unimodular(matrix: tuple[tuple[int, int], tuple[int, int]], r: Slope) -> Slope:
    """Act on a slope by a matrix ((a, b), (c, d)) with det = +-1."""
    (a, b), (c, d) = matrix
    if abs(a * d - b * c) != 1:
        raise ValueError(f"matrix {matrix} is not unimodular")
    return Slope(a * r.p + b * r.q, c * r.p + d * r.q)


def parse_slope(text: str) -> Slope:
    """Parse 'p/q', a bare integer, or 'inf' into a slope."""
    s = text.strip()
    if s == "inf":
        return INFINITY
    try:
        if "/" in s:
            num, _, den = s.partition("/")
            return Slope(int(num.strip()), int(den.strip()))
        return Slope(int(s))
    except ValueError as exc:
        raise ValueError(f"bad slope {text!r}: {exc}") from exc


def format_slope(r: Slope) -> str:
    if r.q == 0:
        return "inf"
    if r.q == 1:
        return str(r.p)
    return f"{r.p}/{r.q}"
