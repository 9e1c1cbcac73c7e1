"""Expression parsers for manifolds and links.

The grammars cover exactly what the printers emit, so every value
printed by the tool re-parses to an equal value:

  manifold := matom ('#' matom)*
  matom    := 'S3' | 'S1xS2' | 'ST' | 'T2xI' | 'ZxS1'
            | 'L' '(' int ',' int ')'
            | ('S2' | 'D2' | 'M2') '(' int (',' int)* ')'
            | 'C' '(' int ',' int ')'
            | 'SFS' '(' int ';' frac (',' frac)* ')'
            | 'tag' '(' label ')'
            | 'U' '[' manifold (',' manifold)* ']'

  link     := latom ('+' latom)*
  latom    := 'unknot' | 'unlink' '(' int ')' | 'b' '(' frac ')'
            | 'mont' '(' int ';' frac (',' frac)* ')'

  frac     := int ('/' int)?

Whitespace is insignificant.  Syntax errors raise ParseError with the
offending position; ill-formed but grammatical input (for example the
non-coprime "L(4,2)") raises the constructors' IllFormedClaimError.
"""

from __future__ import annotations

import re

from .links import Link, link_connected_sum, montesinos, two_bridge, unlink, Unknot
from .manifolds import (BASE_D2, BASE_M2, BASE_S2, CableSpace, Manifold,
                        OpaqueTag, S3, S1xS2, SfsS2, SolidTorus, T2xI,
                        ZxS1, connected_sum, lens_space,
                        sfs_orders, torus_union)
from .slopes import Slope


class ParseError(ValueError):
    """A syntax error, carrying the 0-based position where it occurred."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(r"\s*(-?\d+|[A-Za-z][A-Za-z0-9_-]*|[(),;/#+\[\]])")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def next(self) -> str:
        self.skip_space()
        m = _TOKEN.match(self.text, self.pos)
        if not m:
            if self.pos >= len(self.text):
                raise ParseError("unexpected end of input", self.pos)
            raise ParseError(f"unexpected character {self.text[self.pos]!r}", self.pos)
        self.pos = m.end()
        return m.group(1)

    def expect(self, token: str) -> None:
        self.skip_space()
        at = self.pos
        got = self.next()
        if got != token:
            raise ParseError(f"expected {token!r}, got {got!r}", at)

    def accept(self, token: str) -> bool:
        self.skip_space()
        saved = self.pos
        try:
            got = self.next()
        except ParseError:
            return False
        if got == token:
            return True
        self.pos = saved
        return False

    def integer(self) -> int:
        self.skip_space()
        at = self.pos
        got = self.next()
        try:
            return int(got)
        except ValueError:
            raise ParseError(f"expected an integer, got {got!r}", at) from None

    def fraction(self) -> Slope:
        p = self.integer()
        if self.accept("/"):
            return Slope(p, self.integer())
        return Slope(p, 1)

    def done(self) -> None:
        self.skip_space()
        if self.pos < len(self.text):
            raise ParseError(f"trailing input {self.text[self.pos:]!r}", self.pos)


def _int_args(s: _Scanner) -> list[int]:
    s.expect("(")
    args = [s.integer()]
    while s.accept(","):
        args.append(s.integer())
    s.expect(")")
    return args


_FIXED_MANIFOLDS = {
    "S3": S3,
    "S1xS2": S1xS2,
    "ST": SolidTorus,
    "T2xI": T2xI,
    "ZxS1": ZxS1,
}


def _manifold_atom(s: _Scanner) -> Manifold:
    s.skip_space()
    at = s.pos
    head = s.next()
    if head in _FIXED_MANIFOLDS:
        return _FIXED_MANIFOLDS[head]()
    if head == "L":
        args = _int_args(s)
        if len(args) != 2:
            raise ParseError("L takes exactly two parameters", at)
        return lens_space(args[0], args[1])
    if head in (BASE_S2, BASE_D2, BASE_M2):
        return sfs_orders(head, _int_args(s))
    if head == "C":
        args = _int_args(s)
        if len(args) != 2:
            raise ParseError("C takes exactly two parameters", at)
        return CableSpace(args[0], args[1])
    if head == "SFS":
        s.expect("(")
        e = s.integer()
        s.expect(";")
        fibers = [s.fraction()]
        while s.accept(","):
            fibers.append(s.fraction())
        s.expect(")")
        return SfsS2(e, tuple((f.q, f.p) for f in fibers))
    if head == "tag":
        s.expect("(")
        s.skip_space()
        label_at = s.pos
        label = s.next()
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_-]*", label):
            raise ParseError(f"expected a tag label, got {label!r}", label_at)
        s.expect(")")
        return OpaqueTag(label)
    if head == "U":
        s.expect("[")
        pieces = [_manifold_sum(s)]
        while s.accept(","):
            pieces.append(_manifold_sum(s))
        s.expect("]")
        return torus_union(*pieces)
    raise ParseError(f"unknown manifold {head!r}", at)


def _manifold_sum(s: _Scanner) -> Manifold:
    parts = [_manifold_atom(s)]
    while s.accept("#"):
        parts.append(_manifold_atom(s))
    return connected_sum(*parts) if len(parts) > 1 else parts[0]


def parse_manifold_expr(text: str) -> Manifold:
    """Parse a manifold expression into its normalized value."""
    s = _Scanner(text)
    m = _manifold_sum(s)
    s.done()
    return m


def _link_atom(s: _Scanner) -> Link:
    s.skip_space()
    at = s.pos
    head = s.next()
    if head == "unknot":
        return Unknot()
    if head == "unlink":
        args = _int_args(s)
        if len(args) != 1:
            raise ParseError("unlink takes exactly one parameter", at)
        return unlink(args[0])
    if head == "b":
        s.expect("(")
        f = s.fraction()
        s.expect(")")
        if f.is_infinite:
            return unlink(2)
        return two_bridge(f.p, f.q)
    if head == "mont":
        s.expect("(")
        e = s.integer()
        s.expect(";")
        branches = [s.fraction()]
        while s.accept(","):
            branches.append(s.fraction())
        s.expect(")")
        return montesinos(e, branches)
    raise ParseError(f"unknown link {head!r}", at)


def parse_link_expr(text: str) -> Link:
    """Parse a link expression into its normalized value."""
    s = _Scanner(text)
    parts = [_link_atom(s)]
    while s.accept("+"):
        parts.append(_link_atom(s))
    s.done()
    return link_connected_sum(*parts) if len(parts) > 1 else parts[0]
