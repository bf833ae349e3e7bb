"""Surface syntax for rings, monomials, ideals and linear exponent families.

Grammar (whitespace is insignificant)::

    monomial := '1' | factor ('*' factor)*
    factor   := var ('^' exponent)?
    exponent := nonneg-integer | '(' linear ')'
    linear   := ['+'|'-'] term (('+'|'-') term)*
    term     := integer ['*'] 'n' | 'n' | integer

The symbol ``n`` is the family parameter; it is only legal inside exponents
of family expressions and may not be used as a ring variable there.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError
from .monomials import Monomial, MonomialIdeal, RingContext
from .stabilization import LinearExponentFamily

PARAMETER = "n"

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[*^()+\-]))")


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text[:pos]) + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[bad]!r}", text, bad)
        kind = m.lastgroup
        tokens.append(_Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(_Token("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: RingContext, family: bool):
        self.text = text
        self.ring = ring
        self.family = family
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok: _Token | None = None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok.pos)

    def expect(self, text: str) -> _Token:
        tok = self.take()
        if tok.text != text:
            self.fail(f"expected {text!r}, found {tok.text or 'end of input'!r}", tok)
        return tok

    def monomial(self) -> list[tuple[int, int]]:
        exps = [(0, 0)] * self.ring.num_vars
        if self.peek().kind == "int" and self.peek().text == "1" and self.tokens[self.i + 1].kind == "end":
            self.take()
            return exps
        while True:
            tok = self.take()
            if tok.kind != "name":
                self.fail(f"expected a variable, found {tok.text or 'end of input'!r}", tok)
            if tok.text == PARAMETER and self.family:
                self.fail(f"{PARAMETER!r} is the family parameter and cannot be used as a variable", tok)
            if tok.text not in self.ring.variable_names:
                self.fail(f"unknown variable {tok.text!r}", tok)
            slope, offset = 0, 1
            if self.peek().text == "^":
                self.take()
                slope, offset = self.exponent()
            k = self.ring.index(tok.text)
            a, b = exps[k]
            exps[k] = (a + slope, b + offset)
            if self.peek().text == "*":
                self.take()
                continue
            if self.peek().kind != "end":
                self.fail(f"expected '*' or end of monomial, found {self.peek().text!r}")
            return exps

    def exponent(self) -> tuple[int, int]:
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            return 0, int(tok.text)
        if tok.text == "(":
            self.take()
            start = self.peek()
            value = self.linear()
            self.expect(")")
            if not self.family and value[1] < 0:
                self.fail("exponent must be nonnegative", start)
            return value
        self.fail(f"malformed exponent {tok.text or 'end of input'!r}; use an integer or '(...)'", tok)

    def linear(self) -> tuple[int, int]:
        slope = offset = 0
        first = True
        while True:
            sign = 1
            tok = self.peek()
            if tok.kind == "op" and tok.text in ("+", "-"):
                self.take()
                sign = -1 if tok.text == "-" else 1
            elif not first:
                return slope, offset
            first = False
            tok = self.take()
            if tok.kind == "int":
                coef = int(tok.text)
                nxt = self.peek()
                if nxt.text == "*":
                    self.take()
                    nxt = self.peek()
                    if nxt.text != PARAMETER:
                        self.fail(f"expected {PARAMETER!r} after '*'", nxt)
                if nxt.text == PARAMETER:
                    self._check_parameter(nxt)
                    self.take()
                    slope += sign * coef
                else:
                    offset += sign * coef
            elif tok.text == PARAMETER:
                self._check_parameter(tok)
                slope += sign
            else:
                self.fail(f"malformed exponent term {tok.text or 'end of input'!r}", tok)

    def _check_parameter(self, tok: _Token) -> None:
        if not self.family:
            self.fail(f"parameter {PARAMETER!r} used outside a family expression", tok)


def parse_ring(text: str) -> RingContext:
    names = [s for s in re.split(r"[,\s]+", text.strip()) if s]
    try:
        return RingContext(tuple(names))
    except ValueError as exc:
        raise ParseError(f"invalid ring {text!r}: {exc}") from None


def parse_monomial(text: str, ring: RingContext) -> Monomial:
    """Parse a monomial such as ``"x1*x2^2"``; repeated variables add their exponents."""
    exps = _Parser(text, ring, family=False).monomial()
    return Monomial(ring, tuple(b for _, b in exps))


def parse_family_monomial(text: str, ring: RingContext) -> tuple[tuple[int, int], ...]:
    """Parse a generator whose exponents may be linear in ``n``; returns ``(slope, offset)`` per variable."""
    if PARAMETER in ring.variable_names:
        raise ParseError(f"{PARAMETER!r} is reserved for the family parameter and cannot be a ring variable")
    exps = _Parser(text, ring, family=True).monomial()
    for (a, _), name in zip(exps, ring.variable_names):
        if a < 0:
            raise ParseError(f"exponent of {name} decreases with {PARAMETER} in {text!r}")
    return tuple(exps)


def _split_generators(text: str) -> list[tuple[str, int]]:
    parts, start = [], 0
    for m in re.finditer(",", text):
        parts.append((text[start:m.start()], start))
        start = m.end()
    parts.append((text[start:], start))
    if all(not p.strip() for p, _ in parts):
        raise ParseError("no generators given", text, 0)
    for p, at in parts:
        if not p.strip():
            raise ParseError("empty generator", text, at)
    return parts


def _shifted(exc: ParseError, text: str, offset: int) -> ParseError:
    pos = None if exc.position is None else exc.position + offset
    return ParseError(exc.message, text, pos)


def parse_ideal(text: str, ring: RingContext) -> MonomialIdeal:
    """Parse comma-separated generators, e.g. ``"x1*x2^2, x2^3"``."""
    gens = []
    for part, offset in _split_generators(text):
        try:
            gens.append(parse_monomial(part, ring))
        except ParseError as exc:
            raise _shifted(exc, text, offset) from None
    return MonomialIdeal(ring, gens)


def parse_family(text: str, ring: RingContext, n_min: int = 1) -> LinearExponentFamily:
    gens = []
    for part, offset in _split_generators(text):
        try:
            gens.append(parse_family_monomial(part, ring))
        except ParseError as exc:
            raise _shifted(exc, text, offset) from None
    return LinearExponentFamily(ring, tuple(gens), n_min)


def format_ideal(I: MonomialIdeal) -> str:
    return ", ".join(str(g) for g in I.generators)


def parse_range(text: str) -> tuple[int, int]:
    """``"A..B"`` (inclusive) or a single integer."""
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not m:
        raise ParseError(f"expected a range like 2..4, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if hi < lo:
        raise ParseError(f"empty range {text!r}")
    return lo, hi
