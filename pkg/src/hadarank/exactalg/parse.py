"""Text formats: polynomial expressions, ideal files, parametrization files.

Polynomial grammar::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := '-' unary | '+' unary | power
    power  := atom ('^' INT)?
    atom   := INT ('/' INT)? | VAR | '(' expr ')'
"""

from __future__ import annotations

import re
from pathlib import Path

from ..errors import ParseError
from .polynomial import Polynomial, Ring
from .rational import Rat

_TOKEN = re.compile(r"(\s+)|(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.)")


def _tokenize(text: str):
    tokens = []
    for m in _TOKEN.finditer(text):
        if m.group(1):
            continue
        if m.group(2) is not None:
            tokens.append(("int", int(m.group(2)), m.start()))
        elif m.group(3) is not None:
            tokens.append(("var", m.group(3), m.start()))
        else:
            ch = m.group(4)
            if ch not in "+-*^/()":
                raise ParseError(f"unexpected character {ch!r}", text, m.start())
            tokens.append((ch, ch, m.start()))
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0
        self._index = {name: k for k, name in enumerate(ring.names)}

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            raise ParseError(f"expected {want}, found {tok[1]!r}", self.text, tok[2])
        self.i += 1
        return tok

    def expr(self):
        value = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[0] == "*":
            self.take()
            value = value * self.unary()
        return value

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("int")
            return base ** tok[1]
        return base

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "int":
            self.take()
            if self.peek()[0] == "/":
                self.take()
                den = self.take("int")
                if den[1] == 0:
                    raise ParseError("zero denominator", self.text, den[2])
                return self.ring.const(Rat(value, den[1]))
            return self.ring.const(value)
        if kind == "var":
            self.take()
            if value not in self._index:
                m = re.fullmatch(r"([A-Za-z_]+)(\d+)", value)
                prefixes = {re.sub(r"\d+$", "", n) for n in self.ring.names}
                if m and m.group(1) in prefixes:
                    raise ParseError(
                        f"variable index out of range: {value} (ring has {self.ring.nvars} variables)",
                        self.text,
                        pos,
                    )
                raise ParseError(f"unknown variable {value!r}", self.text, pos)
            return self.ring.gen(self._index[value])
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        what = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"unexpected {what}", self.text, pos)


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring``.

    >>> str(parse_polynomial("x1^2 - 2*x0*x2", Ring.projective(2)))
    'x1^2 - 2*x0*x2'
    """
    if not text.strip():
        raise ParseError("empty polynomial", text, 0)
    p = _Parser(text, ring)
    value = p.expr()
    p.take("end")
    return value


def _content_lines(text: str):
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield lineno, stripped


def parse_ideal_text(text: str):
    """Parse the ideal file format; returns an :class:`~hadarank.exactalg.ideal.Ideal`."""
    from .ideal import Ideal

    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("missing 'ring N' header")
    lineno, header = lines[0]
    m = re.fullmatch(r"ring\s+(\d+)", header)
    if not m:
        raise ParseError(f"line {lineno}: expected 'ring N', got {header!r}")
    ring = Ring.projective(int(m.group(1)))
    gens = []
    for lineno, line in lines[1:]:
        try:
            gens.append(parse_polynomial(line, ring))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
    return Ideal(ring, gens)


def format_ideal(ideal, comments=()) -> str:
    out = [f"# {c}" for c in comments]
    out.append(f"ring {ideal.ring.nvars - 1}")
    out.extend(str(g) for g in ideal.generators)
    return "\n".join(out) + "\n"


def read_ideal(path):
    return parse_ideal_text(Path(path).read_text())


def write_ideal(path, ideal, comments=()):
    Path(path).write_text(format_ideal(ideal, comments))
