"""Reader and printer for ideal documents.

Grammar (whitespace-insensitive, ``#`` starts a comment)::

    ring: <id> (, <id>)* ; char <nonneg int>
    gens: <poly> (, <poly>)*

Polynomials use integer coefficients, ``*``, ``^``, ``+``, ``-`` and
parentheses.  Without a ``ring:`` line the variables are taken in order of
first appearance over the rationals.  An optional ``name:`` line is kept as
metadata.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .errors import NonHomogeneousError, ParseError
from .ring import Field, Ideal, PolyRing, Polynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


@dataclass
class IdealDocument:
    ring: PolyRing
    generators: List[Polynomial]
    name: Optional[str] = None
    metadata: dict = field(default_factory=dict)

    @property
    def ideal(self) -> Ideal:
        return Ideal(self.ring, self.generators)

    def to_text(self) -> str:
        return format_document(self.ring, self.generators)


def _tokenize(text: str, offset: int, line: int):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        num, ident, sym = m.groups()
        start = m.start(m.lastindex) if m.lastindex else m.start()
        if num is not None:
            tokens.append(("int", int(num), start))
        elif ident is not None:
            tokens.append(("id", ident, start))
        elif sym is not None:
            if sym not in "+-*^(),":
                raise ParseError(f"unexpected character {sym!r}", offset + start, line)
            tokens.append((sym, sym, start))
        pos = m.end()
    return tokens


class _PolyParser:
    def __init__(self, tokens, ring_vars, field, line, col0, strict_vars):
        self.tokens = tokens
        self.i = 0
        self.vars = ring_vars
        self.field = field
        self.line = line
        self.col0 = col0
        self.strict = strict_vars

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        col = self.col0 + (tok[2] if tok else 0)
        raise ParseError(msg, col, self.line)

    def take(self, kind=None):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of input")
        if kind and tok[0] != kind:
            self.error(f"expected {kind!r}, found {tok[1]!r}", tok)
        self.i += 1
        return tok

    # polynomials are built as dicts {exponent tuple: int coefficient}; the
    # variable list may still grow, so exponents are stored as dicts first
    def expr(self):
        acc = self.term()
        while self.peek() and self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.term()
            acc = _padd(acc, rhs if op == "+" else _pscale(rhs, -1))
        return acc

    def term(self):
        acc = self.unary()
        while self.peek() and self.peek()[0] == "*":
            self.take()
            acc = _pmul(acc, self.unary())
        return acc

    def unary(self):
        tok = self.peek()
        if tok and tok[0] == "-":
            self.take()
            return _pscale(self.unary(), -1)
        if tok and tok[0] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() and self.peek()[0] == "^":
            self.take()
            exp = self.take("int")[1]
            out = {(): 1}
            for _ in range(exp):
                out = _pmul(out, base)
            return out
        return base

    def atom(self):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of input")
        if tok[0] == "int":
            self.take()
            return {(): tok[1]} if tok[1] else {}
        if tok[0] == "id":
            self.take()
            name = tok[1]
            if name not in self.vars:
                if self.strict:
                    self.error(f"unknown variable {name!r}", tok)
                self.vars.append(name)
            return {((name, 1),): 1}
        if tok[0] == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        self.error(f"unexpected token {tok[1]!r}", tok)


def _norm(mono):
    acc = {}
    for name, e in mono:
        acc[name] = acc.get(name, 0) + e
    return tuple(sorted((k, v) for k, v in acc.items() if v))


def _padd(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
        if not out[k]:
            del out[k]
    return out


def _pscale(a, c):
    return {k: v * c for k, v in a.items() if v * c}


def _pmul(a, b):
    out = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            k = _norm(k1 + k2)
            out[k] = out.get(k, 0) + v1 * v2
    return {k: v for k, v in out.items() if v}


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    tokens = _tokenize(text, 0, None)
    parser = _PolyParser(tokens, list(ring.variables), ring.field, None, 0, True)
    raw = parser.expr()
    if parser.peek() is not None:
        parser.error(f"unexpected token {parser.peek()[1]!r}")
    return _to_poly(raw, ring)


def _to_poly(raw, ring: PolyRing) -> Polynomial:
    index = {v: i for i, v in enumerate(ring.variables)}
    items = []
    for mono, c in raw.items():
        e = [0] * ring.nvars
        for name, k in mono:
            e[index[name]] += k
        items.append((c, tuple(e)))
    return Polynomial.from_terms(ring, items)


def _split_commas(tokens):
    parts, cur, depth = [], [], 0
    for tok in tokens:
        if tok[0] == "(":
            depth += 1
        elif tok[0] == ")":
            depth -= 1
        if tok[0] == "," and depth == 0:
            parts.append(cur)
            cur = []
        else:
            cur.append(tok)
    parts.append(cur)
    return parts


def _parse_ring_line(body: str, line: int, col0: int) -> Tuple[List[str], int]:
    if ";" in body:
        var_part, char_part = body.split(";", 1)
    else:
        var_part, char_part = body, ""
    names = [v.strip() for v in var_part.split(",")]
    for v in names:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
            raise ParseError(f"bad variable name {v!r}", col0, line)
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable names", col0, line)
    char = 0
    char_part = char_part.strip()
    if char_part:
        m = re.fullmatch(r"char\s*(\d+)", char_part)
        if not m:
            raise ParseError(f"expected 'char <int>', found {char_part!r}",
                             col0 + len(var_part) + 1, line)
        char = int(m.group(1))
    return names, char


def parse_ideal(text: str, characteristic: Optional[int] = None) -> IdealDocument:
    """Parse an ideal document into a ring and homogeneous generators."""
    ring_vars = None
    char = 0
    name = None
    gens_chunks = []  # (line number, column offset, text)
    section = None
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0]
        if not line.strip():
            continue
        m = re.match(r"\s*(ring|gens|name)\s*:", line)
        if m:
            section = m.group(1)
            body = line[m.end():]
            col0 = m.end()
            if section == "ring":
                if ring_vars is not None:
                    raise ParseError("duplicate ring declaration", 0, lineno)
                ring_vars, char = _parse_ring_line(body, lineno, col0)
                section = None
            elif section == "name":
                name = body.strip()
                section = None
            else:
                gens_chunks.append((lineno, col0, body))
            continue
        if section == "gens":
            gens_chunks.append((lineno, 0, line))
        else:
            raise ParseError("expected 'ring:', 'gens:' or 'name:'", 0, lineno)
    if not gens_chunks:
        raise ParseError("missing 'gens:' line")
    if characteristic is not None:
        char = characteristic
    try:
        field_ = Field(char)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    strict = ring_vars is not None
    variables = list(ring_vars) if strict else []

    tokens = []
    for lineno, col0, body in gens_chunks:
        for tok in _tokenize(body, col0, lineno):
            tokens.append(tok + (lineno, col0))
    raws = []
    for part in _split_commas(tokens):
        if not part:
            line = tokens[-1][3] if tokens else None
            raise ParseError("empty generator", None, line)
        lineno, col0 = part[0][3], part[0][4]
        parser = _PolyParser([t[:3] for t in part], variables, field_, lineno, col0, strict)
        raw = parser.expr()
        if parser.peek() is not None:
            parser.error(f"unexpected token {parser.peek()[1]!r}")
        raws.append((raw, lineno, col0 + part[0][2]))
    if not variables:
        raise ParseError("no variables declared or used")
    ring = PolyRing(variables, field_)
    generators = []
    for raw, lineno, col in raws:
        f = _to_poly(raw, ring)
        if not f.is_homogeneous():
            raise NonHomogeneousError(f"generator {f} is not homogeneous", col, lineno)
        if not f.is_zero():
            generators.append(f)
    return IdealDocument(ring, generators, name)


def format_document(ring: PolyRing, generators) -> str:
    gens = ", ".join(g.to_str() for g in generators) if generators else "0"
    return (f"ring: {', '.join(ring.variables)} ; char {ring.field.characteristic}\n"
            f"gens: {gens}\n")
