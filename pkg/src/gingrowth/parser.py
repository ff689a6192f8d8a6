"""Text format for rings and ideals, and JSON report serialization.

Input grammar::

    # key: value            (optional metadata; value is JSON when it parses)
    ring x, y, z, t;
    char 32003;             (a prime, or 0 for the rationals)
    ideal x*t - y*z, z^3 - x*t^2;

Expressions use integer (or rational) coefficients with ``+ - * ^ ( )``;
``/`` is allowed only between constants.  Variables are bound in the
declared order, the first being the largest.  ``ideal 0`` is the zero
ideal.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .field import field_from_spec, is_prime
from .ideals import Ideal
from .ring import Polynomial, Ring

SCHEMA_KEYS = ("label", "field", "seed", "invariants", "hilbert", "gin", "growth")
INVARIANT_KEYS = ("dim", "degree", "D", "M", "reg", "satdeg", "alpha")


class ParseError(ValueError):
    """Syntax or semantic error, with a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int, kind: str = "syntax"):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column
        self.kind = kind


@dataclass
class IdealSource:
    names: tuple
    field_spec: str
    generators: list
    metadata: dict = field(default_factory=dict)

    @property
    def label(self) -> str:
        return str(self.metadata.get("label", ""))


# ---------------------------------------------------------------------------
# tokenizer


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))", re.S)


@dataclass
class _Tok:
    kind: str  # num, name, op, end
    text: str
    pos: int


def _tokens(text: str, start: int, stop: int):
    pos = start
    while pos < stop:
        while pos < stop and text[pos].isspace():
            pos += 1
        if pos == stop:
            break
        m = _TOKEN.match(text, pos, stop)
        if m is None or m.end() == pos:
            break
        if m.group(1) is not None:
            yield _Tok("num", m.group(1), m.start(1))
        elif m.group(2) is not None:
            yield _Tok("name", m.group(2), m.start(2))
        elif m.group(3) is not None:
            yield _Tok("op", m.group(3), m.start(3))
        pos = m.end()
    yield _Tok("end", "", stop)


def _line_col(text: str, pos: int):
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


class _ExprParser:
    """Recursive descent: expr = term {(+|-) term}; term = unary {* unary | / const};
    unary = (+|-) unary | power; power = atom [^ int]."""

    def __init__(self, text: str, start: int, stop: int, ring: Ring):
        self.text = text
        self.toks = list(_tokens(text, start, stop))
        self.i = 0
        self.ring = ring
        self.index = {name: k for k, name in enumerate(ring.names)}

    def error(self, message: str, tok: _Tok | None = None, kind: str = "syntax"):
        tok = tok or self.peek()
        raise ParseError(message, *_line_col(self.text, tok.pos), kind=kind)

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def parse_list(self) -> list:
        out = [self.expr()]
        while self.peek().text == ",":
            self.take()
            out.append(self.expr())
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().text!r}")
        return out

    def expr(self):
        start = self.peek()
        value = self.term()
        while self.peek().text in ("+", "-"):
            op = self.take().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value, start

    def term(self) -> Polynomial:
        value = self.unary()
        while self.peek().text in ("*", "/"):
            op = self.take()
            if op.text == "*":
                value = value * self.unary()
            else:
                tok = self.peek()
                den = self.unary()
                if den.degree() > 0 or den.is_zero():
                    self.error("division is only allowed by a nonzero constant", tok)
                value = value * self.ring.constant(self.ring.field.inv(den.coeffs[(0,) * self.ring.nvars]))
        return value

    def unary(self) -> Polynomial:
        tok = self.peek()
        if tok.text == "-":
            self.take()
            return -self.unary()
        if tok.text == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek().text == "^":
            self.take()
            tok = self.take()
            if tok.kind != "num":
                self.error("exponent must be a non-negative integer", tok)
            return base ** int(tok.text)
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        if tok.kind == "num":
            return self.ring.constant(int(tok.text))
        if tok.kind == "name":
            if tok.text not in self.index:
                self.error(f"unknown variable {tok.text!r}", tok, kind="unknown-variable")
            return self.ring.gen(self.index[tok.text])
        if tok.text == "(":
            value, _ = self.expr()
            if self.peek().text != ")":
                self.error("expected ')'")
            self.take()
            return value
        if tok.kind == "end":
            self.error("unexpected end of expression", tok)
        self.error(f"unexpected {tok.text!r}", tok)


# ---------------------------------------------------------------------------
# statements


_STATEMENT = re.compile(r"\s*(ring|char|ideal)\b", re.S)


def _metadata_line(line: str) -> tuple | None:
    body = line.lstrip()[1:].strip()
    if ":" not in body:
        return None
    key, value = body.split(":", 1)
    value = value.strip()
    try:
        return key.strip(), json.loads(value)
    except json.JSONDecodeError:
        return key.strip(), value


def _strip_comments(text: str):
    """Blank out comment lines (keeping offsets) and collect metadata."""
    meta = {}
    out = []
    for line in text.splitlines(keepends=True):
        if line.lstrip().startswith("#"):
            kv = _metadata_line(line.rstrip("\n"))
            if kv:
                meta[kv[0]] = kv[1]
            out.append(re.sub(r"[^\n]", " ", line))
        else:
            out.append(line)
    return "".join(out), meta


def parse_ideal(text: str, field_override=None) -> tuple[IdealSource, list[Polynomial]]:
    """Parse the text format; returns the source record and the generators."""
    body, meta = _strip_comments(text)
    stmts = {}
    pos = 0
    while True:
        nxt = re.match(r"\s*", body[pos:]).end() + pos
        if nxt >= len(body):
            break
        m = _STATEMENT.match(body, nxt)
        if not m:
            raise ParseError("expected 'ring', 'char' or 'ideal'", *_line_col(body, nxt))
        key = m.group(1)
        end = body.find(";", m.end())
        if end < 0:
            raise ParseError(f"missing ';' after {key} statement", *_line_col(body, len(body.rstrip())))
        if key in stmts:
            raise ParseError(f"duplicate {key} statement", *_line_col(body, m.start(1)))
        stmts[key] = (m.end(), end)
        pos = end + 1
    if "ring" not in stmts:
        raise ParseError("missing ring statement", *_line_col(body, len(body)))

    a, b = stmts["ring"]
    names = []
    for piece in re.finditer(r"[^,]+", body[a:b]):
        name = piece.group().strip()
        at = a + piece.start() + (len(piece.group()) - len(piece.group().lstrip()))
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
            raise ParseError(f"bad variable name {name!r}", *_line_col(body, at))
        if name in names:
            raise ParseError(f"duplicate variable {name!r}", *_line_col(body, at))
        names.append(name)
    if not names:
        raise ParseError("the ring needs at least one variable", *_line_col(body, a))

    field_spec = "32003"
    if "char" in stmts:
        a, b = stmts["char"]
        raw = body[a:b].strip()
        if not re.fullmatch(r"\d+", raw):
            raise ParseError("characteristic must be a prime or 0", *_line_col(body, a + 1))
        if int(raw) != 0 and not is_prime(int(raw)):
            raise ParseError(f"{raw} is not prime", *_line_col(body, a + 1), kind="field")
        field_spec = raw
    if field_override is not None:
        field_spec = str(field_override)
    ring = Ring.make(names, field_from_spec(field_spec))

    if "ideal" not in stmts:
        raise ParseError("missing ideal statement", *_line_col(body, len(body)))
    a, b = stmts["ideal"]
    parser = _ExprParser(body, a, b, ring)
    polys = []
    sources = []
    for value, start in parser.parse_list():
        if value.is_zero():
            continue
        if not value.is_homogeneous():
            raise ParseError("generator is not homogeneous", *_line_col(body, start.pos), kind="inhomogeneous")
        polys.append(value)
    for value in polys:
        sources.append(value.to_string())
    return IdealSource(tuple(names), field_spec, sources, meta), polys


def load_ideal(text: str, field_override=None) -> Ideal:
    src, polys = parse_ideal(text, field_override)
    ring = polys[0].ring if polys else Ring.make(src.names, field_from_spec(src.field_spec))
    return Ideal(ring, polys, label=src.label)


def emit_ideal(I: Ideal, metadata: dict | None = None) -> str:
    """Text form of an ideal; parse_ideal(emit_ideal(I)) gives back the same generators."""
    lines = [f"# {k}: {json.dumps(v)}" for k, v in (metadata or {}).items()]
    F = I.ring.field
    char = getattr(F, "p", 0)
    lines.append(f"ring {', '.join(I.ring.names)};")
    lines.append(f"char {char};")
    gens = ", ".join(g.to_string() for g in I.gens) if I.gens else "0"
    lines.append(f"ideal {gens};")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# reports


def _plain(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if hasattr(value, "as_dict"):
        return _plain(value.as_dict())
    if hasattr(value, "item"):
        return value.item()
    return value


def emit_report(report) -> str:
    """Deterministic JSON: schema keys first in fixed order, then any extra keys sorted."""
    data = _plain(report)
    if isinstance(data, dict):
        ordered = {k: data[k] for k in SCHEMA_KEYS if k in data}
        ordered.update({k: data[k] for k in sorted(data) if k not in ordered})
        if isinstance(ordered.get("invariants"), dict):
            inv = ordered["invariants"]
            ordered["invariants"] = {k: inv[k] for k in INVARIANT_KEYS if k in inv} | {
                k: inv[k] for k in sorted(inv) if k not in INVARIANT_KEYS
            }
        data = ordered
    return json.dumps(data, indent=2)


def parse_report(text: str) -> dict:
    return json.loads(text)


__all__ = [
    "INVARIANT_KEYS",
    "IdealSource",
    "ParseError",
    "SCHEMA_KEYS",
    "emit_ideal",
    "emit_report",
    "load_ideal",
    "parse_ideal",
    "parse_report",
]
