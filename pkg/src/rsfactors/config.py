"""Run configuration files.

One ``key = value`` per line; ``#`` starts a comment.  Values are typed:

* integers ``7``, ``-2``; booleans ``true`` / ``false``
* exact scalars built from rationals ``a/b``, roots of unity ``zeta(N)^k``
  (``zeta(N)`` means k = 1) and powers ``q^k`` of the configured q, combined
  with ``+ - * /`` and parentheses, e.g. ``2*q^-1``, ``1/2 - zeta(3)^2``
* lists in brackets, possibly nested: ``[1, 2/3, zeta(4)]``, ``[[2,3,1],[3,2,1]]``

Floating-point literals are rejected so every value stays exact.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from .scalars import CycScalar, root_of_unity

__all__ = ["ConfigError", "RawConfig", "parse_config_text", "load_config", "Expr", "format_value"]


class ConfigError(ValueError):
    def __init__(self, message: str, source: str = "<config>", line: int | None = None):
        loc = f"{source}:{line}" if line is not None else source
        super().__init__(f"{loc}: {message}")
        self.source = source
        self.line = line


_TOKEN = re.compile(r"\s*(?:(\d+\.\d*|\.\d+)|(\d+)|(zeta|q|true|false)|(\^|\*|/|\+|-|\(|\)|\[|\]|,))")


class Expr:
    """Parsed scalar expression; ``q^k`` factors are resolved at evaluation time."""

    def __init__(self, text: str, node):
        self.text = text
        self.node = node

    def evaluate(self, q: int) -> CycScalar:
        return _eval(self.node, q)

    def __repr__(self):
        return f"Expr({self.text!r})"


def _eval(node, q):
    op = node[0]
    if op == "num":
        return CycScalar(node[1])
    if op == "zeta":
        return root_of_unity(node[1], node[2])
    if op == "q":
        return CycScalar(Fraction(q) ** node[1])
    if op == "neg":
        return -_eval(node[1], q)
    a, b = _eval(node[1], q), _eval(node[2], q)
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if b.is_zero():
        raise ZeroDivisionError("division by zero in config expression")
    return a / b


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                raise ValueError(f"unexpected character {text[pos:].strip()[:1]!r} in {text!r}")
            if m.group(1):
                raise ValueError(f"floating-point literal {m.group(1)!r} not allowed; use a/b")
            if m.group(2):
                self.toks.append(("int", int(m.group(2))))
            elif m.group(3):
                self.toks.append(("word", m.group(3)))
            else:
                self.toks.append(("sym", m.group(4)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value is not None and tok[1] != value):
            want = value if value is not None else kind
            raise ValueError(f"expected {want!r} in {self.text!r}")
        self.i += 1
        return tok

    def done(self):
        if self.i != len(self.toks):
            raise ValueError(f"trailing input in {self.text!r}")

    def value(self):
        tok = self.peek()
        if tok == ("sym", "["):
            self.take()
            items = []
            if self.peek() != ("sym", "]"):
                items.append(self.value())
                while self.peek() == ("sym", ","):
                    self.take()
                    items.append(self.value())
            self.take("sym", "]")
            return items
        if tok[0] == "word" and tok[1] in ("true", "false"):
            self.take()
            return tok[1] == "true"
        start = self.i
        node = self.expr()
        consumed = self.toks[start : self.i]
        text = " ".join(str(t[1]) for t in consumed)
        return Expr(text, node)

    def signed_int(self):
        sign = 1
        if self.peek() == ("sym", "-"):
            self.take()
            sign = -1
        return sign * self.take("int")[1]

    def expr(self):
        node = self.term()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            node = (op, node, self.term())
        return node

    def term(self):
        if self.peek() == ("sym", "-"):
            self.take()
            return ("neg", self.term())
        node = self.factor()
        while self.peek() in (("sym", "*"), ("sym", "/")):
            op = self.take()[1]
            node = (op, node, self.factor())
        return node

    def factor(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return ("num", tok[1])
        if tok == ("word", "zeta"):
            self.take()
            self.take("sym", "(")
            n = self.take("int")[1]
            self.take("sym", ")")
            if n < 1:
                raise ValueError("zeta(N) needs N >= 1")
            k = 1
            if self.peek() == ("sym", "^"):
                self.take()
                k = self.signed_int()
            return ("zeta", n, k)
        if tok == ("word", "q"):
            self.take()
            k = 1
            if self.peek() == ("sym", "^"):
                self.take()
                k = self.signed_int()
            return ("q", k)
        if tok == ("sym", "("):
            self.take()
            node = self.expr()
            self.take("sym", ")")
            return node
        raise ValueError(f"unexpected token {tok[1]!r} in {self.text!r}")


def parse_value(text: str):
    p = _Parser(text)
    val = p.value()
    p.done()
    return val


@dataclass
class RawConfig:
    """Key -> parsed value, with the line each key came from."""

    values: dict[str, Any] = field(default_factory=dict)
    lines: dict[str, int] = field(default_factory=dict)
    source: str = "<config>"

    def error(self, key: str, message: str) -> ConfigError:
        return ConfigError(f"{key}: {message}", self.source, self.lines.get(key))


_KEY = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def parse_config_text(text: str, source: str = "<config>") -> RawConfig:
    cfg = RawConfig(source=source)
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("expected 'key = value'", source, lineno)
        key, raw = (s.strip() for s in line.split("=", 1))
        if not _KEY.match(key):
            raise ConfigError(f"invalid key {key!r}", source, lineno)
        if key in cfg.values:
            raise ConfigError(f"duplicate key {key!r}", source, lineno)
        try:
            cfg.values[key] = parse_value(raw)
        except ValueError as exc:
            raise ConfigError(f"{key}: {exc}", source, lineno) from None
        cfg.lines[key] = lineno
    return cfg


def load_config(path: str | Path) -> RawConfig:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc.strerror}", str(path)) from None
    return parse_config_text(text, str(path))


def format_value(v) -> Any:
    """JSON-friendly, exact rendering of resolved config values."""
    if isinstance(v, (list, tuple)):
        return [format_value(x) for x in v]
    if isinstance(v, (bool, int)) or v is None:
        return v
    return str(v)
