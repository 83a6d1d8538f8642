"""Text syntax for bundle expressions.

    expr := taut(i) | triv(r) | dual(expr) | tensor(expr, expr)
          | sum(expr, expr) | wedge(p, expr) | sym(p, expr)

``taut(i)`` is the tautological subbundle of the i-th Grassmannian factor
(0-based).  Whitespace is ignored.  ``str(parse_bundle(s))`` gives the
canonical spelling, so printing and parsing round-trip.
"""

from __future__ import annotations

import re

from .bundles import BundleError, BundleExpr, Dual, Sum, Sym, Taut, Tensor, Trivial, Wedge

_TOKEN = re.compile(r"\s*(?:(\d+)|([a-z]+)|([(),]))")


def _tokens(text: str) -> list[str]:
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise BundleError(f"unexpected character at {pos} in {text!r}")
        out.append(m.group(m.lastindex))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, want: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (want is not None and tok != want):
            raise BundleError(f"expected {want or 'a token'} in {self.text!r}, got {tok!r}")
        self.i += 1
        return tok

    def integer(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise BundleError(f"expected an integer in {self.text!r}, got {tok!r}")
        return int(tok)

    def expr(self) -> BundleExpr:
        name = self.take()
        self.take("(")
        if name == "taut":
            out = Taut(self.integer())
        elif name == "triv":
            out = Trivial(self.integer())
        elif name == "dual":
            out = Dual(self.expr())
        elif name in ("tensor", "sum"):
            left = self.expr()
            self.take(",")
            out = (Tensor if name == "tensor" else Sum)(left, self.expr())
        elif name in ("wedge", "sym"):
            p = self.integer()
            self.take(",")
            out = (Wedge if name == "wedge" else Sym)(p, self.expr())
        else:
            raise BundleError(f"unknown constructor {name!r} in {self.text!r}")
        self.take(")")
        return out


def parse_bundle(text: str) -> BundleExpr:
    parser = _Parser(text)
    out = parser.expr()
    if parser.peek() is not None:
        raise BundleError(f"trailing input in {text!r}")
    return out
