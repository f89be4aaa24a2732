"""Expression language for the command line.

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" uint)?
    atom   := "E2" | "E4" | "E6" | "Delta" | rational
            | "D" "(" expr ")" | "RC" "(" expr "," expr "," uint ")" | "(" expr ")"
    rational := int ("/" uint)?      int may carry a leading "-"
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .brackets import bracket
from .numkernel import fmt_rational
from .ring import DELTA, E2, E4, E6, GradedPoly, GradingError, QuasiForm, derive_poly

__all__ = ["ParseError", "EvalError", "parse", "evaluate", "to_text", "Gen", "Num", "BinOp", "Pow", "Deriv", "RC"]

GENERATORS = {"E2": E2, "E4": E4, "E6": E6, "Delta": DELTA}


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at offset {pos}")
        self.pos = pos


class EvalError(ValueError):
    pass


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exp: int


@dataclass(frozen=True)
class Deriv:
    arg: object


@dataclass(frozen=True)
class RC:
    f: object
    g: object
    n: int


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*/^(),]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, value=None, kind=None):
        tok = self.peek()
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = repr(value) if value is not None else kind
            got = repr(tok[1]) if tok[0] != "end" else "end of input"
            raise ParseError(f"expected {want}, got {got}", tok[2])
        self.i += 1
        return tok

    def uint(self) -> int:
        tok = self.peek()
        if tok[0] != "num":
            got = repr(tok[1]) if tok[0] != "end" else "end of input"
            raise ParseError(f"expected unsigned integer, got {got}", tok[2])
        self.i += 1
        return int(tok[1])

    def expr(self):
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek()[1] == "*":
            self.take()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        if self.peek()[1] == "^":
            self.take()
            node = Pow(node, self.uint())
        return node

    def atom(self):
        kind, val, pos = self.peek()
        sign = 1
        if val == "-" and kind == "op" and self.toks[self.i + 1][0] == "num":
            self.take()
            sign = -1
            kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            value = Fraction(sign * int(val))
            if self.peek()[1] == "/":
                self.take()
                den = self.uint()
                if den == 0:
                    raise ParseError("zero denominator", self.toks[self.i - 1][2])
                value /= den
            return Num(value)
        if kind == "name":
            self.take()
            if val in GENERATORS:
                return Gen(val)
            if val == "D":
                self.take("(")
                inner = self.expr()
                self.take(")")
                return Deriv(inner)
            if val == "RC":
                self.take("(")
                f = self.expr()
                self.take(",")
                g = self.expr()
                self.take(",")
                n = self.uint()
                self.take(")")
                return RC(f, g, n)
            raise ParseError(f"unknown identifier {val!r}", pos)
        if val == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        got = repr(val) if kind != "end" else "end of input"
        raise ParseError(f"unexpected {got}", pos)


def parse(text: str):
    p = _Parser(text)
    node = p.expr()
    p.take(kind="end")
    return node


def _form(p: GradedPoly) -> QuasiForm:
    try:
        return QuasiForm.of(p)
    except GradingError as exc:
        raise EvalError(str(exc)) from None


def _eval(node) -> GradedPoly:
    if isinstance(node, Gen):
        return GENERATORS[node.name]
    if isinstance(node, Num):
        return GradedPoly.const(node.value)
    if isinstance(node, BinOp):
        a, b = _eval(node.left), _eval(node.right)
        if node.op == "*":
            return a * b
        if a and b and a.weights() != b.weights():
            raise EvalError(f"cannot add forms of weights {sorted(a.weights())} and {sorted(b.weights())}")
        return a + b if node.op == "+" else a - b
    if isinstance(node, Pow):
        return _eval(node.base) ** node.exp
    if isinstance(node, Deriv):
        return derive_poly(_form(_eval(node.arg)).poly)
    if isinstance(node, RC):
        f, g = _form(_eval(node.f)), _form(_eval(node.g))
        try:
            return bracket(f, g, node.n).poly
        except GradingError as exc:
            raise EvalError(str(exc)) from None
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(node) -> QuasiForm:
    if isinstance(node, str):
        node = parse(node)
    return _form(_eval(node))


def to_text(node) -> str:
    """Fully parenthesized rendering that parses back to an equal tree."""
    if isinstance(node, Gen):
        return node.name
    if isinstance(node, Num):
        return fmt_rational(node.value)
    if isinstance(node, BinOp):
        return f"({to_text(node.left)} {node.op} {to_text(node.right)})"
    if isinstance(node, Pow):
        return f"({to_text(node.base)})^{node.exp}"
    if isinstance(node, Deriv):
        return f"D({to_text(node.arg)})"
    if isinstance(node, RC):
        return f"RC({to_text(node.f)}, {to_text(node.g)}, {node.n})"
    raise TypeError(f"not an expression node: {node!r}")
