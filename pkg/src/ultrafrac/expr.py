"""Recursive-descent parser and evaluator for right-hand-side expressions.

Grammar (standard precedence; '^' is right-associative and binds tighter
than unary minus, so -2^2 = -(2^2) and 2^-2 = 2^(-2)):

    expr   :=  term (('+' | '-') term)*
    term   :=  unary (('*' | '/') unary)*
    unary  :=  '-' unary | power
    power  :=  atom ('^' unary)?
    atom   :=  NUMBER | IDENT '(' expr (',' expr)* ')' | IDENT | '(' expr ')'

Identifiers are the declared variables (by default r and x), the constant
q, and the function names sin cos tanh exp log abs min max pow.  Printing
a tree produces a fully parenthesized form that re-parses to an identical
tree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping

from .errors import ExprEvalError, ExprNameError, ExprSyntaxError

__all__ = [
    "RhsExpr",
    "Num",
    "Var",
    "Neg",
    "BinOp",
    "Call",
    "FUNCTIONS",
    "parse_expression",
    "make_callable",
]

#: function name -> arity
FUNCTIONS: dict[str, int] = {
    "sin": 1, "cos": 1, "tanh": 1, "exp": 1, "log": 1, "abs": 1,
    "min": 2, "max": 2, "pow": 2,
}

_CONSTANTS = ("q",)


def _finite(value: float, what: str) -> float:
    if not math.isfinite(value):
        raise ExprEvalError(f"{what} produced a non-finite value")
    return value


class RhsExpr:
    """Abstract syntax tree for f(r, x); nodes are immutable."""

    def eval(self, env: Mapping[str, float]) -> float:
        raise NotImplementedError


@dataclass(frozen=True)
class Num(RhsExpr):
    value: float

    def eval(self, env: Mapping[str, float]) -> float:
        return self.value

    def __str__(self) -> str:
        return repr(self.value)


@dataclass(frozen=True)
class Var(RhsExpr):
    name: str

    def eval(self, env: Mapping[str, float]) -> float:
        try:
            return env[self.name]
        except KeyError:
            raise ExprEvalError(f"variable '{self.name}' is not bound") from None

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Neg(RhsExpr):
    operand: RhsExpr

    def eval(self, env: Mapping[str, float]) -> float:
        return -self.operand.eval(env)

    def __str__(self) -> str:
        return f"(-{self.operand})"


def _power(base: float, exponent: float) -> float:
    try:
        return _finite(math.pow(base, exponent), "power")
    except ValueError:
        raise ExprEvalError(
            f"power domain error: ({base!r}) ^ ({exponent!r})") from None
    except OverflowError:
        raise ExprEvalError("power overflow") from None


@dataclass(frozen=True)
class BinOp(RhsExpr):
    op: str
    left: RhsExpr
    right: RhsExpr

    def eval(self, env: Mapping[str, float]) -> float:
        a = self.left.eval(env)
        b = self.right.eval(env)
        if self.op == "+":
            return _finite(a + b, "addition")
        if self.op == "-":
            return _finite(a - b, "subtraction")
        if self.op == "*":
            return _finite(a * b, "multiplication")
        if self.op == "/":
            if b == 0.0:
                raise ExprEvalError("division by zero")
            return _finite(a / b, "division")
        return _power(a, b)

    def __str__(self) -> str:
        return f"({self.left}{self.op}{self.right})"


def _call_log(x: float) -> float:
    if x <= 0.0:
        raise ExprEvalError(f"log of a nonpositive value ({x!r})")
    return math.log(x)


def _call_exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        raise ExprEvalError("exp overflow") from None


_IMPL: dict[str, Callable[..., float]] = {
    "sin": math.sin, "cos": math.cos, "tanh": math.tanh,
    "exp": _call_exp, "log": _call_log, "abs": abs,
    "min": min, "max": max, "pow": _power,
}


@dataclass(frozen=True)
class Call(RhsExpr):
    name: str
    args: tuple[RhsExpr, ...]

    def eval(self, env: Mapping[str, float]) -> float:
        vals = [a.eval(env) for a in self.args]
        return _finite(_IMPL[self.name](*vals), self.name)

    def __str__(self) -> str:
        return f"{self.name}({','.join(str(a) for a in self.args)})"


# --- tokenizer -------------------------------------------------------------

_SINGLE = {"+": "+", "-": "-", "*": "*", "/": "/", "^": "^",
           "(": "(", ")": ")", ",": ","}


@dataclass(frozen=True)
class _Token:
    kind: str          # 'num', 'ident', one of +-*/^(),, or 'eof'
    text: str
    pos: int           # character index into the source


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def _tokenize(text: str) -> list[_Token]:
    toks: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if ch in _SINGLE:
            toks.append(_Token(_SINGLE[ch], ch, i))
            i += 1
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and text[i + 1].isdigit()):
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if i < n and text[i] == ".":
                i += 1
                while i < n and text[i].isdigit():
                    i += 1
            if i < n and text[i] in "eE":
                i += 1
                if i < n and text[i] in "+-":
                    i += 1
                if i >= n or not text[i].isdigit():
                    raise ExprSyntaxError("malformed number literal",
                                          _byte_offset(text, i), ("digit",))
                while i < n and text[i].isdigit():
                    i += 1
            toks.append(_Token("num", text[start:i], start))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            toks.append(_Token("ident", text[start:i], start))
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}",
                              _byte_offset(text, i), ())
    toks.append(_Token("eof", "", n))
    return toks


# --- parser ----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str, variables: tuple[str, ...]):
        self.text = text
        self.toks = _tokenize(text)
        self.pos = 0
        self.names = tuple(variables) + _CONSTANTS

    def peek(self) -> _Token:
        return self.toks[self.pos]

    def advance(self) -> _Token:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: tuple[str, ...]) -> ExprSyntaxError:
        tok = self.peek()
        what = "end of input" if tok.kind == "eof" else f"{tok.text!r}"
        return ExprSyntaxError(f"unexpected {what}",
                               _byte_offset(self.text, tok.pos), expected)

    def expect(self, kind: str) -> _Token:
        if self.peek().kind != kind:
            raise self.fail((kind,))
        return self.advance()

    def expr(self) -> RhsExpr:
        node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> RhsExpr:
        node = self.unary()
        while self.peek().kind in ("*", "/"):
            op = self.advance().kind
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> RhsExpr:
        if self.peek().kind == "-":
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self) -> RhsExpr:
        base = self.atom()
        if self.peek().kind == "^":
            self.advance()
            return BinOp("^", base, self.unary())
        return base

    def atom(self) -> RhsExpr:
        tok = self.peek()
        if tok.kind == "num":
            self.advance()
            return Num(float(tok.text))
        if tok.kind == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "ident":
            self.advance()
            if self.peek().kind == "(":
                if tok.text not in FUNCTIONS:
                    raise ExprNameError(tok.text, _byte_offset(self.text, tok.pos))
                self.advance()
                args = [self.expr()]
                while self.peek().kind == ",":
                    self.advance()
                    args.append(self.expr())
                self.expect(")")
                arity = FUNCTIONS[tok.text]
                if len(args) != arity:
                    raise ExprSyntaxError(
                        f"{tok.text} expects {arity} argument(s), got {len(args)}",
                        _byte_offset(self.text, tok.pos), ())
                return Call(tok.text, tuple(args))
            if tok.text in FUNCTIONS:
                raise ExprSyntaxError(f"function {tok.text} needs arguments",
                                      _byte_offset(self.text, tok.pos), ("(",))
            if tok.text not in self.names:
                raise ExprNameError(tok.text, _byte_offset(self.text, tok.pos))
            return Var(tok.text)
        raise self.fail(("number", "identifier", "(", "-"))


def parse_expression(text: str, variables: tuple[str, ...] = ("r", "x")) -> RhsExpr:
    """Parse an expression over the given variables (plus the constant q).

    Raises :class:`ExprSyntaxError` with the byte offset and expected-token
    set, or :class:`ExprNameError` for unknown identifiers.
    """
    parser = _Parser(text, variables)
    node = parser.expr()
    if parser.peek().kind != "eof":
        raise parser.fail(("end of input", "operator"))
    return node


def make_callable(node: RhsExpr, q: float,
                  variables: tuple[str, ...] = ("r", "x")) -> Callable[..., float]:
    """Close the tree over q and return f(*variable values) -> float."""

    def call(*args: float) -> float:
        env = dict(zip(variables, args))
        env["q"] = float(q)
        return node.eval(env)

    return call
