"""A small expression language over the variable t.

Recursive-descent parser, strict evaluator, and a minimal-parenthesis
printer.  Power is right-associative and binds tighter than unary minus,
so "-2^2" means -(2^2).  Evaluation routes exp, log, powers, hyperbolics
and inverse functions through the constructive implementations; plain
trig goes through the platform.
"""

from __future__ import annotations

import math
import random
import re
from dataclasses import dataclass
from typing import Union

from .elementary import exp_construct, hyperbolic, inverse_fn, log_construct, pow_construct
from .errors import EvaluationError, ParseError

NUMBER = "Number"
IDENT = "Ident"
PLUS = "Plus"
MINUS = "Minus"
STAR = "Star"
SLASH = "Slash"
CARET = "Caret"
LPAREN = "LParen"
RPAREN = "RParen"
COMMA = "Comma"


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    offset: int


@dataclass(frozen=True)
class Constant:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Unary:
    child: "Expr"


@dataclass(frozen=True)
class Binary:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    fname: str
    arg: "Expr"


Expr = Union[Constant, Var, Unary, Binary, Call]

FUNCTION_NAMES = (
    "sin", "cos", "tan", "sec", "csc", "cot",
    "sinh", "cosh", "tanh",
    "exp", "log", "sqrt", "abs", "atan", "asin",
)

_NUMBER_RE = re.compile(r"\d+(?:\.\d+)?(?:[eE][+-]?\d+)?")
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_SINGLE = {
    "+": PLUS, "-": MINUS, "*": STAR, "/": SLASH,
    "^": CARET, "(": LPAREN, ")": RPAREN, ",": COMMA,
}


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SINGLE:
            tokens.append(Token(_SINGLE[ch], ch, i))
            i += 1
            continue
        if ch.isdigit():
            m = _NUMBER_RE.match(text, i)
            assert m is not None
            tokens.append(Token(NUMBER, m.group(), i))
            i = m.end()
            continue
        m = _IDENT_RE.match(text, i)
        if m is not None:
            tokens.append(Token(IDENT, m.group(), i))
            i = m.end()
            continue
        raise ParseError(i, f"unexpected character {ch!r}")
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.end = len(text)

    def _peek(self) -> Union[Token, None]:
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return None

    def _advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _expect(self, kind: str, what: str) -> Token:
        tok = self._peek()
        if tok is None:
            raise ParseError(self.end, f"expected {what}")
        if tok.kind != kind:
            raise ParseError(tok.offset, f"expected {what}")
        return self._advance()

    def parse(self) -> Expr:
        node = self.expr()
        tok = self._peek()
        if tok is not None:
            raise ParseError(tok.offset, "expected end of input")
        return node

    def expr(self) -> Expr:
        node = self.term()
        while True:
            tok = self._peek()
            if tok is None or tok.kind not in (PLUS, MINUS):
                return node
            self._advance()
            node = Binary(tok.lexeme, node, self.term())

    def term(self) -> Expr:
        node = self.factor()
        while True:
            tok = self._peek()
            if tok is None or tok.kind not in (STAR, SLASH):
                return node
            self._advance()
            node = Binary(tok.lexeme, node, self.factor())

    def factor(self) -> Expr:
        # Unary minus wraps a whole power, so -2^2 is -(2^2); a negative
        # base must be written (-2)^2.
        tok = self._peek()
        if tok is not None and tok.kind == MINUS:
            self._advance()
            return Unary(self.factor())
        node = self.atom()
        tok = self._peek()
        if tok is not None and tok.kind == CARET:
            self._advance()
            return Binary("^", node, self.factor())
        return node

    def atom(self) -> Expr:
        tok = self._peek()
        if tok is None:
            raise ParseError(self.end, "expected expression")
        if tok.kind == NUMBER:
            self._advance()
            return Constant(float(tok.lexeme))
        if tok.kind == LPAREN:
            self._advance()
            node = self.expr()
            self._expect(RPAREN, "')'")
            return node
        if tok.kind == IDENT:
            self._advance()
            if tok.lexeme == "t":
                return Var()
            if tok.lexeme == "e":
                return Constant(math.e)
            if tok.lexeme == "pi":
                return Constant(math.pi)
            if tok.lexeme in FUNCTION_NAMES:
                self._expect(LPAREN, "'('")
                arg = self.expr()
                self._expect(RPAREN, "')'")
                return Call(tok.lexeme, arg)
            raise ParseError(tok.offset, f"unknown identifier {tok.lexeme!r}")
        raise ParseError(tok.offset, "expected expression")


def parse(text: str) -> Expr:
    return _Parser(text).parse()


_EVAL_EPS = 1e-14
_MAX_MUL_EXPONENT = 64


def _power(base: float, expo: float, t: float) -> float:
    if expo == expo and expo.is_integer() and abs(expo) <= _MAX_MUL_EXPONENT:
        n = int(expo)
        out = 1.0
        for _ in range(abs(n)):
            out *= base
        if n >= 0:
            return out
        if out == 0.0:
            raise EvaluationError(t, "zero raised to a negative power")
        return 1.0 / out
    if base == 0.0:
        if expo > 0.0:
            return 0.0
        raise EvaluationError(t, "zero raised to a nonpositive power")
    if base < 0.0:
        raise EvaluationError(t, "negative base with non-integral exponent")
    return pow_construct(base, expo, _EVAL_EPS)


def _apply(fname: str, x: float, t: float) -> float:
    if fname == "sin":
        return math.sin(x)
    if fname == "cos":
        return math.cos(x)
    if fname == "tan":
        return math.tan(x)
    if fname == "sec":
        c = math.cos(x)
        if c == 0.0:
            raise EvaluationError(t, "sec undefined")
        return 1.0 / c
    if fname == "csc":
        s = math.sin(x)
        if s == 0.0:
            raise EvaluationError(t, "csc undefined")
        return 1.0 / s
    if fname == "cot":
        s = math.sin(x)
        if s == 0.0:
            raise EvaluationError(t, "cot undefined")
        return math.cos(x) / s
    if fname == "exp":
        return exp_construct(x, _EVAL_EPS)
    if fname == "log":
        return log_construct(x, _EVAL_EPS).value
    if fname == "sqrt":
        if x < 0.0:
            raise EvaluationError(t, "sqrt of a negative value")
        return math.sqrt(x)
    if fname == "abs":
        return abs(x)
    if fname in ("sinh", "cosh", "tanh"):
        return hyperbolic(fname, x, _EVAL_EPS)
    if fname == "atan":
        return inverse_fn("arctan", x, _EVAL_EPS)
    if fname == "asin":
        return inverse_fn("arcsin", x, _EVAL_EPS)
    raise EvaluationError(t, f"unknown function {fname!r}")


def eval_expr(e: Expr, t: float) -> float:
    """Evaluate a parsed expression at t.

    Domain violations (log of a nonpositive value, division by zero, ...)
    surface as EvaluationError carrying t rather than leaking the
    exception types of the underlying constructions.
    """
    if isinstance(e, Constant):
        return e.value
    if isinstance(e, Var):
        return t
    if isinstance(e, Unary):
        return -eval_expr(e.child, t)
    if isinstance(e, Binary):
        left = eval_expr(e.left, t)
        right = eval_expr(e.right, t)
        if e.op == "+":
            return left + right
        if e.op == "-":
            return left - right
        if e.op == "*":
            return left * right
        if e.op == "/":
            if right == 0.0:
                raise EvaluationError(t, "division by zero")
            return left / right
        if e.op == "^":
            try:
                return _power(left, right, t)
            except (ValueError, OverflowError) as exc:
                raise EvaluationError(t, str(exc)) from exc
        raise EvaluationError(t, f"unknown operator {e.op!r}")
    if isinstance(e, Call):
        x = eval_expr(e.arg, t)
        try:
            return _apply(e.fname, x, t)
        except EvaluationError:
            raise
        except (ValueError, OverflowError) as exc:
            raise EvaluationError(t, str(exc)) from exc
    raise EvaluationError(t, f"unknown node {e!r}")


_PREC_ADD = 1
_PREC_MUL = 2
_PREC_UNARY = 3
_PREC_POW = 4
_PREC_ATOM = 5


def _prec(e: Expr) -> int:
    if isinstance(e, Binary):
        if e.op in ("+", "-"):
            return _PREC_ADD
        if e.op in ("*", "/"):
            return _PREC_MUL
        return _PREC_POW
    if isinstance(e, Unary):
        return _PREC_UNARY
    if isinstance(e, Constant) and math.copysign(1.0, e.value) < 0:
        # prints with a leading minus, which must parenthesize like one
        return _PREC_UNARY
    return _PREC_ATOM


def _format_number(v: float) -> str:
    if math.copysign(1.0, v) < 0:
        return "-" + _format_number(-v)
    if v.is_integer() and v < 1e16:
        return str(int(v))
    return repr(v)


def _wrap(e: Expr, minimum: int) -> str:
    body = _fmt(e)
    if _prec(e) < minimum:
        return f"({body})"
    return body


def _fmt(e: Expr) -> str:
    if isinstance(e, Constant):
        return _format_number(e.value)
    if isinstance(e, Var):
        return "t"
    if isinstance(e, Unary):
        return "-" + _wrap(e.child, _PREC_UNARY)
    if isinstance(e, Call):
        return f"{e.fname}({_fmt(e.arg)})"
    assert isinstance(e, Binary)
    if e.op in ("+", "-"):
        return _wrap(e.left, _PREC_ADD) + e.op + _wrap(e.right, _PREC_MUL)
    if e.op in ("*", "/"):
        return _wrap(e.left, _PREC_MUL) + e.op + _wrap(e.right, _PREC_UNARY)
    return _wrap(e.left, _PREC_ATOM) + e.op + _wrap(e.right, _PREC_UNARY)


def to_source(e: Expr) -> str:
    """Minimal-parenthesis canonical form; parse(to_source(e)) == e for
    trees whose constants are finite and non-negative."""
    return _fmt(e)


def random_expr(rng: random.Random, max_depth: int = 6) -> Expr:
    """Random tree for round-trip fuzzing; constants stay non-negative."""
    if max_depth <= 0 or rng.random() < 0.25:
        k = rng.randrange(4)
        if k == 0:
            return Var()
        if k == 1:
            return Constant(float(rng.randrange(10)))
        if k == 2:
            return Constant(round(rng.uniform(0.0, 10.0), 2))
        return Constant(float(rng.randrange(1, 100)) / 8.0)
    roll = rng.random()
    if roll < 0.2:
        return Unary(random_expr(rng, max_depth - 1))
    if roll < 0.4:
        return Call(rng.choice(FUNCTION_NAMES), random_expr(rng, max_depth - 1))
    op = rng.choice(("+", "-", "*", "/", "^"))
    return Binary(op, random_expr(rng, max_depth - 1), random_expr(rng, max_depth - 1))
