"""A small closed-form expression language in one variable ``t``.

Grammar (highest precedence last)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom (('^' | '**') ['-'] INTEGER)?
    atom   := NUMBER | 't' | 'pi' | FUNC '(' expr ')' | '(' expr ')'
    FUNC   := sin | cos | sinh | cosh | exp | sqrt

Powers bind tighter than unary minus, so ``-t^2`` is ``-(t^2)``.
Exponents are integer literals only.

Trees are immutable; node equality ignores source offsets.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Callable, Union

from . import jet as J
from .errors import DomainError, ExprSyntaxError, InvalidInputError, UnknownIdentifierError
from .jet import MAX_ORDER, Jet

FUNCTIONS: dict[str, Callable[[Jet], Jet]] = {
    "sin": J.sin,
    "cos": J.cos,
    "sinh": J.sinh,
    "cosh": J.cosh,
    "exp": J.exp,
    "sqrt": J.sqrt,
}

CONSTANTS = {"pi": math.pi}


# --- AST -------------------------------------------------------------------


@dataclass(frozen=True)
class Const:
    value: float
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Param:
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Neg:
    arg: "Expr"
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Plus:
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Minus:
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Times:
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Div:
    left: "Expr"
    right: "Expr"
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int
    pos: int = field(default=0, compare=False, repr=False)


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Expr"
    pos: int = field(default=0, compare=False, repr=False)


Expr = Union[Const, Param, Neg, Plus, Minus, Times, Div, Pow, Call]

_BINARY = {Plus: "+", Minus: "-", Times: "*", Div: "/"}


# --- lexer / parser ----------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<pow>\*\*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)


@dataclass
class _Tok:
    kind: str
    text: str
    offset: int  # 1-based byte offset


def _tokenize(src: str) -> list[_Tok]:
    toks: list[_Tok] = []
    i = 0
    while i < len(src):
        m = _TOKEN.match(src, i)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {src[i]!r}", _byte_offset(src, i), src)
        kind = m.lastgroup
        if kind != "ws":
            text = m.group()
            toks.append(_Tok("op" if kind == "pow" else kind, text, _byte_offset(src, i)))
        i = m.end()
    toks.append(_Tok("eof", "", _byte_offset(src, len(src))))
    return toks


def _byte_offset(src: str, i: int) -> int:
    return len(src[:i].encode("utf-8")) + 1


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def error(self, message: str, tok: _Tok | None = None) -> ExprSyntaxError:
        tok = tok or self.tok
        return ExprSyntaxError(message, tok.offset, self.src)

    def accept(self, *texts: str) -> _Tok | None:
        if self.tok.kind == "op" and self.tok.text in texts:
            tok = self.tok
            self.i += 1
            return tok
        return None

    def expect(self, text: str) -> _Tok:
        tok = self.accept(text)
        if tok is None:
            found = "end of input" if self.tok.kind == "eof" else repr(self.tok.text)
            raise self.error(f"expected {text!r}, found {found}")
        return tok

    def parse(self) -> Expr:
        node = self.expr()
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self) -> Expr:
        node = self.term()
        while True:
            tok = self.accept("+", "-")
            if tok is None:
                return node
            rhs = self.term()
            node = (Plus if tok.text == "+" else Minus)(node, rhs, tok.offset)

    def term(self) -> Expr:
        node = self.unary()
        while True:
            tok = self.accept("*", "/")
            if tok is None:
                return node
            rhs = self.unary()
            node = (Times if tok.text == "*" else Div)(node, rhs, tok.offset)

    def unary(self) -> Expr:
        tok = self.accept("-")
        if tok is not None:
            return Neg(self.unary(), tok.offset)
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        tok = self.accept("^", "**")
        if tok is None:
            return base
        sign = -1 if self.accept("-") else 1
        num = self.tok
        if num.kind != "num" or not num.text.isdigit():
            raise self.error("exponent must be an integer literal", num)
        self.i += 1
        return Pow(base, sign * int(num.text), tok.offset)

    def atom(self) -> Expr:
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            value = float(tok.text)
            if not math.isfinite(value):
                raise self.error("numeric literal out of range", tok)
            return Const(value, tok.offset)
        if tok.kind == "name":
            self.i += 1
            if tok.text == "t":
                return Param(tok.offset)
            if tok.text in CONSTANTS:
                return Const(CONSTANTS[tok.text], tok.offset)
            if tok.text in FUNCTIONS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(tok.text, arg, tok.offset)
            raise UnknownIdentifierError(f"unknown identifier {tok.text!r}", tok.offset, self.src)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "eof":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {tok.text!r}")


def parse(src: str) -> Expr:
    """Parse expression text into a tree.

    Raises :class:`ExprSyntaxError` (with a 1-based byte offset) or its
    subclass :class:`UnknownIdentifierError`.
    """
    if not isinstance(src, str) or not src.strip():
        raise ExprSyntaxError("empty expression", 1, src if isinstance(src, str) else "")
    return _Parser(src).parse()


def to_text(node: Expr) -> str:
    """Print a tree; every compound node is parenthesized so reparsing is exact."""
    if isinstance(node, Const):
        return repr(node.value)
    if isinstance(node, Param):
        return "t"
    if isinstance(node, Neg):
        return f"(-{to_text(node.arg)})"
    if isinstance(node, Pow):
        return f"({to_text(node.base)})^{node.exponent}"
    if isinstance(node, Call):
        return f"{node.func}({to_text(node.arg)})"
    op = _BINARY[type(node)]
    return f"({to_text(node.left)} {op} {to_text(node.right)})"


# --- evaluation --------------------------------------------------------------


def _eval(node: Expr, tj: Jet) -> Jet:
    try:
        if isinstance(node, Const):
            return Jet.const(node.value, tj.order)
        if isinstance(node, Param):
            return tj
        if isinstance(node, Neg):
            return -_eval(node.arg, tj)
        if isinstance(node, Plus):
            return _eval(node.left, tj) + _eval(node.right, tj)
        if isinstance(node, Minus):
            return _eval(node.left, tj) - _eval(node.right, tj)
        if isinstance(node, Times):
            # constant factors take the cheap scalar path
            if isinstance(node.left, Const):
                return _eval(node.right, tj) * node.left.value
            if isinstance(node.right, Const):
                return _eval(node.left, tj) * node.right.value
            return _eval(node.left, tj) * _eval(node.right, tj)
        if isinstance(node, Div):
            if isinstance(node.right, Const):
                return _eval(node.left, tj) / node.right.value
            return _eval(node.left, tj) / _eval(node.right, tj)
        if isinstance(node, Pow):
            return J.ipow(_eval(node.base, tj), node.exponent)
        if isinstance(node, Call):
            return FUNCTIONS[node.func](_eval(node.arg, tj))
    except DomainError as exc:
        if exc.offset is None:
            raise DomainError(exc.message, node.pos, tj.value) from None
        raise
    except (OverflowError, ZeroDivisionError) as exc:
        raise DomainError(str(exc), node.pos, tj.value) from None
    raise TypeError(f"not an expression node: {node!r}")


def jet_eval(e: Expr, t: float, order: int) -> Jet:
    """Value and first ``order`` derivatives of ``e`` at ``t`` (``0 <= order <= 4``)."""
    if not isinstance(order, int) or not 0 <= order <= MAX_ORDER:
        raise InvalidInputError(f"jet order must be an integer in [0, {MAX_ORDER}], got {order!r}")
    if not math.isfinite(t):
        raise InvalidInputError(f"t is not finite: {t!r}")
    result = _eval(e, Jet.variable(float(t), order))
    if not result.is_finite():
        raise DomainError("non-finite result", getattr(e, "pos", None), t)
    return result


def evaluate(e: Expr, t: float) -> float:
    return jet_eval(e, t, 0).value


# --- finite differences ------------------------------------------------------

# Second-order central stencils: (offsets in units of h, weights), divisor h**j.
_STENCILS = {
    1: ((-1, 1), (-0.5, 0.5)),
    2: ((-1, 0, 1), (1.0, -2.0, 1.0)),
    3: ((-2, -1, 1, 2), (-0.5, 1.0, -1.0, 0.5)),
    4: ((-2, -1, 0, 1, 2), (1.0, -4.0, 6.0, -4.0, 1.0)),
}

#: Base step per derivative order (before scaling by ``max(1, |t|)``).
#: Orders 3 and 4 use larger steps: the rounding term grows like eps / h**j.
DEFAULT_STEPS = {1: 1e-4, 2: 1e-4, 3: 1e-2, 4: 2e-2}

#: Richardson levels per order; the larger steps of orders 3 and 4 need the
#: extra level to keep truncation error below rounding error.
RICHARDSON_LEVELS = {1: 2, 2: 2, 3: 3, 4: 3}


def default_step(t: float, j: int) -> float:
    return DEFAULT_STEPS[j] * max(1.0, abs(t))


def central_difference(fn: Callable[[float], float], t: float, j: int, h: float | None = None) -> float:
    """``j``-th derivative of ``fn`` at ``t``: central stencil plus Richardson extrapolation.

    The base stencils are O(h^2) and are evaluated at ``h, h/2, h/4, ...``;
    each extrapolation level cancels the next even power of ``h``.
    """
    if j not in _STENCILS:
        raise InvalidInputError(f"derivative order must be 1..4, got {j!r}")
    if h is None:
        h = default_step(t, j)
    if not h > 0:
        raise InvalidInputError(f"step must be > 0, got {h!r}")
    offsets, weights = _STENCILS[j]

    def stencil(step: float) -> float:
        total = math.fsum(w * fn(t + k * step) for k, w in zip(offsets, weights))
        return total / step**j

    table = [stencil(h / 2**i) for i in range(RICHARDSON_LEVELS[j])]
    for k in range(1, len(table)):
        f = 4.0**k
        table = [(f * fine - coarse) / (f - 1.0) for coarse, fine in zip(table, table[1:])]
    return table[0]


def fd_derivative(e: Expr, t: float, j: int, h: float | None = None) -> float:
    """Finite-difference estimate of the ``j``-th derivative of ``e`` at ``t``.

    Independent of the jet machinery: only plain values of ``e`` are used.
    """

    def value(x: float) -> float:
        return _plain(e, x)

    return central_difference(value, t, j, h)


def _plain(node: Expr, x: float) -> float:
    """Float-only evaluation, kept separate from the jet path on purpose."""
    try:
        if isinstance(node, Const):
            return node.value
        if isinstance(node, Param):
            return x
        if isinstance(node, Neg):
            return -_plain(node.arg, x)
        if isinstance(node, Plus):
            return _plain(node.left, x) + _plain(node.right, x)
        if isinstance(node, Minus):
            return _plain(node.left, x) - _plain(node.right, x)
        if isinstance(node, Times):
            return _plain(node.left, x) * _plain(node.right, x)
        if isinstance(node, Div):
            return _plain(node.left, x) / _plain(node.right, x)
        if isinstance(node, Pow):
            return _plain(node.base, x) ** node.exponent
        if isinstance(node, Call):
            arg = _plain(node.arg, x)
            if node.func == "sqrt" and arg < 0:
                raise DomainError("sqrt of a negative number", node.pos, x)
            return getattr(math, node.func)(arg)
    except ZeroDivisionError:
        raise DomainError("division by zero", node.pos, x) from None
    except OverflowError:
        raise DomainError("overflow", node.pos, x) from None
    raise TypeError(f"not an expression node: {node!r}")


def as_expr(src) -> Expr:
    """Accept expression text or an already-parsed tree."""
    if isinstance(src, str):
        return parse(src)
    if isinstance(src, (int, float)):
        return Const(float(src))
    return src
