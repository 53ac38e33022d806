"""Expression language: tokens, AST, recursive-descent parser and printer.

Grammar (one statement per line, ``#`` starts a comment)::

    stmt   := ident '=' expr | expr
    expr   := term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*
    unary  := '-' unary | factor
    factor := atom ['^' (signed | '(' signed [';' int] ')')]
    atom   := number | imag | ident | call | string | '(' expr ')'
    call   := ident '(' [expr (',' expr)*] [';' int] ')'

Number literals are exact: ``3``, ``1/3`` (no spaces), ``0.25``.  A trailing
``i`` makes an imaginary literal (``2i``, ``1/2i``) and ``i`` alone is the
imaginary unit.  A minus sign directly in front of a literal is part of the
literal.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from ..errors import ParseError


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Imag:
    value: Fraction


@dataclass(frozen=True)
class Str:
    value: str


@dataclass(frozen=True)
class Name:
    id: str


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: Fraction
    branch: Optional[int] = None


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple
    branch: Optional[int] = None


@dataclass(frozen=True)
class Assign:
    name: str
    value: "Expr"


Expr = Union[Num, Imag, Str, Name, Neg, BinOp, Pow, Call]

RESERVED = {"i"}


# -- lexer ----------------------------------------------------------------------

_NUMBER = r"\d+(?:\.\d+)?(?:/\d+)?"
TOKEN_RE = re.compile(
    rf"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<imag>{_NUMBER}i(?![A-Za-z0-9_]))
  | (?P<number>{_NUMBER})
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<string>"(?:[^"\\\n]|\\.)*")
  | (?P<op>[-+*/^(),;=])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def literal_value(text: str) -> Fraction:
    """Exact value of a number literal; decimals keep their written digits."""
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ZeroDivisionError
        return Fraction(num) / Fraction(den)
    return Fraction(text)


def tokenize(text: str, line: int = 1) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, pos + 1))
        pos = m.end()
    tokens.append(Token("end", "", line, len(text) + 1))
    return tokens


# -- parser ---------------------------------------------------------------------


class Parser:
    def __init__(self, text: str, line: int = 1):
        self.tokens = tokenize(text, line)
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def error(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        return ParseError(f"{message} at {what}", tok.line, tok.column)

    def advance(self) -> Token:
        tok = self.tok
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind not in ("op",):
            raise self.error(f"expected {text!r}")
        return self.advance()

    def at(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    # statement / expression levels
    def statement(self):
        if self.tok.kind == "ident" and self.peek().kind == "op" and self.peek().text == "=":
            name = self.advance()
            if name.text in RESERVED:
                raise self.error("cannot assign to a reserved name", name)
            self.advance()
            node = Assign(name.text, self.expr())
        else:
            node = self.expr()
        if self.tok.kind != "end":
            raise self.error("unexpected token")
        return node

    def expr(self):
        node = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.at("*") or self.at("/"):
            op = self.advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.at("-"):
            nxt = self.peek()
            if nxt.kind in ("number", "imag"):
                self.advance()
                return self.factor(negate=True)
            self.advance()
            return Neg(self.unary())
        return self.factor()

    def factor(self, negate: bool = False):
        node = self.atom(negate)
        if self.at("^"):
            self.advance()
            if self.at("("):
                self.advance()
                t = self.signed_rational()
                branch = None
                if self.at(";"):
                    self.advance()
                    branch = self.signed_integer()
                self.expect(")")
            else:
                t, branch = self.signed_rational(), None
            node = Pow(node, t, branch)
        return node

    def signed_rational(self) -> Fraction:
        sign = 1
        if self.at("-"):
            self.advance()
            sign = -1
        if self.tok.kind != "number":
            raise self.error("expected an exact exponent")
        return sign * self._literal(self.advance())

    def signed_integer(self) -> int:
        tok = self.tok
        value = self.signed_rational()
        if value.denominator != 1:
            raise self.error("branch index must be an integer", tok)
        return int(value)

    def _literal(self, tok: Token) -> Fraction:
        text = tok.text[:-1] if tok.kind == "imag" else tok.text
        try:
            return literal_value(text)
        except ZeroDivisionError:
            raise ParseError("zero denominator in literal", tok.line, tok.column) from None

    def atom(self, negate: bool = False):
        tok = self.tok
        sign = -1 if negate else 1
        if tok.kind == "number":
            self.advance()
            return Num(sign * self._literal(tok))
        if tok.kind == "imag":
            self.advance()
            return Imag(sign * self._literal(tok))
        if negate:
            raise self.error("expected a number")
        if tok.kind == "string":
            self.advance()
            return Str(re.sub(r"\\(.)", r"\1", tok.text[1:-1]))
        if tok.kind == "ident":
            self.advance()
            if self.at("("):
                return self.call(tok.text)
            if tok.text == "i":
                return Imag(Fraction(1))
            return Name(tok.text)
        if self.at("("):
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        raise self.error("expected an expression")

    def call(self, func: str):
        self.expect("(")
        args = []
        branch = None
        if not self.at(")") and not self.at(";"):
            args.append(self.expr())
            while self.at(","):
                self.advance()
                args.append(self.expr())
        if self.at(";"):
            self.advance()
            branch = self.signed_integer()
        self.expect(")")
        return Call(func, tuple(args), branch)


def parse(text: str, line: int = 1):
    """Parse one statement (an expression or an assignment)."""
    return Parser(text, line).statement()


def parse_program(text: str) -> list:
    """``[(line_number, source, node)]`` for every non-blank statement."""
    out = []
    for number, source in enumerate(text.splitlines(), start=1):
        if not tokenize(source, number)[:-1]:
            continue
        out.append((number, source.strip(), parse(source, number)))
    return out


# -- printer --------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}
UNARY, POWER, ATOM = 3, 4, 5


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _prec(node) -> int:
    if isinstance(node, BinOp):
        return _PREC[node.op]
    if isinstance(node, Neg):
        return UNARY
    if isinstance(node, (Num, Imag)) and node.value < 0:
        return UNARY
    if isinstance(node, Pow):
        return POWER
    return ATOM


def _wrap(node, minimum: int) -> str:
    text = pretty(node)
    return f"({text})" if _prec(node) < minimum else text


def pretty(node) -> str:
    """Canonical source text; ``parse(pretty(e)) == e``."""
    if isinstance(node, Assign):
        return f"{node.name} = {pretty(node.value)}"
    if isinstance(node, Num):
        return format_fraction(node.value)
    if isinstance(node, Imag):
        return format_fraction(node.value) + "i"
    if isinstance(node, Str):
        escaped = node.value.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    if isinstance(node, Name):
        return node.id
    if isinstance(node, Neg):
        inner = _wrap(node.operand, UNARY)
        # "-2^(3)" would read back as (-2)^(3)
        if inner[0].isdigit():
            inner = f"({inner})"
        return "-" + inner
    if isinstance(node, BinOp):
        prec = _PREC[node.op]
        return f"{_wrap(node.left, prec)} {node.op} {_wrap(node.right, prec + 1)}"
    if isinstance(node, Pow):
        exp = format_fraction(node.exponent)
        if node.branch is not None:
            exp += f";{node.branch}"
        return f"{_wrap(node.base, ATOM)}^({exp})"
    if isinstance(node, Call):
        args = ", ".join(pretty(a) for a in node.args)
        if node.branch is not None:
            args += ("; " if args else ";") + str(node.branch)
        return f"{node.func}({args})"
    raise TypeError(f"not an expression node: {node!r}")
