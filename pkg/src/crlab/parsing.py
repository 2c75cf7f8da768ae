"""Parser for polynomial expressions over z1, z2 and their conjugates.

Grammar (whitespace-insensitive):

    expr     := term (('+'|'-') term)*
    term     := factor (('*'|'/') factor)*
    factor   := '-' factor | base ('^' uint)?
    base     := rational | 'i' | 'z1' | 'z2' | 'z1c' | 'z2c'
              | 'conj' '(' expr ')' | '(' expr ')'
    rational := uint ('/' uint)?

Only exact literals exist: rationals a/b and the imaginary unit i; no
floating point is accepted.  Division is exact and only by a nonzero
constant (so i/3 is fine and z1/z2 is rejected when evaluated).
Conjugates may be written z1c/z2c or conj(z1)/conj(z2).
``SpherePoly.to_source`` emits this grammar, and print-then-parse returns
a structurally identical polynomial.

Errors carry 1-based column positions: unknown tokens are lexical errors,
structural problems are syntax errors, and a zero denominator is rejected
at parse time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .scalars import GaussianRational
from .spherepoly import SpherePoly


class ParseError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"{message} (column {column})")
        self.column = column


class LexicalError(ParseError):
    pass


class SyntaxParseError(ParseError):
    pass


class EvaluationError(ValueError):
    """A well-formed expression with no exact value (e.g. division by z1)."""


# -- AST ----------------------------------------------------------------------


@dataclass(frozen=True)
class RationalLit:
    value: Fraction


@dataclass(frozen=True)
class ImaginaryUnit:
    pass


@dataclass(frozen=True)
class Variable:
    name: str  # z1 | z2 | z1c | z2c


@dataclass(frozen=True)
class Negate:
    operand: "ExprAst"


@dataclass(frozen=True)
class BinaryOp:
    op: str  # '+' | '-' | '*' | '/'
    left: "ExprAst"
    right: "ExprAst"


@dataclass(frozen=True)
class Power:
    base: "ExprAst"
    exponent: int


@dataclass(frozen=True)
class Conjugate:
    operand: "ExprAst"


ExprAst = Union[RationalLit, ImaginaryUnit, Variable, Negate, BinaryOp, Power, Conjugate]


# -- lexer ----------------------------------------------------------------------

_SYMBOLS = set("+-*/^()")
_KNOWN_IDENTS = {"i", "z1", "z2", "z1c", "z2c", "conj"}


@dataclass(frozen=True)
class Token:
    kind: str  # 'uint' | 'ident' | one of the symbols | 'end'
    text: str
    column: int


def _tokenize(src: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    n = len(src)
    while pos < n:
        ch = src[pos]
        if ch.isspace():
            pos += 1
            continue
        col = pos + 1
        if ch in _SYMBOLS:
            tokens.append(Token(ch, ch, col))
            pos += 1
        elif ch.isdigit():
            end = pos
            while end < n and src[end].isdigit():
                end += 1
            tokens.append(Token("uint", src[pos:end], col))
            pos = end
        elif ch.isalpha():
            end = pos
            while end < n and (src[end].isalnum() or src[end] == "_"):
                end += 1
            word = src[pos:end]
            if word not in _KNOWN_IDENTS:
                raise LexicalError(f"unknown token {word!r}", col)
            tokens.append(Token("ident", word, col))
            pos = end
        else:
            raise LexicalError(f"unknown token {ch!r}", col)
    tokens.append(Token("end", "", n + 1))
    return tokens


# -- recursive-descent parser ------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise SyntaxParseError(f"expected {kind!r}, found {tok.text or 'end of input'!r}",
                                   tok.column)
        return self.advance()

    def parse_expr(self) -> ExprAst:
        node = self.parse_term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            node = BinaryOp(op, node, self.parse_term())
        return node

    def parse_term(self) -> ExprAst:
        node = self.parse_factor()
        while self.peek().kind in ("*", "/"):
            op = self.advance().kind
            node = BinaryOp(op, node, self.parse_factor())
        return node

    def parse_factor(self) -> ExprAst:
        if self.peek().kind == "-":
            self.advance()
            return Negate(self.parse_factor())
        node = self.parse_base()
        if self.peek().kind == "^":
            self.advance()
            tok = self.expect("uint")
            return Power(node, int(tok.text))
        return node

    def parse_base(self) -> ExprAst:
        tok = self.peek()
        if tok.kind == "uint":
            self.advance()
            numerator = int(tok.text)
            # Consume a '/' here only for a rational literal; division by a
            # non-literal stays a term-level operation.
            if self.peek().kind == "/" and self.tokens[self.pos + 1].kind == "uint":
                self.advance()
                den_tok = self.expect("uint")
                denominator = int(den_tok.text)
                if denominator == 0:
                    raise SyntaxParseError("denominator must be nonzero", den_tok.column)
                return RationalLit(Fraction(numerator, denominator))
            return RationalLit(Fraction(numerator))
        if tok.kind == "ident":
            self.advance()
            if tok.text == "i":
                return ImaginaryUnit()
            if tok.text == "conj":
                self.expect("(")
                node = self.parse_expr()
                self.expect(")")
                return Conjugate(node)
            return Variable(tok.text)
        if tok.kind == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(")")
            return node
        raise SyntaxParseError(f"unexpected {tok.text or 'end of input'!r}", tok.column)


def parse(src: str) -> ExprAst:
    """Parse source text to an AST; raises ParseError with a column on failure."""
    parser = _Parser(_tokenize(src))
    node = parser.parse_expr()
    tok = parser.peek()
    if tok.kind != "end":
        raise SyntaxParseError(f"trailing input {tok.text!r}", tok.column)
    return node


def evaluate(ast: ExprAst) -> SpherePoly:
    """Evaluate an AST to an exact SpherePoly."""
    if isinstance(ast, RationalLit):
        return SpherePoly.constant(ast.value)
    if isinstance(ast, ImaginaryUnit):
        return SpherePoly.constant(GaussianRational(0, 1))
    if isinstance(ast, Variable):
        return SpherePoly.variable(ast.name)
    if isinstance(ast, Negate):
        return -evaluate(ast.operand)
    if isinstance(ast, Conjugate):
        return evaluate(ast.operand).conj()
    if isinstance(ast, Power):
        return evaluate(ast.base) ** ast.exponent
    if isinstance(ast, BinaryOp):
        left = evaluate(ast.left)
        right = evaluate(ast.right)
        if ast.op == "+":
            return left + right
        if ast.op == "-":
            return left - right
        if ast.op == "/":
            if len(right) > 1 or (not right.is_zero()
                                  and right.bidegree_if_uniform() != (0, 0)):
                raise EvaluationError("division only by a nonzero constant")
            scalar = right.coefficient((0, 0, 0, 0))
            if scalar.is_zero():
                raise EvaluationError("division by zero")
            return left.scale(GaussianRational(1) / scalar)
        return left * right
    raise TypeError(f"not an expression node: {ast!r}")


def parse_poly(src: str) -> SpherePoly:
    """parse + evaluate in one step."""
    return evaluate(parse(src))
