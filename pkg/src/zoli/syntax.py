"""Lexer, syntax tree, parser, and printer for the little ZoT language.

A program is a brace-delimited block of statements separated by
semicolons or newlines:

    {
        ZoT = (0?9)
        3 := 7
        writeln(3 + 1)
    }

Comments run from `!` to the end of the line. Expressions use the usual
precedence ladder: unary minus under `+ -`, then `* /`, then a
right-associative `^` that binds tighter than unary minus on its left
(so -2^2 negates the power). Statements never span lines.

Syntax nodes compare structurally: source locations are carried along
but ignored by equality, so parse(print(tree)) == tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Union

from .errors import ParseError, UnbalancedBraces, UnexpectedCharacter


class Span(NamedTuple):
    line: int
    col: int


DUMMY_SPAN = Span(0, 0)

# token kinds
LBRACE = "LBrace"
RBRACE = "RBrace"
LPAREN = "LParen"
RPAREN = "RParen"
LBRACKET = "LBracket"
RBRACKET = "RBracket"
COMMA = "Comma"
SEMICOLON = "Semicolon"
QUESTION = "Question"
ASSIGN = "Assign"
PLUS = "Plus"
MINUS = "Minus"
STAR = "Star"
SLASH = "Slash"
CARET = "Caret"
EQUALS = "Equals"
INTEGER = "Integer"
IDENT = "Ident"
NEWLINE = "Newline"
EOF = "Eof"

_PUNCT = {
    "{": LBRACE,
    "}": RBRACE,
    "(": LPAREN,
    ")": RPAREN,
    "[": LBRACKET,
    "]": RBRACKET,
    ",": COMMA,
    ";": SEMICOLON,
    "?": QUESTION,
    "+": PLUS,
    "-": MINUS,
    "*": STAR,
    "/": SLASH,
    "^": CARET,
    "=": EQUALS,
}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int
    value: Optional[int] = None

    @property
    def span(self) -> Span:
        return Span(self.line, self.col)


def _is_digit(ch: str) -> bool:
    return "0" <= ch <= "9"


def _is_word_start(ch: str) -> bool:
    return "a" <= ch <= "z" or "A" <= ch <= "Z" or ch == "_"


def tokenize(text: str) -> list[Token]:
    """Split source text into tokens.

    Newlines are tokens (they separate statements); spaces, tabs and
    carriage returns are not. Only ASCII digits and letters are
    recognized. Empty input yields an empty list.
    """
    tokens: list[Token] = []
    i = 0
    n = len(text)
    line = 1
    col = 1
    while i < n:
        ch = text[i]
        if ch == "\n":
            tokens.append(Token(NEWLINE, "\n", line, col))
            i += 1
            line += 1
            col = 1
        elif ch in " \t\r":
            i += 1
            col += 1
        elif ch == "!":
            while i < n and text[i] != "\n":
                i += 1
                col += 1
        elif _is_digit(ch):
            start = i
            while i < n and _is_digit(text[i]):
                i += 1
            lexeme = text[start:i]
            tokens.append(Token(INTEGER, lexeme, line, col, int(lexeme)))
            col += i - start
        elif _is_word_start(ch):
            start = i
            while i < n and (_is_word_start(text[i]) or _is_digit(text[i])):
                i += 1
            lexeme = text[start:i]
            tokens.append(Token(IDENT, lexeme, line, col))
            col += i - start
        elif ch == ":":
            if i + 1 < n and text[i + 1] == "=":
                tokens.append(Token(ASSIGN, ":=", line, col))
                i += 2
                col += 2
            else:
                raise UnexpectedCharacter("':' must be followed by '='", line, col)
        elif ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, line, col))
            i += 1
            col += 1
        else:
            raise UnexpectedCharacter(f"unexpected character {ch!r}", line, col)
    return tokens


@dataclass(frozen=True)
class IntLit:
    value: int
    span: Span = field(default=DUMMY_SPAN, compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    span: Span = field(default=DUMMY_SPAN, compare=False)


@dataclass(frozen=True)
class Binary:
    """A binary operation; op is one of + - * / ^."""

    op: str
    left: "Expr"
    right: "Expr"
    span: Span = field(default=DUMMY_SPAN, compare=False)


Expr = Union[IntLit, Neg, Binary]


@dataclass(frozen=True)
class Init:
    """ZoT = (lo?hi), replacing the current universe."""

    lo: int
    hi: int
    span: Span = field(default=DUMMY_SPAN, compare=False)


@dataclass(frozen=True)
class Rebind:
    """label := value."""

    label: int
    value: int
    span: Span = field(default=DUMMY_SPAN, compare=False)


@dataclass(frozen=True)
class Stack:
    """label := [v1, v2, ...], making the cell a black hole."""

    label: int
    values: tuple[int, ...]
    span: Span = field(default=DUMMY_SPAN, compare=False)


@dataclass(frozen=True)
class Writeln:
    expr: Expr
    span: Span = field(default=DUMMY_SPAN, compare=False)


Stmt = Union[Init, Rebind, Stack, Writeln]


@dataclass(frozen=True)
class Program:
    statements: tuple[Stmt, ...]


def _describe(tok: Token) -> str:
    if tok.kind == EOF:
        return "end of input"
    if tok.kind == NEWLINE:
        return "newline"
    if tok.kind == INTEGER:
        return f"integer {tok.text}"
    if tok.kind == IDENT:
        return f"identifier {tok.text!r}"
    return f"{tok.text!r}"


def _sentinel_after(tokens: list[Token]) -> Token:
    if not tokens:
        return Token(EOF, "", 1, 1)
    last = tokens[-1]
    if last.kind == NEWLINE:
        return Token(EOF, "", last.line + 1, 1)
    return Token(EOF, "", last.line, last.col + len(last.text))


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = list(tokens)
        if not self.tokens or self.tokens[-1].kind != EOF:
            self.tokens.append(_sentinel_after(self.tokens))
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != EOF:
            self.pos += 1
        return tok

    def check(self, kind: str) -> bool:
        return self.tokens[self.pos].kind == kind

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {what}, found {_describe(tok)}", tok.line, tok.col)
        return self.advance()

    def skip_separators(self) -> int:
        count = 0
        while self.peek().kind in (NEWLINE, SEMICOLON):
            self.advance()
            count += 1
        return count

    def parse_program(self) -> Program:
        while self.check(NEWLINE):
            self.advance()
        tok = self.peek()
        if tok.kind != LBRACE:
            raise UnbalancedBraces(
                f"program must open with '{{', found {_describe(tok)}", tok.line, tok.col
            )
        self.advance()
        statements: list[Stmt] = []
        self.skip_separators()
        while not self.check(RBRACE):
            if self.check(EOF):
                tok = self.peek()
                raise UnbalancedBraces("program never closes its '{'", tok.line, tok.col)
            statements.append(self.parse_statement())
            seps = self.skip_separators()
            if seps == 0 and not self.check(RBRACE) and not self.check(EOF):
                tok = self.peek()
                raise ParseError(
                    f"expected ';' or newline before the next statement, "
                    f"found {_describe(tok)}",
                    tok.line,
                    tok.col,
                )
        self.advance()
        while self.check(NEWLINE):
            self.advance()
        tok = self.peek()
        if tok.kind != EOF:
            raise ParseError(
                f"unexpected content after closing '}}': {_describe(tok)}", tok.line, tok.col
            )
        return Program(tuple(statements))

    def parse_statement(self) -> Stmt:
        tok = self.peek()
        if tok.kind == IDENT and tok.text == "ZoT":
            return self.parse_init()
        if tok.kind == IDENT and tok.text == "writeln":
            return self.parse_writeln()
        if tok.kind == INTEGER:
            return self.parse_binding()
        raise ParseError(f"expected a statement, found {_describe(tok)}", tok.line, tok.col)

    def parse_init(self) -> Init:
        kw = self.advance()
        self.expect(EQUALS, "'='")
        self.expect(LPAREN, "'('")
        lo = self.expect(INTEGER, "an integer").value
        self.expect(QUESTION, "'?'")
        hi = self.expect(INTEGER, "an integer").value
        self.expect(RPAREN, "')'")
        assert lo is not None and hi is not None
        return Init(lo, hi, kw.span)

    def parse_binding(self) -> Union[Rebind, Stack]:
        label_tok = self.advance()
        assert label_tok.value is not None
        self.expect(ASSIGN, "':='")
        if self.check(LBRACKET):
            self.advance()
            values = [self._signed_integer()]
            while self.check(COMMA):
                self.advance()
                values.append(self._signed_integer())
            self.expect(RBRACKET, "']'")
            return Stack(label_tok.value, tuple(values), label_tok.span)
        return Rebind(label_tok.value, self._signed_integer(), label_tok.span)

    def _signed_integer(self) -> int:
        negative = False
        if self.check(MINUS):
            self.advance()
            negative = True
        tok = self.expect(INTEGER, "an integer")
        assert tok.value is not None
        return -tok.value if negative else tok.value

    def parse_writeln(self) -> Writeln:
        kw = self.advance()
        self.expect(LPAREN, "'('")
        expr = self.parse_expr()
        self.expect(RPAREN, "')'")
        return Writeln(expr, kw.span)

    def parse_expr(self) -> Expr:
        left = self.parse_term()
        while self.peek().kind in (PLUS, MINUS):
            op = self.advance()
            left = Binary(op.text, left, self.parse_term(), op.span)
        return left

    def parse_term(self) -> Expr:
        left = self.parse_factor()
        while self.peek().kind in (STAR, SLASH):
            op = self.advance()
            left = Binary(op.text, left, self.parse_factor(), op.span)
        return left

    def parse_factor(self) -> Expr:
        if self.check(MINUS):
            op = self.advance()
            return Neg(self.parse_factor(), op.span)
        return self.parse_power()

    def parse_power(self) -> Expr:
        base = self.parse_atom()
        if self.check(CARET):
            op = self.advance()
            return Binary("^", base, self.parse_factor(), op.span)
        return base

    def parse_atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == INTEGER:
            self.advance()
            assert tok.value is not None
            return IntLit(tok.value, tok.span)
        if tok.kind == LPAREN:
            self.advance()
            expr = self.parse_expr()
            self.expect(RPAREN, "')'")
            return expr
        raise ParseError(
            f"expected an integer or '(', found {_describe(tok)}", tok.line, tok.col
        )


def parse(tokens: list[Token]) -> Program:
    return _Parser(tokens).parse_program()


def parse_source(text: str) -> Program:
    return parse(tokenize(text))


def parse_line(text: str) -> list[Stmt]:
    """Parse one interactive input: either a full program or bare statements.

    Bare statements may still be separated by ';'. Blank or comment-only
    input yields an empty list.
    """
    if text.lstrip().startswith("{"):
        return list(parse_source(text).statements)
    parser = _Parser(tokenize(text))
    parser.skip_separators()
    statements: list[Stmt] = []
    while not parser.check(EOF):
        statements.append(parser.parse_statement())
        seps = parser.skip_separators()
        if seps == 0 and not parser.check(EOF):
            tok = parser.peek()
            raise ParseError(
                f"expected ';' or newline before the next statement, found {_describe(tok)}",
                tok.line,
                tok.col,
            )
    return statements


# Printing walks the same grammar slots the parser does, so any tree the
# parser can produce comes back out in a form that reparses to an equal
# tree. Parentheses appear exactly where a subtree is too weak for its
# slot.


def _atom_src(e: Expr) -> str:
    if isinstance(e, IntLit) and e.value >= 0:
        return str(e.value)
    return f"({_expr_src(e)})"


def _power_src(e: Expr) -> str:
    if isinstance(e, Binary) and e.op == "^":
        return f"{_atom_src(e.left)}^{_factor_src(e.right)}"
    return _atom_src(e)


def _factor_src(e: Expr) -> str:
    if isinstance(e, Neg):
        return f"-{_factor_src(e.operand)}"
    return _power_src(e)


def _term_src(e: Expr) -> str:
    if isinstance(e, Binary) and e.op in ("*", "/"):
        return f"{_term_src(e.left)} {e.op} {_factor_src(e.right)}"
    return _factor_src(e)


def _expr_src(e: Expr) -> str:
    if isinstance(e, Binary) and e.op in ("+", "-"):
        return f"{_expr_src(e.left)} {e.op} {_term_src(e.right)}"
    return _term_src(e)


def expr_to_source(expr: Expr) -> str:
    return _expr_src(expr)


def stmt_to_source(stmt: Stmt) -> str:
    if isinstance(stmt, Init):
        return f"ZoT = ({stmt.lo}?{stmt.hi})"
    if isinstance(stmt, Rebind):
        return f"{stmt.label} := {stmt.value}"
    if isinstance(stmt, Stack):
        return f"{stmt.label} := [{', '.join(str(v) for v in stmt.values)}]"
    if isinstance(stmt, Writeln):
        return f"writeln({_expr_src(stmt.expr)})"
    raise TypeError(f"not a statement: {stmt!r}")


def program_to_source(program: Program) -> str:
    if not program.statements:
        return "{}"
    body = "\n".join("    " + stmt_to_source(s) for s in program.statements)
    return "{\n" + body + "\n}"
