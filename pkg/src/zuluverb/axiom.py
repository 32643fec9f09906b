"""Axiom AST for the supported description-logic fragment, plus its text syntax.

One axiom per line::

    sub(ikhambi, umuthi)
    sub(indlulamithi, some(eats, ihlamvana))
    disjoint(ihebhivo, ikhanivo)
    and(ibhotela, ubisi)          # a bare conjunction / disjunction of classes

Keywords (sub, disjoint, not, and, or, some) are only keywords when an opening
parenthesis follows; otherwise the same word is an ordinary class name.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .errors import AxiomSyntaxError


@dataclass(frozen=True)
class Named:
    lemma: str


@dataclass(frozen=True)
class Not:
    inner: "ClassExpr"


@dataclass(frozen=True)
class And:
    parts: tuple["ClassExpr", ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if len(self.parts) < 2:
            raise ValueError("and() needs at least 2 parts")


@dataclass(frozen=True)
class Or:
    parts: tuple["ClassExpr", ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if len(self.parts) < 2:
            raise ValueError("or() needs at least 2 parts")


@dataclass(frozen=True)
class Some:
    property: str
    filler: "ClassExpr"


ClassExpr = Union[Named, Not, And, Or, Some]


@dataclass(frozen=True)
class SubClassOf:
    sub: ClassExpr
    sup: ClassExpr


@dataclass(frozen=True)
class DisjointWith:
    a: ClassExpr
    b: ClassExpr


@dataclass(frozen=True)
class Phrase:
    """A stand-alone class expression, e.g. the conjunction Butter and Milk."""
    expr: And | Or


Axiom = Union[SubClassOf, DisjointWith, Phrase]

KEYWORDS = frozenset({"sub", "disjoint", "not", "and", "or", "some"})
_STATEMENT_KEYWORDS = ("sub", "disjoint", "and", "or")
_EXPR_EXPECTED = frozenset({"identifier", "not(", "and(", "or(", "some("})
_STATEMENT_EXPECTED = frozenset(f"{k}(" for k in _STATEMENT_KEYWORDS)

MAX_DEPTH = 100

IDENT, LPAREN, RPAREN, COMMA, EOL = "identifier", "'('", "')'", "','", "end of line"


def _is_ident_start(ch: str) -> bool:
    return ch.isalpha()


def _is_ident_char(ch: str) -> bool:
    return ch.isalpha() or ch.isdigit() or ch == "_"


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    column: int  # 1-based


class _LineParser:
    """Recursive-descent parser over a single line, tokenizing on demand."""

    def __init__(self, line: str, lineno: int):
        self.line = line
        self.lineno = lineno
        self.pos = 0
        self.depth = 0
        self._peeked: list[_Token] = []

    def error(self, message: str, column: int, expected=frozenset()) -> AxiomSyntaxError:
        return AxiomSyntaxError(message, self.lineno, column, frozenset(expected))

    def _scan(self) -> _Token:
        line, n = self.line, len(self.line)
        while self.pos < n and self.line[self.pos].isspace():
            self.pos += 1
        if self.pos >= n or line[self.pos] == "#":
            self.pos = n
            return _Token(EOL, "", n + 1)
        start = self.pos
        ch = line[start]
        if ch == "(":
            self.pos += 1
            return _Token(LPAREN, ch, start + 1)
        if ch == ")":
            self.pos += 1
            return _Token(RPAREN, ch, start + 1)
        if ch == ",":
            self.pos += 1
            return _Token(COMMA, ch, start + 1)
        if _is_ident_start(ch):
            self.pos += 1
            while self.pos < n and _is_ident_char(line[self.pos]):
                self.pos += 1
            return _Token(IDENT, line[start:self.pos], start + 1)
        raise self.error(f"unexpected character {ch!r}", start + 1)

    def peek(self, k: int = 0) -> _Token:
        while len(self._peeked) <= k:
            self._peeked.append(self._scan())
        return self._peeked[k]

    def next(self) -> _Token:
        tok = self.peek()
        self._peeked.pop(0)
        return tok

    def expect(self, kind: str, context: str = "") -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            if kind == RPAREN and tok.kind == EOL:
                raise self.error(f"unbalanced parentheses: missing ')'{context}", tok.column, {kind})
            raise self.error(f"unexpected {self._describe(tok)}{context}", tok.column, {kind})
        return self.next()

    @staticmethod
    def _describe(tok: _Token) -> str:
        return "end of line" if tok.kind == EOL else repr(tok.text)

    def _is_call(self, words) -> bool:
        tok = self.peek()
        return tok.kind == IDENT and tok.text in words and self.peek(1).kind == LPAREN

    def statement(self) -> Axiom | None:
        tok = self.peek()
        if tok.kind == EOL:
            return None
        if tok.kind == IDENT:
            self.peek(1)  # a lexical error right after the first word is the better diagnostic
        if not self._is_call(_STATEMENT_KEYWORDS):
            raise self.error(f"unexpected {self._describe(tok)} at start of axiom", tok.column, _STATEMENT_EXPECTED)
        keyword = self.next().text
        if keyword in ("and", "or"):
            result = Phrase(self._nary(keyword))
        else:
            self.expect(LPAREN)
            left = self.expr()
            self.expect(COMMA, f" in {keyword}()")
            right = self.expr()
            self.expect(RPAREN, f" closing {keyword}()")
            result = SubClassOf(left, right) if keyword == "sub" else DisjointWith(left, right)
        tail = self.peek()
        if tail.kind != EOL:
            if tail.kind == RPAREN:
                raise self.error("unbalanced parentheses: unexpected ')'", tail.column, {EOL})
            raise self.error(f"unexpected {self._describe(tail)} after axiom", tail.column, {EOL})
        return result

    def expr(self) -> ClassExpr:
        self.depth += 1
        try:
            return self._expr()
        finally:
            self.depth -= 1

    def _expr(self) -> ClassExpr:
        tok = self.peek()
        if self.depth > MAX_DEPTH:
            raise self.error(f"expression nested deeper than {MAX_DEPTH} levels", tok.column)
        if tok.kind != IDENT:
            if tok.kind == EOL:
                raise self.error("unbalanced parentheses: expression missing before end of line",
                                 tok.column, _EXPR_EXPECTED)
            raise self.error(f"unexpected {self._describe(tok)}", tok.column, _EXPR_EXPECTED)
        if self._is_call(("not", "and", "or", "some")):
            keyword = self.next().text
            if keyword == "not":
                self.expect(LPAREN)
                inner = self.expr()
                self.expect(RPAREN, " closing not()")
                return Not(inner)
            if keyword == "some":
                self.expect(LPAREN)
                prop = self.expect(IDENT, " as property of some()")
                self.expect(COMMA, " in some()")
                filler = self.expr()
                self.expect(RPAREN, " closing some()")
                return Some(prop.text, filler)
            return self._nary(keyword)
        if tok.text in ("sub", "disjoint") and self.peek(1).kind == LPAREN:
            raise self.error(f"{tok.text}() is only allowed at the start of a line", tok.column, _EXPR_EXPECTED)
        return Named(self.next().text)

    def _nary(self, keyword: str) -> And | Or:
        self.expect(LPAREN)
        parts = [self.expr()]
        while self.peek().kind == COMMA:
            self.next()
            parts.append(self.expr())
        close = self.peek()
        if len(parts) < 2 and close.kind == RPAREN:
            raise self.error(f"{keyword}() needs at least 2 arguments, got 1", close.column, {COMMA})
        if close.kind != RPAREN:
            expected = {COMMA, RPAREN}
            if close.kind == EOL:
                raise self.error(f"unbalanced parentheses: missing ')' closing {keyword}()", close.column, expected)
            raise self.error(f"unexpected {self._describe(close)} in {keyword}()", close.column, expected)
        self.next()
        return And(tuple(parts)) if keyword == "and" else Or(tuple(parts))


def parse_line(line: str, lineno: int = 1) -> Axiom | None:
    """Parse one line; None for blank or comment-only lines."""
    return _LineParser(line, lineno).statement()


def _decode(raw: bytes, lineno: int) -> str:
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as e:
        column = len(raw[:e.start].decode("utf-8")) + 1
        raise AxiomSyntaxError("invalid UTF-8", lineno, column) from None


def iter_axioms(text: str | bytes) -> Iterator[tuple[int, Axiom | AxiomSyntaxError]]:
    """Yield ``(line number, axiom or error)`` for every non-blank line.

    A bad line never stops the scan; its error is yielded in place.
    """
    lines = text.split(b"\n") if isinstance(text, bytes) else text.split("\n")
    for lineno, raw in enumerate(lines, 1):
        try:
            line = _decode(raw, lineno) if isinstance(raw, bytes) else raw
            ax = parse_line(line.rstrip("\r"), lineno)
        except AxiomSyntaxError as e:
            yield lineno, e
            continue
        if ax is not None:
            yield lineno, ax


def parse_axioms(text: str | bytes) -> list[Axiom]:
    """Parse every axiom in ``text``; raises the first AxiomSyntaxError."""
    out = []
    for _, item in iter_axioms(text):
        if isinstance(item, AxiomSyntaxError):
            raise item
        out.append(item)
    return out


def format_expr(e: ClassExpr) -> str:
    if isinstance(e, Named):
        return e.lemma
    if isinstance(e, Not):
        return f"not({format_expr(e.inner)})"
    if isinstance(e, And):
        return "and(" + ", ".join(format_expr(p) for p in e.parts) + ")"
    if isinstance(e, Or):
        return "or(" + ", ".join(format_expr(p) for p in e.parts) + ")"
    if isinstance(e, Some):
        return f"some({e.property}, {format_expr(e.filler)})"
    raise TypeError(f"not a class expression: {e!r}")


def format_axiom(a: Axiom) -> str:
    if isinstance(a, SubClassOf):
        return f"sub({format_expr(a.sub)}, {format_expr(a.sup)})"
    if isinstance(a, DisjointWith):
        return f"disjoint({format_expr(a.a)}, {format_expr(a.b)})"
    if isinstance(a, Phrase):
        return format_expr(a.expr)
    raise TypeError(f"not an axiom: {a!r}")
