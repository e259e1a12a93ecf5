"""Recursive-descent parser for ASCII LTL.

Precedence, loosest first: ``<->``, ``->`` (right), ``|``, ``&``,
``U``/``R`` (right), then the prefix operators ``! X F G``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .formula import (
    FALSE,
    TRUE,
    And,
    Atom,
    Finally,
    Formula,
    Globally,
    Iff,
    Implies,
    Lit,
    Next,
    Not,
    Or,
    Release,
    Until,
    nnf,
)


class LTLSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        self.line = text.count("\n", 0, pos) + 1
        self.column = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.message = message
        super().__init__(f"{self.line}:{self.column}: {message}")

    def pointer(self) -> str:
        """The offending source line with a caret under the error column."""
        line = self.text.splitlines()[self.line - 1] if self.text.strip() else ""
        return f"{line}\n{' ' * (self.column - 1)}^"


KEYWORDS = {"X", "F", "G", "U", "R", "True", "False"}

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<const>[01])"
    r"|(?P<op><->|->|[!&|()])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # ident, kw, const, op, eof
    value: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise LTLSyntaxError(f"unknown token {text[pos]!r}", text, pos)
        kind = m.lastgroup
        value = m.group()
        if kind == "ident" and value in KEYWORDS:
            kind = "kw"
        if kind != "ws":
            tokens.append(Token(kind, value, pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, occurrence_tags: bool):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.occurrence_tags = occurrence_tags
        self.next_occurrence = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str) -> LTLSyntaxError:
        return LTLSyntaxError(message, self.text, self.tok.pos)

    def accept(self, value: str) -> bool:
        if self.tok.kind in ("op", "kw") and self.tok.value == value:
            self.i += 1
            return True
        return False

    def expect(self, value: str) -> None:
        if not self.accept(value):
            found = self.tok.value or "end of input"
            raise self.error(f"expected {value!r}, found {found!r}")

    def parse(self) -> Formula:
        f = self.iff()
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.value!r}")
        return f

    def iff(self) -> Formula:
        f = self.implies()
        while self.accept("<->"):
            f = Iff(f, self.implies())
        return f

    def implies(self) -> Formula:
        f = self.disj()
        if self.accept("->"):
            return Implies(f, self.implies())
        return f

    def disj(self) -> Formula:
        f = self.conj()
        while self.accept("|"):
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.temporal()
        while self.accept("&"):
            f = And(f, self.temporal())
        return f

    def temporal(self) -> Formula:
        f = self.unary()
        if self.accept("U"):
            return Until(f, self.temporal())
        if self.accept("R"):
            return Release(f, self.temporal())
        return f

    def unary(self) -> Formula:
        for sym, kind in (("!", Not), ("X", Next), ("F", Finally), ("G", Globally)):
            if self.accept(sym):
                return kind(self.unary())
        return self.primary()

    def primary(self) -> Formula:
        tok = self.tok
        if self.accept("("):
            f = self.iff()
            self.expect(")")
            return f
        if tok.kind == "ident":
            self.i += 1
            occ = self.next_occurrence if self.occurrence_tags else 0
            self.next_occurrence += 1
            return Lit(Atom(tok.value, occ))
        if tok.value in ("True", "1") and tok.kind in ("kw", "const"):
            self.i += 1
            return TRUE
        if tok.value in ("False", "0") and tok.kind in ("kw", "const"):
            self.i += 1
            return FALSE
        found = tok.value or "end of input"
        raise self.error(f"expected a formula, found {found!r}")


def parse_raw(text: str, occurrence_tags: bool = True) -> Formula:
    """Parse without desugaring or NNF conversion."""
    return _Parser(text, occurrence_tags).parse()


def parse(text: str, occurrence_tags: bool = True) -> Formula:
    """Parse ``text`` into an NNF formula.

    Atoms are tagged with their left-to-right occurrence index unless
    ``occurrence_tags`` is false, in which case every tag is 0.
    """
    return nnf(parse_raw(text, occurrence_tags))
