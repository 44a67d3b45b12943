"""
Surface syntax of formulas.

    formula  := unary ("&" unary)*
    unary    := "!" unary | primary
    primary  := "true" | "false" | '"' prop '"' | "(" formula ")" | prob
    prob     := "P" cmp number "[" path "]" ["mode=" mode]
    path     := "X" unary | unary "U" ["<=" int] unary
    cmp      := ">=" | ">" | "<=" | "<"
    mode     := minmin | maxmax | maximin | minimax
              | forall | exists | sched | nature

A missing ``mode=`` means ``forall``. Example::

    P>=0.7 [ "a" U<=4 "b" ] mode=maximin
"""

from __future__ import annotations

import re
from typing import Optional

from ..errors import ParseError
from ..model.interval import parse_rational
from ..types import ONE, ZERO
from .formulas import (
    And,
    Atom,
    BoundedUntil,
    Comparison,
    Next,
    Not,
    PathFormula,
    Prob,
    Quantifier,
    QuantifierMode,
    StateFormula,
    TrueFormula,
    Until,
    false,
)

_TOKENS = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<string>"[^"]*")
  | (?P<mode>mode=)
  | (?P<cmp>>=|<=|>|<)
  | (?P<number>\d+/\d+|\d+\.\d*|\.\d+|\d+)
  | (?P<punct>[\[\]()!&])
  | (?P<word>[A-Za-z_][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


class _Token:
    __slots__ = ("kind", "text", "column")

    def __init__(self, kind: str, text: str, column: int) -> None:
        self.kind = kind
        self.text = text
        self.column = column


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKENS.match(text, pos)
        if not match:
            raise ParseError(1, pos + 1, f"unexpected character {text[pos]!r}")
        kind = match.lastgroup or ""
        if kind != "ws":
            tokens.append(_Token(kind, match.group(), pos + 1))
        pos = match.end()
    tokens.append(_Token("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def advance(self) -> _Token:
        token = self.current
        self.index += 1
        return token

    def error(self, message: str, token: Optional[_Token] = None) -> ParseError:
        return ParseError(1, (token or self.current).column, message)

    def accept(self, text: str) -> bool:
        if self.current.text == text and self.current.kind != "string":
            self.index += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            found = self.current.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")

    def formula(self) -> StateFormula:
        result = self.unary()
        while self.accept("&"):
            result = And(result, self.unary())
        return result

    def unary(self) -> StateFormula:
        if self.accept("!"):
            return Not(self.unary())
        return self.primary()

    def primary(self) -> StateFormula:
        token = self.current
        if token.kind == "string":
            self.advance()
            prop = token.text[1:-1]
            if not prop:
                raise self.error("empty proposition name", token)
            return Atom(prop)
        if self.accept("("):
            inner = self.formula()
            self.expect(")")
            return inner
        if self.accept("true"):
            return TrueFormula()
        if self.accept("false"):
            return false()
        if token.kind == "word" and token.text == "P":
            return self.prob()
        raise self.error(f"unexpected {token.text or 'end of input'!r}")

    def prob(self) -> Prob:
        self.expect("P")
        cmp_token = self.current
        if cmp_token.kind != "cmp":
            raise self.error("expected a comparison after 'P'")
        self.advance()
        comparison = Comparison(cmp_token.text)

        number = self.advance()
        if number.kind != "number":
            raise self.error("expected a probability threshold", number)
        try:
            threshold = parse_rational(number.text)
        except ValueError as e:
            raise self.error(str(e), number) from e
        if not ZERO <= threshold <= ONE:
            raise self.error(f"threshold {threshold} outside [0,1]", number)

        self.expect("[")
        path = self.path()
        self.expect("]")

        quantifier: Optional[Quantifier] = Quantifier.FORALL
        mode = Quantifier.FORALL.mode_for(comparison)
        if self.current.kind == "mode":
            self.advance()
            word = self.advance()
            if word.text in {m.value for m in QuantifierMode}:
                mode, quantifier = QuantifierMode(word.text), None
            elif word.text in {q.value for q in Quantifier}:
                quantifier = Quantifier(word.text)
                mode = quantifier.mode_for(comparison)
            else:
                raise self.error(f"unknown mode {word.text!r}", word)
        return Prob(comparison, threshold, path, mode, quantifier)

    def path(self) -> PathFormula:
        if self.accept("X"):
            return Next(self.unary())
        left = self.unary()
        self.expect("U")
        if self.current.kind == "cmp":
            if self.current.text != "<=":
                raise self.error("only 'U<=k' bounds are supported")
            self.advance()
            horizon = self.advance()
            if horizon.kind != "number" or not horizon.text.isdigit():
                raise self.error("expected an integer horizon", horizon)
            return BoundedUntil(left, self.unary(), int(horizon.text))
        return Until(left, self.unary())


def parse_formula(text: str) -> StateFormula:
    """
    Parses a state formula.

    Raises:
        ParseError: With the column of the offending token (line is always 1).
    """
    parser = _Parser(text)
    formula = parser.formula()
    if parser.current.kind != "end":
        raise parser.error(f"trailing input {parser.current.text!r}")
    return formula
