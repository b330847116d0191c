"""Recursive-descent parser for ring expressions.

Grammar (whitespace is ignored)::

    expr  := ['+'|'-'] term (('+'|'-') term)*
    term  := power (['*'] power)*          # juxtaposition multiplies: a^2b
    power := atom ('^' ['-'] NUM | SUPERSCRIPT)?
    atom  := NUM | IDENT | '(' expr ')'

``IDENT`` is one letter followed by optional digits, so ``ab`` reads as
``a*b`` and ``x1x2`` as ``x1*x2``.  Unicode superscripts (``a²``, ``a⁻¹``)
and the operators ``·``, ``×`` and ``−`` are accepted as well.

Values are produced by an evaluator object providing ``integer(n)``,
``symbol(name)`` and ``power(x, k)``; sums and products use the values'
own ``+``, ``-`` and ``*``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import ParseError

_SUPERSCRIPTS = {
    "⁰": "0", "¹": "1", "²": "2", "³": "3", "⁴": "4",
    "⁵": "5", "⁶": "6", "⁷": "7", "⁸": "8", "⁹": "9", "⁻": "-",
}
_DIGITS = frozenset("0123456789")
_OPERATORS = {"+": "+", "-": "-", "−": "-", "*": "*", "·": "*", "×": "*", "^": "^", "(": "(", ")": ")"}


@dataclass(frozen=True)
class Token:
    kind: str  # NUM, IDENT, SUP, or an operator character
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in _DIGITS:
            j = i
            while j < n and text[j] in _DIGITS:
                j += 1
            tokens.append(Token("NUM", text[i:j], i))
            i = j
        elif ch.isascii() and ch.isalpha():
            j = i + 1
            while j < n and text[j] in _DIGITS:
                j += 1
            tokens.append(Token("IDENT", text[i:j], i))
            i = j
        elif ch in _SUPERSCRIPTS:
            j = i
            while j < n and text[j] in _SUPERSCRIPTS:
                j += 1
            tokens.append(Token("SUP", "".join(_SUPERSCRIPTS[c] for c in text[i:j]), i))
            i = j
        elif ch in _OPERATORS:
            tokens.append(Token(_OPERATORS[ch], ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i, text)
    tokens.append(Token("END", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, evaluator: Any):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.ev = evaluator

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok: Token | None = None) -> ParseError:
        tok = tok or self.tok
        return ParseError(message, tok.pos, self.text)

    def apply(self, fn, *args, tok: Token):
        try:
            return fn(*args)
        except ParseError:
            raise
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise self.error(str(exc), tok) from exc

    def parse(self):
        if self.tok.kind == "END":
            raise self.error("empty expression")
        value = self.expr()
        if self.tok.kind != "END":
            raise self.error(f"unexpected {self.tok.text!r}")
        return value

    def expr(self):
        start = self.tok
        negate = False
        if self.tok.kind in ("+", "-"):
            negate = self.advance().kind == "-"
        value = self.term()
        if negate:
            value = self.apply(lambda v: -v, value, tok=start)
        while self.tok.kind in ("+", "-"):
            op = self.advance()
            rhs = self.term()
            if op.kind == "+":
                value = self.apply(lambda a, b: a + b, value, rhs, tok=op)
            else:
                value = self.apply(lambda a, b: a - b, value, rhs, tok=op)
        return value

    def term(self):
        value = self.power()
        while True:
            if self.tok.kind == "*":
                op = self.advance()
            elif self.tok.kind in ("NUM", "IDENT", "("):
                op = self.tok
            else:
                return value
            rhs = self.power()
            value = self.apply(lambda a, b: a * b, value, rhs, tok=op)

    def power(self):
        base_tok = self.tok
        value = self.atom()
        if self.tok.kind == "^":
            self.advance()
            sign = 1
            if self.tok.kind == "-":
                self.advance()
                sign = -1
            if self.tok.kind != "NUM":
                raise self.error("expected integer exponent")
            k = sign * int(self.advance().text)
        elif self.tok.kind == "SUP":
            sup = self.advance()
            try:
                k = int(sup.text)
            except ValueError:
                raise self.error("malformed superscript exponent", sup) from None
        else:
            return value
        return self.apply(self.ev.power, value, k, tok=base_tok)

    def atom(self):
        tok = self.tok
        if tok.kind == "NUM":
            self.advance()
            return self.apply(self.ev.integer, int(tok.text), tok=tok)
        if tok.kind == "IDENT":
            self.advance()
            return self.apply(self.ev.symbol, tok.text, tok=tok)
        if tok.kind == "(":
            self.advance()
            value = self.expr()
            if self.tok.kind != ")":
                raise self.error("expected ')'")
            self.advance()
            return value
        if tok.kind == "END":
            raise self.error("unexpected end of expression")
        raise self.error(f"unexpected {tok.text!r}")


def parse_expression(text: str, evaluator: Any):
    """Parse ``text`` and evaluate it with ``evaluator``."""
    return _Parser(text, evaluator).parse()
