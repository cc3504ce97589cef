"""Text literals for vectors and matrix elements.

    vector   := "0" | signed-term (("+" | "-") term)*
    term     := [rational "*"] osc* "|0>"
    osc      := "a(-" posint ")"
    rational := ["-"] int ["/" int]
    uelement := "0" | [rational "*"] block (("+" | "-") [rational "*"] block)*
    block    := "[" vector "]" "{" nat "," nat "}"

Whitespace is ignored everywhere. The printers in :mod:`uinfty.fock` and
:mod:`uinfty.uinf` emit this grammar, so printing and re-parsing round-trips.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from .exact import as_scalar, make_partition
from .fock import FockVector
from .uinf import UElement

__all__ = ["ParseError", "parse_element", "parse_vector", "parse_uelement"]


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, expected: str):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        found = repr(text[pos]) if pos < len(text) else "end of input"
        super().__init__(f"line {line}, column {col}: expected {expected}, found {found}")
        self.line = line
        self.column = col
        self.expected = expected


_INT = re.compile(r"\d+")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def accept(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str, what: str = None):
        if not self.accept(s):
            raise ParseError(self.text, self.pos, what or repr(s))

    def integer(self, what="integer") -> int:
        self.skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            raise ParseError(self.text, self.pos, what)
        self.pos = m.end()
        return int(m.group())

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def rational(self):
        neg = self.accept("-")
        num = self.integer("rational coefficient")
        den = 1
        if self.accept("/"):
            den = self.integer("denominator")
            if den == 0:
                raise ParseError(self.text, self.pos - 1, "nonzero denominator")
        val = as_scalar(Fraction(num, den))
        return -val if neg else val

    def starts_number(self) -> bool:
        self.skip()
        i = self.pos
        if i < len(self.text) and self.text[i] == "-":
            i += 1
            while i < len(self.text) and self.text[i].isspace():
                i += 1
        return i < len(self.text) and self.text[i].isdigit()

    def coefficient(self):
        """Optional ``rational *`` prefix."""
        if self.starts_number():
            c = self.rational()
            self.expect("*", "'*' after coefficient")
            return c
        return 1

    def monomial(self):
        parts = []
        while self.accept("a"):
            self.expect("(")
            self.expect("-", "'-' (only creation operators a(-n) are allowed)")
            n = self.integer("mode index")
            if n == 0:
                raise ParseError(self.text, self.pos - 1, "positive mode index")
            self.expect(")")
            parts.append(n)
        self.expect("|0>", "'a(-n)' or '|0>'")
        return make_partition(parts)

    def term(self, sign: int, acc: dict):
        c = sign * self.coefficient()
        p = self.monomial()
        acc[p] = acc.get(p, 0) + c

    def vector(self) -> FockVector:
        acc: dict = {}
        if self.peek("0") and not self.starts_vector_after_zero():
            self.pos += 1
            return FockVector()
        sign = -1 if self.accept("-") else 1
        self.term(sign, acc)
        while True:
            if self.accept("+"):
                self.term(1, acc)
            elif self.accept("-"):
                self.term(-1, acc)
            else:
                break
        return FockVector(acc)

    def starts_vector_after_zero(self) -> bool:
        # "0" alone is the zero vector; "0 * ..." or "0/..." is a coefficient
        rest = self.text[self.pos + 1:].lstrip()
        return rest.startswith("*") or rest.startswith("/") or rest[:1].isdigit()

    def block(self, sign: int):
        c = sign * self.coefficient()
        self.expect("[", "'['")
        v = self.vector()
        self.expect("]", "']'")
        self.expect("{", "'{'")
        k = self.integer("row index")
        self.expect(",", "','")
        l = self.integer("column index")
        self.expect("}", "'}'")
        return UElement({(k, l): v.scale(c)})

    def uelement(self) -> UElement:
        if self.peek("0") and not self.starts_vector_after_zero():
            self.pos += 1
            return UElement()
        sign = -1 if self.accept("-") else 1
        out = self.block(sign)
        while True:
            if self.accept("+"):
                out = out + self.block(1)
            elif self.accept("-"):
                out = out + self.block(-1)
            else:
                break
        return out


def _finish(p: _Parser, value):
    if not p.at_end():
        raise ParseError(p.text, p.pos, "end of input")
    return value


def parse_vector(text: str) -> FockVector:
    p = _Parser(text)
    return _finish(p, p.vector())


def parse_uelement(text: str) -> UElement:
    p = _Parser(text)
    return _finish(p, p.uelement())


def parse_element(text: str) -> Union[FockVector, UElement]:
    """Parse a vector literal, or a matrix literal if the text contains ``[``."""
    if "[" in text:
        return parse_uelement(text)
    return parse_vector(text)
