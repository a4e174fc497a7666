"""Sparse integer Laurent polynomials in one variable ``t``.

Text grammar (whitespace-insensitive)::

    poly  := ["+"|"-"] term (("+"|"-") term)*
    term  := INT ["*"] mono | INT | mono
    mono  := "t" ["^" exp]
    exp   := ["-"|"+"] INT | "{" exp "}" | "(" exp ")"

Like terms are combined silently and zero coefficients are dropped.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping


class ParseError(ValueError):
    """Malformed polynomial text; ``pos`` is the 0-based character offset."""

    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


@dataclass(frozen=True, eq=False)
class LaurentPoly:
    terms: Mapping[int, int]

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        clean = {e: c for e, c in sorted(acc.items(), reverse=True) if c != 0}
        object.__setattr__(self, "terms", MappingProxyType(clean))

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        return cls(_Parser(text).parse())

    def coefficient(self, k: int) -> int:
        return self.terms.get(k, 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    @property
    def degree_top(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    @property
    def degree_bottom(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return min(self.terms)

    def eval_at_one(self) -> int:
        return sum(self.terms.values())

    def is_symmetric(self) -> bool:
        return all(self.terms.get(-e) == c for e, c in self.terms.items())

    def tail_sum(self, i: int) -> int:
        """Coefficient of ``t**i`` in ``t/(t-1) * p``, i.e. the sum of c_k over k >= i."""
        return sum(c for e, c in self.terms.items() if e >= i)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms.items():
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


def parse(text: str) -> LaurentPoly:
    return LaurentPoly.parse(text)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None):
        raise ParseError(message, self.text, self.pos if pos is None else pos)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def exponent(self) -> int:
        for open_, close in (("{", "}"), ("(", ")")):
            if self.take(open_):
                e = self.exponent()
                if not self.take(close):
                    self.error(f"expected {close!r}")
                return e
        sign = -1 if self.take("-") else 1
        if sign == 1:
            self.take("+")
        return sign * self.integer()

    def term(self) -> tuple[int, int]:
        ch = self.peek()
        if ch.isdigit():
            coeff = self.integer()
            if self.take("*"):
                if self.peek() != "t":
                    self.error("expected 't' after '*'")
            if self.peek() != "t":
                return 0, coeff
        elif ch == "t":
            coeff = 1
        else:
            self.error("expected term" if ch else "unexpected end of input")
        self.pos += 1  # the 't'
        exp = self.exponent() if self.take("^") else 1
        return exp, coeff

    def parse(self) -> list[tuple[int, int]]:
        terms = []
        sign = -1 if self.take("-") else 1
        if sign == 1:
            self.take("+")
        while True:
            e, c = self.term()
            terms.append((e, sign * c))
            ch = self.peek()
            if not ch:
                return terms
            if ch not in "+-":
                self.error(f"unexpected character {ch!r}")
            self.pos += 1
            sign = -1 if ch == "-" else 1
