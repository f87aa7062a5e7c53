from itertools import groupby
from typing import List, Optional, Tuple

from cones.factory import canonicalize
from cones.models import Cone, Factor, FactorKind
from constants.common import (EXPRESSION_TOKEN, EXPRESSION_SEPARATOR, EMPTY_CONE_EXPRESSION, FIELD_LETTER,
                              LETTER_FIELD)
from exceptions import ConeParseError


Token = Tuple[str, str, int]


class ConeExpressionParser:
    """
    ConeExpressionParser reads cone expressions such as

        H3(C) + L5
        2*L3 + R8
        L11 + L5 + L3 + R8

    according to the grammar

        expr   := term ("+" term)*
        term   := [count "*"] factor
        factor := "L" int | "R" int | "H" int "(" ("R"|"C"|"H"|"O") ")"

    and returns the raw (not yet canonical) factors. `R n` stands for the n-dimensional
    orthant, i.e. n copies of L1. Whitespace is insignificant.
    """

    expression: str = None
    tokens: List[Token] = None

    def __init__(self, expression: str) -> None:
        self.expression = expression
        self.tokens = self._tokenize(expression)
        self._pos = 0

    def parse(self) -> List[Factor]:
        factors = self._parse_term()
        while self._peek() is not None:
            self._expect('punct', '+')
            factors.extend(self._parse_term())
        return factors

    def _tokenize(self, expression: str) -> List[Token]:
        tokens = []
        offset = 0
        while offset < len(expression):
            if expression[offset:].strip() == '':
                break
            found = EXPRESSION_TOKEN.match(expression, offset)
            if found is None:
                position = len(expression) - len(expression[offset:].lstrip())
                raise ConeParseError(f"Unexpected character {expression[position]!r}", expression, position)
            kind = found.lastgroup
            tokens.append((kind, found.group(kind), found.start(kind)))
            offset = found.end()
        return tokens

    def _peek(self) -> Optional[Token]:
        return self.tokens[self._pos] if self._pos < len(self.tokens) else None

    def _next(self, expected: str) -> Token:
        token = self._peek()
        if token is None:
            raise ConeParseError(f"Expected {expected}, found end of input", self.expression, len(self.expression))
        self._pos += 1
        return token

    def _expect(self, kind: str, value: str = None) -> str:
        expected = repr(value) if value is not None else kind
        token_kind, token_value, position = self._next(expected)
        if token_kind != kind or (value is not None and token_value != value):
            raise ConeParseError(f"Expected {expected}, found {token_value!r}", self.expression, position)
        return token_value

    def _parse_int(self) -> int:
        return int(self._expect('int'))

    def _parse_term(self) -> List[Factor]:
        count = 1
        token = self._peek()
        if token is not None and token[0] == 'int':
            count = self._parse_int()
            self._expect('punct', '*')
        return self._parse_factor() * count

    def _parse_factor(self) -> List[Factor]:
        kind, letter, position = self._next("a factor")
        if kind != 'letter' or letter not in ('L', 'R', 'H'):
            raise ConeParseError(f"Expected 'L', 'R' or 'H', found {letter!r}", self.expression, position)
        n = self._parse_int()
        if letter == 'L':
            return [Factor(FactorKind.LORENTZ, n)]
        if letter == 'R':
            return [Factor(FactorKind.LORENTZ, 1)] * n
        self._expect('punct', '(')
        kind, field, position = self._next("a field letter")
        if kind != 'letter' or field not in LETTER_FIELD:
            raise ConeParseError(f"Expected one of R, C, H, O, found {field!r}", self.expression, position)
        self._expect('punct', ')')
        return [Factor(FactorKind(LETTER_FIELD[field]), n)]


def parse_factors(expression: str) -> List[Factor]:
    return ConeExpressionParser(expression).parse()


def parse_cone(expression: str) -> Cone:
    return canonicalize(parse_factors(expression))


def format_factor(factor: Factor) -> str:
    if factor.is_lorentz:
        return f"L{factor.n}"
    return f"H{factor.n}({FIELD_LETTER[factor.kind.value]})"


def format_cone(cone: Cone) -> str:
    """
    Canonical text of a cone: factors in cone order, repeated factors as `count*factor`
    and all L1 factors gathered into one trailing orthant term, e.g.

      Cone{Lorentz 4, Lorentz 1, Lorentz 1}  ->  "L4 + R2"
      Cone{Lorentz 4, Lorentz 4, Lorentz 3}  ->  "2*L4 + L3"
      Cone{}                                 ->  "R0"
    """
    terms = []
    orthant_dim = 0
    for factor, group in groupby(cone.factors):
        count = len(list(group))
        if factor.is_lorentz and factor.n == 1:
            orthant_dim += count
            continue
        text = format_factor(factor)
        terms.append(text if count == 1 else f"{count}*{text}")
    if orthant_dim:
        terms.append(f"R{orthant_dim}")
    return EXPRESSION_SEPARATOR.join(terms) if terms else EMPTY_CONE_EXPRESSION


def format_partition(parts: List[int]) -> str:
    return "{" + ", ".join(str(p) for p in parts) + "}"
