"""
Module containing the polynomial text grammar

    expression := ['+'|'-'] term (('+'|'-') term)*
    term       := factor ('*' factor)*
    factor     := atom ('^' int)*
    atom       := rational | 'zeta(' int ')' | 'sqrt(' int ')' | 'i' | var | param | '(' expression ')'
    rational   := int ('/' int)?

`i` stands for zeta(4) unless it is declared as a variable or parameter.
"""
import re
from fractions import Fraction
from typing import Any, Dict, List, Mapping, NamedTuple, Optional, Sequence

from ..exactnum.cyclotomic import CyclotomicNumber, sqrt_model
from ..exactnum.errors import ExactArithmeticError
from ..exactnum.rational import format_rational
from .errors import PolynomialSyntaxError, UnknownVariableError, UnsupportedRootLiteralError
from .polynomial import MultiPoly

_TOKEN_PATTERN = re.compile(r'\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<symbol>[-+*/^()]))')


class _Token(NamedTuple):
    kind: str
    text: str
    position: int


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == '':
            break
        match = _TOKEN_PATTERN.match(text, position)
        if match is None:
            offending = position + len(text[position:]) - len(text[position:].lstrip())
            raise PolynomialSyntaxError(f'unexpected character {text[offending]!r}', offending, text)
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(_Token('end', '', len(text)))
    return tokens


class _Parser:
    """Recursive descent over the token list"""

    def __init__(self, text: str, variables: Sequence[str], parameters: Mapping[str, Any]):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0
        self.variable_count = len(variables)
        self.variables = {name: i for i, name in enumerate(variables)}
        self.parameters = dict(parameters)

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def _advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _expect(self, text: str) -> _Token:
        token = self.current
        if token.text != text:
            found = token.text or 'end of input'
            raise PolynomialSyntaxError(f'expected {text!r} but found {found!r}', token.position, self.text)
        return self._advance()

    def _expect_int(self) -> int:
        token = self.current
        if token.kind != 'int':
            raise PolynomialSyntaxError('expected an integer', token.position, self.text)
        self._advance()
        return int(token.text)

    def parse(self) -> MultiPoly:
        result = self.expression()
        if self.current.kind != 'end':
            raise PolynomialSyntaxError(f'unexpected {self.current.text!r}', self.current.position, self.text)
        return result

    def expression(self) -> MultiPoly:
        negate = False
        if self.current.text in ('+', '-'):
            negate = self._advance().text == '-'

        result = self.term()
        if negate:
            result = -result

        while self.current.text in ('+', '-'):
            operator = self._advance().text
            operand = self.term()
            result = result + operand if operator == '+' else result - operand

        return result

    def term(self) -> MultiPoly:
        result = self.factor()
        while self.current.text == '*':
            self._advance()
            result = result * self.factor()
        return result

    def factor(self) -> MultiPoly:
        result = self.atom()
        while self.current.text == '^':
            self._advance()
            result = result ** self._expect_int()
        return result

    def _constant(self, value: Any) -> MultiPoly:
        return MultiPoly.constant(self.variable_count, value)

    def atom(self) -> MultiPoly:
        token = self.current

        if token.kind == 'int':
            self._advance()
            value = Fraction(int(token.text))
            if self.current.text == '/':
                self._advance()
                denominator_position = self.current.position
                denominator = self._expect_int()
                if denominator == 0:
                    raise PolynomialSyntaxError('zero denominator', denominator_position, self.text)
                value = value / denominator
            return self._constant(value)

        if token.text == '(':
            self._advance()
            inner = self.expression()
            self._expect(')')
            return inner

        if token.kind == 'name':
            self._advance()
            name = token.text

            if name in self.variables:
                return MultiPoly.variable(self.variable_count, self.variables[name], Fraction(1))
            if name in self.parameters:
                return self._constant(self.parameters[name])
            if name in ('zeta', 'sqrt') and self.current.text == '(':
                return self._constant(self._root_literal(name, token.position))
            if name == 'i':
                return self._constant(CyclotomicNumber.zeta(4))

            raise UnknownVariableError(f'unknown variable {name!r}', token.position, self.text)

        found = token.text or 'end of input'
        raise PolynomialSyntaxError(f'unexpected {found!r}', token.position, self.text)

    def _root_literal(self, name: str, position: int) -> CyclotomicNumber:
        self._expect('(')
        argument = self._expect_int()
        self._expect(')')

        if name == 'zeta':
            if argument < 1:
                raise UnsupportedRootLiteralError(f'zeta({argument}) is not a root of unity', position, self.text)
            return CyclotomicNumber.zeta(argument)

        if argument < 1:
            raise UnsupportedRootLiteralError(f'sqrt({argument}) is not supported', position, self.text)
        try:
            return sqrt_model(argument)
        except ExactArithmeticError as exp:
            raise UnsupportedRootLiteralError(str(exp), position, self.text)


def _normalize_coefficients(poly: MultiPoly, order: Optional[int]) -> MultiPoly:
    """All-rational results get Fraction coefficients, otherwise one common cyclotomic field"""
    values = list(poly.terms.values())
    has_roots = any(isinstance(c, CyclotomicNumber) and not c.is_rational() for c in values)

    if order is None and not has_roots:
        return poly.map_coefficients(
            lambda c: c.to_rational() if isinstance(c, CyclotomicNumber) else Fraction(c))

    common = order or poly.coefficient_order()

    def lift(c):
        if isinstance(c, CyclotomicNumber):
            return c.embed(common)
        return CyclotomicNumber.from_rational(c, common)

    return poly.map_coefficients(lift)


def parse_poly(text: str, variables: Sequence[str], parameters: Optional[Mapping[str, Any]] = None,
               order: Optional[int] = None) -> MultiPoly:
    """
    Parses text over the ordered variable names. Named parameters are bound to the given values.
    With `order` set, every coefficient is placed in Q(zeta_order)
    """
    parser = _Parser(text, variables, parameters or {})
    try:
        poly = parser.parse()
        return _normalize_coefficients(poly, order)
    except ExactArithmeticError as exp:
        raise UnsupportedRootLiteralError(str(exp), 0, text)


def _format_coefficient(value: Any) -> str:
    if isinstance(value, CyclotomicNumber):
        if value.is_rational():
            return format_rational(value.to_rational())
        return value.to_expression()
    return format_rational(Fraction(value))


def format_poly(poly: MultiPoly, names: Sequence[str]) -> str:
    """Canonical text in descending graded reverse lexicographic order; parse_poly reads it back"""
    if poly.is_zero():
        return '0'

    pieces: List[str] = []
    for monomial, coefficient in poly.sorted_terms():
        text = _format_coefficient(coefficient)
        negative = text.startswith('-') and not text.startswith('(')
        magnitude = text[1:] if negative else text
        body = monomial.to_expression(names)

        if monomial.degree == 0:
            piece = magnitude
        elif magnitude == '1':
            piece = body
        else:
            piece = f'{magnitude}*{body}'

        if not pieces:
            pieces.append(f'-{piece}' if negative else piece)
        else:
            pieces.append(f'- {piece}' if negative else f'+ {piece}')

    return ' '.join(pieces)


def default_variable_names(count: int, prefix: str = 'x') -> List[str]:
    return [f'{prefix}{i}' for i in range(count)]


def parameter_bindings(names: Sequence[str], values: Sequence[Any]) -> Dict[str, Any]:
    return dict(zip(names, values))
