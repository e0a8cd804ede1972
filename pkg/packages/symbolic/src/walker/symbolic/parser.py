#  Copyright © 2026 Walker Ricci Solitons contributors
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#      http://www.apache.org/licenses/LICENSE-2.0
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.

"""Recursive descent parser for the expression grammar::

    expr     := term (('+'|'-') term)* ;
    term     := factor ('*' factor)* ;
    factor   := base ('^' NAT)? ;
    base     := RATIONAL | IDENT | 'D[' IDENT (';' COORD (',' COORD)*)? ']' | '(' expr ')' | '-' base ;
    RATIONAL := INT ('/' INT)? ;
    COORD    := 't' | 'x' | 'y'

A unary minus belongs to the base, so ``-x^2`` is ``(-x)^2``. Undeclared identifiers of the form ``f_tx`` are
read as ``D[f;t,x]`` when ``f`` is a declared function symbol.
"""

import logging
import re
from dataclasses import dataclass
from typing import NoReturn

import sympy

from .context import COORDINATE_SYMBOLS, Context, FuncSymbol, Parameter
from .exceptions import ExprSyntaxError, UnknownIdentifierError
from .expr import Expr

logger = logging.getLogger("walker")

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^()\[\];,]))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    """
    :raise ExprSyntaxError: On a character that starts no token.
    """
    tokens = []
    position = 0
    while True:
        while position < len(text) and text[position].isspace():
            position += 1
        if position >= len(text):
            break
        match = _TOKEN.match(text, position)
        if match is None:
            raise ExprSyntaxError(f"Unexpected character '{text[position]}'", text, position)
        kind = match.lastgroup or "op"
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


class Parser:
    def __init__(self, text: str, context: Context) -> None:
        self.text = text
        self.context = context
        self.tokens = tokenize(text)
        self.current = 0

    def next(self) -> Token:
        return self.tokens[self.current]

    def advance(self) -> Token:
        token = self.tokens[self.current]
        self.current += 1
        return token

    def check(self, *texts: str) -> bool:
        token = self.next()
        return token.kind == "op" and token.text in texts

    def expect(self, text: str) -> Token:
        if not self.check(text):
            self.fail(f"Expected '{text}'")
        return self.advance()

    def fail(self, message: str) -> NoReturn:
        token = self.next()
        found = "end of input" if token.kind == "eof" else f"'{token.text}'"
        raise ExprSyntaxError(f"{message}, found {found}", self.text, token.position)

    def parse(self) -> Expr:
        if self.next().kind == "eof":
            self.fail("Expected an expression")
        value = self.expression()
        if self.next().kind != "eof":
            self.fail("Unexpected input")
        return Expr(value)

    def expression(self) -> sympy.Expr:
        value = self.term()
        while self.check("+", "-"):
            operator = self.advance().text
            right = self.term()
            value = value + right if operator == "+" else value - right
        return value

    def term(self) -> sympy.Expr:
        value = self.factor()
        while self.check("*"):
            self.advance()
            value = value * self.factor()
        return value

    def factor(self) -> sympy.Expr:
        value = self.base()
        if self.check("^"):
            self.advance()
            token = self.next()
            if token.kind != "int":
                self.fail("Expected a natural exponent")
            self.advance()
            value = value ** int(token.text)
        return value

    def base(self) -> sympy.Expr:
        if self.check("-"):
            self.advance()
            return -self.base()
        token = self.next()
        if token.kind == "int":
            return self.rational()
        if token.kind == "ident":
            if token.text == "D" and self.tokens[self.current + 1].text == "[":
                return self.derivative()
            self.advance()
            return self.identifier(token)
        if self.check("("):
            self.advance()
            value = self.expression()
            self.expect(")")
            return value
        self.fail("Expected a number, identifier, derivative or '('")

    def rational(self) -> sympy.Rational:
        numerator = int(self.advance().text)
        if not self.check("/"):
            return sympy.Integer(numerator)
        self.advance()
        token = self.next()
        if token.kind != "int":
            self.fail("Division is only allowed between integers")
        self.advance()
        if int(token.text) == 0:
            raise ExprSyntaxError("Division by zero", self.text, token.position)
        return sympy.Rational(numerator, int(token.text))

    def derivative(self) -> sympy.Expr:
        self.advance()
        self.expect("[")
        token = self.next()
        if token.kind != "ident":
            self.fail("Expected a function symbol")
        self.advance()
        symbol = self.function_symbol(token)
        coordinates = []
        if self.check(";"):
            self.advance()
            coordinates.append(self.coordinate())
            while self.check(","):
                self.advance()
                coordinates.append(self.coordinate())
        self.expect("]")
        return self.differentiate(symbol, coordinates, token.position)

    def coordinate(self) -> str:
        token = self.next()
        if token.kind != "ident" or token.text not in COORDINATE_SYMBOLS:
            self.fail("Expected one of the coordinates t, x, y")
        return self.advance().text

    def function_symbol(self, token: Token) -> FuncSymbol:
        declaration = self.context.get(token.text)
        if declaration is None:
            raise UnknownIdentifierError(token.text, token.position)
        if not isinstance(declaration, FuncSymbol):
            raise ExprSyntaxError(f"'{token.text}' is not a function symbol", self.text, token.position)
        return declaration

    def differentiate(self, symbol: FuncSymbol, coordinates: list[str], position: int) -> sympy.Expr:
        if not coordinates:
            return symbol.applied
        outside = [name for name in coordinates if name not in symbol.deps]
        if outside:
            logger.warning(
                f"'{symbol.name}' does not depend on {', '.join(outside)}; its derivative at position {position} "
                f"of '{self.text}' is zero"
            )
            return sympy.Integer(0)
        return sympy.diff(symbol.applied, *(COORDINATE_SYMBOLS[name] for name in coordinates))

    def identifier(self, token: Token) -> sympy.Expr:
        name = token.text
        if name in COORDINATE_SYMBOLS:
            return COORDINATE_SYMBOLS[name]
        declaration = self.context.get(name)
        if isinstance(declaration, Parameter):
            return declaration.symbol
        if isinstance(declaration, FuncSymbol):
            return declaration.applied
        prefix, _, suffix = name.rpartition("_")
        if prefix and suffix and all(letter in COORDINATE_SYMBOLS for letter in suffix):
            if isinstance(self.context.get(prefix), FuncSymbol):
                return self.differentiate(self.context.function(prefix), list(suffix), token.position)
        raise UnknownIdentifierError(name, token.position)


def parse(text: str, context: Context) -> Expr:
    """Parses expression text into a canonical expression.

    :param text: Expression text following the expression grammar.
    :param context: Declarations used to resolve identifiers.

    :raise ExprSyntaxError: If the text does not follow the grammar.
    :raise UnknownIdentifierError: If an identifier is neither a coordinate nor declared.
    """
    return Parser(text, context).parse()
