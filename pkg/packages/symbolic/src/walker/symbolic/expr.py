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

"""The exact expression kernel.

An :class:`Expr` wraps a sympy expression that is always kept in canonical form: fully expanded, like terms merged,
``eps`` raised to at most the first power and partial derivatives listed in t, x, y order. Canonical forms are
structurally unique, so equality of two expressions is structural equality of their canonical forms.
"""

from collections.abc import Mapping
from fractions import Fraction
from typing import Union

import sympy
from sympy.core.function import AppliedUndef

from walker.common.report import RenderStyle

from .context import COORDINATE_SYMBOLS, COORDINATES, EPS_SYMBOL, FuncSymbol, Parameter, coordinate_index
from .exceptions import DependencyError, EvaluationError, ExprError, UnboundParameterError, UninstantiatedSymbolError
from .printer import render_terms
from .terms import Term, split_terms

Number = Union[int, Fraction, float]
Operand = Union["Expr", int, Fraction]


def _reduce_eps(power: sympy.Pow) -> sympy.Expr:
    return EPS_SYMBOL ** (int(power.exp) % 2)


def _is_eps_power(node: sympy.Basic) -> bool:
    return isinstance(node, sympy.Pow) and node.base == EPS_SYMBOL and isinstance(node.exp, sympy.Integer)


def _sort_derivative(node: sympy.Derivative) -> sympy.Derivative:
    ordered = sorted(node.variable_count, key=lambda pair: coordinate_index(pair[0].name))
    return sympy.Derivative(node.expr, *ordered)


def canonicalize(value: sympy.Basic) -> sympy.Expr:
    """Brings a sympy expression into canonical form."""
    result = sympy.expand(value)
    if result.has(EPS_SYMBOL):
        result = sympy.expand(result.replace(_is_eps_power, _reduce_eps))
    if result.has(sympy.Derivative):
        result = result.replace(lambda node: isinstance(node, sympy.Derivative), _sort_derivative)
    return result


def to_rational(value: Number | str) -> sympy.Rational:
    """Exact rational for a number; floats keep their exact binary value."""
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        value = Fraction(value)
        return sympy.Rational(value.numerator, value.denominator)
    return sympy.Rational(value)


class Expr:
    """Immutable canonical expression over coordinates, parameters and function symbols."""

    __slots__ = ("_value", "_terms")

    def __init__(self, value: sympy.Basic | Number = 0, *, canonical: bool = False) -> None:
        if isinstance(value, (int, Fraction, float)):
            value = to_rational(value)
        self._value: sympy.Expr = value if canonical else canonicalize(value)
        self._terms: list[Term] | None = None

    @classmethod
    def constant(cls, value: Number | str) -> "Expr":
        return cls(to_rational(value), canonical=True)

    @classmethod
    def coordinate(cls, name: str) -> "Expr":
        if name not in COORDINATE_SYMBOLS:
            raise ExprError(f"'{name}' is not a coordinate")
        return cls(COORDINATE_SYMBOLS[name], canonical=True)

    @classmethod
    def symbol(cls, declaration: Parameter | FuncSymbol) -> "Expr":
        if isinstance(declaration, Parameter):
            return cls(declaration.symbol, canonical=True)
        return cls(declaration.applied, canonical=True)

    @property
    def value(self) -> sympy.Expr:
        return self._value

    # Arithmetic

    def __add__(self, other: Operand) -> "Expr":
        return Expr(self._value + _coerce(other)._value)

    __radd__ = __add__

    def __sub__(self, other: Operand) -> "Expr":
        return Expr(self._value - _coerce(other)._value)

    def __rsub__(self, other: Operand) -> "Expr":
        return Expr(_coerce(other)._value - self._value)

    def __mul__(self, other: Operand) -> "Expr":
        return Expr(self._value * _coerce(other)._value)

    __rmul__ = __mul__

    def __neg__(self) -> "Expr":
        return Expr(-self._value, canonical=True)

    def __pow__(self, exponent: int) -> "Expr":
        if not isinstance(exponent, int) or exponent < 0:
            raise ExprError(f"Only natural powers are supported, got {exponent!r}")
        return Expr(self._value**exponent)

    def scale(self, factor: Number | str) -> "Expr":
        return Expr(self._value * to_rational(factor))

    # Calculus

    def differentiate(self, coordinate: str) -> "Expr":
        """Formal partial derivative; derivatives of a function symbol along a non-dependency vanish."""
        if coordinate not in COORDINATE_SYMBOLS:
            raise ExprError(f"'{coordinate}' is not a coordinate")
        return Expr(sympy.diff(self._value, COORDINATE_SYMBOLS[coordinate]))

    def substitute(self, symbol: FuncSymbol, replacement: "Expr") -> "Expr":
        """Replaces a function symbol and all of its derivatives.

        :param symbol: The function symbol to eliminate.
        :param replacement: Expression standing for ``symbol``; it may only use coordinates in ``symbol.deps``.

        :raise DependencyError: If ``replacement`` depends on a coordinate outside ``symbol.deps``.
        """
        extra = sorted(set(replacement.coordinates()) - set(symbol.deps), key=coordinate_index)
        if extra:
            raise DependencyError(
                f"Cannot substitute '{symbol.declaration()}' with '{replacement}': it depends on {', '.join(extra)}"
            )
        applied = symbol.applied
        mapping: dict[sympy.Basic, sympy.Basic] = {applied: replacement.value}
        for derivative in self._value.atoms(sympy.Derivative):
            if derivative.expr == applied:
                orders = [(variable, int(count)) for variable, count in derivative.variable_count]
                mapping[derivative] = sympy.diff(replacement.value, *orders)
        return Expr(self._value.xreplace(mapping))

    def bind(self, params: Mapping[str, Number]) -> "Expr":
        """Replaces parameters, given by name, with exact values."""
        mapping = {sympy.Symbol(name): to_rational(value) for name, value in params.items()}
        return Expr(self._value.xreplace(mapping))

    # Inspection

    def is_zero(self) -> bool:
        return self._value == 0

    def equals(self, other: Operand) -> bool:
        return (self - other).is_zero()

    def terms(self) -> list[Term]:
        if self._terms is None:
            self._terms = split_terms(self._value)
        return list(self._terms)

    def coordinates(self) -> tuple[str, ...]:
        """Coordinates the expression depends on, directly or through function symbols."""
        names = {symbol.name for symbol in self._value.free_symbols}
        return tuple(name for name in COORDINATES if name in names)

    def function_symbols(self) -> list[FuncSymbol]:
        """Function symbols with dependencies still present, by name."""
        applied = {
            FuncSymbol(atom.func.__name__, tuple(arg.name for arg in atom.args))
            for atom in self._value.atoms(AppliedUndef)
        }
        return sorted(applied, key=lambda symbol: symbol.name)

    def symbol_names(self) -> list[str]:
        """Names of free symbols other than coordinates: parameters and constant function symbols."""
        return sorted(s.name for s in self._value.free_symbols if s.name not in COORDINATE_SYMBOLS)

    def as_rational(self) -> Fraction | None:
        """The value of a constant expression, or None."""
        if isinstance(self._value, sympy.Rational):
            return Fraction(int(self._value.p), int(self._value.q))
        return None

    # Evaluation

    def evaluate(self, point: tuple[Number, Number, Number], params: Mapping[str, Number] | None = None) -> float:
        """Folds the expression to a float at a point.

        Every value is first turned into an exact rational; the conversion to float happens once at the end.

        :param point: Values of (t, x, y).
        :param params: Values of the parameters, ``eps`` must be 1 or -1 when given.

        :raise UninstantiatedSymbolError: If a function symbol with dependencies is still present.
        :raise UnboundParameterError: If a parameter has no value.
        :raise EvaluationError: If ``eps`` is bound to something other than 1 or -1.
        """
        self.require_instantiated()
        bindings: dict[sympy.Basic, sympy.Basic] = {
            COORDINATE_SYMBOLS[name]: to_rational(value) for name, value in zip(COORDINATES, point)
        }
        for name, value in (params or {}).items():
            exact = to_rational(value)
            if name == EPS_SYMBOL.name and exact not in (1, -1):
                raise EvaluationError(f"eps must be bound to 1 or -1, got {value}")
            bindings[sympy.Symbol(name)] = exact
        folded = self._value.xreplace(bindings)
        unbound = sorted(s.name for s in folded.free_symbols)
        if unbound:
            raise UnboundParameterError(f"No value given for {', '.join(unbound)} in '{self}'")
        return float(folded)

    def require_instantiated(self) -> None:
        """
        :raise UninstantiatedSymbolError: If a function symbol with dependencies is still present.
        """
        remaining = self.function_symbols()
        if remaining:
            names = ", ".join(symbol.declaration() for symbol in remaining)
            raise UninstantiatedSymbolError(f"'{self}' still contains function symbols {names}")

    # Rendering and protocol

    def to_string(self, style: RenderStyle = RenderStyle.GRAMMAR) -> str:
        return render_terms(self.terms(), style)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Expr({self.to_string()!r})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Expr.constant(other)
        if not isinstance(other, Expr):
            return NotImplemented
        return bool(self._value == other._value)

    def __hash__(self) -> int:
        return hash(self._value)


ZERO = Expr(sympy.Integer(0), canonical=True)
ONE = Expr(sympy.Integer(1), canonical=True)


def _coerce(value: Operand) -> Expr:
    if isinstance(value, Expr):
        return value
    if isinstance(value, (int, Fraction)):
        return Expr.constant(value)
    raise ExprError(f"Cannot combine an expression with {type(value).__name__}")


def add(e1: Expr, e2: Expr) -> Expr:
    return e1 + e2


def mul(e1: Expr, e2: Expr) -> Expr:
    return e1 * e2


def neg(e: Expr) -> Expr:
    return -e


def scale(e: Expr, q: Number | str) -> Expr:
    return e.scale(q)


def differentiate(e: Expr, c: str) -> Expr:
    return e.differentiate(c)


def substitute(e: Expr, sym: FuncSymbol, replacement: Expr) -> Expr:
    return e.substitute(sym, replacement)


def evaluate(e: Expr, point: tuple[Number, Number, Number], params: Mapping[str, Number] | None = None) -> float:
    return e.evaluate(point, params)


def is_zero(e: Expr) -> bool:
    return e.is_zero()


def equals(e1: Expr, e2: Expr) -> bool:
    return e1.equals(e2)
