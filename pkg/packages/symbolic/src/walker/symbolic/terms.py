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

"""Splitting canonical expressions into terms, and the fixed monomial order.

Atoms sort as coordinates (in t, x, y order), then plain symbols (parameters and constant function symbols) by name,
then function symbols and their derivatives by name and sorted derivative coordinates. Terms of higher degree come
first; terms of equal degree compare by their sorted atom sequences.
"""

from fractions import Fraction
from typing import NamedTuple

import sympy
from sympy.core.function import AppliedUndef

from .context import COORDINATE_SYMBOLS, coordinate_index
from .exceptions import ExprError

AtomKey = tuple[int, int | str] | tuple[int, str, tuple[int, ...]]


class Term(NamedTuple):
    coefficient: Fraction
    factors: tuple[tuple[sympy.Expr, int], ...]

    @property
    def degree(self) -> int:
        return sum(power for _, power in self.factors)


def derivative_coordinates(atom: sympy.Derivative) -> tuple[str, ...]:
    """Coordinates of a derivative atom with repetition, in t, x, y order."""
    names: list[str] = []
    for variable, count in atom.variable_count:
        names.extend([variable.name] * int(count))
    return tuple(sorted(names, key=coordinate_index))


def atom_key(atom: sympy.Expr) -> AtomKey:
    if isinstance(atom, sympy.Symbol):
        if atom.name in COORDINATE_SYMBOLS:
            return (0, coordinate_index(atom.name))
        return (1, atom.name)
    if isinstance(atom, AppliedUndef):
        return (2, atom.func.__name__, ())
    if isinstance(atom, sympy.Derivative) and isinstance(atom.expr, AppliedUndef):
        indices = tuple(coordinate_index(name) for name in derivative_coordinates(atom))
        return (2, atom.expr.func.__name__, indices)
    raise ExprError(f"'{atom}' is not a polynomial atom")


def term_key(term: Term) -> tuple[int, tuple[AtomKey, ...]]:
    sequence: list[AtomKey] = []
    for atom, power in term.factors:
        sequence.extend([atom_key(atom)] * power)
    return (-term.degree, tuple(sequence))


def to_fraction(number: sympy.Rational) -> Fraction:
    return Fraction(int(number.p), int(number.q))


def split_terms(value: sympy.Expr) -> list[Term]:
    """Terms of an expanded expression in monomial order.

    :raise ExprError: If the expression is not a polynomial with rational coefficients in its atoms.
    """
    if value == 0:
        return []
    terms = []
    for addend in sympy.Add.make_args(value):
        coefficient, rest = addend.as_coeff_Mul()
        if not isinstance(coefficient, sympy.Rational):
            raise ExprError(f"Coefficient '{coefficient}' of '{addend}' is not rational")
        factors = []
        for factor in sympy.Mul.make_args(rest):
            if factor == 1:
                continue
            base, exponent = factor.as_base_exp()
            if not (isinstance(exponent, sympy.Integer) and exponent > 0):
                raise ExprError(f"'{factor}' is not a positive integer power of an atom")
            atom_key(base)
            factors.append((base, int(exponent)))
        factors.sort(key=lambda item: atom_key(item[0]))
        terms.append(Term(to_fraction(coefficient), tuple(factors)))
    return sorted(terms, key=term_key)
