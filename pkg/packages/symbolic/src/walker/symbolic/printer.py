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

from fractions import Fraction

import sympy
from sympy.core.function import AppliedUndef

from walker.common.report import RenderStyle

from .terms import Term, derivative_coordinates


def render_atom(atom: sympy.Expr, style: RenderStyle = RenderStyle.GRAMMAR) -> str:
    if isinstance(atom, sympy.Symbol):
        return atom.name
    if isinstance(atom, AppliedUndef):
        return atom.func.__name__
    name = atom.expr.func.__name__
    coordinates = derivative_coordinates(atom)
    if style is RenderStyle.SUBSCRIPT:
        return f"{name}_{''.join(coordinates)}"
    return f"D[{name};{','.join(coordinates)}]"


def render_coefficient(coefficient: Fraction) -> str:
    if coefficient.denominator == 1:
        return str(coefficient.numerator)
    return f"{coefficient.numerator}/{coefficient.denominator}"


def render_monomial(term: Term, style: RenderStyle) -> str:
    factors = []
    for atom, power in term.factors:
        text = render_atom(atom, style)
        factors.append(text if power == 1 else f"{text}^{power}")
    return "*".join(factors)


def render_terms(terms: list[Term], style: RenderStyle = RenderStyle.GRAMMAR) -> str:
    """Renders terms already in monomial order.

    Unit coefficients are omitted and signs are folded into the joining operator, so the output parses back with the
    expression grammar. A unary minus binds tighter than ``^``, so a negative leading term whose first factor is a
    power keeps its unit coefficient: ``-1*x^2``.
    """
    if not terms:
        return "0"
    pieces = []
    for index, term in enumerate(terms):
        magnitude = abs(term.coefficient)
        monomial = render_monomial(term, style)
        if not monomial:
            body = render_coefficient(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{render_coefficient(magnitude)}*{monomial}"
        negative = term.coefficient < 0
        if index == 0:
            if negative and magnitude == 1 and term.factors and term.factors[0][1] > 1:
                body = f"1*{body}"
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)
