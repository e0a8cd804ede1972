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

"""Condition systems: the six components of the soliton residual, each normalised up to a recorded factor."""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from walker.geometry import VectorField
from walker.symbolic import EPS, ONE, ZERO, Context, Expr, Parameter
from walker.symbolic.context import EPS_SYMBOL

from .candidate import SolitonCandidate, soliton_constant
from .exceptions import SolitonError
from .residual import residual

FIELD_DECLARATIONS = ("A:(t,x,y)", "B:(t,x,y)", "C:(t,x,y)")


def normalize(value: Expr) -> tuple[Expr, Expr]:
    """Splits ``value`` into ``factor * normalized``.

    When every term carries ``eps`` it moves into the factor. The rational part of the factor is the gcd of the
    numerators over the gcd of the denominators, signed so that the leading term of the normalized form is positive.

    :return: The factor and the normalized expression.
    """
    terms = value.terms()
    if not terms:
        return ONE, ZERO
    factor = ONE
    if all(any(atom == EPS_SYMBOL for atom, _ in term.factors) for term in terms):
        eps = Expr.symbol(Parameter(EPS))
        factor = eps
        value = value * eps
        terms = value.terms()
    common = Fraction(
        gcd(*(term.coefficient.numerator for term in terms)),
        gcd(*(term.coefficient.denominator for term in terms)),
    )
    if terms[0].coefficient < 0:
        common = -common
    return factor.scale(common), value.scale(1 / common)


@dataclass(frozen=True)
class Condition:
    """``lhs = 0``, where ``factor * lhs`` is the residual component named by ``label``."""

    label: str
    lhs: Expr
    factor: Expr = ONE

    @classmethod
    def from_component(cls, label: str, component: Expr) -> "Condition":
        factor, lhs = normalize(component)
        return cls(label=label, lhs=lhs, factor=factor)

    @property
    def raw(self) -> Expr:
        return self.factor * self.lhs

    def is_satisfied(self) -> bool:
        return self.lhs.is_zero()


@dataclass(frozen=True)
class ConditionSet:
    """Ordered conditions with unique labels; an empty set is identically satisfied."""

    conditions: tuple[Condition, ...] = ()

    def __post_init__(self) -> None:
        labels = [condition.label for condition in self.conditions]
        duplicates = sorted({label for label in labels if labels.count(label) > 1})
        if duplicates:
            raise SolitonError(f"Duplicate condition labels: {', '.join(duplicates)}")

    @classmethod
    def from_components(cls, components: Iterable[tuple[str, Expr]]) -> "ConditionSet":
        return cls(tuple(Condition.from_component(label, component) for label, component in components))

    def __iter__(self) -> Iterator[Condition]:
        return iter(self.conditions)

    def __len__(self) -> int:
        return len(self.conditions)

    def __getitem__(self, label: str) -> Condition:
        for condition in self.conditions:
            if condition.label == label:
                return condition
        raise KeyError(label)

    def labels(self) -> list[str]:
        return [condition.label for condition in self.conditions]

    def is_satisfied(self) -> bool:
        return all(condition.is_satisfied() for condition in self.conditions)

    def remaining(self) -> "ConditionSet":
        """The conditions that do not hold identically."""
        return ConditionSet(tuple(condition for condition in self.conditions if not condition.is_satisfied()))


def field_context(context: Context | None = None) -> Context:
    """``context`` with the generic field components A, B, C declared as functions of (t, x, y)."""
    return (context or Context()).merge(Context.from_declarations(FIELD_DECLARATIONS))


def general_conditions(f_shape: Expr, ctx: Context, eps: int | None = None) -> ConditionSet:
    """The soliton conditions for a generic vector field on the Walker metric of ``f_shape``.

    One condition per residual component, in the order tt, tx, ty, xx, xy, yy, with ``lambda`` symbolic.

    :param f_shape: The defining function, generic or of a restricted shape.
    :param ctx: Declares the field components A, B and C.
    :param eps: 1 or -1 for a fixed signature, None for symbolic ``eps``.

    :raise UnknownIdentifierError: If ``ctx`` does not declare A, B or C.
    """
    field = VectorField(*(Expr.symbol(ctx.function(name)) for name in ("A", "B", "C")))
    candidate = SolitonCandidate(f=f_shape, X=field, lam=soliton_constant(), eps=eps)
    return ConditionSet.from_components(residual(candidate).items())
