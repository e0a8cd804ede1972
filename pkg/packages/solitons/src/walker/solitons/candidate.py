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

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from walker.geometry import Metric, VectorField, walker_metric
from walker.symbolic import EPS, Context, Expr, Parameter

from .exceptions import CandidateError

LAMBDA = "lambda"


class Classification(str, Enum):
    SHRINKING = "shrinking"
    STEADY = "steady"
    EXPANDING = "expanding"
    INDETERMINATE = "indeterminate"


def classify(lam: Expr | Fraction | int) -> Classification:
    """Shrinking, steady or expanding as the soliton constant is positive, zero or negative.

    A constant that is not a number, such as the parameter ``lambda``, is indeterminate.
    """
    value = lam.as_rational() if isinstance(lam, Expr) else Fraction(lam)
    if value is None:
        return Classification.INDETERMINATE
    if value > 0:
        return Classification.SHRINKING
    if value < 0:
        return Classification.EXPANDING
    return Classification.STEADY


def soliton_constant() -> Expr:
    """The symbolic soliton constant ``lambda``."""
    return Expr.symbol(Parameter(LAMBDA))


def with_soliton_constant(context: Context) -> Context:
    """``context`` with ``lambda`` declared as a parameter, unless it already declares it."""
    if LAMBDA in context:
        return context
    return context.declare_parameter(LAMBDA)


@dataclass(frozen=True)
class SolitonCandidate:
    """A defining function, a vector field and a soliton constant to test against ``L_X g + rho = lambda g``.

    :param f: Defining function of the Walker metric.
    :param X: The vector field.
    :param lam: The soliton constant, a number or an expression in parameters.
    :param eps: 1 or -1 for a fixed signature, None for symbolic ``eps``.
    """

    f: Expr
    X: VectorField
    lam: Expr
    eps: int | None = None

    def __post_init__(self) -> None:
        if self.eps is not None and self.eps not in (1, -1):
            raise CandidateError(f"eps must be 1, -1 or symbolic, got {self.eps}")

    def _bind(self, value: Expr) -> Expr:
        return value if self.eps is None else value.bind({EPS: self.eps})

    def metric(self) -> Metric:
        return walker_metric(self.f, eps=self.eps)

    def field(self) -> VectorField:
        """The vector field with a numeric eps substituted."""
        return VectorField(self._bind(self.X.A), self._bind(self.X.B), self._bind(self.X.C))

    def constant(self) -> Expr:
        """The soliton constant with a numeric eps substituted."""
        return self._bind(self.lam)
