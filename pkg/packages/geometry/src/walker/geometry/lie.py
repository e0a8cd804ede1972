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
from fractions import Fraction

from walker.symbolic import COORDINATES, ZERO, Expr

from .metric import Metric
from .tensors import SymTensor2


@dataclass(frozen=True)
class VectorField:
    """``A d_t + B d_x + C d_y``."""

    A: Expr = ZERO
    B: Expr = ZERO
    C: Expr = ZERO

    def __getitem__(self, coordinate: str) -> Expr:
        return dict(zip(COORDINATES, (self.A, self.B, self.C)))[coordinate]

    def __add__(self, other: "VectorField") -> "VectorField":
        return VectorField(self.A + other.A, self.B + other.B, self.C + other.C)

    def scale(self, factor: Fraction | int) -> "VectorField":
        return VectorField(self.A.scale(factor), self.B.scale(factor), self.C.scale(factor))

    def apply(self, h: Expr) -> Expr:
        """The directional derivative X(h)."""
        return self.A * h.differentiate("t") + self.B * h.differentiate("x") + self.C * h.differentiate("y")

    def is_zero(self) -> bool:
        return self.A.is_zero() and self.B.is_zero() and self.C.is_zero()


def lie_derivative_metric(m: Metric, X: VectorField) -> SymTensor2:
    """``(L_X g)_ij = X^k d_k g_ij + g_kj d_i X^k + g_ik d_j X^k``."""

    def component(i: str, j: str) -> Expr:
        value = X.apply(m.g[i, j])
        for k in COORDINATES:
            value = value + m.g[k, j] * X[k].differentiate(i) + m.g[i, k] * X[k].differentiate(j)
        return value

    return SymTensor2.build(component)
