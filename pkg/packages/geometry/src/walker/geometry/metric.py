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

import logging
from dataclasses import dataclass

from walker.symbolic import COORDINATES, EPS, ONE, ZERO, Context, Expr
from walker.symbolic.context import EPS_SYMBOL

from .exceptions import GeometryError
from .tensors import PAIRS, SymTensor2

logger = logging.getLogger("walker")


def sign_expr(eps: int | None) -> Expr:
    """``eps`` as an expression: the symbol when None, otherwise the numeric sign.

    :raise GeometryError: If ``eps`` is neither None, 1 nor -1.
    """
    if eps is None:
        return Expr(EPS_SYMBOL, canonical=True)
    if eps not in (1, -1):
        raise GeometryError(f"eps must be 1 or -1, got {eps}")
    return Expr.constant(eps)


@dataclass(frozen=True)
class Metric:
    """A Walker metric ``2 dt dy + eps dx^2 + f dy^2`` together with its verified inverse."""

    f: Expr
    g: SymTensor2
    ginv: SymTensor2
    eps: Expr

    def product(self) -> dict[str, Expr]:
        """Entries of the matrix product g.ginv, keyed by ordered index pair."""
        return {
            i + k: sum((self.g[i, j] * self.ginv[j, k] for j in COORDINATES), ZERO)
            for i in COORDINATES
            for k in COORDINATES
        }


def _unit_inverse(det: Expr) -> Expr:
    """Inverse of a determinant of the form ``q`` or ``q*eps``."""
    terms = det.terms()
    if len(terms) != 1 or any(atom != EPS_SYMBOL for atom, _ in terms[0].factors):
        raise GeometryError(f"Metric determinant '{det}' is not a nonzero constant multiple of a power of eps")
    # eps is its own inverse
    return det.scale(1 / terms[0].coefficient**2)


def inverse(g: SymTensor2) -> SymTensor2:
    """Inverse by cofactor expansion, for metrics whose determinant is a constant up to eps.

    :raise GeometryError: If the determinant is not invertible in closed form or the product is not the identity.
    """
    cofactor = {
        "tt": g["x", "x"] * g["y", "y"] - g["x", "y"] * g["x", "y"],
        "tx": g["t", "y"] * g["x", "y"] - g["t", "x"] * g["y", "y"],
        "ty": g["t", "x"] * g["x", "y"] - g["t", "y"] * g["x", "x"],
        "xx": g["t", "t"] * g["y", "y"] - g["t", "y"] * g["t", "y"],
        "xy": g["t", "y"] * g["t", "x"] - g["t", "t"] * g["x", "y"],
        "yy": g["t", "t"] * g["x", "x"] - g["t", "x"] * g["t", "x"],
    }
    det = g["t", "t"] * cofactor["tt"] + g["t", "x"] * cofactor["tx"] + g["t", "y"] * cofactor["ty"]
    if det.is_zero():
        raise GeometryError("Metric is degenerate")
    scale = _unit_inverse(det)
    return SymTensor2({key: cofactor[key] * scale for key in PAIRS})


def walker_metric(f: Expr, context: Context | None = None, eps: int | None = None) -> Metric:
    """Builds the Walker metric with defining function ``f``.

    :param f: The defining function, usually polynomial in y with coefficients depending on (t, x).
    :param context: When given, every function symbol in ``f`` must be declared in it.
    :param eps: 1 or -1 for a fixed signature; None keeps ``eps`` symbolic.

    :raise GeometryError: If ``f`` uses undeclared function symbols, ``eps`` is not a sign, or the inverse fails
        verification.
    """
    sign = sign_expr(eps)
    if eps is not None:
        f = f.bind({EPS: eps})
    if context is not None:
        undeclared = [s.declaration() for s in f.function_symbols() if context.get(s.name) != s]
        if undeclared:
            raise GeometryError(f"Function symbols {', '.join(undeclared)} are not declared in the context")

    g = SymTensor2({"tt": ZERO, "tx": ZERO, "ty": ONE, "xx": sign, "xy": ZERO, "yy": f})
    ginv = inverse(g)
    metric = Metric(f=f, g=g, ginv=ginv, eps=sign)
    for key, entry in metric.product().items():
        expected = ONE if key[0] == key[1] else ZERO
        if entry != expected:
            raise GeometryError(f"g.ginv has '{entry}' at {key}, expected {expected}")
    logger.debug(f"Built Walker metric for f = {f}")
    return metric
