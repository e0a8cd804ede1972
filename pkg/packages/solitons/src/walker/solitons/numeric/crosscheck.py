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

"""Symbolic tensors evaluated at sample points, compared with their finite-difference counterparts.

A deviation passes when it is at most ``tolerance * max(1, scale / 10)``, where ``scale`` is the largest magnitude
among the reference value and the quantities combined into the finite-difference value at that point.
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from walker.geometry import PAIRS, Connection, SymTensor2, christoffel, ricci, riemann, walker_metric
from walker.symbolic import COORDINATES, EPS, Expr

from ..candidate import SolitonCandidate
from ..exceptions import NumericError
from ..residual import residual
from .finite_differences import (
    Array,
    central_difference,
    compile_expr,
    fd_christoffel,
    fd_christoffel_derivatives,
    fd_lie_derivative,
    field_function,
    metric_function,
    ricci_from_connection,
)
from .plan import Point, SamplePlan

logger = logging.getLogger("walker")

# deviations below this are rounding noise and carry no convergence information
NOISE_FLOOR = 1e-12

TENSORS = ("christoffel", "ricci")


@dataclass(frozen=True)
class TensorDeviation:
    """Largest deviation of a finite-difference tensor from its symbolic value over the sample points."""

    tensor: str
    max_abs_dev: float
    max_rel_dev: float
    worst_point: Point
    h: float
    tolerance: float
    passed: bool


@dataclass(frozen=True)
class GeometryCrosscheck:
    f: Expr
    eps: int
    points: int
    seed: int
    christoffel: TensorDeviation
    ricci: TensorDeviation
    passed: bool


@dataclass(frozen=True)
class ResidualCrosscheck:
    """Numeric soliton residual against the symbolic one.

    ``components`` holds the largest magnitude of each finite-difference residual component over the points.
    """

    components: dict[str, float]
    deviation: TensorDeviation
    symbolic_is_soliton: bool
    numeric_is_soliton: bool
    agrees: bool
    passed: bool


def _require_sign(eps: int | None) -> int:
    if eps is None or eps not in (1, -1):
        raise NumericError(f"Numeric checks need eps to be 1 or -1, got {eps}")
    return eps


def _pairs(tensor: SymTensor2) -> Callable[[Array], Array]:
    compiled = {pair: compile_expr(tensor[pair]) for pair in PAIRS}

    def evaluate(points: Array) -> Array:
        values = np.zeros((len(points), 3, 3))
        for pair, function in compiled.items():
            i, j = (COORDINATES.index(c) for c in pair)
            values[:, i, j] = values[:, j, i] = function(points)
        return values

    return evaluate


def _connection(connection: Connection) -> Callable[[Array], Array]:
    compiled = {
        (k, pair): compile_expr(connection[k, pair[0], pair[1]]) for k in COORDINATES for pair in PAIRS
    }

    def evaluate(points: Array) -> Array:
        values = np.zeros((len(points), 3, 3, 3))
        for (k, pair), function in compiled.items():
            i, j = (COORDINATES.index(c) for c in pair)
            values[:, COORDINATES.index(k), i, j] = values[:, COORDINATES.index(k), j, i] = function(points)
        return values

    return evaluate


def _largest(values: Array) -> Array:
    """Largest magnitude per point."""
    return np.abs(values.reshape(len(values), -1)).max(axis=1)


def _per_point(reference: Array, approximation: Array) -> Array:
    return _largest(reference - approximation)


def _deviation(
    tensor: str, reference: Array, approximation: Array, scale: Array, points: Array, plan: SamplePlan
) -> TensorDeviation:
    deviation = _per_point(reference, approximation)
    allowed = plan.tolerance * np.maximum(1.0, scale / 10)
    worst = int(np.argmax(deviation / allowed))
    relative = deviation / np.maximum(_largest(reference), 1.0)
    return TensorDeviation(
        tensor=tensor,
        max_abs_dev=float(deviation.max()),
        max_rel_dev=float(relative.max()),
        worst_point=(float(points[worst, 0]), float(points[worst, 1]), float(points[worst, 2])),
        h=plan.step,
        tolerance=plan.tolerance,
        passed=bool(np.all(deviation <= allowed)),
    )


class _Oracle:
    """Symbolic and finite-difference geometry of one instantiated Walker metric."""

    def __init__(self, f: Expr, eps: int) -> None:
        f = f.bind({EPS: eps})
        m = walker_metric(f, eps=eps)
        connection = christoffel(m)
        self.f = f
        self.metric = metric_function(f, eps)
        self.christoffel = _connection(connection)
        self.ricci = _pairs(ricci(m, riemann(m, connection)))

    def christoffel_pair(self, points: Array, h: float) -> tuple[Array, Array, Array]:
        """Reference values, finite-difference values and scale of the Christoffel symbols."""
        reference = self.christoffel(points)
        approximation = fd_christoffel(self.metric, points, h)
        dg = central_difference(self.metric, points, h)
        inputs = _largest(self.metric(points)) * np.maximum(1.0, _largest(dg))
        return reference, approximation, np.maximum(_largest(reference), inputs)

    def ricci_pair(self, points: Array, h: float) -> tuple[Array, Array, Array]:
        """Reference values, finite-difference values and scale of the Ricci tensor."""
        reference = self.ricci(points)
        gamma = fd_christoffel(self.metric, points, h)
        dgamma = fd_christoffel_derivatives(self.metric, points, h)
        scale = np.maximum.reduce([_largest(reference), _largest(gamma), _largest(dgamma)])
        return reference, ricci_from_connection(gamma, dgamma), scale

    def pair(self, tensor: str, points: Array, h: float) -> tuple[Array, Array, Array]:
        if tensor == "christoffel":
            return self.christoffel_pair(points, h)
        if tensor == "ricci":
            return self.ricci_pair(points, h)
        raise NumericError(f"Unknown tensor '{tensor}', expected one of {', '.join(TENSORS)}")


def crosscheck_geometry(f_inst: Expr, eps: int, plan: SamplePlan | None = None) -> GeometryCrosscheck:
    """Christoffel symbols and Ricci tensor of the Walker metric of ``f_inst`` against finite differences.

    Deviations beyond the tolerance are reported, not raised.

    :raise NumericError: If ``eps`` is not 1 or -1 or ``f_inst`` has unbound parameters.
    :raise UninstantiatedSymbolError: If ``f_inst`` still contains a function symbol.
    """
    plan = plan or SamplePlan()
    oracle = _Oracle(f_inst, _require_sign(eps))
    points = plan.sample()
    christoffel_deviation = _deviation("christoffel", *oracle.christoffel_pair(points, plan.step), points, plan)
    ricci_deviation = _deviation("ricci", *oracle.ricci_pair(points, plan.step), points, plan)
    logger.debug(
        f"Crosscheck of f = {oracle.f} at {len(points)} points: christoffel {christoffel_deviation.max_abs_dev:.3g}, "
        f"ricci {ricci_deviation.max_abs_dev:.3g}"
    )
    return GeometryCrosscheck(
        f=oracle.f,
        eps=eps,
        points=len(points),
        seed=plan.seed,
        christoffel=christoffel_deviation,
        ricci=ricci_deviation,
        passed=christoffel_deviation.passed and ricci_deviation.passed,
    )


def crosscheck_residual(cand: SolitonCandidate, plan: SamplePlan | None = None) -> ResidualCrosscheck:
    """The soliton residual from finite differences against the symbolic residual.

    :raise NumericError: If eps or the soliton constant is not a number, or a parameter is unbound.
    :raise UninstantiatedSymbolError: If ``f`` or a field component still contains a function symbol.
    """
    plan = plan or SamplePlan()
    eps = _require_sign(cand.eps)
    lam = cand.constant().as_rational()
    if lam is None:
        raise NumericError(f"Numeric checks need a numeric soliton constant, got '{cand.lam}'")
    oracle = _Oracle(cand.f, eps)
    X = cand.field()
    field = field_function(X)
    symbolic = residual(cand)
    points = plan.sample()
    h = plan.step

    reference = _pairs(symbolic)(points)
    gamma = fd_christoffel(oracle.metric, points, h)
    dgamma = fd_christoffel_derivatives(oracle.metric, points, h)
    g = oracle.metric(points)
    approximation = fd_lie_derivative(oracle.metric, field, points, h) + ricci_from_connection(gamma, dgamma)
    approximation = approximation - float(lam) * g
    dg = central_difference(oracle.metric, points, h)
    dX = central_difference(field, points, h)
    scale = np.maximum.reduce(
        [
            _largest(reference),
            _largest(gamma),
            _largest(dgamma),
            _largest(field(points)) * _largest(dg),
            _largest(g) * _largest(dX),
        ]
    )
    deviation = _deviation("residual", reference, approximation, scale, points, plan)
    allowed = plan.tolerance * np.maximum(1.0, scale / 10)
    numeric_is_soliton = bool(np.all(_largest(approximation) <= allowed))
    symbolic_is_soliton = symbolic.is_zero()
    components = {
        pair: float(np.abs(approximation[:, COORDINATES.index(pair[0]), COORDINATES.index(pair[1])]).max())
        for pair in PAIRS
    }
    agrees = numeric_is_soliton == symbolic_is_soliton
    return ResidualCrosscheck(
        components=components,
        deviation=deviation,
        symbolic_is_soliton=symbolic_is_soliton,
        numeric_is_soliton=numeric_is_soliton,
        agrees=agrees,
        passed=agrees and deviation.passed,
    )


def convergence_ratio(f: Expr, eps: int, plan: SamplePlan | None = None, tensor: str = "christoffel") -> float:
    """Median over the points of ``dev(h/2) / dev(h)``; about 1/4 for second-order differences.

    Points whose deviation at step h is rounding noise are left out.

    :raise NumericError: If ``tensor`` is unknown or no point has a measurable deviation.
    """
    plan = plan or SamplePlan()
    oracle = _Oracle(f, _require_sign(eps))
    points = plan.sample()
    halved = plan.with_step(plan.step / 2)
    coarse = _per_point(*oracle.pair(tensor, points, plan.step)[:2])
    fine = _per_point(*oracle.pair(tensor, points, halved.step)[:2])
    measurable = coarse > NOISE_FLOOR
    if not measurable.any():
        raise NumericError(f"No point has a measurable {tensor} deviation for f = {oracle.f}")
    return float(np.median(fine[measurable] / coarse[measurable]))
