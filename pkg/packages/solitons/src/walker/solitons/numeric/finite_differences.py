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

"""Finite-difference versions of the metric derivatives, Christoffel symbols, Ricci tensor and Lie derivative.

Arrays carry the sample points on their first axis. A derivative index comes right after it, so ``dg[n, k, i, j]``
is ``d_k g_ij`` at point ``n`` and ``gamma[n, k, i, j]`` is ``G^k_ij``.
"""

from collections.abc import Callable, Sequence

import numpy as np
import numpy.typing as npt
import sympy

from walker.geometry import VectorField
from walker.symbolic import COORDINATES, Expr
from walker.symbolic.context import COORDINATE_SYMBOLS

from ..exceptions import NumericError

Array = npt.NDArray[np.float64]
PointFunction = Callable[[Array], Array]

# outer step of nested differences, in units of the inner step
OUTER_STEP = 10


def compile_expr(e: Expr) -> PointFunction:
    """Vectorised evaluation of an instantiated expression at an array of points of shape (n, 3).

    :raise UninstantiatedSymbolError: If a function symbol with dependencies is still present.
    :raise NumericError: If a parameter is still unbound.
    """
    e.require_instantiated()
    if e.symbol_names():
        raise NumericError(f"'{e}' still contains the parameters {', '.join(e.symbol_names())}")
    function = sympy.lambdify([COORDINATE_SYMBOLS[name] for name in COORDINATES], e.value, modules="numpy")

    def evaluate(points: Array) -> Array:
        value = function(points[:, 0], points[:, 1], points[:, 2])
        return np.broadcast_to(np.asarray(value, dtype=np.float64), points.shape[:1]).copy()

    return evaluate


def metric_function(f: Expr, eps: int) -> PointFunction:
    """The Walker metric of an instantiated ``f`` as a function returning arrays of shape (n, 3, 3)."""
    defining = compile_expr(f)

    def metric(points: Array) -> Array:
        g = np.zeros((len(points), 3, 3))
        g[:, 0, 2] = g[:, 2, 0] = 1.0
        g[:, 1, 1] = eps
        g[:, 2, 2] = defining(points)
        return g

    return metric


def field_function(X: VectorField) -> PointFunction:
    """The components of an instantiated vector field as a function returning arrays of shape (n, 3)."""
    components = [compile_expr(X[name]) for name in COORDINATES]

    def field(points: Array) -> Array:
        return np.stack([component(points) for component in components], axis=1)

    return field


def central_difference(function: PointFunction, points: Array, h: float) -> Array:
    """``(F(p + h e_k) - F(p - h e_k)) / 2h`` for every coordinate k, stacked on axis 1."""
    derivatives = []
    for k in range(3):
        shift = np.zeros(3)
        shift[k] = h
        derivatives.append((function(points + shift) - function(points - shift)) / (2 * h))
    return np.stack(derivatives, axis=1)


def richardson_difference(function: PointFunction, points: Array, h: float) -> Array:
    """Central differences at steps h and h/2 combined to cancel the h^2 error term."""
    coarse = central_difference(function, points, h)
    fine = central_difference(function, points, h / 2)
    return (4 * fine - coarse) / 3


def fd_metric_derivatives(f_inst: Expr, p: Sequence[float] | Array, h: float, eps: int = 1) -> Array:
    """Central differences of the Walker metric of ``f_inst``.

    :param p: A point (t, x, y), or an array of points of shape (n, 3).

    :return: ``dg[k, i, j] = d_k g_ij`` for a single point, with a leading point axis for an array of points.

    :raise UninstantiatedSymbolError: If ``f_inst`` still contains a function symbol.
    """
    points = np.asarray(p, dtype=np.float64)
    single = points.ndim == 1
    dg = central_difference(metric_function(f_inst, eps), np.atleast_2d(points), h)
    return dg[0] if single else dg


def fd_christoffel(metric: PointFunction, points: Array, h: float) -> Array:
    """``G^k_ij = 1/2 g^kl (d_i g_jl + d_j g_il - d_l g_ij)`` from central differences of the metric."""
    ginv = np.linalg.inv(metric(points))
    dg = central_difference(metric, points, h)
    lowered = np.einsum("nijl->nlij", dg) + np.einsum("njil->nlij", dg) - dg
    return 0.5 * np.einsum("nkl,nlij->nkij", ginv, lowered)


def fd_christoffel_derivatives(metric: PointFunction, points: Array, h: float) -> Array:
    """``dgamma[n, m, k, i, j] = d_m G^k_ij``, differentiating finite-difference Christoffel symbols.

    The outer differences use step ``OUTER_STEP * h`` with one Richardson refinement.
    """
    return richardson_difference(lambda q: fd_christoffel(metric, q, h), points, OUTER_STEP * h)


def ricci_from_connection(gamma: Array, dgamma: Array) -> Array:
    """``R_jk = d_i G^i_jk - d_j G^i_ik + G^i_ip G^p_jk - G^i_jp G^p_ik``."""
    return (
        np.einsum("niijk->njk", dgamma)
        - np.einsum("njiik->njk", dgamma)
        + np.einsum("niip,npjk->njk", gamma, gamma)
        - np.einsum("nijp,npik->njk", gamma, gamma)
    )


def fd_ricci(metric: PointFunction, points: Array, h: float) -> Array:
    return ricci_from_connection(fd_christoffel(metric, points, h), fd_christoffel_derivatives(metric, points, h))


def fd_lie_derivative(metric: PointFunction, field: PointFunction, points: Array, h: float) -> Array:
    """``(L_X g)_ij = X^k d_k g_ij + g_kj d_i X^k + g_ik d_j X^k`` from central differences."""
    g = metric(points)
    dg = central_difference(metric, points, h)
    X = field(points)
    dX = central_difference(field, points, h)
    return (
        np.einsum("nk,nkij->nij", X, dg)
        + np.einsum("nkj,nik->nij", g, dX)
        + np.einsum("nik,njk->nij", g, dX)
    )
