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

import numpy as np
import pytest

from walker.geometry import VectorField
from walker.solitons.exceptions import NumericError
from walker.solitons.numeric import fd_christoffel, fd_lie_derivative, fd_metric_derivatives, fd_ricci, metric_function
from walker.solitons.numeric.finite_differences import compile_expr, field_function
from walker.symbolic import Context, Expr, UninstantiatedSymbolError, parse

CONTEXT = Context.from_declarations(["f:(t,x,y)", "alpha:param"])
POINTS = np.array([[1.0, 2.0, 3.0], [-0.5, 0.25, 1.5], [1.75, -1.0, -2.0]])


def expr(text: str) -> Expr:
    return parse(text, CONTEXT)


def test_compile_broadcasts_constants() -> None:
    np.testing.assert_array_equal(compile_expr(expr("3/2"))(POINTS), [1.5, 1.5, 1.5])
    np.testing.assert_allclose(compile_expr(expr("t*x^2 - y"))(POINTS), [1.0, -1.53125, 3.75])


@pytest.mark.parametrize(
    "text, error",
    [
        pytest.param("alpha*t", NumericError, id="parameter"),
        pytest.param("f + t", UninstantiatedSymbolError, id="function"),
    ],
)
def test_compile_rejects_symbols(text: str, error: type[Exception]) -> None:
    with pytest.raises(error):
        compile_expr(expr(text))


def test_metric_derivatives_at_a_point() -> None:
    dg = fd_metric_derivatives(expr("t^2*y + x^2"), (1.0, 2.0, 3.0), 1e-4)
    expected = np.zeros((3, 3, 3))
    expected[:, 2, 2] = [6.0, 4.0, 1.0]
    np.testing.assert_allclose(dg, expected, atol=1e-6)


def test_metric_derivatives_at_many_points() -> None:
    dg = fd_metric_derivatives(expr("y^3"), POINTS, 1e-4, eps=-1)
    assert dg.shape == (3, 3, 3, 3)
    np.testing.assert_allclose(dg[:, 2, 2, 2], 3 * POINTS[:, 2] ** 2, rtol=1e-7)


def test_christoffel_of_t_squared() -> None:
    gamma = fd_christoffel(metric_function(expr("t^2"), 1), POINTS, 1e-4)
    t = POINTS[:, 0]
    expected = np.zeros((3, 3, 3, 3))
    expected[:, 0, 0, 2] = expected[:, 0, 2, 0] = t
    expected[:, 0, 2, 2] = t**3
    expected[:, 2, 2, 2] = -t
    np.testing.assert_allclose(gamma, expected, atol=1e-6)


def test_ricci_of_t_squared() -> None:
    rho = fd_ricci(metric_function(expr("t^2"), 1), POINTS, 1e-4)
    expected = np.zeros((3, 3, 3))
    expected[:, 0, 2] = expected[:, 2, 0] = 1.0
    expected[:, 2, 2] = POINTS[:, 0] ** 2
    np.testing.assert_allclose(rho, expected, atol=1e-6)


def test_lie_derivative_of_scaling_field() -> None:
    field = field_function(VectorField(expr("t"), expr("1/2*x"), expr("0")))
    lie = fd_lie_derivative(metric_function(expr("0"), 1), field, POINTS, 1e-4)
    expected = np.broadcast_to(np.array([[0.0, 0.0, 1.0], [0.0, 1.0, 0.0], [1.0, 0.0, 0.0]]), (3, 3, 3))
    np.testing.assert_allclose(lie, expected, atol=1e-9)
