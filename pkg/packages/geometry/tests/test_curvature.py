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

from collections.abc import Callable

import pytest

from walker.geometry import Metric, bianchi_defect, christoffel, ricci, riemann, scalar_curvature
from walker.symbolic import Context, Expr, parse

# Nonzero values of R(d_i, d_j) d_k along d_l for generic f, keyed "l|k,ij".
CURVATURE = {
    "t|x,xy": "-1/2*f_xx",
    "t|t,ty": "-1/2*f_tt",
    "t|x,ty": "-1/2*f_tx",
    "t|t,xy": "-1/2*f_tx",
    "t|y,ty": "-1/2*f*f_tt",
    "x|y,ty": "1/2*eps*f_tx",
    "y|y,ty": "1/2*f_tt",
    "t|y,xy": "-1/2*f*f_tx",
    "x|y,xy": "1/2*eps*f_xx",
    "y|y,xy": "1/2*f_tx",
}


def test_generic_curvature(context: Context, generic: Metric) -> None:
    curvature = riemann(generic, christoffel(generic))
    assert len(list(curvature)) == 27
    for key, value in curvature.items():
        expected = parse(CURVATURE[key], context) if key in CURVATURE else Expr(0)
        assert value == expected, key


def test_antisymmetry(generic: Metric) -> None:
    curvature = riemann(generic, christoffel(generic))
    for l in "txy":  # noqa: E741
        for k in "txy":
            for i in "txy":
                assert curvature[l, k, i, i].is_zero()
                for j in "txy":
                    assert curvature[l, k, i, j] == -curvature[l, k, j, i]


def test_first_bianchi_identity(generic: Metric) -> None:
    defect = bianchi_defect(riemann(generic, christoffel(generic)))
    assert len(defect) == 81
    assert all(value.is_zero() for value in defect.values())


def test_lowered_curvature(context: Context, generic: Metric) -> None:
    lowered = riemann(generic, christoffel(generic)).lowered(generic.g)
    assert len(lowered) == 27
    assert lowered["xyxy"] == parse("-1/2*f_xx", context)
    assert lowered["xyyx"] == parse("1/2*f_xx", context)
    assert lowered["tyyt"] == parse("1/2*f_tt", context)


def test_y_only_function_is_flat(metric_of: Callable[..., Metric]) -> None:
    metric = metric_of("alpha*y^2 + beta*y + gamma")
    assert riemann(metric, christoffel(metric)).is_zero()


def test_t_squared(metric_of: Callable[..., Metric]) -> None:
    metric = metric_of("t^2", 1)
    curvature = riemann(metric, christoffel(metric))
    assert curvature["t", "t", "t", "y"] == -1
    assert curvature["x", "t", "t", "y"].is_zero()
    assert curvature["y", "t", "t", "y"].is_zero()


RICCI = {"ty": "1/2*f_tt", "xy": "1/2*f_tx", "yy": "1/2*f*f_tt - 1/2*eps*f_xx"}


def test_generic_ricci(context: Context, generic: Metric) -> None:
    rho = ricci(generic, riemann(generic, christoffel(generic)))
    for key, value in rho.items():
        expected = parse(RICCI[key], context) if key in RICCI else Expr(0)
        assert value == expected, key


@pytest.mark.parametrize(
    "f, eps, expected",
    [
        pytest.param("x^2", 1, {"yy": "-1"}, id="x-squared"),
        pytest.param("x^2", -1, {"yy": "1"}, id="x-squared-timelike"),
        pytest.param("t^2", 1, {"ty": "1", "yy": "t^2"}, id="t-squared"),
        pytest.param("alpha*y^3 + y", None, {}, id="y-only"),
        pytest.param("t*x*y", None, {"xy": "1/2*y"}, id="mixed"),
    ],
)
def test_ricci_examples(
    context: Context, metric_of: Callable[..., Metric], f: str, eps: int | None, expected: dict[str, str]
) -> None:
    metric = metric_of(f, eps)
    rho = ricci(metric, riemann(metric, christoffel(metric)))
    assert rho.as_dict(nonzero=True) == {key: parse(value, context) for key, value in expected.items()}


@pytest.mark.parametrize(
    "f, expected",
    [
        pytest.param("f", "f_tt", id="generic"),
        pytest.param("t^2", "2", id="t-squared"),
        pytest.param("alpha*x^2*y^2 + x*y", "0", id="strict"),
    ],
)
def test_scalar_curvature(context: Context, metric_of: Callable[..., Metric], f: str, expected: str) -> None:
    metric = metric_of(f)
    rho = ricci(metric, riemann(metric, christoffel(metric)))
    assert scalar_curvature(metric, rho) == parse(expected, context)
