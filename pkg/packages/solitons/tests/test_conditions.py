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

from walker.solitons import (
    Condition,
    ConditionSet,
    SolitonError,
    condition_shape,
    field_context,
    general_conditions,
    normalize,
)
from walker.symbolic import ONE, ZERO, Context, Expr, parse

LABELS = ["tt", "tx", "ty", "xx", "xy", "yy"]


@pytest.mark.parametrize(
    "value, factor, normalized",
    [
        pytest.param("2*x - 4*y", "2", "x - 2*y", id="integer-gcd"),
        pytest.param("-2*x + 4*y", "-2", "x - 2*y", id="negative-leader"),
        pytest.param("1/2*x + 1/4*y", "1/2", "x + 1/2*y", id="fractions"),
        pytest.param("eps*x + 2*eps*y", "eps", "x + 2*y", id="eps-factor"),
        pytest.param("-3*eps*lambda", "-3*eps", "lambda", id="single-term"),
        pytest.param("eps*x + y", "1", "eps*x + y", id="partial-eps"),
        pytest.param("0", "1", "0", id="zero"),
    ],
)
def test_normalize(expr: Callable[[str], Expr], value: str, factor: str, normalized: str) -> None:
    result = normalize(expr(value))
    assert result == (expr(factor), expr(normalized))
    assert result[0] * result[1] == expr(value)


def test_condition_from_component(expr: Callable[[str], Expr]) -> None:
    condition = Condition.from_component("xx", expr("2*eps*B_x - eps*lambda"))
    assert condition.raw == expr("2*eps*B_x - eps*lambda")
    assert condition.factor.symbol_names() == ["eps"]
    assert not condition.is_satisfied()
    assert Condition.from_component("tt", ZERO).is_satisfied()


def test_condition_set() -> None:
    conditions = ConditionSet.from_components([("tt", ZERO), ("ty", ONE)])
    assert len(conditions) == 2
    assert conditions.labels() == ["tt", "ty"]
    assert conditions["ty"].lhs == ONE
    assert not conditions.is_satisfied()
    assert conditions.remaining().labels() == ["ty"]
    assert ConditionSet().is_satisfied()
    with pytest.raises(KeyError):
        conditions["xy"]


def test_duplicate_labels() -> None:
    with pytest.raises(SolitonError, match="Duplicate condition labels: tt"):
        ConditionSet.from_components([("tt", ONE), ("tt", ZERO)])


def test_general_conditions(context: Context, expr: Callable[[str], Expr]) -> None:
    conditions = general_conditions(expr("f"), context)
    assert conditions.labels() == LABELS
    assert conditions["tt"].lhs == expr("C_t")
    assert conditions["tt"].factor == 2
    assert conditions["ty"].lhs == expr("A_t + C_y + f*C_t + 1/2*f_tt - lambda")
    assert conditions["xy"].raw == expr("eps*B_y + f*C_x + A_x + 1/2*f_tx")
    assert conditions["yy"].raw == expr(
        "A*f_t + B*f_x + C*f_y + 2*f*C_y + 2*A_y + 1/2*f*f_tt - 1/2*eps*f_xx - lambda*f"
    )


def test_strict_conditions_lack_time_derivatives() -> None:
    shape, shape_context = condition_shape("strict")
    context = field_context(shape_context)
    conditions = general_conditions(shape, context)
    assert conditions["ty"].raw == parse("A_t + C_y + f*C_t - lambda", context)
    assert conditions["xy"].raw == parse("eps*B_y + f*C_x + A_x", context)


def test_flat_metric_conditions(context: Context) -> None:
    conditions = general_conditions(ZERO, context, eps=1)
    expected = {
        "tt": "2*C_t",
        "tx": "B_t + C_x",
        "ty": "A_t + C_y - lambda",
        "xx": "2*B_x - lambda",
        "xy": "B_y + A_x",
        "yy": "2*A_y",
    }
    assert {condition.label: condition.raw for condition in conditions} == {
        label: parse(text, context) for label, text in expected.items()
    }
    assert conditions["yy"].lhs == parse("A_y", context)


def test_field_context_declares_components() -> None:
    context = field_context()
    assert [symbol.declaration() for symbol in context.functions] == ["A:(t,x,y)", "B:(t,x,y)", "C:(t,x,y)"]
