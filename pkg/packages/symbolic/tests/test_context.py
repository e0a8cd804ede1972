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

import pytest

from walker.symbolic import COORDINATES, EPS, Context, DeclarationError, FuncSymbol, Parameter, parse_declaration
from walker.symbolic.exceptions import UnknownIdentifierError


@pytest.mark.parametrize(
    "text, expected",
    [
        pytest.param("a:(t,x)", FuncSymbol("a", ("t", "x")), id="function"),
        pytest.param(" K : ( y ) ", FuncSymbol("K", ("y",)), id="whitespace"),
        pytest.param("g:(y,t)", FuncSymbol("g", ("t", "y")), id="deps-sorted"),
        pytest.param("c:()", FuncSymbol("c", ()), id="constant"),
        pytest.param("lambda:param", Parameter("lambda"), id="parameter"),
    ],
)
def test_parse_declaration(text: str, expected: object) -> None:
    assert parse_declaration(text) == expected


@pytest.mark.parametrize(
    "text",
    [
        pytest.param("a(t,x)", id="missing-colon"),
        pytest.param("a:(t,z)", id="unknown-coordinate"),
        pytest.param("a:params", id="bad-keyword"),
        pytest.param("1a:(t)", id="bad-name"),
    ],
)
def test_parse_declaration_rejects(text: str) -> None:
    with pytest.raises(DeclarationError):
        parse_declaration(text)


def test_eps_is_always_declared() -> None:
    context = Context()
    assert EPS in context
    assert context.get(EPS) == Parameter(EPS)
    assert context.declarations() == ["eps:param"]


def test_coordinates_cannot_be_shadowed() -> None:
    for name in COORDINATES:
        with pytest.raises(DeclarationError):
            Context.from_declarations([f"{name}:param"])


def test_conflicting_redeclaration() -> None:
    context = Context.from_declarations(["a:(t,x)"])
    assert context.declare("a", ["x", "t"]) == context
    with pytest.raises(DeclarationError):
        context.declare("a", ["t"])
    with pytest.raises(DeclarationError):
        context.declare_parameter("eps").declare("eps", ["t"])


def test_reserved_name() -> None:
    with pytest.raises(DeclarationError):
        Context.from_declarations(["D:(t)"])


def test_context_is_immutable() -> None:
    context = Context()
    extended = context.declare_parameter("lambda")
    assert "lambda" not in context
    assert "lambda" in extended
    assert extended.merge(Context.from_declarations(["K:(y)"])).declarations() == [
        "K:(y)",
        "eps:param",
        "lambda:param",
    ]


def test_function_lookup() -> None:
    context = Context.from_declarations(["a:(t,x)", "lambda:param"])
    assert context.function("a").deps == ("t", "x")
    assert [p.name for p in context.parameters] == ["eps", "lambda"]
    with pytest.raises(UnknownIdentifierError):
        context.function("lambda")
