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

import json
from dataclasses import dataclass
from unittest import TestCase

import pytest

from walker.common import ExitCode, RenderStyle, Report, ReportError, render_value


class Spelled:
    def __init__(self, grammar: str, subscript: str) -> None:
        self.grammar = grammar
        self.subscript = subscript

    def to_string(self, style: RenderStyle = RenderStyle.GRAMMAR) -> str:
        return self.grammar if style is RenderStyle.GRAMMAR else self.subscript


@dataclass
class Summary:
    max_abs_dev: float
    passed: bool


class TestReport(TestCase):
    def setUp(self) -> None:
        self.report = Report(
            command="geometry --f f --eps sym",
            context=["eps:param", "f:(t,x,y)"],
            result={"ricci": {"ty": Spelled("1/2*D[f;t,t]", "1/2*f_tt")}},
            discrepancy_notes=["a note"],
            exit=ExitCode.SUCCESS,
        )

    def test_key_order_is_fixed(self) -> None:
        payload = json.loads(self.report.to_json())
        self.assertEqual(["command", "context", "result", "discrepancy_notes", "exit"], list(payload))

    def test_json_uses_grammar_spelling(self) -> None:
        payload = json.loads(self.report.to_json())
        self.assertEqual("1/2*D[f;t,t]", payload["result"]["ricci"]["ty"])
        self.assertEqual(0, payload["exit"])

    def test_text_uses_subscript_spelling(self) -> None:
        text = self.report.to_text()
        self.assertIn("ty: 1/2*f_tt", text)
        self.assertIn("  - a note", text)
        self.assertTrue(text.endswith("exit: 0\n"))

    def test_rendering_is_byte_stable(self) -> None:
        self.assertEqual(self.report.to_json(), self.report.to_json())


@pytest.mark.parametrize(
    "value, expected",
    [
        pytest.param(ExitCode.VERIFIED_FALSE, 1, id="int-enum"),
        pytest.param(RenderStyle.SUBSCRIPT, "subscript", id="str-enum"),
        pytest.param((1, "a", None), [1, "a", None], id="tuple"),
        pytest.param(Summary(0.5, True), {"max_abs_dev": 0.5, "passed": True}, id="dataclass"),
        pytest.param({"b": 1, "a": 2}, {"b": 1, "a": 2}, id="mapping-keeps-order"),
    ],
)
def test_render_value(value: object, expected: object) -> None:
    rendered = render_value(value)
    assert rendered == expected
    if isinstance(expected, dict):
        assert list(rendered) == list(expected)


def test_render_value_rejects_unknown_types() -> None:
    with pytest.raises(ReportError):
        render_value(object())


def test_empty_containers_in_text() -> None:
    report = Report(command="c", context=[], result={})
    assert report.to_text() == "command: c\ncontext: []\nresult: {}\ndiscrepancy_notes: []\nexit: 0\n"
