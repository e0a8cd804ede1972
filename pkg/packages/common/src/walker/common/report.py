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

import dataclasses
import json
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import Any, Protocol, runtime_checkable

from walker.common.exceptions import ReportError

REPORT_KEYS = ("command", "context", "result", "discrepancy_notes", "exit")


class ExitCode(IntEnum):
    SUCCESS = 0
    VERIFIED_FALSE = 1
    INPUT_ERROR = 2


class RenderStyle(str, Enum):
    """How expressions are spelled inside a report.

    GRAMMAR uses the explicit derivative form ``D[f;t,x]``, SUBSCRIPT uses the ``f_tx`` sugar.
    """

    GRAMMAR = "grammar"
    SUBSCRIPT = "subscript"


@runtime_checkable
class Renderable(Protocol):
    def to_string(self, style: RenderStyle = RenderStyle.GRAMMAR) -> str: ...


@dataclass
class Report:
    """Result of a single command, rendered with a fixed key order."""

    command: str
    context: list[str]
    result: dict[str, Any]
    discrepancy_notes: list[str] = field(default_factory=list)
    exit: ExitCode = ExitCode.SUCCESS

    def to_payload(self, style: RenderStyle = RenderStyle.GRAMMAR) -> dict[str, Any]:
        return {
            "command": self.command,
            "context": list(self.context),
            "result": render_value(self.result, style),
            "discrepancy_notes": list(self.discrepancy_notes),
            "exit": int(self.exit),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_payload(RenderStyle.GRAMMAR), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        payload = self.to_payload(RenderStyle.SUBSCRIPT)
        return "\n".join(_text_lines(payload, 0)) + "\n"


def render_value(value: Any, style: RenderStyle = RenderStyle.GRAMMAR) -> Any:
    """Converts a report payload into plain JSON-compatible values.

    Expressions are rendered through their ``to_string`` method, dataclasses field by field in declaration order.

    :raise ReportError: If a value has no known rendering.
    """
    if value is None or isinstance(value, (bool, int, float, str)) and not isinstance(value, Enum):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Renderable):
        return value.to_string(style)
    if isinstance(value, Mapping):
        return {str(key): render_value(item, style) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [render_value(item, style) for item in value]
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: render_value(getattr(value, f.name), style) for f in dataclasses.fields(value)}
    raise ReportError(f"Cannot render a value of type {type(value).__name__} in a report")


def _scalar_text(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _text_lines(value: Any, indent: int) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(item, indent + 1))
            elif isinstance(item, dict):
                lines.append(f"{pad}{key}: {{}}")
            elif isinstance(item, list):
                lines.append(f"{pad}{key}: []")
            else:
                lines.append(f"{pad}{key}: {_scalar_text(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}-")
                lines.extend(_text_lines(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar_text(item)}")
    else:
        lines.append(f"{pad}{_scalar_text(value)}")
    return lines
