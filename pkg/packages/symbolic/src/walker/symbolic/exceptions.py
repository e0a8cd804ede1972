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

from walker.common.exceptions import WalkerError


class ExprError(WalkerError):
    """Base class for errors raised while building or using expressions."""


class ExprSyntaxError(ExprError):
    """Raised when expression text does not follow the expression grammar."""

    def __init__(self, message: str, text: str, position: int) -> None:
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text[:position]}>>>{text[position:]}")


class UnknownIdentifierError(ExprError):
    """Raised when an identifier is neither a coordinate nor declared in the context."""

    def __init__(self, name: str, position: int | None = None) -> None:
        self.name = name
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"Unknown identifier '{name}'{where}; declare it with 'name:(deps)' or 'name:param'")


class DeclarationError(ExprError):
    """Raised for malformed or conflicting declarations."""


class DependencyError(ExprError):
    """Raised when an expression uses a coordinate that a function symbol was declared not to depend on."""


class EvaluationError(ExprError):
    """Raised when an expression cannot be folded to a number."""


class UnboundParameterError(EvaluationError):
    """Raised when a parameter has no value at evaluation time."""


class UninstantiatedSymbolError(EvaluationError):
    """Raised when a function symbol or one of its derivatives is still present at evaluation time."""
