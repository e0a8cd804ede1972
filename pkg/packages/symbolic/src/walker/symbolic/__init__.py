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

from .context import COORDINATES, EPS, Context, FuncSymbol, Parameter, parse_declaration
from .exceptions import (
    DeclarationError,
    DependencyError,
    EvaluationError,
    ExprError,
    ExprSyntaxError,
    UnboundParameterError,
    UninstantiatedSymbolError,
    UnknownIdentifierError,
)
from .expr import (
    ONE,
    ZERO,
    Expr,
    add,
    canonicalize,
    differentiate,
    equals,
    evaluate,
    is_zero,
    mul,
    neg,
    scale,
    substitute,
)
from .generators import random_polynomial, random_rational
from .parser import parse

__all__ = [
    "COORDINATES",
    "Context",
    "DeclarationError",
    "DependencyError",
    "EPS",
    "EvaluationError",
    "Expr",
    "ExprError",
    "ExprSyntaxError",
    "FuncSymbol",
    "ONE",
    "Parameter",
    "UnboundParameterError",
    "UninstantiatedSymbolError",
    "UnknownIdentifierError",
    "ZERO",
    "add",
    "canonicalize",
    "differentiate",
    "equals",
    "evaluate",
    "is_zero",
    "mul",
    "neg",
    "parse",
    "parse_declaration",
    "random_polynomial",
    "random_rational",
    "scale",
    "substitute",
]
