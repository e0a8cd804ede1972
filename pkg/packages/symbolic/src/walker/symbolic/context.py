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

"""Declarations of coordinates, parameters and function symbols."""

import re
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

import sympy

from .exceptions import DeclarationError, UnknownIdentifierError

COORDINATES: tuple[str, ...] = ("t", "x", "y")
COORDINATE_SYMBOLS: dict[str, sympy.Symbol] = {name: sympy.Symbol(name) for name in COORDINATES}

EPS = "eps"
EPS_SYMBOL = sympy.Symbol(EPS)

# Spelled specially by the expression grammar.
RESERVED_NAMES = frozenset({"D"})

_IDENTIFIER = r"[A-Za-z][A-Za-z0-9_]*"
_DECLARATION = re.compile(rf"^\s*(?P<name>{_IDENTIFIER})\s*:\s*(?:(?P<param>param)|\((?P<deps>[^)]*)\))\s*$")


def coordinate_index(name: str) -> int:
    return COORDINATES.index(name)


@dataclass(frozen=True)
class Parameter:
    name: str

    @property
    def symbol(self) -> sympy.Symbol:
        return sympy.Symbol(self.name)

    def declaration(self) -> str:
        return f"{self.name}:param"


@dataclass(frozen=True)
class FuncSymbol:
    """A function of a subset of the coordinates.

    A function symbol without dependencies is a constant and is represented by a plain symbol.
    """

    name: str
    deps: tuple[str, ...] = field(default=COORDINATES)

    def __post_init__(self) -> None:
        unknown = [dep for dep in self.deps if dep not in COORDINATES]
        if unknown:
            raise DeclarationError(f"Function symbol '{self.name}' depends on unknown coordinates {unknown}")
        object.__setattr__(self, "deps", tuple(sorted(set(self.deps), key=coordinate_index)))

    @property
    def applied(self) -> sympy.Expr:
        if not self.deps:
            return sympy.Symbol(self.name)
        return sympy.Function(self.name)(*(COORDINATE_SYMBOLS[dep] for dep in self.deps))

    def declaration(self) -> str:
        return f"{self.name}:({','.join(self.deps)})"


Declaration = Parameter | FuncSymbol


def parse_declaration(text: str) -> Declaration:
    """Parses ``name:(deps)`` or ``name:param``.

    :param text: Declaration text, e.g. ``a:(t,x)``, ``K:(y)``, ``c:()`` or ``lambda:param``.

    :raise DeclarationError: If the text is not a declaration.
    """
    match = _DECLARATION.match(text)
    if match is None:
        raise DeclarationError(f"Malformed declaration '{text}'; expected 'name:(deps)' or 'name:param'")
    name = match.group("name")
    if match.group("param"):
        return Parameter(name)
    deps = [dep.strip() for dep in match.group("deps").split(",") if dep.strip()]
    return FuncSymbol(name, tuple(deps))


class Context:
    """Immutable table of declarations.

    Coordinates are always in scope and ``eps`` is always declared as a parameter. Methods that add declarations
    return a new context.
    """

    __slots__ = ("_declarations",)

    def __init__(self, declarations: Iterable[Declaration] = ()) -> None:
        table: dict[str, Declaration] = {EPS: Parameter(EPS)}
        for declaration in declarations:
            _check_name(declaration.name)
            existing = table.get(declaration.name)
            if existing is not None and existing != declaration:
                raise DeclarationError(
                    f"'{declaration.name}' is already declared as '{existing.declaration()}', "
                    f"cannot redeclare it as '{declaration.declaration()}'"
                )
            table[declaration.name] = declaration
        self._declarations = table

    @classmethod
    def from_declarations(cls, texts: Iterable[str]) -> "Context":
        return cls(parse_declaration(text) for text in texts)

    def declare(self, name: str, deps: Iterable[str]) -> "Context":
        return Context([*self, FuncSymbol(name, tuple(deps))])

    def declare_parameter(self, name: str) -> "Context":
        return Context([*self, Parameter(name)])

    def merge(self, other: "Context") -> "Context":
        return Context([*self, *other])

    def __iter__(self) -> Iterator[Declaration]:
        return iter(self._declarations.values())

    def __contains__(self, name: object) -> bool:
        return name in self._declarations

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Context) and self._declarations == other._declarations

    def __hash__(self) -> int:
        return hash(tuple(self._declarations.values()))

    def __repr__(self) -> str:
        return f"Context({self.declarations()})"

    def get(self, name: str) -> Declaration | None:
        return self._declarations.get(name)

    def function(self, name: str) -> FuncSymbol:
        """
        :raise UnknownIdentifierError: If ``name`` is not a declared function symbol.
        """
        declaration = self._declarations.get(name)
        if not isinstance(declaration, FuncSymbol):
            raise UnknownIdentifierError(name)
        return declaration

    @property
    def functions(self) -> list[FuncSymbol]:
        return [d for d in self._declarations.values() if isinstance(d, FuncSymbol)]

    @property
    def parameters(self) -> list[Parameter]:
        return [d for d in self._declarations.values() if isinstance(d, Parameter)]

    def declarations(self) -> list[str]:
        """Declaration strings sorted by name, used to echo the context in reports."""
        return [self._declarations[name].declaration() for name in sorted(self._declarations)]


def _check_name(name: str) -> None:
    if name in COORDINATES:
        raise DeclarationError(f"Coordinate '{name}' cannot be redeclared")
    if name in RESERVED_NAMES:
        raise DeclarationError(f"'{name}' is reserved by the expression grammar")
    if not re.fullmatch(_IDENTIFIER, name) or name.endswith("_"):
        raise DeclarationError(f"'{name}' is not a valid identifier")
