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

"""Component storage for the tensors of a three-dimensional chart.

Every independent slot is stored explicitly, zero or not. Keys follow the report format: ``"ty"`` for a symmetric pair,
``"t,ty"`` for the connection coefficient of the t direction on the pair (t, y), and ``"l|k,ij"`` for the l-component
of R(d_i, d_j) d_k with i before j.
"""

from collections.abc import Callable, Iterator, Mapping
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from walker.symbolic import COORDINATES, ZERO, Expr
from walker.symbolic.context import coordinate_index

from .exceptions import GeometryError

PAIRS: tuple[str, ...] = tuple(i + j for i, j in combinations_with_replacement(COORDINATES, 2))
ORDERED_PAIRS: tuple[str, ...] = tuple(i + j for i, j in combinations(COORDINATES, 2))


def pair_key(i: str, j: str) -> str:
    return i + j if coordinate_index(i) <= coordinate_index(j) else j + i


def _check_keys(entries: Mapping[str, Expr], expected: tuple[str, ...], kind: str) -> None:
    if set(entries) != set(expected):
        missing = sorted(set(expected) - set(entries))
        extra = sorted(set(entries) - set(expected))
        raise GeometryError(f"{kind} needs exactly the slots {list(expected)}; missing {missing}, unexpected {extra}")


class _Components:
    KEYS: tuple[str, ...] = ()

    def __init__(self, entries: Mapping[str, Expr]) -> None:
        _check_keys(entries, self.KEYS, type(self).__name__)
        self._entries = {key: entries[key] for key in self.KEYS}

    def __iter__(self) -> Iterator[str]:
        return iter(self.KEYS)

    def items(self) -> Iterator[tuple[str, Expr]]:
        return iter(self._entries.items())

    def as_dict(self, nonzero: bool = False) -> dict[str, Expr]:
        return {key: value for key, value in self._entries.items() if not (nonzero and value.is_zero())}

    def is_zero(self) -> bool:
        return all(value.is_zero() for value in self._entries.values())

    def map(self, function: Callable[[Expr], Expr]) -> "_Components":
        return type(self)({key: function(value) for key, value in self._entries.items()})

    def __eq__(self, other: object) -> bool:
        return type(other) is type(self) and self._entries == other._entries  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash(tuple(self._entries.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{key}: {value}" for key, value in self.as_dict(nonzero=True).items())
        return f"{type(self).__name__}({{{inner}}})"


class SymTensor2(_Components):
    """Symmetric covariant 2-tensor, one entry per unordered coordinate pair."""

    KEYS = PAIRS

    @classmethod
    def build(cls, component: Callable[[str, str], Expr]) -> "SymTensor2":
        return cls({i + j: component(i, j) for i, j in combinations_with_replacement(COORDINATES, 2)})

    @classmethod
    def zero(cls) -> "SymTensor2":
        return cls({key: ZERO for key in PAIRS})

    def __getitem__(self, key: str | tuple[str, str]) -> Expr:
        i, j = key
        return self._entries[pair_key(i, j)]

    def __add__(self, other: "SymTensor2") -> "SymTensor2":
        return SymTensor2({key: self._entries[key] + other._entries[key] for key in PAIRS})

    def __sub__(self, other: "SymTensor2") -> "SymTensor2":
        return SymTensor2({key: self._entries[key] - other._entries[key] for key in PAIRS})

    def scale(self, factor: Expr) -> "SymTensor2":
        return SymTensor2({key: factor * value for key, value in self._entries.items()})


class Connection(_Components):
    """Christoffel symbols, symmetric in the lower pair: 18 independent slots."""

    KEYS = tuple(f"{k},{pair}" for k in COORDINATES for pair in PAIRS)

    def __getitem__(self, key: tuple[str, str, str]) -> Expr:
        k, i, j = key
        return self._entries[f"{k},{pair_key(i, j)}"]

    def covariant_derivative(self, i: str, j: str) -> dict[str, Expr]:
        """Components of the covariant derivative of d_j along d_i."""
        return {k: self[k, i, j] for k in COORDINATES}


class CurvatureTensor(_Components):
    """The (1,3) curvature tensor, antisymmetric in its last pair: 27 value slots."""

    KEYS = tuple(f"{l}|{k},{pair}" for l in COORDINATES for k in COORDINATES for pair in ORDERED_PAIRS)  # noqa: E741

    def __getitem__(self, key: tuple[str, str, str, str]) -> Expr:
        """The l-component of R(d_i, d_j) d_k for ``key = (l, k, i, j)``."""
        l, k, i, j = key  # noqa: E741
        if i == j:
            return ZERO
        if coordinate_index(i) < coordinate_index(j):
            return self._entries[f"{l}|{k},{i}{j}"]
        return -self._entries[f"{l}|{k},{j}{i}"]

    def lowered(self, g: SymTensor2) -> dict[str, Expr]:
        """Components g(R(d_i, d_j) d_k, d_l), keyed ``"ijkl"`` with i before j."""
        lowered = {}
        for pair in ORDERED_PAIRS:
            i, j = pair
            for k in COORDINATES:
                for l in COORDINATES:  # noqa: E741
                    lowered[f"{i}{j}{k}{l}"] = sum((self[m, k, i, j] * g[m, l] for m in COORDINATES), ZERO)
        return lowered
