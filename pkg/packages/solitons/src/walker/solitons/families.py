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

"""Closed-form vector fields for four shapes of the defining function, and the constraints they leave behind.

Every family shares ``B = lambda/2 x + H`` and ``C = -eps H_t x + K``; the families differ in the shape of ``f`` and
in ``A``. A constructed field carries no validity claim: the residual decides.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum

from walker.geometry import VectorField
from walker.geometry.metric import sign_expr
from walker.symbolic import COORDINATES, ZERO, Context, DependencyError, Expr, FuncSymbol, Parameter

from .candidate import SolitonCandidate, soliton_constant, with_soliton_constant
from .conditions import ConditionSet
from .exceptions import CandidateError, FamilyError
from .residual import residual

logger = logging.getLogger("walker")


class Family(str, Enum):
    """Shapes of the defining function.

    quadratic: ``a(t,x) y^2 + b(t,x) y + d(t,x)``; quadratic-y: ``a(t) y^2 + b(t) y + d`` with a constant ``d``;
    flat: ``alpha y^2 + beta y + gamma``; strict: ``a(x) y^2 + b(x) y + d(x)``.
    """

    QUADRATIC = "quadratic"
    QUADRATIC_Y = "quadratic-y"
    FLAT = "flat"
    STRICT = "strict"


class Reading(str, Enum):
    DISPLAYED = "displayed"
    ALTERNATE = "alternate"


_FIELD_FUNCTIONS: dict[str, tuple[str, ...]] = {"H": ("t", "y"), "K": ("y",)}

FUNCTIONS: dict[Family, dict[str, tuple[str, ...]]] = {
    Family.QUADRATIC: {**_FIELD_FUNCTIONS, "N": ("x", "y"), "a": ("t", "x"), "b": ("t", "x"), "d": ("t", "x")},
    Family.QUADRATIC_Y: {**_FIELD_FUNCTIONS, "N": ("x", "y"), "a": ("t",), "b": ("t",), "d": ()},
    Family.FLAT: {**_FIELD_FUNCTIONS, "F": ("x", "y")},
    Family.STRICT: {**_FIELD_FUNCTIONS, "N": ("x", "y"), "a": ("x",), "b": ("x",), "d": ("x",)},
}

PARAMETERS: dict[Family, tuple[str, ...]] = {
    Family.QUADRATIC: (),
    Family.QUADRATIC_Y: (),
    Family.FLAT: ("alpha", "beta", "gamma", "delta"),
    Family.STRICT: (),
}

READINGS: dict[Family, tuple[Reading, ...]] = {
    Family.QUADRATIC: (Reading.DISPLAYED, Reading.ALTERNATE),
    Family.QUADRATIC_Y: (Reading.DISPLAYED,),
    Family.FLAT: (Reading.DISPLAYED, Reading.ALTERNATE),
    Family.STRICT: (Reading.DISPLAYED,),
}

# Alternative spellings accepted by parse_family
FAMILY_ALIASES: dict[str, Family] = {"theorem1": Family.QUADRATIC}


def parse_family(name: str | Family) -> Family:
    """
    :raise FamilyError: If ``name`` is not a known family.
    """
    if isinstance(name, str) and name in FAMILY_ALIASES:
        return FAMILY_ALIASES[name]
    try:
        return Family(name)
    except ValueError:
        known = ", ".join(family.value for family in Family)
        raise FamilyError(f"Unknown family '{name}', expected one of {known}") from None


@dataclass(frozen=True)
class FamilyInputs:
    """Inputs of a family: free functions, parameters, soliton constant, signature and reading.

    Free functions and parameters that are left out are zero.

    :param functions: H, K, N or F, and the coefficient functions a, b, d of f.
    :param parameters: alpha, beta, gamma and delta for the flat family.
    :param lam: The soliton constant, the parameter ``lambda`` by default.
    :param eps: 1 or -1 for a fixed signature, None for symbolic ``eps``.
    :param reading: Which reading of the field's ``A`` component to build.
    """

    functions: dict[str, Expr] = field(default_factory=dict)
    parameters: dict[str, Expr] = field(default_factory=dict)
    lam: Expr = field(default_factory=soliton_constant)
    eps: int | None = None
    reading: Reading = Reading.DISPLAYED

    def function(self, name: str) -> Expr:
        return self.functions.get(name, ZERO)

    def parameter(self, name: str) -> Expr:
        return self.parameters.get(name, ZERO)


def validate(family: Family, inputs: FamilyInputs) -> None:
    """Checks that ``inputs`` fit ``family``.

    :raise FamilyError: If an input name does not belong to the family or the reading is not supported.
    :raise DependencyError: If a free function depends on a coordinate outside its declared dependencies, or a
        parameter depends on any coordinate.
    :raise CandidateError: If ``eps`` is neither None, 1 nor -1.
    """
    if inputs.reading not in READINGS[family]:
        raise FamilyError(f"The {family.value} family has no {inputs.reading.value} reading")
    if inputs.eps is not None and inputs.eps not in (1, -1):
        raise CandidateError(f"eps must be 1, -1 or symbolic, got {inputs.eps}")
    unexpected = sorted(set(inputs.functions) - set(FUNCTIONS[family]))
    unexpected += sorted(set(inputs.parameters) - set(PARAMETERS[family]))
    if unexpected:
        raise FamilyError(f"The {family.value} family takes no input named {', '.join(unexpected)}")
    for name, value in inputs.functions.items():
        _check_dependencies(name, value, FUNCTIONS[family][name])
    for name, value in inputs.parameters.items():
        _check_dependencies(name, value, ())


def _check_dependencies(name: str, value: Expr, deps: tuple[str, ...]) -> None:
    extra = [c for c in value.coordinates() if c not in deps]
    if extra:
        raise DependencyError(
            f"'{name}' may only depend on ({','.join(deps)}) but '{value}' depends on {', '.join(extra)}"
        )


def family_context(family: Family) -> Context:
    """Declares the free functions and parameters of ``family``, and ``lambda``."""
    context = Context([FuncSymbol(name, deps) for name, deps in FUNCTIONS[family].items()])
    for name in PARAMETERS[family]:
        context = context.declare_parameter(name)
    return with_soliton_constant(context)


def generic_inputs(family: Family, eps: int | None = None, reading: Reading = Reading.DISPLAYED) -> FamilyInputs:
    """Fully symbolic inputs: every free function and parameter is its own symbol."""
    return FamilyInputs(
        functions={name: Expr.symbol(FuncSymbol(name, deps)) for name, deps in FUNCTIONS[family].items()},
        parameters={name: Expr.symbol(Parameter(name)) for name in PARAMETERS[family]},
        eps=eps,
        reading=reading,
    )


def f_shape(family: Family, inputs: FamilyInputs) -> Expr:
    """The defining function of the family, quadratic in y."""
    y = Expr.coordinate("y")
    if family is Family.FLAT:
        coefficients = (inputs.parameter(name) for name in ("alpha", "beta", "gamma"))
    else:
        coefficients = (inputs.function(name) for name in ("a", "b", "d"))
    a, b, d = coefficients
    return a * y**2 + b * y + d


def _shared_components(H: Expr, K: Expr, lam: Expr, eps: Expr) -> tuple[Expr, Expr]:
    x = Expr.coordinate("x")
    B = lam.scale("1/2") * x + H
    C = -eps * H.differentiate("t") * x + K
    return B, C


def quadratic_field(
    H: Expr,
    K: Expr,
    N: Expr,
    a: Expr,
    lam: Expr,
    eps: int | None = None,
    reading: Reading = Reading.DISPLAYED,
) -> VectorField:
    """The field for ``f = a y^2 + b y + d`` with coefficients of (t, x).

    ``A = (lambda - K_y) t + eps H_y - 1/2 a_t y^2 + N``. The alternate reading takes the first term as
    ``lambda - t K_y``.

    :param a: The y^2 coefficient of f.

    :raise DependencyError: If H is not a function of (t, y), K of y, N of (x, y) or a of (t, x).
    """
    for name, value in (("H", H), ("K", K), ("N", N), ("a", a)):
        _check_dependencies(name, value, FUNCTIONS[Family.QUADRATIC][name])
    t, y = Expr.coordinate("t"), Expr.coordinate("y")
    sign = sign_expr(eps)
    K_y = K.differentiate("y")
    leading = (lam - K_y) * t if reading is Reading.DISPLAYED else lam - t * K_y
    A = leading + sign * H.differentiate("y") - a.differentiate("t").scale("1/2") * y**2 + N
    return VectorField(A, *_shared_components(H, K, lam, sign))


def family_field(family: Family, inputs: FamilyInputs) -> VectorField:
    """The vector field of ``family`` built from ``inputs``, in the reading the inputs ask for.

    :raise FamilyError: If the reading is not supported or an input does not belong to the family.
    :raise DependencyError: If an input violates its declared dependencies.
    """
    validate(family, inputs)
    H, K, lam = inputs.function("H"), inputs.function("K"), inputs.lam
    if family in (Family.QUADRATIC, Family.QUADRATIC_Y):
        # the quadratic-y family reuses the quadratic field with a(t)
        return quadratic_field(H, K, inputs.function("N"), inputs.function("a"), lam, inputs.eps, inputs.reading)

    t, x, y = (Expr.coordinate(name) for name in ("t", "x", "y"))
    sign = sign_expr(inputs.eps)
    if family is Family.STRICT:
        A = (lam - K.differentiate("y")) * t + sign * H.differentiate("y") + inputs.function("N")
    elif inputs.reading is Reading.DISPLAYED:
        beta, delta = inputs.parameter("beta"), inputs.parameter("delta")
        A = -beta.scale("1/2") * (lam.scale("1/4") * y + delta) * y + lam.scale("1/2") * t + inputs.function("F")
    else:
        A = sign * H.differentiate("y") * x + (lam - K.differentiate("y")) * t + inputs.function("F")
    return VectorField(A, *_shared_components(H, K, lam, sign))


def family_candidate(family: Family, inputs: FamilyInputs) -> SolitonCandidate:
    """The family's defining function and field as a soliton candidate."""
    X = family_field(family, inputs)
    return SolitonCandidate(f=f_shape(family, inputs), X=X, lam=inputs.lam, eps=inputs.eps)


def family_constraints(family: Family, inputs: FamilyInputs) -> ConditionSet:
    """The residual components that the family's field leaves nonzero, labelled by component.

    :raise FamilyError: If the reading is not supported or an input does not belong to the family.
    :raise DependencyError: If an input violates its declared dependencies.
    """
    remaining = residual(family_candidate(family, inputs)).as_dict(nonzero=True)
    logger.debug(f"{family.value} family ({inputs.reading.value} reading) leaves constraints on {', '.join(remaining)}")
    return ConditionSet.from_components(remaining.items())


GENERAL = "general"
CONDITION_SHAPES = (GENERAL, *(family.value for family in Family))


def condition_shape(name: str) -> tuple[Expr, Context]:
    """The defining function whose condition system is named ``name``, with a context declaring its symbols.

    ``general`` is a generic f of (t, x, y) and ``strict`` a generic f of (x, y); the other families use their
    quadratic shape with symbolic coefficients.

    :raise FamilyError: If ``name`` is neither ``general`` nor a family.
    """
    if name == GENERAL:
        symbol = FuncSymbol("f", COORDINATES)
    elif parse_family(name) is Family.STRICT:
        symbol = FuncSymbol("f", ("x", "y"))
    else:
        family = parse_family(name)
        return f_shape(family, generic_inputs(family)), family_context(family)
    return Expr.symbol(symbol), with_soliton_constant(Context([symbol]))
