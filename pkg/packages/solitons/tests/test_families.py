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

import random

import pytest

from walker.solitons import (
    CandidateError,
    Family,
    FamilyError,
    FamilyInputs,
    Reading,
    family_candidate,
    family_constraints,
    family_context,
    family_field,
    generic_inputs,
    parse_family,
    quadratic_field,
    residual,
    soliton_constant,
)
from walker.solitons.families import FUNCTIONS, f_shape
from walker.symbolic import ZERO, DependencyError, Expr, FuncSymbol, parse, random_polynomial

SEED = 1729
COUNT = 20


def test_parse_family() -> None:
    assert parse_family("quadratic-y") is Family.QUADRATIC_Y
    assert parse_family("theorem1") is Family.QUADRATIC
    with pytest.raises(FamilyError, match="Unknown family 'cubic'"):
        parse_family("cubic")


@pytest.mark.parametrize("family", list(Family))
def test_zero_inputs_give_scaling_field(family: Family) -> None:
    X = family_field(family, FamilyInputs(eps=1))
    lam = soliton_constant()
    assert X.B == lam.scale("1/2") * Expr.coordinate("x")
    assert X.C == ZERO


@pytest.mark.parametrize(
    "family, reading",
    [
        pytest.param(Family.QUADRATIC, Reading.DISPLAYED, id="quadratic"),
        pytest.param(Family.QUADRATIC_Y, Reading.DISPLAYED, id="quadratic-y"),
        pytest.param(Family.STRICT, Reading.DISPLAYED, id="strict"),
        pytest.param(Family.FLAT, Reading.ALTERNATE, id="flat-alternate"),
    ],
)
def test_zero_inputs_are_solitons(family: Family, reading: Reading) -> None:
    inputs = FamilyInputs(reading=reading)
    assert family_field(family, inputs).A == soliton_constant() * Expr.coordinate("t")
    assert len(family_constraints(family, inputs)) == 0


def test_flat_displayed_field_misses_half_the_constant() -> None:
    constraints = family_constraints(Family.FLAT, FamilyInputs())
    assert constraints.labels() == ["ty"]
    assert constraints["ty"].lhs == soliton_constant()
    assert constraints["ty"].factor == Expr.constant("-1/2")


def test_flat_displayed_field_at_zero_constant_is_soliton() -> None:
    assert len(family_constraints(Family.FLAT, FamilyInputs(lam=ZERO))) == 0


def test_strict_zero_field_on_generic_shape() -> None:
    context = family_context(Family.STRICT)
    inputs = FamilyInputs(functions={name: Expr.symbol(context.function(name)) for name in ("a", "b", "d")})
    f = f_shape(Family.STRICT, inputs)
    lam, x = soliton_constant(), Expr.coordinate("x")
    f_x = f.differentiate("x")
    expected = lam.scale("1/2") * x * f_x - parse("eps", context).scale("1/2") * f_x.differentiate("x") - lam * f
    constraints = family_constraints(Family.STRICT, inputs)
    assert constraints.labels() == ["yy"]
    assert constraints["yy"].raw == expected


def test_quadratic_xy_constraint() -> None:
    context = family_context(Family.QUADRATIC)
    candidate = family_candidate(Family.QUADRATIC, generic_inputs(Family.QUADRATIC))
    expected = parse("eps*H_y - eps*H_t*(a*y^2 + b*y + d) + N_x + 1/2*b_tx*y + 1/2*d_tx", context)
    assert residual(candidate)["x", "y"] == expected
    assert residual(candidate)["t", "x"] == ZERO


def test_quadratic_readings_differ_in_leading_term() -> None:
    context = family_context(Family.QUADRATIC)
    H, K, N, a = (Expr.symbol(context.function(name)) for name in ("H", "K", "N", "a"))
    lam = soliton_constant()
    displayed = quadratic_field(H, K, N, a, lam)
    alternate = quadratic_field(H, K, N, a, lam, reading=Reading.ALTERNATE)
    assert displayed.A - alternate.A == parse("lambda*t - lambda", context)
    assert displayed.B == alternate.B
    assert displayed.C == parse("-eps*H_t*x + K", context)


def test_quadratic_field_checks_dependencies() -> None:
    t = Expr.coordinate("t")
    with pytest.raises(DependencyError, match="'K' may only depend on"):
        quadratic_field(ZERO, t, ZERO, ZERO, soliton_constant())


@pytest.mark.parametrize(
    "family, inputs, error",
    [
        pytest.param(Family.STRICT, FamilyInputs(reading=Reading.ALTERNATE), FamilyError, id="reading"),
        pytest.param(Family.FLAT, FamilyInputs(functions={"N": ZERO}), FamilyError, id="unknown-input"),
        pytest.param(Family.QUADRATIC, FamilyInputs(eps=3), CandidateError, id="sign"),
        pytest.param(
            Family.STRICT, FamilyInputs(functions={"a": Expr.coordinate("t")}), DependencyError, id="dependency"
        ),
        pytest.param(
            Family.FLAT, FamilyInputs(parameters={"alpha": Expr.coordinate("y")}), DependencyError, id="parameter"
        ),
    ],
)
def test_invalid_inputs(family: Family, inputs: FamilyInputs, error: type[Exception]) -> None:
    with pytest.raises(error):
        family_field(family, inputs)


def random_inputs(rng: random.Random, family: Family) -> FamilyInputs:
    """Polynomial free functions in their own coordinates, occasionally zero."""
    functions = {}
    for name, deps in FUNCTIONS[family].items():
        atoms = [Expr.coordinate(c) for c in deps] or [Expr.constant(1)]
        functions[name] = ZERO if rng.random() < 0.3 else random_polynomial(rng, atoms, max_degree=2, max_terms=2)
    parameters = {name: Expr.constant(rng.randint(-2, 2)) for name in ("alpha", "beta", "gamma", "delta")}
    if family is not Family.FLAT:
        parameters = {}
    return FamilyInputs(functions=functions, parameters=parameters, lam=Expr.constant(rng.randint(-2, 2)), eps=1)


@pytest.mark.parametrize("family", list(Family))
def test_constraints_decide_the_residual(family: Family) -> None:
    rng = random.Random(f"{SEED}-{family.value}")
    for _ in range(COUNT):
        inputs = random_inputs(rng, family)
        constraints = family_constraints(family, inputs)
        value = residual(family_candidate(family, inputs))
        assert constraints.labels() == list(value.as_dict(nonzero=True))
        assert constraints.is_satisfied() == value.is_zero()


def test_family_context_declares_inputs() -> None:
    context = family_context(Family.QUADRATIC_Y)
    assert context.function("a") == FuncSymbol("a", ("t",))
    assert "lambda" in context
    assert "d:()" in context.declarations()
