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

"""Randomised checks of the algebraic laws the kernel relies on."""

import random
from fractions import Fraction

import pytest
import sympy

from walker.symbolic import COORDINATES, Context, Expr, canonicalize, parse, random_polynomial
from walker.symbolic.context import EPS_SYMBOL

SEED = 20240611
COUNT = 1000


def atoms(context: Context) -> list[Expr]:
    return [parse(text, context) for text in ("t", "x", "y", "eps", "lambda", "f", "f_t", "f_xy", "a", "a_x", "K")]


def has_high_eps_power(expr: Expr) -> bool:
    return any(power.base == EPS_SYMBOL and power.exp >= 2 for power in expr.value.atoms(sympy.Pow))


def test_canonical_form_laws(context: Context) -> None:
    rng = random.Random(SEED)
    pool = atoms(context)
    for _ in range(COUNT):
        u, v, w = (random_polynomial(rng, pool, max_degree=3, max_terms=3) for _ in range(3))
        assert canonicalize(u.value) == u.value
        assert not has_high_eps_power(u * v)
        assert u + v == v + u
        assert u * v == v * u
        assert (u + v) + w == u + (v + w)
        assert (u * v) * w == u * (v * w)
        assert u * (v + w) == u * v + u * w


def test_derivative_laws(context: Context) -> None:
    rng = random.Random(SEED + 1)
    pool = atoms(context)
    for _ in range(COUNT):
        u, v = (random_polynomial(rng, pool, max_degree=3, max_terms=3) for _ in range(2))
        c1, c2 = rng.choice(COORDINATES), rng.choice(COORDINATES)
        assert u.differentiate(c1).differentiate(c2) == u.differentiate(c2).differentiate(c1)
        assert (u * v).differentiate(c1) == u.differentiate(c1) * v + u * v.differentiate(c1)
        assert (u + v).differentiate(c1) == u.differentiate(c1) + v.differentiate(c1)


def test_rendering_round_trip(context: Context) -> None:
    rng = random.Random(SEED + 2)
    pool = atoms(context)
    for _ in range(200):
        u = random_polynomial(rng, pool, max_degree=3, max_terms=4)
        assert parse(str(u), context) == u


def test_evaluation_homomorphism(context: Context) -> None:
    rng = random.Random(SEED + 3)
    pool = [parse(text, context) for text in ("t", "x", "y", "eps", "lambda")]
    for _ in range(200):
        u, v = (random_polynomial(rng, pool, max_degree=4, max_terms=4) for _ in range(2))
        point = tuple(Fraction(rng.randint(-20, 20), 10) for _ in range(3))
        params = {"eps": rng.choice([1, -1]), "lambda": Fraction(rng.randint(-6, 6), 2)}
        eu, ev = u.evaluate(point, params), v.evaluate(point, params)
        assert (u + v).evaluate(point, params) == pytest.approx(eu + ev, rel=1e-12, abs=1e-12)
        assert (u * v).evaluate(point, params) == pytest.approx(eu * ev, rel=1e-12, abs=1e-12)


def test_generator_is_deterministic(context: Context) -> None:
    pool = atoms(context)
    first = random_polynomial(random.Random(5), pool)
    assert first == random_polynomial(random.Random(5), pool)
