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
from collections.abc import Sequence
from fractions import Fraction

from .context import COORDINATES
from .expr import ONE, ZERO, Expr


def random_rational(rng: random.Random, bound: int = 3, denominators: Sequence[int] = (1, 2, 3)) -> Fraction:
    """A nonzero rational in ``[-bound, bound]`` with one of the given denominators."""
    while True:
        denominator = rng.choice(denominators)
        value = Fraction(rng.randint(-bound * denominator, bound * denominator), denominator)
        if value != 0:
            return value


def random_polynomial(
    rng: random.Random,
    atoms: Sequence[Expr] | None = None,
    max_degree: int = 4,
    max_terms: int = 5,
    bound: int = 3,
) -> Expr:
    """A random polynomial in the given atoms with rational coefficients in ``[-bound, bound]``.

    :param rng: Seeded generator; the same seed gives the same polynomial.
    :param atoms: Atoms to build monomials from, the coordinates by default.
    :param max_degree: Largest total degree of a monomial.
    :param max_terms: Largest number of monomials drawn before like terms merge.
    """
    atoms = list(atoms) if atoms is not None else [Expr.coordinate(name) for name in COORDINATES]
    result = ZERO
    for _ in range(rng.randint(1, max_terms)):
        monomial = ONE
        for _ in range(rng.randint(0, max_degree)):
            monomial = monomial * rng.choice(atoms)
        result = result + monomial.scale(random_rational(rng, bound))
    return result
