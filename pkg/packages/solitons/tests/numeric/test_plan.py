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

import numpy as np
import pytest

from walker.solitons.exceptions import NumericError
from walker.solitons.numeric import SamplePlan


def test_default_plan() -> None:
    points = SamplePlan().sample()
    assert points.shape == (100, 3)
    assert np.all((points >= -2.0) & (points <= 2.0))


def test_same_seed_same_points() -> None:
    np.testing.assert_array_equal(SamplePlan(seed=7).sample(), SamplePlan(seed=7).sample())
    assert not np.array_equal(SamplePlan(seed=7).sample(), SamplePlan(seed=8).sample())


def test_excluded_regions() -> None:
    plan = SamplePlan(count=50, excluded=((0.0, 0.0, 0.0), (1.0, 1.0, 1.0)), exclusion_radius=0.75, seed=3)
    points = plan.sample()
    assert points.shape == (50, 3)
    for centre in plan.excluded:
        assert np.all(np.linalg.norm(points - np.asarray(centre), axis=1) > 0.75)


def test_explicit_points() -> None:
    plan = SamplePlan(points=((1.0, 2.0, 3.0), (0.0, -1.0, 0.5)))
    np.testing.assert_array_equal(plan.sample(), [[1.0, 2.0, 3.0], [0.0, -1.0, 0.5]])


def test_with_step() -> None:
    plan = SamplePlan(seed=5).with_step(5e-5)
    assert plan.step == 5e-5
    assert plan.seed == 5


@pytest.mark.parametrize(
    "options, message",
    [
        pytest.param({"step": 0.0}, "step must be positive", id="step"),
        pytest.param({"tolerance": -1e-5}, "tolerance must be positive", id="tolerance"),
        pytest.param({"count": 0}, "number of points must be positive", id="count"),
        pytest.param({"box": (1.0, 1.0)}, "is empty", id="box"),
        pytest.param({"exclusion_radius": -0.5}, "must not be negative", id="radius"),
    ],
)
def test_invalid_plan(options: dict, message: str) -> None:
    with pytest.raises(NumericError, match=message):
        SamplePlan(**options)


def test_exclusion_covering_the_box() -> None:
    plan = SamplePlan(count=10, box=(-1.0, 1.0), excluded=((0.0, 0.0, 0.0),), exclusion_radius=10.0)
    with pytest.raises(NumericError, match="Could not draw 10 points"):
        plan.sample()
