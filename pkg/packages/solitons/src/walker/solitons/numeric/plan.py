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
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..exceptions import NumericError

Point = tuple[float, float, float]

_MAX_DRAWS = 1000


@dataclass(frozen=True)
class SamplePlan:
    """Where and how finely the finite-difference oracle samples.

    :param count: Number of points drawn uniformly from the box.
    :param step: Finite-difference step h.
    :param tolerance: Allowed deviation on values of magnitude up to 10, relative beyond.
    :param seed: Seed of the point generator.
    :param box: Lower and upper bound of every coordinate.
    :param exclusion_radius: Drawn points closer than this to one of ``excluded`` are replaced.
    :param excluded: Centres of excluded regions, such as singular loci of a non-polynomial defining function.
    :param points: Explicit points, used instead of drawing.

    :raise NumericError: If a bound is invalid.
    """

    count: int = 100
    step: float = 1e-4
    tolerance: float = 1e-5
    seed: int = 0
    box: tuple[float, float] = (-2.0, 2.0)
    exclusion_radius: float = 0.0
    excluded: tuple[Point, ...] = ()
    points: tuple[Point, ...] | None = None

    def __post_init__(self) -> None:
        if self.step <= 0:
            raise NumericError(f"The step must be positive, got {self.step}")
        if self.tolerance <= 0:
            raise NumericError(f"The tolerance must be positive, got {self.tolerance}")
        if self.count <= 0:
            raise NumericError(f"The number of points must be positive, got {self.count}")
        if not self.box[0] < self.box[1]:
            raise NumericError(f"The box {self.box} is empty")
        if self.exclusion_radius < 0:
            raise NumericError(f"The exclusion radius must not be negative, got {self.exclusion_radius}")

    def with_step(self, step: float) -> "SamplePlan":
        return dataclasses.replace(self, step=step)

    def sample(self) -> npt.NDArray[np.float64]:
        """The sample points as an array of shape (n, 3), the same for the same plan.

        :raise NumericError: If the exclusion regions leave too little of the box to draw from.
        """
        if self.points is not None:
            return np.asarray(self.points, dtype=np.float64).reshape(-1, 3)
        rng = np.random.default_rng(self.seed)
        low, high = self.box
        accepted = np.empty((0, 3))
        for _ in range(_MAX_DRAWS):
            batch = rng.uniform(low, high, size=(self.count, 3))
            if self.excluded and self.exclusion_radius > 0:
                centres = np.asarray(self.excluded, dtype=np.float64)
                distances = np.linalg.norm(batch[:, None, :] - centres[None, :, :], axis=2)
                batch = batch[distances.min(axis=1) > self.exclusion_radius]
            accepted = np.concatenate([accepted, batch])
            if len(accepted) >= self.count:
                return accepted[: self.count]
        raise NumericError(f"Could not draw {self.count} points outside the excluded regions")
