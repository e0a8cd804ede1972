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

from .crosscheck import (
    GeometryCrosscheck,
    ResidualCrosscheck,
    TensorDeviation,
    convergence_ratio,
    crosscheck_geometry,
    crosscheck_residual,
)
from .finite_differences import fd_christoffel, fd_lie_derivative, fd_metric_derivatives, fd_ricci, metric_function
from .plan import SamplePlan

__all__ = [
    "GeometryCrosscheck",
    "ResidualCrosscheck",
    "SamplePlan",
    "TensorDeviation",
    "convergence_ratio",
    "crosscheck_geometry",
    "crosscheck_residual",
    "fd_christoffel",
    "fd_lie_derivative",
    "fd_metric_derivatives",
    "fd_ricci",
    "metric_function",
]
