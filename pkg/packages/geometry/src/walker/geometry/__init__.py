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

from .curvature import (
    bianchi_defect,
    christoffel,
    metric_compatibility_defect,
    ricci,
    riemann,
    scalar_curvature,
)
from .exceptions import GeometryError
from .lie import VectorField, lie_derivative_metric
from .metric import Metric, walker_metric
from .tensors import ORDERED_PAIRS, PAIRS, Connection, CurvatureTensor, SymTensor2

__all__ = [
    "Connection",
    "CurvatureTensor",
    "GeometryError",
    "Metric",
    "ORDERED_PAIRS",
    "PAIRS",
    "SymTensor2",
    "VectorField",
    "bianchi_defect",
    "christoffel",
    "lie_derivative_metric",
    "metric_compatibility_defect",
    "ricci",
    "riemann",
    "scalar_curvature",
    "walker_metric",
]
