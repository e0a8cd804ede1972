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

import logging
from dataclasses import dataclass, field

from walker.geometry import christoffel, ricci, riemann, walker_metric
from walker.symbolic import Expr

logger = logging.getLogger("walker")


@dataclass(frozen=True)
class EinsteinCheck:
    is_einstein: bool
    witness: dict[str, Expr] = field(default_factory=dict)


def is_einstein(f: Expr, eps: int | None = None) -> EinsteinCheck:
    """Whether the Walker metric of ``f`` is Einstein, ``rho = lambda g`` for a constant lambda.

    The xx entry of the Ricci tensor always vanishes while ``g_xx = eps``, so lambda is forced to zero and the metric
    is Einstein exactly when it is Ricci-flat. The witness holds the Ricci entries that fail to vanish.
    """
    m = walker_metric(f, eps=eps)
    witness = ricci(m, riemann(m, christoffel(m))).as_dict(nonzero=True)
    logger.debug(f"Einstein check for f = {f}: {len(witness)} nonzero Ricci entries")
    return EinsteinCheck(is_einstein=not witness, witness=witness)
