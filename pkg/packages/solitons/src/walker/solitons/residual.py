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
from dataclasses import dataclass

from walker.geometry import SymTensor2, christoffel, lie_derivative_metric, ricci, riemann
from walker.symbolic import Expr

from .candidate import Classification, SolitonCandidate, classify
from .einstein import is_einstein

logger = logging.getLogger("walker")


def residual(cand: SolitonCandidate) -> SymTensor2:
    """``L_X g + rho - lambda g``, which vanishes exactly when the candidate is a Ricci soliton."""
    m = cand.metric()
    ric = ricci(m, riemann(m, christoffel(m)))
    value = lie_derivative_metric(m, cand.field()) + ric - m.g.scale(cand.constant())
    logger.debug(f"Soliton residual for f = {cand.f} has {len(value.as_dict(nonzero=True))} nonzero components")
    return value


@dataclass(frozen=True)
class Verdict:
    """Outcome of a soliton check.

    The classification is only determined for a soliton whose constant is a number.
    """

    is_soliton: bool
    failing_components: tuple[tuple[str, Expr], ...]
    classification: Classification
    is_einstein: bool


def check(cand: SolitonCandidate) -> Verdict:
    failing = tuple(residual(cand).as_dict(nonzero=True).items())
    is_soliton = not failing
    return Verdict(
        is_soliton=is_soliton,
        failing_components=failing,
        classification=classify(cand.constant()) if is_soliton else Classification.INDETERMINATE,
        is_einstein=is_einstein(cand.f, cand.eps).is_einstein,
    )
