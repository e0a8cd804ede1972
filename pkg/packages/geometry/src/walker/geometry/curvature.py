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

"""Levi-Civita connection, curvature and their traces, computed from first principles.

The curvature tensor follows the convention R(X, Y) = [nabla_Y, nabla_X] + nabla_[X,Y], so in a coordinate frame

    R^l_{kij} = d_j G^l_{ik} - d_i G^l_{jk} + G^m_{ik} G^l_{jm} - G^m_{jk} G^l_{im}

and the Ricci tensor is the contraction rho_{jk} = sum_i R^i_{kji}. For Walker metrics this gives rho_ty = f_tt / 2.
"""

import logging

from walker.symbolic import COORDINATES, ZERO, Expr

from .metric import Metric
from .tensors import ORDERED_PAIRS, PAIRS, Connection, CurvatureTensor, SymTensor2

logger = logging.getLogger("walker")


def christoffel(m: Metric) -> Connection:
    """Christoffel symbols G^k_{ij} = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij)."""
    dg = {(k, i, j): m.g[i, j].differentiate(k) for k in COORDINATES for i in COORDINATES for j in COORDINATES}
    entries = {}
    for k in COORDINATES:
        for pair in PAIRS:
            i, j = pair
            total = ZERO
            for l in COORDINATES:  # noqa: E741
                if m.ginv[k, l].is_zero():
                    continue
                total = total + m.ginv[k, l] * (dg[i, j, l] + dg[j, i, l] - dg[l, i, j])
            entries[f"{k},{pair}"] = total.scale("1/2")
    logger.debug("Computed Christoffel symbols")
    return Connection(entries)


def riemann(m: Metric, c: Connection) -> CurvatureTensor:
    """Curvature tensor of the connection ``c`` of ``m``, all 27 value slots."""
    entries = {}
    for l in COORDINATES:  # noqa: E741
        for k in COORDINATES:
            for pair in ORDERED_PAIRS:
                i, j = pair
                value = c[l, i, k].differentiate(j) - c[l, j, k].differentiate(i)
                for n in COORDINATES:
                    value = value + c[n, i, k] * c[l, j, n] - c[n, j, k] * c[l, i, n]
                entries[f"{l}|{k},{pair}"] = value
    logger.debug(f"Computed curvature tensor for f = {m.f}")
    return CurvatureTensor(entries)


def ricci(m: Metric, r: CurvatureTensor) -> SymTensor2:
    """Ricci tensor rho_{jk} = sum_i R^i_{kji}; symmetric for a Levi-Civita connection."""
    return SymTensor2.build(lambda j, k: sum((r[i, k, j, i] for i in COORDINATES), ZERO))


def scalar_curvature(m: Metric, ric: SymTensor2) -> Expr:
    return sum((m.ginv[i, j] * ric[i, j] for i in COORDINATES for j in COORDINATES), ZERO)


def metric_compatibility_defect(m: Metric, c: Connection) -> dict[str, Expr]:
    """``d_k g_ij - G^l_{ki} g_lj - G^l_{kj} g_il`` keyed ``"k,ij"``; vanishes for the Levi-Civita connection."""
    defect = {}
    for k in COORDINATES:
        for pair in PAIRS:
            i, j = pair
            value = m.g[i, j].differentiate(k)
            for l in COORDINATES:  # noqa: E741
                value = value - c[l, k, i] * m.g[l, j] - c[l, k, j] * m.g[i, l]
            defect[f"{k},{pair}"] = value
    return defect


def bianchi_defect(r: CurvatureTensor) -> dict[str, Expr]:
    """Cyclic sums ``R^l_{kij} + R^l_{ijk} + R^l_{jki}`` keyed ``"l|k,ij"``."""
    return {
        f"{l}|{k},{i}{j}": r[l, k, i, j] + r[l, i, j, k] + r[l, j, k, i]
        for l in COORDINATES  # noqa: E741
        for k in COORDINATES
        for i in COORDINATES
        for j in COORDINATES
    }
