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

"""Displayed formulas of the published derivation, transcribed into the expression grammar.

Tensor maps list only the entries shown as nonzero, keyed like the computed tensors. A condition ``lhs = rhs`` is
stored as ``lhs - rhs``, and ``1/eps`` is written as ``eps``. The expressions use ``f`` for the defining function
and ``A``, ``B``, ``C`` for the components of the vector field.
"""

DECLARATIONS = ("f:(t,x,y)", "A:(t,x,y)", "B:(t,x,y)", "C:(t,x,y)", "lambda:param")

CONNECTION = {
    "t,ty": "1/2*f_t",
    "t,xy": "1/2*f_x",
    "t,yy": "1/2*(f*f_t + f_y)",
    "x,yy": "-1/2*eps*f_x",
    "y,yy": "-1/2*f_t",
}

CURVATURE = {
    "t|x,xy": "-1/2*f_xx",
    "t|t,ty": "-1/2*f_tt",
    "t|x,ty": "-1/2*f_tx",
    "t|t,xy": "-1/2*f_tx",
    "t|y,ty": "-1/2*f*f_tt",
    "x|y,ty": "1/2*eps*f_tx",
    "y|y,ty": "1/2*f*f_tt",
    "t|y,xy": "-1/2*f*f_tx",
    "x|y,xy": "1/2*eps*f_xx",
    "y|y,xy": "1/2*f*f_tx",
}

RICCI = {
    "ty": "1/2*f_tt",
    "xy": "1/2*f_tx",
    "yy": "1/2*eps*(eps*f*f_tt - f_xx)",
}

LIE_DERIVATIVE = {
    "tt": "2*C_t",
    "tx": "eps*B_t + C_x",
    "ty": "A_t + C_y + f*C_t",
    "xx": "2*eps*B_x",
    "xy": "eps*B_y + f*C_x + A_x",
    "yy": "A*f_t + B*f_x + C*f_y + 2*f*C_y + 2*A_y",
}

# the six conditions for a generic defining function
GENERAL_CONDITIONS = {
    "tt": "C_t",
    "tx": "eps*B_t + C_x",
    "ty": "A_t + C_y + f*C_t + 1/2*f_tt - lambda",
    "xx": "2*eps*B_x - eps*lambda",
    "xy": "eps*B_y + f*C_x + A_x + 1/2*f_tx",
    "yy": "A*f_t + B*f_x + C*f_y + 2*(f*C_y + 2*A_y) + 1/2*eps*(eps*f*f_tt - f_xx) - lambda*f",
}

# f = a(t) y^2 + b(t) y + d
QUADRATIC_Y_CONDITIONS = {
    **GENERAL_CONDITIONS,
    "xy": "A_x + eps*B_y + f*C_x",
    "yy": "A*f_t + B*f_x + C*f_y + 2*(f*C_y + 2*A_y) + 1/2*f*f_tt - lambda*f",
}

# f independent of t
T_INDEPENDENT_CONDITIONS = {
    **GENERAL_CONDITIONS,
    "ty": "A_t + C_y + f*C_t - lambda",
    "xy": "eps*B_y + f*C_x + A_x",
    "yy": "A*f_t + B*f_x + C*f_y + 2*(f*C_y + 2*A_y) - lambda*f",
}

CONDITION_SYSTEMS = {
    "general": GENERAL_CONDITIONS,
    "quadratic": GENERAL_CONDITIONS,
    "quadratic-y": QUADRATIC_Y_CONDITIONS,
    "flat": T_INDEPENDENT_CONDITIONS,
    "strict": T_INDEPENDENT_CONDITIONS,
}

# constraints left on the free functions by each family's field, f kept as a symbol
FAMILY_CONSTRAINTS = {
    "quadratic": {
        "xy": "(1/2*a_tx - eps*a*H_t)*y^2 + (1/2*b_tx - eps*b*H_t)*y + 1/2*d_tx - eps*d*H_t + eps*H_y + N_x",
        "yy": (
            "(-eps*H_t*x + K)*f_y + f*(-2*eps*H_ty*x + 2*K_y + lambda + 1/2*f_tt)"
            " + ((lambda - t*K_y) + eps*H_y - 1/2*a_t*y^2 + N)*f_t"
            " + 4*(eps*H_yy + N_y - t*K_yy - a_t*y) - 1/2*eps*f_xx"
        ),
    },
    "quadratic-y": {
        "xy": "eps*H_y + N_x - eps*f*H_t",
        "yy": (
            "(K - eps*H_t*x)*f_y + f*(2*K_y - 2*eps*H_ty*x + lambda + 1/2*f_tt)"
            " + ((lambda - K_y)*t + eps*H_y - 1/2*a_t*y^2 + N)*f_t"
            " + 4*(N_y + eps*H_yy - K_yy*t - a_t*y)"
        ),
    },
    "flat": {
        "xy": "2*H_y - eps*f*H_t + F_x",
        "yy": "(K - eps*H_t*x)*f_y + 2*eps*H_yy*x - 2*K_yy*t + 2*F_y + f*(2*K_y + lambda)",
    },
    "strict": {
        "xy": "-eps*a*H_t*y^2 - eps*b*H_t*y - eps*d*H_t + eps*H_y + N_x",
        "yy": (
            "(-eps*H_t*x + K)*f_y + f*(2*K_y + lambda - 2*eps*H_ty*x)"
            " + 4*(eps*H_yy + N_y - K_yy*t) - 1/2*eps*f_xx"
        ),
    },
}

# families whose constraint statement names a function E that nothing defines
UNDEFINED_E = ("quadratic", "quadratic-y")
