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

from .candidate import LAMBDA, Classification, SolitonCandidate, classify, soliton_constant, with_soliton_constant
from .conditions import Condition, ConditionSet, field_context, general_conditions, normalize
from .einstein import EinsteinCheck, is_einstein
from .exceptions import CandidateError, FamilyError, NumericError, SolitonError
from .families import (
    CONDITION_SHAPES,
    FAMILY_ALIASES,
    GENERAL,
    Family,
    FamilyInputs,
    Reading,
    condition_shape,
    f_shape,
    family_candidate,
    family_constraints,
    family_context,
    family_field,
    generic_inputs,
    parse_family,
    quadratic_field,
)
from .residual import Verdict, check, residual

__all__ = [
    "CONDITION_SHAPES",
    "FAMILY_ALIASES",
    "CandidateError",
    "Classification",
    "Condition",
    "ConditionSet",
    "EinsteinCheck",
    "Family",
    "FamilyError",
    "FamilyInputs",
    "GENERAL",
    "LAMBDA",
    "NumericError",
    "Reading",
    "SolitonCandidate",
    "SolitonError",
    "Verdict",
    "check",
    "classify",
    "condition_shape",
    "f_shape",
    "family_candidate",
    "family_constraints",
    "family_context",
    "family_field",
    "field_context",
    "general_conditions",
    "generic_inputs",
    "is_einstein",
    "normalize",
    "parse_family",
    "quadratic_field",
    "residual",
    "soliton_constant",
    "with_soliton_constant",
]
