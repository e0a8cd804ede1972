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

from walker.common.exceptions import WalkerError


class SolitonError(WalkerError):
    """Base class for errors raised while checking or constructing Ricci solitons."""


class CandidateError(SolitonError):
    """Raised when a soliton candidate is malformed, for example a numeric eps other than 1 or -1."""


class FamilyError(SolitonError):
    """Raised for an unknown solution family or a reading the family does not support."""


class NumericError(SolitonError):
    """Raised when a sample plan is invalid or a numeric check is given symbolic input."""
