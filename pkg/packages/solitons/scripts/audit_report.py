#!/usr/bin/env python

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

import argparse

from walker.solitons import Family, generic_inputs
from walker.solitons.audit import audit_condition_system, audit_family, audit_family_constraints, audit_geometry
from walker.solitons.families import CONDITION_SHAPES, READINGS

parser = argparse.ArgumentParser(
    description="Lists every place where the transcribed reference forms disagree with first principles."
)
parser.add_argument("--family", choices=[family.value for family in Family], help="Only audit this family")
args = parser.parse_args()

families = [Family(args.family)] if args.family else list(Family)
indent = "  "

if not args.family:
    print("geometry:")
    for finding in audit_geometry():
        print(f"{indent}{finding}")

print("condition systems:")
for name in CONDITION_SHAPES:
    if args.family and name != args.family:
        continue
    findings = audit_condition_system(name)
    print(f"{indent}{name}: {len(findings)} findings")
    for finding in findings:
        print(f"{indent}{indent}{finding}")

print("families:")
for family in families:
    print(f"{indent}{family.value}:")
    for finding in audit_family_constraints(family):
        print(f"{indent}{indent}{finding}")
    for reading in READINGS[family]:
        findings = audit_family(family, generic_inputs(family, reading=reading))
        print(f"{indent}{indent}generic {reading.value} field leaves {len(findings)} residual components")
        for finding in findings:
            print(f"{indent}{indent}{indent}{finding}")
