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

"""Comparison of the transcribed reference forms with first-principles computation.

Findings are informational: they are reported next to results and never change a verdict.
"""

import logging
from collections.abc import Mapping
from dataclasses import dataclass

from walker.common import RenderStyle
from walker.geometry import VectorField, christoffel, lie_derivative_metric, ricci, riemann, walker_metric
from walker.symbolic import Context, Expr, parse

from ..conditions import field_context, general_conditions, normalize
from ..families import (
    READINGS,
    Family,
    FamilyInputs,
    condition_shape,
    f_shape,
    family_candidate,
    family_context,
    generic_inputs,
)
from ..residual import residual
from . import reference_forms

logger = logging.getLogger("walker")


@dataclass(frozen=True)
class Finding:
    """A place where the reference forms and first principles disagree."""

    subject: str
    message: str
    reference: Expr | None = None
    derived: Expr | None = None

    def __str__(self) -> str:
        return f"{self.subject}: {self.message}"


def _text(value: Expr) -> str:
    return value.to_string(RenderStyle.SUBSCRIPT)


def reference_context() -> Context:
    return Context.from_declarations(reference_forms.DECLARATIONS)


def _mismatch(subject: str, reference: Expr, derived: Expr) -> Finding:
    if reference.is_zero():
        message = f"first principles give {_text(derived)}, the reference forms show no such component"
    else:
        message = f"reference form {_text(reference)} differs from first principles {_text(derived)}"
    return Finding(subject=subject, message=message, reference=reference, derived=derived)


def _compare_exact(
    kind: str, reference: Mapping[str, str], derived: Mapping[str, Expr], ctx: Context
) -> list[Finding]:
    findings = []
    for key, value in derived.items():
        expected = parse(reference.get(key, "0"), ctx)
        if expected != value:
            findings.append(_mismatch(f"{kind} {key}", expected, value))
    return findings


def _compare_normalized(subject: str, reference: Expr, derived: Expr) -> Finding | None:
    """Compares up to a nonzero rational factor and a power of eps."""
    if normalize(reference)[1] == normalize(derived)[1]:
        return None
    return _mismatch(subject, reference, derived)


def audit_geometry() -> list[Finding]:
    """Connection, curvature, Ricci tensor and Lie derivative of a generic Walker metric against the reference forms."""
    ctx = reference_context()
    f = Expr.symbol(ctx.function("f"))
    m = walker_metric(f, ctx)
    connection = christoffel(m)
    curvature = riemann(m, connection)
    field = VectorField(*(Expr.symbol(ctx.function(name)) for name in ("A", "B", "C")))
    lie = lie_derivative_metric(m, field)
    findings = [
        *_compare_exact("connection", reference_forms.CONNECTION, connection.as_dict(), ctx),
        *_compare_exact("curvature", reference_forms.CURVATURE, curvature.as_dict(), ctx),
        *_compare_exact("Ricci", reference_forms.RICCI, ricci(m, curvature).as_dict(), ctx),
        *_compare_exact("Lie derivative", reference_forms.LIE_DERIVATIVE, lie.as_dict(), ctx),
    ]
    logger.debug(f"Geometry audit: {len(findings)} findings")
    return findings


def audit_condition_system(name: str) -> list[Finding]:
    """The derived conditions of a shape against the condition system displayed for it.

    :param name: ``general`` or a family name.

    :raise FamilyError: If ``name`` is unknown.
    """
    shape, shape_context = condition_shape(name)
    ctx = reference_context()
    derived = general_conditions(shape, field_context(shape_context))
    f = ctx.function("f")
    findings = []
    for condition in derived:
        reference = parse(reference_forms.CONDITION_SYSTEMS[name][condition.label], ctx).substitute(f, shape)
        finding = _compare_normalized(f"{name} conditions {condition.label}", reference, condition.raw)
        if finding is not None:
            findings.append(finding)
    logger.debug(f"Condition audit for {name}: {len(findings)} findings")
    return findings


def audit_family(family: Family, inputs: FamilyInputs) -> list[Finding]:
    """One finding per residual component that the family's field leaves nonzero for these inputs."""
    subject = f"{family.value} family, {inputs.reading.value} reading"
    return [
        Finding(subject=subject, message=f"residual {label} = {_text(value)} does not vanish", derived=value)
        for label, value in residual(family_candidate(family, inputs)).as_dict(nonzero=True).items()
    ]


def audit_family_constraints(family: Family) -> list[Finding]:
    """The displayed xy and yy constraints of ``family`` against first principles, for every supported reading."""
    ctx = family_context(family).merge(reference_context())
    f = ctx.function("f")
    findings = []
    if family.value in reference_forms.UNDEFINED_E:
        findings.append(
            Finding(
                subject=f"{family.value} constraints",
                message="the constraints are stated for functions H, K, E but E is never defined; read as N",
            )
        )
    for reading in READINGS[family]:
        inputs = generic_inputs(family, reading=reading)
        shape = f_shape(family, inputs)
        derived = residual(family_candidate(family, inputs))
        for label, text in reference_forms.FAMILY_CONSTRAINTS[family.value].items():
            reference = parse(text, ctx).substitute(f, shape)
            finding = _compare_normalized(
                f"{family.value} constraints {label}, {reading.value} reading", reference, derived[label]
            )
            if finding is not None:
                findings.append(finding)
    logger.debug(f"Constraint audit for the {family.value} family: {len(findings)} findings")
    return findings
