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

"""The five subcommands. Each maps its flags onto the library and returns a report; only ``main`` prints."""

import argparse
import logging
from pathlib import Path
from typing import Any

from walker.common import ExitCode, Report
from walker.geometry import VectorField, christoffel, ricci, riemann, scalar_curvature, walker_metric
from walker.symbolic import COORDINATES, Context, Expr, parse

from ..audit import audit_condition_system, audit_family, audit_geometry
from ..candidate import SolitonCandidate, soliton_constant, with_soliton_constant
from ..conditions import field_context, general_conditions
from ..exceptions import NumericError
from ..families import (
    FUNCTIONS,
    PARAMETERS,
    Family,
    FamilyInputs,
    Reading,
    condition_shape,
    family_candidate,
    family_constraints,
    family_context,
    generic_inputs,
    parse_family,
)
from ..numeric import SamplePlan, crosscheck_geometry, crosscheck_residual
from ..residual import check

logger = logging.getLogger("walker")

FAMILY_FUNCTIONS = ("H", "K", "N", "F", "a", "b", "d")
FAMILY_PARAMETERS = ("alpha", "beta", "gamma", "delta")


def read_declaration_file(path: str) -> list[str]:
    """One declaration per line; blank lines and ``#`` comments are skipped.

    :raise OSError: If the file cannot be read.
    """
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return [line.strip() for line in lines if line.strip() and not line.lstrip().startswith("#")]


def build_context(args: argparse.Namespace) -> Context:
    """Declarations from ``--declare`` and ``--declare-file``, plus the soliton constant ``lambda``.

    :raise DeclarationError: If a declaration is malformed or conflicts with another.
    """
    texts = list(args.declare)
    if args.declare_file:
        texts += read_declaration_file(args.declare_file)
    return with_soliton_constant(Context.from_declarations(texts))


def parse_eps(text: str) -> int | None:
    return None if text == "sym" else int(text)


def parse_lambda(text: str, ctx: Context) -> Expr:
    return soliton_constant() if text == "sym" else parse(text, ctx)


def _is_generic(f: Expr) -> bool:
    symbols = f.function_symbols()
    return len(symbols) == 1 and symbols[0].deps == COORDINATES and f == Expr.symbol(symbols[0])


def cmd_geometry(args: argparse.Namespace, command: str) -> Report:
    ctx = build_context(args)
    m = walker_metric(parse(args.f, ctx), ctx, parse_eps(args.eps))
    connection = christoffel(m)
    curvature = riemann(m, connection)
    ric = ricci(m, curvature)
    result = {
        "f": m.f,
        "eps": args.eps,
        "metric": m.g.as_dict(nonzero=True),
        "inverse_metric": m.ginv.as_dict(nonzero=True),
        "christoffel": connection.as_dict(nonzero=True),
        "curvature": curvature.as_dict(nonzero=True),
        "lowered_curvature": {key: value for key, value in curvature.lowered(m.g).items() if not value.is_zero()},
        "ricci": ric.as_dict(nonzero=True),
        "scalar_curvature": scalar_curvature(m, ric),
    }
    notes = [str(finding) for finding in audit_geometry()] if _is_generic(m.f) else []
    return Report(command=command, context=ctx.declarations(), result=result, discrepancy_notes=notes)


def cmd_check(args: argparse.Namespace, command: str) -> Report:
    ctx = build_context(args)
    X = VectorField(*(parse(text, ctx) for text in (args.A, args.B, args.C)))
    cand = SolitonCandidate(f=parse(args.f, ctx), X=X, lam=parse_lambda(args.lam, ctx), eps=parse_eps(args.eps))
    verdict = check(cand)
    result = {
        "f": cand.metric().f,
        "X": cand.field(),
        "lambda": cand.constant(),
        "eps": args.eps,
        "residual": dict(verdict.failing_components),
        "verdict": {
            "is_soliton": verdict.is_soliton,
            "failing_components": [label for label, _ in verdict.failing_components],
            "classification": verdict.classification,
            "is_einstein": verdict.is_einstein,
        },
    }
    exit_code = ExitCode.SUCCESS if verdict.is_soliton else ExitCode.VERIFIED_FALSE
    return Report(command=command, context=ctx.declarations(), result=result, exit=exit_code)


def cmd_conditions(args: argparse.Namespace, command: str) -> Report:
    shape, shape_context = condition_shape(args.family)
    ctx = field_context(build_context(args).merge(shape_context))
    if args.f is not None:
        shape = parse(args.f, ctx)
    conditions = general_conditions(shape, ctx, parse_eps(args.eps))
    result = {"family": args.family, "f": shape, "eps": args.eps, "conditions": list(conditions)}
    notes = [str(finding) for finding in audit_condition_system(args.family)] if args.f is None else []
    return Report(command=command, context=ctx.declarations(), result=result, discrepancy_notes=notes)


def _family_inputs(args: argparse.Namespace, ctx: Context, family: Family) -> FamilyInputs:
    """Generic symbols for every input the flags leave out."""
    eps = parse_eps(args.eps)
    reading = Reading(args.reading)
    generic = generic_inputs(family, eps, reading)
    functions = dict(generic.functions)
    parameters = dict(generic.parameters)
    for name in FAMILY_FUNCTIONS:
        text = getattr(args, name)
        if text is not None:
            functions[name] = parse(text, ctx)
    for name in FAMILY_PARAMETERS:
        text = getattr(args, name)
        if text is not None:
            parameters[name] = parse(text, ctx)
    return FamilyInputs(
        functions=functions, parameters=parameters, lam=parse_lambda(args.lam, ctx), eps=eps, reading=reading
    )


def cmd_construct(args: argparse.Namespace, command: str) -> Report:
    family = parse_family(args.family)
    ctx = build_context(args).merge(family_context(family))
    inputs = _family_inputs(args, ctx, family)
    cand = family_candidate(family, inputs)
    constraints = family_constraints(family, inputs)
    result: dict[str, Any] = {
        "family": family,
        "reading": inputs.reading,
        "eps": args.eps,
        "lambda": cand.constant(),
        "inputs": {
            **{name: inputs.function(name) for name in FUNCTIONS[family]},
            **{name: inputs.parameter(name) for name in PARAMETERS[family]},
        },
        "f": cand.metric().f,
        "X": cand.field(),
        "is_soliton": len(constraints) == 0,
        "constraints": list(constraints),
    }
    notes = [str(finding) for finding in audit_family(family, inputs)]
    exit_code = ExitCode.SUCCESS if len(constraints) == 0 else ExitCode.VERIFIED_FALSE
    return Report(command=command, context=ctx.declarations(), result=result, discrepancy_notes=notes, exit=exit_code)


def cmd_crosscheck(args: argparse.Namespace, command: str) -> Report:
    eps = parse_eps(args.eps)
    if eps is None:
        raise NumericError("crosscheck needs --eps 1 or --eps -1")
    ctx = build_context(args)
    f = parse(args.f, ctx)
    plan = SamplePlan(count=args.points, step=args.step, tolerance=args.tol, seed=args.seed)
    geometry = crosscheck_geometry(f, eps, plan)
    result: dict[str, Any] = {
        "f": geometry.f,
        "eps": args.eps,
        "plan": {"points": plan.count, "step": plan.step, "tolerance": plan.tolerance, "seed": plan.seed},
        "christoffel": geometry.christoffel,
        "ricci": geometry.ricci,
    }
    passed = geometry.passed
    if args.lam is not None:
        X = VectorField(*(parse(text, ctx) for text in (args.A, args.B, args.C)))
        soliton = crosscheck_residual(SolitonCandidate(f=f, X=X, lam=parse(args.lam, ctx), eps=eps), plan)
        result["residual"] = soliton
        passed = passed and soliton.passed
    elif any(text != "0" for text in (args.A, args.B, args.C)):
        logger.warning("A vector field without --lambda is ignored; pass --lambda to check the soliton residual")
    result["passed"] = passed
    exit_code = ExitCode.SUCCESS if passed else ExitCode.VERIFIED_FALSE
    return Report(command=command, context=ctx.declarations(), result=result, exit=exit_code)
