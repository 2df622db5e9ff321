"""Command dispatch and machine-readable output for problem files.

Commands: gsb, reduce, comprehensive, hilbert, divide, specialize, verify.
Output is a single self-describing document (schema "parastd/1", rationals
as strings) rendered as text or JSON. Exit codes: 0 success, 1 input
error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import inf
from random import Random

from .errors import ParastdError, ProblemSyntaxError
from .orders import is_global
from .polyring import render_ascalar, render_fraction, render_poly
from .division import divide, divide_series, divide_truncated
from .genstd import (
    PrimeContext,
    generic_basis,
    generic_reduced_basis,
    plain_staircase,
    verify_specialization,
)
from .comprehensive import comprehensive_basis
from .hilbert import strata_from_cells
from .problems import Problem, parse_point, parse_problem
from .sampling import variety_points

SCHEMA = "parastd/1"
COMMANDS = ("gsb", "reduce", "comprehensive", "hilbert", "divide",
            "specialize", "verify")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2


def _setting(problem: Problem, overrides: dict, key: str, default):
    if overrides.get(key) is not None:
        return overrides[key]
    return problem.options.get(key, default)


def _render(problem: Problem, f) -> str:
    return render_poly(f, problem.order, problem.vars, problem.params)


def _render_a(problem: Problem, s) -> str:
    return render_ascalar(s, problem.params)


def _staircase_doc(st) -> list:
    return [list(e) for e in st.generators]


def _point_doc(problem: Problem, point) -> dict:
    return {name: render_fraction(Fraction(v))
            for name, v in zip(problem.params, point)}


def _context(problem: Problem) -> PrimeContext:
    return PrimeContext.from_generators(problem.qgens, problem.m)


def _h_doc(problem: Problem, basis) -> dict:
    return {
        "h": _render_a(problem, basis.h_poly()),
        "h_factors": [{"factor": _render_a(problem, f), "power": k}
                      for f, k in basis.h_factors],
    }


def _default_trunc(problem: Problem, overrides, staircase) -> int:
    explicit = _setting(problem, overrides, "trunc_degree", None)
    if explicit is not None:
        return explicit
    return max(6, staircase.max_generator_degree())


def run(command: str, problem: Problem, overrides: dict | None = None) -> tuple[dict, int]:
    """Execute a command on a parsed problem; return (document, exit code)."""
    overrides = overrides or {}
    seed = _setting(problem, overrides, "seed", 0)
    doc = {"schema": SCHEMA, "command": command, "seed": seed, "status": "ok"}
    code = EXIT_OK

    if command == "gsb":
        basis = generic_basis(problem.ideal, problem.order, _context(problem))
        doc["result"] = {
            "generators": [_render(problem, g) for g in basis.gens],
            "staircase": _staircase_doc(basis.staircase),
            "q": [_render_a(problem, q) for q in problem.qgens],
            **_h_doc(problem, basis),
        }

    elif command == "reduce":
        basis = generic_basis(problem.ideal, problem.order, _context(problem))
        trunc = _default_trunc(problem, overrides, basis.staircase)
        red = generic_reduced_basis(basis, trunc)
        doc["result"] = {
            "generators": [_render(problem, g) for g in red.gens],
            "staircase": _staircase_doc(red.staircase),
            "trunc_degree": trunc,
            "q": [_render_a(problem, q) for q in problem.qgens],
            **_h_doc(problem, red),
        }

    elif command == "comprehensive":
        result = comprehensive_basis(
            problem.ideal, problem.order,
            max_depth=_setting(problem, overrides, "max_depth", 12),
            seed=seed)
        cells = []
        for entry in result.cells:
            cells.append({
                "vanish": [_render_a(problem, v) for v in entry.cell.vanish],
                "nonvanish": [_render_a(problem, v) for v in entry.cell.nonvanish],
                "basis": [_render(problem, g) for g in entry.basis.gens],
                "staircase": _staircase_doc(entry.staircase),
                "h": _render_a(problem, entry.basis.h_poly()),
            })
        doc["result"] = {"cells": cells, "covering": result.covering}

    elif command == "hilbert":
        result = comprehensive_basis(
            problem.ideal, problem.order,
            max_depth=_setting(problem, overrides, "max_depth", 12),
            seed=seed)
        strata = strata_from_cells(result)
        out = []
        for s in strata:
            out.append({
                "cells": [{
                    "vanish": [_render_a(problem, v) for v in c.vanish],
                    "nonvanish": [_render_a(problem, v) for v in c.nonvanish],
                } for c in s.cells],
                "hsf_values": s.data.values,
                "polynomial": s.data.polynomial_text(),
                "stabilizes_at": s.data.stabilization_index,
                "milnor": "infinite" if s.milnor is inf else str(s.milnor),
            })
        doc["result"] = {"strata": out}

    elif command == "divide":
        if len(problem.ideal) < 2:
            raise ProblemSyntaxError(
                "divide needs the dividend and at least one divisor in 'ideal'")
        f, G = problem.ideal[0], problem.ideal[1:]
        trunc = _setting(problem, overrides, "trunc_degree", None)
        if trunc is not None:
            res, mode = divide_series(f, G, problem.order, trunc), "series"
        elif is_global(problem.order) or (
                f.is_homogeneous() and all(g.is_homogeneous() for g in G)):
            res, mode = divide(f, G, problem.order), "full"
        else:
            res, mode = divide_truncated(f, G, problem.order), "truncated"
        doc["result"] = {
            "mode": mode,
            "quotients": [_render(problem, q) for q in res.quotients],
            "remainder": _render(problem, res.remainder),
            "cofactor_ok": res.cofactor_ok,
        }

    elif command == "specialize":
        point_text = overrides.get("point")
        if not point_text:
            raise ProblemSyntaxError("specialize needs --point a=..,b=..")
        point = parse_point(point_text, problem.params)
        spec = [f.specialize(point) for f in problem.ideal]
        nz = [f for f in spec if not f.is_zero()]
        st = plain_staircase(nz, problem.order) if nz else None
        doc["result"] = {
            "point": _point_doc(problem, point),
            "polynomials": [render_poly(f, problem.order, problem.vars, ())
                            for f in spec],
            "staircase": _staircase_doc(st) if st else [],
        }

    elif command == "verify":
        basis = generic_basis(problem.ideal, problem.order, _context(problem))
        count = _setting(problem, overrides, "samples", 10)
        rng = Random(seed)
        avoid = [basis.h_poly()]
        points = variety_points(problem.qgens, problem.m, rng, count,
                                avoid=avoid)
        if not points:
            raise ParastdError("no admissible sample points found")
        report = verify_specialization(basis, points)
        doc["result"] = {
            "staircase": _staircase_doc(basis.staircase),
            "samples": [{
                "point": _point_doc(problem, c.point),
                "ok": c.ok,
                "staircase": _staircase_doc(c.got),
                "note": c.note,
            } for c in report.checks],
            "ok": report.ok,
            "requested": count,
            "tested": len(report.checks),
        }
        if not report.ok:
            doc["status"] = "verification_failed"
            code = EXIT_VERIFY

    else:
        raise ProblemSyntaxError(f"unknown command {command!r}")

    return doc, code


# ---------------------------------------------------------------------------
# text rendering of documents


def _inline(value) -> str | None:
    """Compact rendering for lists of numbers (and lists thereof)."""
    if isinstance(value, list):
        parts = [_inline(v) for v in value]
        if all(p is not None for p in parts):
            return "[" + ", ".join(parts) + "]"
        return None
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return str(value)
    return None


def _text_lines(value, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for key in value:
            v = value[key]
            compact = _inline(v) if isinstance(v, list) else None
            if compact is not None:
                lines.append(f"{pad}{key}: {compact}")
            elif isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(v, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar_text(v)}")
    elif isinstance(value, list):
        for v in value:
            compact = _inline(v) if isinstance(v, list) else None
            if compact is not None:
                lines.append(f"{pad}- {compact}")
            elif isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}-")
                lines.extend(_text_lines(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar_text(v)}")
    else:
        lines.append(f"{pad}{_scalar_text(value)}")
    return lines


def _scalar_text(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (dict, list)) and not v:
        return "(none)"
    return str(v)


def render_document(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, sort_keys=True)
    return "\n".join(_text_lines(doc))


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="parastd",
        description="standard bases of parametric polynomial ideals")
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("problem", help="problem file")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--trunc", type=int, default=None,
                       help="series truncation degree")
        p.add_argument("--max-depth", type=int, default=None)
        p.add_argument("--samples", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--point", default=None,
                       help="parameter point, e.g. a=2,b=-1/3")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        with open(args.problem, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        print(f"error[input]: {e}", file=sys.stderr)
        return EXIT_INPUT
    overrides = {
        "trunc_degree": args.trunc,
        "max_depth": args.max_depth,
        "samples": args.samples,
        "seed": args.seed,
        "point": args.point,
    }
    try:
        problem = parse_problem(text)
        doc, code = run(args.command, problem, overrides)
    except ProblemSyntaxError as e:
        print(f"error[input]: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ParastdError as e:
        print(f"error[{type(e).__name__}]: {e}", file=sys.stderr)
        return EXIT_INPUT
    print(render_document(doc, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
