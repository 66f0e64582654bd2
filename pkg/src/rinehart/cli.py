"""Command-line interface: parse a problem file, run one command, emit a
deterministic report.

Commands: validate | cohomology | invariants | hs | env | total.
Exit codes: 0 ok, 1 validation or certificate failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .algebra import validate_algebra
from .algebroid import invariants, validate_algebroid, validate_representation
from .cecomplex import ce_cohomology, total_complex
from .complexes import total_cohomology_dims
from .enveloping import ext_dims, hom_complex_iso, rinehart_complex, truncated_enveloping
from .errors import EngineError, ParseError
from .extensions import extension_from_k_indices, validate_extension
from .hochschild import hs_report
from .problems import ProblemFile, parse, problem_hash

COMMANDS = ("validate", "cohomology", "invariants", "hs", "env", "total")


def _violation_strings(vs):
    return [v.describe() for v in vs]


def _validate_all(problem: ProblemFile):
    out = {}
    out["algebra"] = _violation_strings(validate_algebra(problem.algebra))
    out["algebroid"] = _violation_strings(validate_algebroid(problem.algebroid))
    rep = problem.representation()
    out["representation"] = _violation_strings(
        validate_representation(problem.algebroid, rep))
    if problem.complex is not None:
        out["complex"] = _violation_strings(problem.complex.validate(problem.algebroid))
    if problem.extension is not None:
        E = extension_from_k_indices(problem.algebroid,
                                     problem.extension["k_indices"],
                                     problem.extension.get("splitting"))
        out["extension"] = _violation_strings(validate_extension(E))
    return out


def _clean(validation):
    return all(not v for v in validation.values())


def _fmt_vec(field, v):
    return [field.fmt(x) for x in v]


def _pq_table(dims_dict):
    return {f"{p},{q}": d for (p, q), d in sorted(dims_dict.items())}


def run(command: str, problem: ProblemFile, options: dict | None = None) -> tuple[dict, int]:
    """Execute one command; returns (report dict, exit code)."""
    options = dict(options or {})
    field = problem.field
    report = {
        "command": command,
        "engine_version": __version__,
        "field": field.describe(),
        "input_hash": problem_hash(problem),
        "options": {k: v for k, v in sorted(options.items())},
    }
    validation = _validate_all(problem)
    report["validation"] = validation
    if not _clean(validation):
        report["status"] = "violations"
        return report, 1
    if command == "validate":
        report["status"] = "ok"
        return report, 0
    rep = problem.representation()
    try:
        if command == "cohomology":
            table = ce_cohomology(problem.algebroid, rep)
            report["results"] = {
                "dims": [d for _, d, _ in table],
                "representatives": {str(p): [_fmt_vec(field, v) for v in reps]
                                    for p, _, reps in table},
            }
        elif command == "invariants":
            inv = invariants(problem.algebroid, rep)
            report["results"] = {
                "dim": inv.dim,
                "basis": [_fmt_vec(field, v) for v in inv.basis],
            }
        elif command == "hs":
            if problem.extension is None:
                raise ParseError("command 'hs' needs an extension block")
            E = extension_from_k_indices(problem.algebroid,
                                         problem.extension["k_indices"],
                                         problem.extension.get("splitting"))
            r_max = options.get("max_page", problem.options.get("max_page"))
            hp, e1, e2, ft = hs_report(E, rep, r_max)
            report["results"] = {
                "pages": {str(page.r): _pq_table(page.dims()) for page in hp.pages},
                "e_infinity": _pq_table(hp.einf.dims()),
                "stable_at": hp.stable_at,
                "convergence": {str(n): {"einf_total": a, "h_total": b}
                                for n, (a, b) in sorted(hp.convergence.items())},
                "graded_ok": hp.filtration.graded_ok,
                "e1_certificate": {f"{p},{q}": list(v) for (p, q), v in sorted(e1.table.items())},
                "e2_certificate": {f"{p},{q}": list(v) for (p, q), v in sorted(e2.table.items())},
                "five_term": {
                    "node_dims": list(ft.node_dims),
                    "exact": list(ft.exact),
                },
            }
        elif command == "env":
            d = options.get("degree", problem.options.get("degree", 3))
            U = truncated_enveloping(problem.algebroid, d)
            _, exact_report = rinehart_complex(problem.algebroid, d, U=U)
            hom_complex_iso(problem.algebroid, rep, d, U=U)
            exts = ext_dims(problem.algebroid, rep, d)
            table = U.table()
            report["results"] = {
                "degree": d,
                "pbw_dim": U.dim,
                "pbw_basis": [[a, list(alpha)] for a, alpha in U.basis],
                "multiplication_table": {
                    f"{i},{j}": {"overflow": cell["overflow"],
                                 "terms": None if cell["terms"] is None else
                                 [[t, field.fmt(c)] for t, c in cell["terms"]]}
                    for (i, j), cell in sorted(table.items())},
                "rinehart_exact_levels": sorted({t for (t, _) in exact_report.homology}),
                "hom_iso": "ok",
                "ext_dims": [d_ for _, d_ in exts],
                "ext_equals_ce": True,
            }
        elif command == "total":
            if problem.complex is None:
                raise ParseError("command 'total' needs a complex block")
            cx = total_complex(problem.algebroid, problem.complex)
            report["results"] = {"dims": total_cohomology_dims(cx)}
        else:
            raise ParseError(f"unknown command {command!r}")
    except ParseError:
        raise
    except EngineError as e:
        report["status"] = "mismatch"
        report["error"] = {"type": type(e).__name__, "message": str(e)}
        return report, 1
    report["status"] = "ok"
    return report, 0


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"


def _render_lines(value, indent, key=None):
    pad = "  " * indent
    label = f"{pad}{key}: " if key is not None else pad
    if isinstance(value, dict):
        lines = [f"{pad}{key}:"] if key is not None else []
        for k in sorted(value):
            lines.extend(_render_lines(value[k], indent + (1 if key is not None else 0), k))
        return lines
    if isinstance(value, list):
        return [label + json.dumps(value)]
    return [label + json.dumps(value)]


def render_text(report: dict) -> str:
    return "\n".join(_render_lines(report, 0)) + "\n"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="rinehart",
        description="Exact cohomology of Lie-Rinehart algebroids: validation, "
                    "CE cohomology, enveloping-algebra checks, spectral sequences.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("problem", help="path to a JSON problem file")
    ap.add_argument("--field", default=None, metavar="rational|P",
                    help="override the problem's field ('rational' or a prime)")
    ap.add_argument("--degree", type=int, default=None,
                    help="PBW cutoff for 'env' (default: problem option or 3)")
    ap.add_argument("--max-page", type=int, default=None,
                    help="last page for 'hs' (default: filtration length + 1)")
    ap.add_argument("--format", choices=("json", "text"), default="text")
    args = ap.parse_args(argv)
    try:
        if args.field is None:
            problem = parse(args.problem)
        else:
            from .problems import from_dict
            with open(args.problem, "r", encoding="utf-8") as fh:
                data = json.load(fh)
            data["field"] = {"type": "rational"} if args.field == "rational" \
                else {"type": "prime", "p": int(args.field)}
            problem = from_dict(data)
    except (ParseError, OSError, ValueError) as e:
        sys.stderr.write(f"input error: {e}\n")
        return 2
    options = {}
    if args.degree is not None:
        options["degree"] = args.degree
    if args.max_page is not None:
        options["max_page"] = args.max_page
    try:
        report, code = run(args.command, problem, options)
    except ParseError as e:
        sys.stderr.write(f"input error: {e}\n")
        return 2
    out = render_json(report) if args.format == "json" else render_text(report)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
