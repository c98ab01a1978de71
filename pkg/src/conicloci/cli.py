"""Command line entry point: verify, sweep, props, show."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .charts import ChartError, as_fchart, as_lchart, f_matrix, lambda_matrix, pullback
from .loci import PlaneType, VarietySpec, ideal_SY, ideal_TG, ideal_TY
from .poly import ParseError
from .verify.core import all_tasks, run_tasks
from .verify.props import props
from .verify.report import document, props_markdown, to_json, to_markdown

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _spec(args) -> VarietySpec:
    if args.variety == "custom":
        if not args.hyperplanes:
            raise UsageError("--variety custom needs --hyperplanes FILE")
        try:
            return VarietySpec.from_file(args.hyperplanes)
        except OSError as exc:
            raise UsageError(f"cannot read {args.hyperplanes}: {exc}") from None
    if args.hyperplanes:
        raise UsageError("--hyperplanes only applies to --variety custom")
    return VarietySpec.standard(args.variety)


def _types(text: str) -> list[PlaneType]:
    return list(PlaneType) if text == "both" else [PlaneType.parse(text)]


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _render_reports(args, spec, reports) -> int:
    doc = document(spec, reports)
    _emit(to_json(doc) if args.format == "json" else to_markdown(doc), args.out)
    return EXIT_OK if doc["summary"]["pass"] else EXIT_FAIL


def cmd_verify(args) -> int:
    spec = _spec(args)
    lcharts = [args.lambda_] if args.lambda_ is not None else None
    fcharts = [args.fpivots] if args.fpivots else None
    tasks = all_tasks(spec, lcharts, fcharts, _types(args.type))
    return _render_reports(args, spec, run_tasks(tasks, args.jobs))


def cmd_sweep(args) -> int:
    spec = _spec(args)
    return _render_reports(args, spec, run_tasks(all_tasks(spec, ptypes=_types(args.type)), args.jobs))


def cmd_props(args) -> int:
    suites = props(args.seed, args.trials)
    if args.format == "json":
        import json
        text = json.dumps({"seed": args.seed, "trials": args.trials,
                           "suites": [s.as_dict() for s in suites],
                           "pass": all(s.ok for s in suites)}, indent=2) + "\n"
    else:
        text = props_markdown(suites)
    _emit(text, args.out)
    return EXIT_OK if all(s.ok for s in suites) else EXIT_FAIL


def _matrix_text(rows) -> str:
    cells = [[str(x) for x in r] for r in rows]
    width = max(len(c) for r in cells for c in r)
    return "\n".join("  [" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)


def cmd_show(args) -> int:
    spec = _spec(args)
    L = as_lchart(args.chart)
    lines = [f"Λ chart {L.column}:", _matrix_text(lambda_matrix(L))]
    for h in spec.hyperplanes:
        lines.append(f"pullback of {h}: {pullback(h, L)}")
    if args.fpivots:
        F = as_fchart(args.fpivots)
        lines += [f"F chart {{{F.key}}}:", _matrix_text(f_matrix(F))]
        lines.append("I_S(Y) = <" + ", ".join(ideal_SY(L, F, spec).texts()) + ">")
        for t in _types(args.type):
            lines.append(f"I_T(G) {t} = <" + ", ".join(ideal_TG(L, F, t).groebner().texts()) + ">")
            lines.append(f"I_T(Y) {t} = <" + ", ".join(ideal_TY(L, F, t, spec).groebner().texts()) + ">")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _common(p: argparse.ArgumentParser, chart_args: bool) -> None:
    p.add_argument("--variety", choices=["y5", "y4", "g", "custom"], default="y5")
    p.add_argument("--hyperplanes", metavar="FILE", help="one hyperplane per line, e.g. 'p12 - p03'")
    p.add_argument("--type", choices=["s31", "s22", "both"], default="both")
    if chart_args:
        p.add_argument("--lambda", dest="lambda_", type=int, metavar="K",
                       help="non-pivot column of the Λ chart (0..4)")
        p.add_argument("--fpivots", metavar="I,J,K", help="pivot indices of the F chart, e.g. 01,03,13")
    p.add_argument("--format", choices=["json", "md"], default="json")
    p.add_argument("--out", metavar="PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="conicloci",
                                     description="Exact chart-level certification of conic loci.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="certify selected charts")
    _common(p, True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="certify all 200 chart tasks")
    _common(p, False)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("props", help="run the sampling suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--format", choices=["json", "md"], default="md")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("show", help="print chart matrices, pullbacks and ideals")
    p.add_argument("--chart", required=True, metavar="K", help="Λ chart column")
    p.add_argument("--fpivots", metavar="I,J,K")
    p.add_argument("--variety", choices=["y5", "y4", "g", "custom"], default="y5")
    p.add_argument("--hyperplanes", metavar="FILE")
    p.add_argument("--type", choices=["s31", "s22", "both"], default="both")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_show)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, ChartError, ValueError) as exc:
        print(f"conicloci: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
