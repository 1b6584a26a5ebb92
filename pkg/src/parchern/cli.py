"""Command-line front end.

Three commands, all exact and deterministic:

    parchern compute  <file> [--method=integral|general|rr|lowdegree|all]
                             [--emit=json|text]
    parchern verify   <file>
    parchern selftest [--seed N] [--cases K] [--max-divisors N]
                      [--max-risers N] [--max-summands N] [--timing]

``compute`` evaluates the requested route(s) on one bundle description
and prints the graded components; ``verify`` runs the full cross-check
(all four routes, low-degree forms, the Koszul identity on every tread
multi-index, and the Grothendieck relation) and prints the report;
``selftest`` cross-checks a batch of generated instances, one JSON line
each, with a human summary on stderr.

Exit codes: 0 when everything agrees, 2 on an exact disagreement
(diagnostic included in the output), 1 for unreadable or malformed
input.  Output on stdout is byte-identical across runs for identical
inputs; anything that varies (timing) goes to stderr or behind the
opt-in ``--timing`` flag.
"""

from __future__ import annotations

import argparse
import json
import sys
from time import perf_counter

from .engine import ChernReport, build_report, ch_par_general, ch_par_integral, ch_par_rr
from .lowdeg import low_degree
from .oracle import InstanceLimits, cross_check, random_instance
from .serialize import BundleSpecError, load_bundle

_ROUTES = {"integral": ch_par_integral, "general": ch_par_general, "rr": ch_par_rr}


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; the contract reserves 2 for
    disagreement, so usage errors become exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load(path: str):
    try:
        return load_bundle(path)
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return None
    except BundleSpecError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return None


def _by_grade(cls) -> dict[str, str]:
    out = {}
    for k in range(cls.model.truncation_degree + 1):
        part = cls.grade(k)
        if not part.is_zero():
            out[f"ch{k}"] = part.to_text()
    return out


def _compute_json(report: ChernReport) -> dict:
    methods: dict = {name: {"by_grade": _by_grade(cls), "terms": cls.terms_json()}
                     for name, cls in report.methods.items()}
    if report.low_degree is not None:
        methods["lowdegree"] = {"by_grade": {f"ch{k}": cls.to_text()
                                             for k, cls in sorted(report.low_degree.items())
                                             if not cls.is_zero()}}
    out: dict = {"truncation_degree": report.truncation_degree,
                 "rank": report.rank,
                 "methods": methods}
    if report.notes:
        out["notes"] = list(report.notes)
    out["agreement"] = report.agreement
    out["first_discrepancy"] = (report.first_discrepancy.to_json_dict()
                                if report.first_discrepancy else None)
    return out


def _compute_text(report: ChernReport) -> str:
    lines = [f"truncation degree: {report.truncation_degree}",
             f"rank: {report.rank}"]
    sections: list[tuple[str, dict[str, str]]] = [
        (name, _by_grade(cls)) for name, cls in report.methods.items()]
    if report.low_degree is not None:
        sections.append(("lowdegree", {f"ch{k}": cls.to_text()
                                       for k, cls in sorted(report.low_degree.items())
                                       if not cls.is_zero()}))
    label_width = max((len(label) for _, grades in sections for label in grades),
                      default=0)
    for name, grades in sections:
        lines.append(f"{name}:")
        for label, text in grades.items():
            lines.append(f"  {label.ljust(label_width)}  {text}")
        if not grades:
            lines.append("  (zero)")
    for note in report.notes:
        lines.append(f"note: {note}")
    lines.append(f"agreement: {'yes' if report.agreement else 'no'}")
    if report.first_discrepancy:
        d = report.first_discrepancy
        lines.append(f"disagreement: {d.left} vs {d.right} at {d.monomial}: "
                     f"difference {d.difference}")
    return "\n".join(lines)


def cmd_compute(args) -> int:
    bundle = _load(args.file)
    if bundle is None:
        return 1
    methods = {name: route(bundle) for name, route in _ROUTES.items()
               if args.method in (name, "all")}
    parts = low_degree(bundle) if args.method in ("lowdegree", "all") else None
    notes = []
    if parts is not None and bundle.model.truncation_degree < 3:
        notes.append(f"ch3 omitted: truncation degree "
                     f"{bundle.model.truncation_degree} < 3")
    report = build_report(bundle, methods, parts, notes=notes)
    if args.emit == "json":
        print(json.dumps(_compute_json(report), indent=2))
    else:
        print(_compute_text(report))
    return 0 if report.agreement else 2


def cmd_verify(args) -> int:
    bundle = _load(args.file)
    if bundle is None:
        return 1
    report = cross_check(bundle)
    print(json.dumps(report.to_json_dict(), indent=2))
    return 0 if report.agreement else 2


def cmd_selftest(args) -> int:
    try:
        limits = InstanceLimits(max_divisors=args.max_divisors,
                                max_risers=args.max_risers,
                                max_summands=args.max_summands)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    limits_json = limits.to_json_dict()
    failures = 0
    max_ms = 0.0
    started = perf_counter()
    for k in range(args.cases):
        seed = args.seed + k
        t0 = perf_counter()
        report = cross_check(random_instance(seed, limits))
        ms = (perf_counter() - t0) * 1000.0
        max_ms = max(max_ms, ms)
        line: dict = {"seed": seed, "limits": limits_json,
                      "agreement": report.agreement}
        if not report.agreement:
            failures += 1
            line["first_discrepancy"] = report.first_discrepancy.to_json_dict()
        if args.timing:
            line["ms"] = round(ms, 3)
        print(json.dumps(line, separators=(",", ":")))
    total = perf_counter() - started
    print(f"selftest: {args.cases - failures}/{args.cases} agree; "
          f"max instance {max_ms:.1f} ms, total {total:.2f} s", file=sys.stderr)
    return 0 if failures == 0 else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="parchern",
                     description="Exact parabolic Chern characters, four ways.")
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="evaluate one bundle description")
    compute.add_argument("file", help="bundle description (.json or .toml)")
    compute.add_argument("--method", default="all",
                         choices=["integral", "general", "rr", "lowdegree", "all"])
    compute.add_argument("--emit", default="json", choices=["json", "text"])
    compute.set_defaults(func=cmd_compute)

    verify = sub.add_parser("verify", help="full cross-check of one bundle")
    verify.add_argument("file", help="bundle description (.json or .toml)")
    verify.set_defaults(func=cmd_verify)

    selftest = sub.add_parser("selftest", help="cross-check generated instances")
    selftest.add_argument("--seed", type=int, default=0)
    selftest.add_argument("--cases", type=int, default=20)
    selftest.add_argument("--max-divisors", type=int, default=3)
    selftest.add_argument("--max-risers", type=int, default=3)
    selftest.add_argument("--max-summands", type=int, default=4)
    selftest.add_argument("--timing", action="store_true",
                          help="include per-instance milliseconds (non-reproducible)")
    selftest.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
