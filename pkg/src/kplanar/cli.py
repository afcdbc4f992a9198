"""Command-line adapter.  Every subcommand parses flags, calls the library and prints a report.

Exit codes: 0 success / all checks pass, 1 a check failed, 2 usage error,
3 the input file could not be read or is not a valid drawing.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import bounds, constructions, discharging, experiments, graph
from .drawing import (
    DegenerateDrawing,
    InvalidDrawingFile,
    drawing_from_json,
    drawing_to_json,
    local_crossing_number,
    planarize,
    to_svg,
)

SCHEMA_VERSION = 1

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3

CHECKS = ("girth", "c3", "c4", "kplanar", "density")
DIRECTION_FLAGS = {"U": "density_upper", "L": "density_lower", "crU": "cr_upper", "crL": "cr_lower"}


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kplanar", description="Constructions, verifiers and bounds for k-planar graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("generate", help="write a construction drawing as JSON")
    g.add_argument("--family", required=True, choices=constructions.FAMILIES)
    g.add_argument("--rows", type=int, required=True)
    g.add_argument("--cols", type=int, required=True)
    g.add_argument("--wrap", action="store_true", help="close the construction into a cylinder")
    g.add_argument("--out", required=True)
    g.add_argument("--svg")

    v = sub.add_parser("verify", help="check girth, cycles, k-planarity and density of a drawing")
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--checks", default=",".join(CHECKS))
    v.add_argument("--expect-k", type=int)
    v.add_argument("--expect-girth", type=int)

    b = sub.add_parser("bounds", help="evaluate a density or crossing-number bound")
    b.add_argument("--k", required=True, help="integer, or 'k' for the general form")
    b.add_argument("--setting", required=True, choices=bounds.SETTINGS)
    b.add_argument("--n", type=int)
    b.add_argument("--m", type=int)
    b.add_argument("--direction", default="U", choices=tuple(DIRECTION_FLAGS))
    b.add_argument("--format", default="json", choices=("json", "text"))

    t = sub.add_parser("table", help="reproduce both bound tables")
    t.add_argument("--format", default="text", choices=("json", "text"))

    d = sub.add_parser("discharge", help="charge ledger and discharge feasibility")
    d.add_argument("--in", dest="infile", required=True)
    d.add_argument("--alpha", type=_fraction, required=True)
    d.add_argument("--density-formula", type=int, metavar="T")
    d.add_argument("--ledger", action="store_true", help="include the per-face ledger")

    s = sub.add_parser("sample", help="Monte-Carlo induced subgraph sampling")
    s.add_argument("--in", dest="infile", required=True)
    s.add_argument("--p", type=_fraction, required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--csv", help="write per-trial statistics here")

    a = sub.add_parser("audit", help="greedy crossing removal against k m - sum mu_i(n)")
    a.add_argument("--in", dest="infile", required=True)
    a.add_argument("--mu-class", required=True, choices=("c3free", "c4free", "girth5"))
    a.add_argument("--k", type=int, required=True)
    return p


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        return drawing_from_json(data)
    except (OSError, json.JSONDecodeError, InvalidDrawingFile, DegenerateDrawing) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _emit(out, payload: dict) -> None:
    out.write(json.dumps({"schema_version": SCHEMA_VERSION, **payload}, indent=2, sort_keys=True) + "\n")


def cmd_generate(args, out) -> int:
    spec = constructions.ConstructionSpec(args.family, args.rows, args.cols, args.wrap)
    try:
        d, cert = constructions.generate(spec)
    except constructions.InvalidSpec as exc:
        raise UsageError(str(exc)) from exc
    with open(args.out, "w", encoding="utf-8") as fh:
        json.dump(drawing_to_json(d), fh)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(to_svg(d))
    _emit(out, {
        "command": "generate",
        "family": spec.family,
        "template_version": constructions.TEMPLATE_VERSION,
        "n": cert.vertex_count,
        "m": cert.edge_count,
        "expected_k": cert.expected_k,
        "asymptotic_density": str(cert.asymptotic_density),
    })
    return EXIT_OK


def _setting_of(g: graph.Graph) -> str:
    gi = graph.girth(g)
    if gi >= 5:
        return "girth5"
    if not graph.has_c4(g):
        return "c4free"
    if not graph.has_c3(g):
        return "c3free"
    return "unrestricted"


def cmd_verify(args, out) -> int:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    bad = [c for c in checks if c not in CHECKS]
    if bad:
        raise UsageError(f"unknown checks: {', '.join(bad)}")
    d = _load(args.infile)
    g = d.graph
    results = {}
    lcr: Optional[int] = None
    if "kplanar" in checks or "density" in checks:
        try:
            lcr = local_crossing_number(d)
        except DegenerateDrawing as exc:
            raise InputError(str(exc)) from exc
    for c in checks:
        if c == "girth":
            gi = graph.girth(g)
            want = args.expect_girth
            results[c] = {"girth": None if gi == float("inf") else int(gi), "pass": want is None or gi >= want}
        elif c == "c3":
            tri = graph.find_c3(g)
            results[c] = {"witness": tri, "pass": tri is None}
        elif c == "c4":
            quad = graph.find_c4(g)
            results[c] = {"witness": quad, "pass": quad is None}
        elif c == "kplanar":
            results[c] = {"local_crossing_number": lcr, "pass": args.expect_k is None or lcr <= args.expect_k}
        else:
            rep = graph.density_report(g)
            row = {"n": rep.n, "m": rep.m, "m_over_n": str(rep.m_over_n), "pass": True}
            k = args.expect_k if args.expect_k is not None else lcr
            try:
                bc = bounds.density_upper_constant(k, _setting_of(g))
            except (bounds.Unavailable, KeyError):
                bc = None
            if bc is not None and bc.affine is not None and bc.kind == "rational":
                limit = bc.affine(rep.n)
                row.update({"upper_bound": str(limit), "pass": rep.m <= limit})
            results[c] = row
    ok = all(r["pass"] for r in results.values())
    _emit(out, {"command": "verify", "input": args.infile, "checks": results, "pass": ok})
    return EXIT_OK if ok else EXIT_FAIL


def cmd_bounds(args, out) -> int:
    if args.k == "k":
        k = None
    else:
        try:
            k = int(args.k)
        except ValueError as exc:
            raise UsageError("--k takes an integer or 'k'") from exc
    spec = bounds.BoundSpec(k, args.setting, DIRECTION_FLAGS[args.direction])
    try:
        rep = bounds.evaluate(spec, args.n, args.m)
    except bounds.Unavailable as exc:
        _emit(out, {"command": "bounds", "available": False, "reason": str(exc)})
        return EXIT_FAIL
    body = rep.to_json()
    if args.format == "json":
        _emit(out, {"command": "bounds", "available": True, **body})
    else:
        out.write(f"{spec.direction} k={body['k']} {spec.setting}: {rep.constant.describe()}\n")
        if "bound_decimal" in body:
            out.write(f"  at n={args.n}: {body['bound_decimal']}\n")
    return EXIT_OK


def cmd_table(args, out) -> int:
    report = bounds.table_report()
    if args.format == "json":
        _emit(out, {"command": "table", **report})
    else:
        out.write(bounds.render_text(report))
    return EXIT_OK


def cmd_discharge(args, out) -> int:
    d = _load(args.infile)
    try:
        p = planarize(d)
    except (DegenerateDrawing, ValueError) as exc:
        raise InputError(str(exc)) from exc
    ledger = discharging.build_ledger(p, args.alpha)
    cs = discharging.charge_sum_check(ledger)
    payload = {"command": "discharge", "alpha": str(args.alpha), "census": ledger.census(), "charge_sum": cs.to_json()}
    ok = cs.passed
    try:
        plan = discharging.discharge_feasibility(ledger)
        payload["feasible"] = True
        payload["plan"] = plan.to_json()
        payload["implied_bound"] = str(2 / args.alpha * (ledger.n - 2))
    except discharging.Infeasible as exc:
        payload["feasible"] = False
        payload["unsatisfied_faces"] = exc.unsatisfied
        payload["shortfall"] = str(exc.shortfall)
        ok = False
    if args.density_formula is not None:
        rep = discharging.density_formula_check(p, args.density_formula)
        payload["density_formula"] = rep.to_json()
        ok = ok and rep.passed
    if args.ledger:
        payload["ledger"] = ledger.to_json()["faces"]
    _emit(out, payload)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_sample(args, out) -> int:
    d = _load(args.infile)
    try:
        cfg = experiments.SamplingConfig(args.p, args.trials, args.seed)
    except experiments.InvalidConfig as exc:
        raise UsageError(str(exc)) from exc
    try:
        rep = experiments.sample_induced(d, cfg, keep_trials=bool(args.csv))
    except (experiments.AdjacentCrossingPresent, DegenerateDrawing) as exc:
        raise InputError(str(exc)) from exc
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(rep.per_trial_csv())
    _emit(out, {"command": "sample", **rep.to_json()})
    return EXIT_OK if rep.within_tolerance else EXIT_FAIL


def cmd_audit(args, out) -> int:
    d = _load(args.infile)
    try:
        mu = bounds.mu_list(args.mu_class, args.k)
    except bounds.Unavailable as exc:
        raise UsageError(str(exc)) from exc
    try:
        rep = experiments.removal_audit(d, mu)
    except DegenerateDrawing as exc:
        raise InputError(str(exc)) from exc
    _emit(out, {"command": "audit", "mu_class": args.mu_class, **rep.to_json()})
    return EXIT_OK if rep.passed else EXIT_FAIL


COMMANDS = {
    "generate": cmd_generate,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
    "table": cmd_table,
    "discharge": cmd_discharge,
    "sample": cmd_sample,
    "audit": cmd_audit,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except InputError as exc:
        err.write(f"invalid input: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
