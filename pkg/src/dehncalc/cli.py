"""Command-line interface.

Verbs: distance, classify, cover, cable, family-list, family-fill,
family-verify, family-sweep, oracle.  Every verb emits one report
(--format json|tsv) and exits 0 on ok, 1 on any check failure, 2 on
usage errors, and 3 on indeterminate-only outcomes.
"""

from __future__ import annotations

import argparse
import random
import re
import sys

from .cables import CableContext, describe_cable_fill, meridian_distance_cabled
from .cover import double_branched_cover
from .diagrams import oracle_cross_check, random_montesinos
from .families import (DomainError, FamilySpec, Status, evaluate_filling,
                       family_catalog, get_family, sweep_point_reports)
from .links import link_determinant
from .manifolds import (CableSpace, FiniteType, IndeterminateError,
                        classify_finite_type, h1)
from .parsing import ParseError, parse_link_expr, parse_manifold_expr
from .reports import (FORMATS, Report, STATUS_FAIL, STATUS_INDETERMINATE,
                      STATUS_OK, combine_status, emit_report, exit_code)
from .slopes import distance, format_slope, parse_slope

_RANGE = re.compile(r"^(-?\d+)(?:\.\.(-?\d+))?$")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # Let negative slopes ("-1/2") and ranges ("-4..-2") through as
        # values; stock argparse only exempts plain negative numbers.
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+|\.\.-?\d+)?$")

    def error(self, message: str):
        raise _UsageError(message)


def _parse_range(text: str) -> tuple[int, int]:
    m = _RANGE.match(text)
    if not m:
        raise _UsageError(f"expected N or A..B, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise _UsageError(f"empty range {text!r}")
    return lo, hi


def _family_ranges(args) -> tuple[FamilySpec, dict]:
    spec = get_family(args.family)
    ranges: dict[str, tuple[int, int]] = {}
    for name in ("p", "q"):
        value = getattr(args, name, None)
        if name in spec.param_names:
            if value is None:
                raise _UsageError(f"family {spec.name} needs --{name}")
            ranges[name] = _parse_range(value)
        elif value is not None:
            raise _UsageError(f"family {spec.name} takes no parameter {name}")
    return spec, ranges


def _points(spec: FamilySpec, ranges: dict) -> list[dict]:
    points = []

    def rec(index: int, acc: dict) -> None:
        if index == len(spec.param_names):
            if spec.in_domain(**acc):
                points.append(dict(acc))
            return
        name = spec.param_names[index]
        lo, hi = ranges[name]
        for value in range(lo, hi + 1):
            acc[name] = value
            rec(index + 1, acc)
            del acc[name]

    rec(0, {})
    return points


def _params_text(spec: FamilySpec, params: dict) -> str:
    return ",".join(f"{n}={params[n]}" for n in spec.param_names)


def _h1_order(m) -> int | None:
    try:
        res = h1(m)
    except IndeterminateError:
        return None
    return res.order


# ---------------------------------------------------------------------------
# Verb handlers: each returns a Report


def _cmd_distance(args, command: str) -> Report:
    r1 = parse_slope(args.r1)
    r2 = parse_slope(args.r2)
    row = {"r1": format_slope(r1), "r2": format_slope(r2),
           "distance": distance(r1, r2)}
    return Report(command, STATUS_OK, (row,), ("r1", "r2", "distance"))


def _cmd_classify(args, command: str) -> Report:
    m = parse_manifold_expr(args.manifold)
    ft = classify_finite_type(m)
    row = {"manifold": str(m), "finite_type": ft.value, "h1_order": _h1_order(m)}
    status = STATUS_INDETERMINATE if ft is FiniteType.UNKNOWN else STATUS_OK
    return Report(command, status, (row,), ("manifold", "finite_type", "h1_order"))


def _cmd_cover(args, command: str) -> Report:
    link = parse_link_expr(args.link)
    m = double_branched_cover(link)
    res = h1(m)
    row = {"link": str(link), "manifold": str(m),
           "determinant": link_determinant(link),
           "h1_order": res.order, "h1_free_rank": res.free_rank}
    return Report(command, STATUS_OK, (row,),
                  ("link", "manifold", "determinant", "h1_order", "h1_free_rank"))


def _cmd_cable(args, command: str) -> Report:
    ctx = CableContext(CableSpace(args.s, args.t), parse_slope(args.gamma))
    r = parse_slope(args.r)
    res = describe_cable_fill(ctx, r)
    row = {"s": ctx.space.s, "t": ctx.space.t,
           "cabling_slope": format_slope(ctx.cabling_slope),
           "r": format_slope(r),
           "distance_from_cabling": res.distance_from_cabling,
           "pushforward_distance": meridian_distance_cabled(
               ctx.space.t, res.distance_from_cabling),
           "manifold": str(res.manifold), "extension": res.extension}
    return Report(command, STATUS_OK, (row,),
                  ("s", "t", "cabling_slope", "r", "distance_from_cabling",
                   "pushforward_distance", "manifold", "extension"))


def _cmd_family_list(args, command: str) -> Report:
    rows = []
    for spec in family_catalog():
        rows.append({
            "name": spec.name,
            "params": ",".join(spec.param_names),
            "domain": spec.domain_doc,
            "claims": ", ".join(format_slope(c.slope) for c in spec.claims),
            "designated_pair": (
                "" if spec.designated_pair is None else
                ",".join(format_slope(r) for r in spec.designated_pair)),
            "edges": "; ".join(
                e.target if e.slope_text is None else f"{e.target}@{e.slope_text}"
                for e in spec.edges),
            "description": spec.description,
        })
    return Report(command, STATUS_OK, tuple(rows),
                  ("name", "params", "domain", "claims", "designated_pair",
                   "edges", "description"))


def _cmd_family_fill(args, command: str) -> Report:
    spec, ranges = _family_ranges(args)
    r = parse_slope(args.slope)
    claim = spec.claim_at(r)
    rows = []
    for params in _points(spec, ranges):
        m = evaluate_filling(spec.name, params, r)
        rows.append({"family": spec.name, "params": _params_text(spec, params),
                     "slope": format_slope(r), "formula": claim.formula,
                     "manifold": str(m)})
    if not rows:
        raise _UsageError("no in-domain parameter points in the given ranges")
    return Report(command, STATUS_OK, tuple(rows),
                  ("family", "params", "slope", "formula", "manifold"))


_STATUS_TEXT = {Status.PASS: "pass", Status.FAIL: "fail",
                Status.INDETERMINATE: "indeterminate"}
_REPORT_STATUS = {Status.PASS: STATUS_OK, Status.FAIL: STATUS_FAIL,
                  Status.INDETERMINATE: STATUS_INDETERMINATE}


def _cmd_family_verify(args, command: str) -> Report:
    spec, ranges = _family_ranges(args)
    reports = sweep_point_reports(spec.name, ranges)
    if not reports:
        raise _UsageError("no in-domain parameter points in the given ranges")
    rows = []
    for rep in reports:
        for check in rep.checks:
            rows.append({"family": spec.name,
                         "params": _params_text(spec, rep.params),
                         "check": check.kind, "detail": check.detail,
                         "status": _STATUS_TEXT[check.status],
                         "observed": check.observed})
    status = combine_status(_REPORT_STATUS[r.status] for r in reports)
    return Report(command, status, tuple(rows),
                  ("family", "params", "check", "detail", "status", "observed"))


def _cmd_family_sweep(args, command: str) -> Report:
    spec, ranges = _family_ranges(args)
    reports = sweep_point_reports(spec.name, ranges)
    rows = []
    for rep in reports:
        counts = {Status.PASS: 0, Status.FAIL: 0, Status.INDETERMINATE: 0}
        for check in rep.checks:
            counts[check.status] += 1
        rows.append({"family": spec.name,
                     "params": _params_text(spec, rep.params),
                     "status": _STATUS_TEXT[rep.status],
                     "passed": counts[Status.PASS],
                     "failed": counts[Status.FAIL],
                     "indeterminate": counts[Status.INDETERMINATE]})
    status = combine_status(_REPORT_STATUS[r.status] for r in reports)
    return Report(command, status, tuple(rows),
                  ("family", "params", "status", "passed", "failed",
                   "indeterminate"))


def _cmd_oracle(args, command: str) -> Report:
    texts = list(args.links)
    if args.batch is not None:
        with open(args.batch, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line and not line.startswith("#"):
                    texts.append(line)
    links = [parse_link_expr(t) for t in texts]
    if args.sample:
        rng = random.Random(args.seed)
        links.extend(random_montesinos(rng) for _ in range(args.sample))
    if not links:
        raise _UsageError("oracle needs link expressions, --batch, or --sample")
    rows = []
    any_mismatch = False
    for link in links:
        rep = oracle_cross_check(link)
        any_mismatch = any_mismatch or not rep.match
        rows.append(rep.as_dict())
    status = STATUS_FAIL if any_mismatch else STATUS_OK
    return Report(command, status, tuple(rows),
                  ("link", "crossings", "goeritz", "formula", "h1_order",
                   "match"))


# ---------------------------------------------------------------------------
# Argument wiring


def _build_parser() -> _Parser:
    shared = _Parser(add_help=False)
    shared.add_argument("--format", choices=FORMATS, default="json",
                        help="output format (default: json)")

    parser = _Parser(prog="dehncalc",
                     description="Exact Dehn-filling arithmetic, claim-table "
                                 "verification, and a diagram-level oracle.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("distance", parents=[shared],
                       help="distance between two slopes")
    p.add_argument("r1")
    p.add_argument("r2")
    p.set_defaults(handler=_cmd_distance)

    p = sub.add_parser("classify", parents=[shared],
                       help="finite-type classification of a manifold")
    p.add_argument("manifold")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("cover", parents=[shared],
                       help="double branched cover of a link expression")
    p.add_argument("link")
    p.set_defaults(handler=_cmd_cover)

    p = sub.add_parser("cable", parents=[shared],
                       help="fill the outer boundary of a cable space")
    p.add_argument("--s", type=int, required=True, help="cable parameter s")
    p.add_argument("--t", type=int, required=True, help="cable parameter t")
    p.add_argument("--gamma", required=True, help="cabling slope")
    p.add_argument("r", help="filling slope")
    p.set_defaults(handler=_cmd_cable)

    p = sub.add_parser("family-list", parents=[shared],
                       help="list the claim-table families")
    p.set_defaults(handler=_cmd_family_list)

    for verb, handler, needs_slope in (
            ("family-fill", _cmd_family_fill, True),
            ("family-verify", _cmd_family_verify, False),
            ("family-sweep", _cmd_family_sweep, False)):
        p = sub.add_parser(verb, parents=[shared])
        p.add_argument("family")
        if needs_slope:
            p.add_argument("slope")
        p.add_argument("--p", help="parameter p (N or A..B)")
        p.add_argument("--q", help="parameter q (N or A..B)")
        p.set_defaults(handler=handler)

    p = sub.add_parser("oracle", parents=[shared],
                       help="cross-check link determinants two ways")
    p.add_argument("links", nargs="*", metavar="LINK")
    p.add_argument("--batch", help="file with one link expression per line")
    p.add_argument("--sample", type=int, default=0,
                   help="number of random Montesinos links to add")
    p.add_argument("--seed", type=int, default=0, help="RNG seed for --sample")
    p.set_defaults(handler=_cmd_oracle)

    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:]) if argv is None else list(argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        report = args.handler(args, " ".join(["dehncalc"] + argv))
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, DomainError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(emit_report(report, args.format))
    return exit_code(report.status)


if __name__ == "__main__":
    raise SystemExit(main())
