"""Command-line interface: ``slicekit <command> ...``.

Exit status is 0 on success, 1 when a sweep finds a counterexample and 2 on
usage errors (bad descriptors, literals, or refused preconditions).
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys

from . import checks, convolution as conv, reps, slices
from .characters import render
from .errors import InvalidInput, MuConditionFailed, SlicekitError
from .rootdatum import build_root_datum

_INT_LIST = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")
_W_TERM = re.compile(r"^\s*(-?\d*)\s*\*?\s*w(\d+)\s*$")


def _w_terms(text):
    terms = re.split(r"\+", text)
    out = []
    for t in terms:
        m = _W_TERM.match(t)
        if not m:
            return None
        k = m.group(1)
        k = 1 if k in ("", "+") else (-1 if k == "-" else int(k))
        out.append((k, int(m.group(2))))
    return out


def parse_coweight(rd, text: str) -> tuple:
    """``1,0,-1`` or fundamental shorthands such as ``w1``, ``w1+w2``, ``2w1``."""
    if _INT_LIST.match(text):
        return rd.check(int(x) for x in text.split(","))
    terms = _w_terms(text)
    if terms is None:
        raise InvalidInput(f"cannot parse coweight {text!r}")
    total = [0] * rd.rank
    for k, i in terms:
        for j, x in enumerate(rd.fundamental_coweight(i)):
            total[j] += k * x
    return tuple(total)


def parse_lambdas(rd, text: str) -> tuple:
    """Semicolon-separated coweights; a comma list of pure ``w<i>`` terms is split on commas."""
    if ";" in text:
        pieces = [p for p in text.split(";") if p.strip()]
    elif all(_w_terms(p) is not None for p in text.split(",")):
        pieces = text.split(",")
    else:
        pieces = [text]
    return tuple(parse_coweight(rd, p) for p in pieces)


def _vec(v):
    return "(" + ",".join(map(str, v)) + ")"


def _fmt_tuple(t):
    return "(" + ", ".join(_vec(m) for m in t) + ")"


# -- commands ---------------------------------------------------------------------

def cmd_root_system(args, rd):
    minus = reps.minuscule_fundamental_coweights(rd)
    labels = {w: i for i in range(1, rd.ss_rank + 1) for w in [rd.fundamental_coweight(i)]}
    payload = {
        "group": rd.label, "rank": rd.rank, "ss_rank": rd.ss_rank,
        "cartan": [list(r) for r in rd.cartan],
        "simple_roots": [list(a) for a in rd.simple_roots],
        "simple_coroots": [list(a) for a in rd.simple_coroots],
        "positive_roots": [list(a) for a in rd.positive_roots],
        "positive_coroots": [list(a) for a in rd.positive_coroots],
        "two_rho_check": list(rd.two_rho_check), "two_rho": list(rd.two_rho),
        "minuscule": [{"name": f"w{labels[w]}", "coweight": list(w),
                       "orbit_size": len(rd.weyl_orbit(w))} for w in minus],
    }
    lines = [
        f"group: {rd.label} (rank {rd.rank}, semisimple rank {rd.ss_rank})",
        f"positive roots ({len(rd.positive_roots)}):",
        *(f"  {_vec(a)}" for a in rd.positive_roots),
        f"positive coroots ({len(rd.positive_coroots)}):",
        *(f"  {_vec(a)}" for a in rd.positive_coroots),
        f"2rho_check: {_vec(rd.two_rho_check)}",
        f"2rho: {_vec(rd.two_rho)}",
        f"minuscule fundamental coweights ({len(minus)}):",
        *(f"  w{m['name'][1:]} = {_vec(m['coweight'])}, orbit size {m['orbit_size']}"
          for m in payload["minuscule"]),
    ]
    return payload, lines, 0


def cmd_slice(args, rd):
    s = slices.SliceDatum(rd, parse_coweight(rd, args.lam), parse_coweight(rd, args.mu))
    fmt = args.format
    payload = {
        "group": rd.label, "lambda": list(s.lam), "mu": list(s.mu),
        "dimension": slices.slice_dimension(s),
        "repellent_dimension": slices.repellent_dimension(s),
        "torus_fixed_point": slices.has_torus_fixed_point(s),
        "mu_condition": slices.mu_condition(rd, s.mu),
    }
    lines = [f"slice {rd.label}  lambda={_vec(s.lam)}  mu={_vec(s.mu)}",
             f"dimension: {payload['dimension']}" + ("  (point)" if payload["dimension"] == 0 else ""),
             f"repellent dimension: {payload['repellent_dimension']}",
             f"torus fixed point: {'yes' if payload['torus_fixed_point'] else 'no'}",
             f"mu-condition: {'true' if payload['mu_condition'] else 'false'}"]
    try:
        f = slices.fibration_decomposition(s)
        payload["fibration"] = {"base_lambda": list(f.base_lambda),
                                "base_mu_plus": list(f.base_mu_plus),
                                "affine_dim": f.affine_dim, "base_dim": f.base_dim,
                                "is_affine_space": f.is_affine_space}
        lines.append(f"fibration: A^{f.affine_dim} x slice(lambda={_vec(f.base_lambda)}, "
                     f"mu+={_vec(f.base_mu_plus)}) of dim {f.base_dim}")
    except MuConditionFailed as exc:
        payload["fibration"] = None
        lines.append(f"fibration: refused ({exc})")
    if reps.is_minuscule(rd, s.lam) and s.mu in rd.weyl_orbit(s.lam):
        ch = slices.minuscule_slice_character(s)
        payload["character"] = ch.to_json()
        text = render(ch, "latex" if fmt == "latex" else "plain", rd)
        lines.append(f"character: {text}")
    return payload, lines, 0


def _conv_datum(args, rd):
    return conv.ConvolutionDatum(rd, parse_lambdas(rd, args.lambdas), parse_coweight(rd, args.mu))


def cmd_fixed_points(args, rd):
    c = _conv_datum(args, rd)
    pts = conv.fixed_points(c, jobs=args.jobs)
    payload = {"group": rd.label, "lambdas": [list(l) for l in c.lambdas], "mu": list(c.mu),
               "count": len(pts), "fixed_points": [[list(m) for m in t] for t in pts]}
    lines = [f"{len(pts)} fixed points"] + [f"  [{i}] {_fmt_tuple(t)}" for i, t in enumerate(pts)]
    return payload, lines, 0


def cmd_tangent(args, rd):
    c = _conv_datum(args, rd)
    pts = conv.fixed_points(c, jobs=args.jobs)
    if args.tuple is not None:
        if not 0 <= args.tuple < len(pts):
            raise InvalidInput(f"--tuple {args.tuple} out of range (0..{len(pts) - 1})")
        chosen = [(args.tuple, pts[args.tuple])]
    else:
        chosen = list(enumerate(pts))
    rows, lines = [], []
    style = "latex" if args.format == "latex" else "plain"
    for i, t in chosen:
        ch = conv.tangent_character(c, t)
        rows.append({"index": i, "tuple": [list(m) for m in t], "character": ch.to_json()})
        lines.append(f"[{i}] {_fmt_tuple(t)}: {render(ch, style, rd)}")
    return {"group": rd.label, "tangent": rows}, lines, 0


def cmd_poincare(args, rd):
    c = _conv_datum(args, rd)
    style = "latex" if args.format == "latex" else "plain"
    if args.closed_form:
        offset = {"as-printed": -1, "offset0": 0}[args.closed_form]
        p = conv.poincare_closed_form(c, offset)
        method = f"closed-form:{args.closed_form}"
    else:
        p = conv.poincare_polynomial(c, jobs=args.jobs)
        method = "direct"
    payload = {"group": rd.label, "method": method, "poincare": p.to_json()}
    lines = [render(p, style)]
    if args.report:
        rep = conv.closed_form_report(c)
        payload["closed_form_report"] = rep
        lines.append("per-point cell dimensions (direct / offset0 / as-printed):")
        lines += [f"  {_fmt_tuple(r['tuple'])}: {r['direct']} / {r['offset0']} / {r['as_printed']}"
                  for r in rep["points"]]
        lines.append(f"offset0 total matches direct: {rep['offset0_matches']}; "
                     f"as-printed total matches direct: {rep['as_printed_matches']}")
    return payload, lines, 0


def cmd_charts(args, rd):
    c = _conv_datum(args, rd)
    charts = conv.covering_charts(c, jobs=args.jobs)
    payload = {"group": rd.label, "dimension": c.dimension,
               "charts": [r.to_json() for r in charts]}
    lines = [f"{len(charts)} charts, ambient dimension {c.dimension}"]
    lines += [f"  {_fmt_tuple(r.tuple)}: dims {list(r.chart_dims)} total {r.total_dim}"
              + (" (affine)" if r.affine else "") for r in charts]
    return payload, lines, 0


def cmd_check(args, rd):
    bound = args.lambda_bound if args.suite == "weight-rep" else args.box
    report = checks.SUITES[args.suite](rd, bound, jobs=args.jobs)
    lines = [f"{report.suite} on {report.group} (bound {report.bound}): "
             f"{report.cases_checked} cases, {len(report.counterexamples)} counterexamples"]
    lines += ["  " + json.dumps(c, separators=(",", ":")) for c in report.counterexamples]
    return report.to_json(), lines, 0 if report.passed else 1


# -- parser -----------------------------------------------------------------------------

def _jobs(text):
    if text == "auto":
        return "auto"
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("--jobs takes a positive integer or 'auto'")
    if n < 1:
        raise argparse.ArgumentTypeError("--jobs must be >= 1")
    return n


def _global_options(parser, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=["plain", "json", "latex"], default=d("plain"))
    parser.add_argument("--jobs", type=_jobs, default=d(1), help="worker processes or 'auto'")
    parser.add_argument("--seed", type=int, default=d(None),
                        help="seed for randomized checks; does not affect computed data")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slicekit",
        description="Exact combinatorics of affine Grassmannian slices and convolution diagrams.",
        epilog="exit status: 0 success, 1 counterexample found, 2 usage error")
    _global_options(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("root-system", parents=[common], help="roots, coroots, 2rho, minuscule census")
    p.add_argument("group")
    p.set_defaults(func=cmd_root_system)

    p = sub.add_parser("slice", parents=[common], help="invariants of one slice")
    p.add_argument("group")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_slice)

    for name, func, help_ in [("fixed-points", cmd_fixed_points, "torus fixed points"),
                              ("tangent", cmd_tangent, "tangent characters at fixed points"),
                              ("poincare", cmd_poincare, "Poincare polynomial"),
                              ("charts", cmd_charts, "covering charts")]:
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("group")
        p.add_argument("--lambdas", required=True,
                       help="e.g. 'w1,w1' or '1,0;1,0'")
        p.add_argument("--mu", required=True)
        p.set_defaults(func=func)
        if name == "tangent":
            p.add_argument("--tuple", type=int, default=None,
                           help="index into the canonical fixed-point order")
        if name == "poincare":
            p.add_argument("--closed-form", choices=["as-printed", "offset0"], default=None)
            p.add_argument("--report", action="store_true",
                           help="also print per-point direct and closed-form cell dimensions")

    p = sub.add_parser("check", parents=[common], help="exhaustive lemma sweeps")
    p.add_argument("suite", choices=sorted(checks.SUITES))
    p.add_argument("group")
    p.add_argument("--lambda-bound", type=int, default=None)
    p.add_argument("--box", type=int, default=None)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    try:
        rd = build_root_datum(args.group)
        payload, lines, status = args.func(args, rd)
    except (InvalidInput, SlicekitError) as exc:
        print(f"slicekit: error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))
    return status


if __name__ == "__main__":
    sys.exit(main())
