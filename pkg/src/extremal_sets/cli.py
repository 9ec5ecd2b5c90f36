"""Command-line entry point.

Exit codes: 0 success, 1 usage or parse error, 2 property violated or
domain error, 3 search budget exhausted (the partial result is still
printed).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Optional, Sequence

from . import bounds, constructions, oracle, polytope, predicates
from .core import (
    DomainError,
    InvalidFamilyError,
    SetFamily,
    elements,
    family_to_json,
    format_family,
    parse_family,
    profile,
)

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(f"{self.prog}: {message}")


class Report:
    """What a subcommand produced, renderable in each output format."""

    def __init__(self, data: dict, text: str, rows: Optional[list[list[str]]] = None, status: int = EXIT_OK):
        self.data = data
        self.text = text
        self.rows = rows
        self.status = status

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.data, indent=2, sort_keys=True) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            for row in self.rows or [[k, _scalar(v)] for k, v in sorted(self.data.items())]:
                writer.writerow(row)
            return buf.getvalue()
        return self.text if self.text.endswith("\n") else self.text + "\n"


def _scalar(v) -> str:
    return v if isinstance(v, str) else json.dumps(v, sort_keys=True)


def _set_str(s: int) -> str:
    els = elements(s)
    return ",".join(map(str, els)) if els else "-"


def _family_rows(fam: SetFamily) -> list[list[str]]:
    return [["size", "elements"]] + [[str(len(elements(m))), _set_str(m)] for m in fam.members]


def _need(args: argparse.Namespace, *names: str) -> list[int]:
    missing = [f"--{x.replace('_', '-')}" for x in names if getattr(args, x, None) is None]
    if missing:
        raise UsageError(f"missing required option(s): {' '.join(missing)}")
    return [getattr(args, x) for x in names]


# ---------------------------------------------------------------------------
# bound
# ---------------------------------------------------------------------------

BOUND_KINDS: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "obs1": (bounds.nonuniform_intersecting_bound, ("n",)),
    "ekr": (bounds.ekr_uniform_bound, ("n", "k")),
    "katona": (bounds.katona_bound, ("n", "t")),
    "ekr-t": (bounds.ekr_t_bound, ("n", "k", "t")),
    "ak": (bounds.ak, ("n", "k", "t")),
    "union-t": (bounds.union_t_bound, ("n", "t")),
    "uv": (bounds.uv_bound, ("n", "k", "u")),
}


def cmd_bound(args: argparse.Namespace) -> Report:
    fn, names = BOUND_KINDS[args.kind]
    values = _need(args, *names)
    params = dict(zip(names, values))
    result = fn(*values)
    data = {"command": "bound", "kind": args.kind, "params": params,
            "threshold_dependent": args.kind in bounds.THRESHOLD_DEPENDENT}
    if args.kind in bounds.THRESHOLD_DEPENDENT:
        data["note"] = bounds.THRESHOLD_DEPENDENT[args.kind]
    if isinstance(result, bounds.AkResult):
        data.update(result.as_dict())
        lines = [f"value: {result.value}", f"maximizers: {' '.join(map(str, result.maximizers))}", "i\tterm"]
        lines += [f"{i}\t{v}" for i, v in result.terms]
        rows = [["i", "term", "maximizer"]] + [
            [str(i), str(v), str(i in result.maximizers).lower()] for i, v in result.terms
        ]
        return Report(data, "\n".join(lines), rows)
    data["value"] = str(result)
    text = f"value: {result}"
    if "note" in data:
        text += f"\nnote: {data['note']}"
    return Report(data, text, [["kind", "value"], [args.kind, str(result)]])


# ---------------------------------------------------------------------------
# construct
# ---------------------------------------------------------------------------

def cmd_construct(args: argparse.Namespace) -> Report:
    fn, names, advertised = constructions.CONSTRUCTIONS[args.name]
    values = _need(args, *names)
    fam = fn(*values)
    data = {
        "command": "construct",
        "construction": args.name,
        "params": dict(zip(names, values)),
        "advertised": advertised,
        "family": family_to_json(fam),
        "profile": [str(x) for x in profile(fam)],
    }
    return Report(data, format_family(fam), _family_rows(fam))


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------

def _read_family(path: str) -> SetFamily:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_family(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read family file: {exc}") from None


def cmd_check(args: argparse.Namespace) -> Report:
    fam = _read_family(args.family)
    if args.property == "t-intersecting":
        (t,) = _need(args, "t")
        ok, wit = predicates.is_t_intersecting(fam, t)
        params = {"t": t}
    elif args.property == "union-t":
        (t,) = _need(args, "t")
        ok, wit = predicates.is_union_t_intersecting(fam, t, strict=args.strict_pairs)
        params = {"t": t, "strict_pairs": args.strict_pairs}
    else:
        u, v = _need(args, "u", "v")
        ok, wit = predicates.is_uv_union_intersecting(fam, u, v)
        params = {"u": u, "v": v}
    data = {
        "command": "check",
        "property": args.property,
        "params": params,
        "n": fam.n,
        "size": str(len(fam)),
        "holds": ok,
        "witness": None
        if wit is None
        else {"kind": wit.kind, "sets": [_set_str(s) for s in wit.sets], "measured": str(wit.measured)},
    }
    text = f"{args.property}: {str(ok).lower()}"
    if wit is not None:
        text += f"\nwitness: {wit.describe()}"
    rows = [["property", "holds", "witness"],
            [args.property, str(ok).lower(), "" if wit is None else " ".join(_set_str(s) for s in wit.sets)]]
    return Report(data, text, rows, EXIT_OK if ok else EXIT_VIOLATION)


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------

def _search_report(kind: str, params: dict, res: oracle.SearchResult) -> Report:
    data = {"command": "oracle", "kind": kind, "params": params, **res.as_dict()}
    text = "\n".join([
        f"optimum: {res.optimum}",
        f"complete: {str(res.complete).lower()}",
        f"nodes_explored: {res.nodes_explored}",
        "witness:",
        format_family(res.witness).rstrip("\n"),
    ])
    rows = [["optimum", "complete", "nodes_explored"],
            [str(res.optimum), str(res.complete).lower(), str(res.nodes_explored)]]
    return Report(data, text, rows, EXIT_OK if res.complete else EXIT_BUDGET)


def cmd_oracle(args: argparse.Namespace) -> Report:
    budget = oracle.SearchBudget(args.budget)
    kind = args.kind
    if kind == "uniform":
        n, k, t = _need(args, "n", "k", "t")
        return _search_report(kind, {"n": n, "k": k, "t": t}, oracle.max_t_intersecting_uniform(n, k, t, budget))
    if kind == "nonuniform":
        n, t = _need(args, "n", "t")
        return _search_report(kind, {"n": n, "t": t}, oracle.max_t_intersecting(n, t, budget))
    if kind == "union-t":
        n, t = _need(args, "n", "t")
        return _search_report(kind, {"n": n, "t": t}, oracle.max_union_t_intersecting(n, t, budget))
    if kind == "uv":
        n, k, u, v = _need(args, "n", "k", "u", "v")
        res = oracle.max_uv_union_intersecting_uniform(n, k, u, v, budget)
        return _search_report(kind, {"n": n, "k": k, "u": u, "v": v}, res)
    k, u, v, n_max = _need(args, "k", "u", "v", "n_max")
    table = oracle.threshold_probe_uv(k, u, v, n_max, budget)
    data = {"command": "oracle", "kind": kind, "params": {"k": k, "u": u, "v": v, "n_max": n_max}, **table.as_dict()}
    lines = ["n\toracle\tbound\tcomplete"]
    lines += [f"{r.n}\t{r.oracle}\t{r.bound}\t{str(r.complete).lower()}" for r in table.rows]
    lines.append(f"threshold_candidate: {table.threshold_candidate if table.threshold_candidate is not None else 'none'}")
    rows = [["n", "oracle", "bound", "complete"]] + [
        [str(r.n), str(r.oracle), str(r.bound), str(r.complete).lower()] for r in table.rows
    ]
    status = EXIT_OK if all(r.complete for r in table.rows) else EXIT_BUDGET
    return Report(data, "\n".join(lines), rows, status)


# ---------------------------------------------------------------------------
# polytope / maximize
# ---------------------------------------------------------------------------

def _pt(p: Sequence[int]) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def cmd_polytope(args: argparse.Namespace) -> Report:
    n, t = _need(args, "n", "t")
    reports = polytope.essential_extreme_points(n, t)
    data = {"command": "polytope", "params": {"n": n, "t": t}, "points": [r.as_dict() for r in reports]}
    lines = ["point\tpareto\textreme\tessential\tcertificate"]
    for r in reports:
        cert = "-" if r.certificate is None else ",".join(map(str, r.certificate))
        lines.append(f"{_pt(r.point)}\t{str(r.pareto).lower()}\t{str(r.extreme).lower()}\t{str(r.essential).lower()}\t{cert}")
    rows = [["point", "pareto", "extreme", "essential", "certificate"]] + [
        [" ".join(map(str, r.point)), str(r.pareto).lower(), str(r.extreme).lower(), str(r.essential).lower(),
         "" if r.certificate is None else " ".join(map(str, r.certificate))]
        for r in reports
    ]
    if args.brute_hull:
        hull = polytope.hull_vertices_bruteforce(n, t)
        front = polytope.pareto_points(hull)
        essential = [r.point for r in reports if r.essential]
        agree = sorted(front) == sorted(essential)
        data["brute_hull"] = {
            "vertices": [[str(x) for x in p] for p in hull],
            "pareto_vertices": [[str(x) for x in p] for p in sorted(front, reverse=True)],
            "agrees_with_essential": agree,
        }
        lines.append(f"hull vertices: {' '.join(_pt(p) for p in hull)}")
        lines.append(f"pareto hull vertices agree with essential points: {str(agree).lower()}")
    return Report(data, "\n".join(lines), rows)


def cmd_maximize(args: argparse.Namespace) -> Report:
    n, t = _need(args, "n", "t")
    if args.alpha is None:
        raise UsageError("missing required option(s): --alpha")
    alpha = polytope.parse_alpha(args.alpha)
    res = polytope.maximize_linear(alpha, n, t)
    data = {
        "command": "maximize",
        "params": {"n": n, "t": t, "alpha": [str(a) for a in alpha]},
        "value": str(res.value),
        "argmax": [str(x) for x in res.point],
        "witness": format_family(res.witness),
    }
    text = f"value: {res.value}\nargmax: {_pt(res.point)}\nwitness:\n{format_family(res.witness).rstrip()}"
    rows = [["value", "argmax"], [str(res.value), " ".join(map(str, res.point))]]
    return Report(data, text, rows)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write the report here instead of stdout")

    def ints(p: argparse.ArgumentParser, *names: str) -> None:
        for name in names:
            p.add_argument(f"--{name.replace('_', '-')}", dest=name, type=int)

    parser = _Parser(prog="extremal-sets", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bound", parents=[common], help="evaluate a closed-form bound")
    p.add_argument("kind", choices=sorted(BOUND_KINDS))
    ints(p, "n", "k", "t", "u")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("construct", parents=[common], help="generate an extremal family")
    p.add_argument("name", choices=sorted(constructions.CONSTRUCTIONS))
    ints(p, "n", "k", "t", "i", "u")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", parents=[common], help="test a family file for a property")
    p.add_argument("property", choices=("t-intersecting", "union-t", "uv"))
    p.add_argument("--family", required=True)
    ints(p, "t", "u", "v")
    p.add_argument("--strict-pairs", action="store_true", help="union-t: require four distinct members")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", parents=[common], help="exact exhaustive maximum")
    p.add_argument("kind", choices=("uniform", "nonuniform", "union-t", "uv", "threshold-uv"))
    ints(p, "n", "k", "t", "u", "v", "n_max")
    p.add_argument("--budget", type=int, default=oracle.DEFAULT_MAX_NODES, help="node budget")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("polytope", parents=[common], help="essential extreme points of the profile polytope")
    ints(p, "n", "t")
    p.add_argument("--brute-hull", action="store_true", help="cross-check against the brute-force hull")
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("maximize", parents=[common], help="maximize a nonnegative linear form of the profile")
    ints(p, "n", "t")
    p.add_argument("--alpha", help="comma-separated rationals a0,...,an")
    p.set_defaults(func=cmd_maximize)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        report = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except InvalidFamilyError as exc:
        print(f"error: invalid family: {exc}", file=stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_VIOLATION
    out = report.render(getattr(args, "format", "text"))
    path = getattr(args, "out", None)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        stdout.write(out)
    return report.status


def main() -> None:
    sys.exit(run())
