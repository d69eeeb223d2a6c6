"""Command-line front end.

Exit status: 0 success, 1 domain error (violated precondition, certificate
violation, golden mismatch), 2 usage or literal syntax error, 3 resource guard
or 64-bit overflow.  Errors print one line ``error: <kind>: <message>`` on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import checks, golden, walks
from .cseq import c_members, fund_seq, min_above
from .errors import MinwalksError
from .ladder import build_coloring, club_of, enum_index, fiber_report, ladder, pair, uniformize
from .ordinals import Ordinal, add, compare, enumerate_probe, format_ordinal, parse, successor
from .space import (
    APEX,
    BasicOpen,
    NeighborhoodDescriptor,
    alpha1_merge,
    convergence_report,
    frechet_extract,
    gdelta_separate,
    member,
    member_descriptor,
)

EXIT_CODES = {"domain": 1, "certificate": 1, "syntax": 2, "overflow": 3, "resource": 3}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


class Output:
    """Collects one command's result and renders it in the requested format."""

    def __init__(self, fmt: str):
        self.fmt = fmt

    def render(self, text: str, data: object, rows: list[list] | None = None) -> str:
        if self.fmt == "json":
            return json.dumps(data, sort_keys=True) + "\n"
        if self.fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            for row in rows if rows is not None else _default_rows(data):
                writer.writerow(row)
            return buf.getvalue()
        return text if text.endswith("\n") else text + "\n"


def _default_rows(data: object) -> list[list]:
    if isinstance(data, list):
        return [[x] if not isinstance(x, (list, tuple)) else list(x) for x in data]
    if isinstance(data, dict):
        return [[k, json.dumps(v) if isinstance(v, (dict, list)) else v] for k, v in data.items()]
    return [[data]]


def _ordinals(text: str) -> list[Ordinal]:
    return [parse(part) for part in text.split(",") if part.strip()]


def _point(text: str):
    return APEX if text.strip().lower() in ("apex", "k", "kappa") else parse(text)


def _entry(text: str) -> tuple[Ordinal, int]:
    anchor, sep, level = text.rpartition(":")
    if not sep:
        raise UsageError(f"descriptor entry {text!r} must look like ANCHOR:LEVEL")
    if not level.strip().isdigit():
        raise UsageError(f"descriptor level {level!r} is not a natural number")
    return parse(anchor), int(level)


def _lines(items) -> str:
    return "\n".join(str(x) for x in items)


# -- ord ---------------------------------------------------------------------


def cmd_ord_parse(args, out):
    a = parse(args.literal)
    return out.render(str(a), {"ordinal": str(a)})


def _from_terms(value) -> Ordinal:
    terms = []
    for exponent, coefficient in value:
        exp = _from_terms(exponent) if isinstance(exponent, list) else parse(str(exponent))
        terms.append((exp, int(coefficient)))
    return Ordinal(tuple(terms))


def cmd_ord_fmt(args, out):
    try:
        value = json.loads(args.terms)
    except json.JSONDecodeError as exc:
        raise UsageError(f"terms must be JSON: {exc}") from None
    try:
        a = _from_terms(value)
    except MinwalksError:
        raise
    except (TypeError, ValueError) as exc:
        raise UsageError(f"terms must be a list of [exponent, coefficient] pairs: {exc}") from None
    return out.render(format_ordinal(a), {"ordinal": format_ordinal(a)})


def cmd_ord_cmp(args, out):
    result = compare(parse(args.a), parse(args.b))
    return out.render(result, {"result": result})


def cmd_ord_add(args, out):
    s = add(parse(args.a), parse(args.b))
    return out.render(str(s), {"ordinal": str(s)})


def cmd_ord_succ(args, out):
    s = successor(parse(args.literal))
    return out.render(str(s), {"ordinal": str(s)})


def cmd_ord_islimit(args, out):
    v = parse(args.literal).is_limit
    return out.render(str(v).lower(), {"isLimit": v})


def cmd_ord_probe(args, out):
    probe = enumerate_probe(parse(args.cap), args.tier)
    members = [str(m) for m in probe]
    data = {"cap": str(probe.cap), "tier": probe.tier, "members": members}
    return out.render(_lines(members), data, [[m] for m in members])


# -- cseq --------------------------------------------------------------------


def cmd_cseq_members(args, out):
    members = [str(m) for m in c_members(parse(args.alpha), parse(args.below))]
    return out.render(_lines(members) or "(empty)", members, [[m] for m in members])


def cmd_cseq_fund(args, out):
    v = fund_seq(parse(args.limit), args.index)
    return out.render(str(v), {"ordinal": str(v)})


def cmd_cseq_step(args, out):
    v = min_above(parse(args.beta), parse(args.alpha))
    return out.render(str(v), {"ordinal": str(v)})


# -- walk --------------------------------------------------------------------


def cmd_walk_trace(args, out):
    t = walks.trace(parse(args.alpha), parse(args.beta))
    rec = t.to_json()
    text = " > ".join(rec["points"]) + f"  (rho2 = {t.rho2})"
    return out.render(text, rec, [[p] for p in rec["points"]])


def cmd_walk_rho2(args, out):
    n = walks.rho2(parse(args.alpha), parse(args.beta))
    return out.render(str(n), {"rho2": n})


def cmd_walk_stabilizer(args, out):
    eta = walks.stabilizer(parse(args.alpha), parse(args.beta))
    return out.render(str(eta), {"eta": str(eta)})


def cmd_walk_coherence(args, out):
    beta, gamma = parse(args.beta), parse(args.gamma)
    probes = enumerate_probe(parse(args.cap) if args.cap else beta, args.tier)
    report = walks.coherence_delta(beta, gamma, probes)
    data = dict(report.to_json(), beta=str(beta), gamma=str(gamma), tier=args.tier, probes=len(probes))
    return out.render(f"max-delta {report.max_delta} at {report.argmax}", data)


def cmd_walk_witness(args, out):
    A = enumerate_probe(parse(args.cap_a), args.tier)
    B = enumerate_probe(parse(args.cap_b or args.cap_a), args.tier)
    hit = walks.unbounded_witness(A, B, args.n)
    if hit is None:
        return out.render("none", {"witness": None})
    a, b = hit
    data = {"witness": {"alpha": str(a), "beta": str(b), "rho2": walks.rho2(a, b)}}
    return out.render(f"{a} < {b}  (rho2 = {data['witness']['rho2']})", data)


# -- space -------------------------------------------------------------------


def cmd_space_member(args, out):
    p = _point(args.point)
    if args.entry:
        if args.anchor is not None:
            raise UsageError("use either --anchor/--level or --entry, not both")
        v = member_descriptor(p, NeighborhoodDescriptor(tuple(_entry(e) for e in args.entry)))
    elif args.anchor is not None:
        v = member(p, BasicOpen(parse(args.anchor), args.level))
    else:
        v = member_descriptor(p, NeighborhoodDescriptor())
    return out.render(str(v).lower(), {"member": v})


def cmd_space_extract(args, out):
    seq = [str(x) for x in frechet_extract(_ordinals(args.set), parse(args.alpha), args.m)]
    return out.render(_lines(seq) or "(empty)", seq, [[x] for x in seq])


def cmd_space_merge(args, out):
    merged = [str(x) for x in alpha1_merge([_ordinals(f) for f in args.family], parse(args.alpha))]
    return out.render(_lines(merged) or "(empty)", merged, [[x] for x in merged])


def cmd_space_separate(args, out):
    data = gdelta_separate(_ordinals(args.set)).to_json()
    text = f"beta = {data['beta']}\n" + _lines(f"{k}: {v}" for k, v in data["certificate"].items())
    rows = [[k, v] for k, v in data["certificate"].items()]
    return out.render(text, data, rows)


def cmd_space_report(args, out):
    report = convergence_report(_ordinals(args.seq), [parse(a) for a in args.anchor])
    data = report.to_json()
    rows = [[a["anchor"], v, c] for a in data["anchors"] for v, c in a["histogram"].items()]
    text = _lines(f"{a['anchor']}: {a['histogram']}" for a in data["anchors"])
    return out.render(text + f"\nmax fiber {data['maxFiber']}", data, rows)


# -- ladder ------------------------------------------------------------------


def cmd_ladder_rung(args, out):
    v = ladder(parse(args.alpha), args.index)
    return out.render(str(v), {"ordinal": str(v)})


def cmd_ladder_index(args, out):
    v = enum_index(parse(args.alpha), parse(args.xi))
    return out.render(str(v), {"index": v})


def cmd_ladder_pair(args, out):
    v = pair(args.a, args.b)
    return out.render(str(v), {"pair": v})


def cmd_ladder_club(args, out):
    club = club_of(parse(args.gamma))
    items = [str(club[k]) for k in range(args.count)]
    return out.render(_lines(items), items, [[k, x] for k, x in enumerate(items)])


def cmd_ladder_uniformize(args, out):
    club = club_of(parse(args.gamma))
    f = uniformize(club, args.depth)
    probe = enumerate_probe(parse(args.gamma), args.tier)
    values = [[str(xi), f(xi)] for xi in probe]
    return out.render(_lines(f"{x}: {v}" for x, v in values), values, values)


def cmd_ladder_build(args, out):
    gamma = parse(args.gamma)
    coloring = build_coloring(gamma)
    probe = enumerate_probe(gamma, args.tier)
    values = [{"xi": str(xi), "color": coloring.evaluate(xi)} for xi in probe]
    rows = [[v["xi"], v["color"]] for v in values]
    return out.render(_lines(f"{x}: {c}" for x, c in rows), values, rows)


def cmd_ladder_fiber(args, out):
    coloring = build_coloring(parse(args.gamma))
    report = fiber_report(coloring, parse(args.alpha), args.prefix)
    rows = [["alpha", "prefix", "value", "count"]] + [list(r) for r in report.csv_rows()]
    data = {
        "alpha": str(report.alpha),
        "prefix": report.prefix,
        "bound": report.bound,
        "maxFiber": report.max_fiber,
        "histogram": {str(v): c for v, c in sorted(report.histogram.items())},
    }
    text = f"max fiber {report.max_fiber} (bound {report.bound}) over {report.prefix} rungs of S_{report.alpha}"
    return out.render(text, data, rows)


# -- selftest ------------------------------------------------------------------


def cmd_selftest(args, out):
    directory = Path(args.golden_dir) if args.golden_dir else golden.GOLDEN_DIR
    if args.generate:
        paths = golden.write(golden.generate(), directory)
        names = [p.name for p in paths]
        return out.render(_lines(f"wrote {p}" for p in paths), {"written": names})
    actual = golden.compute()
    problems = golden.diff(golden.load(directory), actual)
    if args.verify:
        data = {"goldenMatches": not problems, "problems": problems}
        text = "golden files match" if not problems else _lines(problems)
        return out.render(text, data), (1 if problems else 0)
    suites = checks.run_all(args.seed)
    passed = not problems and all(s["passed"] for s in suites)
    data = {
        "seed": args.seed,
        "goldenMatches": not problems,
        "problems": problems,
        "golden": actual,
        "suites": suites,
        "passed": passed,
    }
    text = _lines(
        [f"golden: {'ok' if not problems else 'MISMATCH'}"]
        + [f"{s['name']}: {'ok' if s['passed'] else 'FAIL'} ({s['instances']} instances)" for s in suites]
    )
    rows = [["golden", not problems]] + [[s["name"], s["passed"]] for s in suites]
    return out.render(text, data, rows), (0 if passed else 1)


# -- parser --------------------------------------------------------------------


def _globals(parser: argparse.ArgumentParser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("text", "json", "csv"), default=d("text"))
    parser.add_argument("--tier", type=int, default=d(2), help="probe-set tier")
    parser.add_argument("--step-guard", type=int, default=d(walks.DEFAULT_STEP_GUARD))
    parser.add_argument("--seed", type=int, default=d(0), help="seed for randomized suites")
    parser.add_argument("--out", default=d(None), help="write output to FILE")


def build_parser() -> argparse.ArgumentParser:
    root = _Parser(prog="minwalks", description="Minimal walks on ordinals below epsilon_0.")
    _globals(root, suppress=False)
    groups = root.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def leaf(sub, name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        _globals(p, suppress=True)
        p.set_defaults(func=func)
        return p

    g = groups.add_parser("ord", help="ordinal arithmetic")
    sub = g.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    leaf(sub, "parse", cmd_ord_parse, "parse a literal into canonical form").add_argument("literal")
    leaf(sub, "fmt", cmd_ord_fmt, 'format JSON CNF terms, e.g. \'[["w", 2], [0, 3]]\'').add_argument("terms")
    p = leaf(sub, "cmp", cmd_ord_cmp, "compare two ordinals")
    p.add_argument("a")
    p.add_argument("b")
    p = leaf(sub, "add", cmd_ord_add, "ordinal sum a + b")
    p.add_argument("a")
    p.add_argument("b")
    leaf(sub, "succ", cmd_ord_succ, "successor").add_argument("literal")
    leaf(sub, "islimit", cmd_ord_islimit, "limit test").add_argument("literal")
    leaf(sub, "probe", cmd_ord_probe, "probe set below CAP at --tier").add_argument("cap")

    g = groups.add_parser("cseq", help="canonical C-sequence")
    sub = g.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = leaf(sub, "members", cmd_cseq_members, "elements of C_alpha below --below")
    p.add_argument("alpha")
    p.add_argument("--below", required=True)
    p = leaf(sub, "fund", cmd_cseq_fund, "i-th element of C_lambda")
    p.add_argument("limit")
    p.add_argument("index", type=int)
    p = leaf(sub, "step", cmd_cseq_step, "min(C_beta minus alpha)")
    p.add_argument("beta")
    p.add_argument("alpha")

    g = groups.add_parser("walk", help="minimal walks")
    sub = g.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    for name, func, text in (
        ("trace", cmd_walk_trace, "walk from --beta down to --alpha"),
        ("rho2", cmd_walk_rho2, "number of steps of the walk"),
        ("stabilizer", cmd_walk_stabilizer, "eta below alpha that keeps the walk long"),
    ):
        p = leaf(sub, name, func, text)
        p.add_argument("--alpha", required=True)
        p.add_argument("--beta", required=True)
    p = leaf(sub, "coherence", cmd_walk_coherence, "max |rho2(xi,beta) - rho2(xi,gamma)| over probes")
    p.add_argument("--beta", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--cap", help="probe cap (default: beta)")
    p = leaf(sub, "witness", cmd_walk_witness, "first alpha < beta from probe sets with rho2 > n")
    p.add_argument("--cap-a", required=True)
    p.add_argument("--cap-b")
    p.add_argument("--n", type=int, required=True)

    g = groups.add_parser("space", help="the rho2 topology on kappa + 1")
    sub = g.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = leaf(sub, "member", cmd_space_member, "membership in a basic open or a descriptor")
    p.add_argument("--point", required=True, help="ordinal literal or 'apex'")
    p.add_argument("--anchor")
    p.add_argument("--level", type=int, default=0)
    p.add_argument("--entry", action="append", default=[], help="descriptor entry ANCHOR:LEVEL")
    p = leaf(sub, "extract", cmd_space_extract, "greedy sequence with rho2(xi_n, alpha) >= n")
    p.add_argument("--set", required=True, help="comma-separated ordinals")
    p.add_argument("--alpha", required=True)
    p.add_argument("--m", type=int, required=True)
    p = leaf(sub, "merge", cmd_space_merge, "merge sequences A_0, A_1, ... at alpha")
    p.add_argument("--family", action="append", default=[], help="comma-separated ordinals; repeat")
    p.add_argument("--alpha", required=True)
    leaf(sub, "separate", cmd_space_separate, "G-delta scheme missing a finite set").add_argument(
        "--set", required=True, help="comma-separated ordinals")
    p = leaf(sub, "report", cmd_space_report, "rho2 histograms of a sequence per anchor")
    p.add_argument("--seq", required=True, help="comma-separated ordinals")
    p.add_argument("--anchor", action="append", default=[])

    g = groups.add_parser("ladder", help="ladder systems and colorings")
    sub = g.add_subparsers(dest="cmd", required=True, parser_class=_Parser)
    p = leaf(sub, "rung", cmd_ladder_rung, "i-th element of S_alpha")
    p.add_argument("alpha")
    p.add_argument("index", type=int)
    p = leaf(sub, "index", cmd_ladder_index, "position of xi on S_alpha (0 if absent)")
    p.add_argument("alpha")
    p.add_argument("xi")
    p = leaf(sub, "pair", cmd_ladder_pair, "Cantor pairing")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p = leaf(sub, "club", cmd_ladder_club, "first elements of the club E in gamma")
    p.add_argument("gamma")
    p.add_argument("--count", type=int, default=8)
    p = leaf(sub, "uniformize", cmd_ladder_uniformize, "F' over the probe set of gamma")
    p.add_argument("--gamma", required=True)
    p.add_argument("--depth", type=int, required=True)
    leaf(sub, "build", cmd_ladder_build, "coloring of gamma over its probe set").add_argument(
        "--gamma", required=True)
    p = leaf(sub, "fiber", cmd_ladder_fiber, "fiber histogram on a ladder prefix")
    p.add_argument("--gamma", required=True)
    p.add_argument("--alpha", required=True)
    p.add_argument("--prefix", type=int, default=64)

    p = groups.add_parser("selftest", help="golden files and seeded property suites")
    _globals(p, suppress=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--generate", action="store_true", help="write oracle outputs as golden files")
    mode.add_argument("--verify", action="store_true", help="diff production outputs against golden files")
    p.add_argument("--golden-dir")
    p.set_defaults(func=cmd_selftest)
    return root


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"error: usage: {exc}", file=stderr)
        return 2
    saved_guard = walks.DEFAULT_STEP_GUARD
    walks.DEFAULT_STEP_GUARD = args.step_guard
    try:
        result = args.func(args, Output(args.format))
    except UsageError as exc:
        print(f"error: usage: {exc}", file=stderr)
        return 2
    except MinwalksError as exc:
        print(f"error: {exc.kind}: {exc}", file=stderr)
        return EXIT_CODES.get(exc.kind, 1)
    finally:
        walks.DEFAULT_STEP_GUARD = saved_guard
    text, status = result if isinstance(result, tuple) else (result, 0)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())
