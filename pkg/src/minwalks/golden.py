"""Golden files: values fixed by the naive oracle and re-derived by the production path.

``generate`` evaluates every section with :mod:`minwalks.oracle`; ``compute``
evaluates the same sections with the production modules.  The two must
produce identical JSON.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Callable

from . import oracle
from .cseq import fund_seq
from .ladder import build_coloring
from .ordinals import Ordinal, enumerate_probe, parse
from .space import NeighborhoodDescriptor, alpha1_merge, frechet_extract, gdelta_separate, member_descriptor
from .walks import coherence_delta, rho2, trace, unbounded_witness

GOLDEN_DIR = Path(str(resources.files("minwalks") / "golden"))
SECTIONS = ("traces", "coherence", "witness", "space", "colorings")

EXAMPLE_TRACES = [
    ("0", "w^2"), ("2", "w*2"), ("2", "w"), ("w", "w*2"), ("0", "w"), ("0", "w^4"),
    ("w", "w^2"), ("0", "w^(w)"), ("w^2 + 1", "w^(w)"), ("3", "w^(w^(w))"),
]

COHERENCE_PAIRS = [
    ("w", "w*2"), ("w", "w^2"), ("w*2", "w*3"), ("w*2", "w^2"), ("w*3", "w^2 + w"),
    ("w^2", "w^2 + w"), ("w^2", "w^2*2"), ("w^2 + w", "w^2*2"), ("w^2", "w^2*3"),
    ("w*2", "w^2*2 + w"), ("w + 1", "w*2"), ("w*2 + 3", "w*5"), ("w^2 + 1", "w^2 + w*2"),
    ("w^2*2", "w^2*2 + w*3"), ("w*4", "w^2*2"), ("w^2 + w*2", "w^2*2 + w"),
    ("w", "w^2*2 + w*2 + 2"), ("w^2*2", "w^2*3"), ("w*3 + 2", "w^2 + 5"), ("w^2 + w + 1", "w^2*2 + 1"),
]

WITNESS_RUNS = [
    # (cap, tier, n)
    ("w^5", 3, 3),
    ("w^3", 2, 2),
]

COLORING_GAMMAS = ("w + 1", "w*2", "w^2", "w^3")
FIBER_PREFIXES = (64, 128, 256)


class Engine:
    """The handful of primitives every golden section is built from."""

    def __init__(self, rho2: Callable, trace: Callable, color: Callable, rung: Callable):
        self.rho2 = rho2
        self.trace = trace
        self.color = color
        self.rung = rung


def _oracle_engine() -> Engine:
    f, t = oracle.from_ordinal, oracle.to_ordinal

    def walk(a, b):
        return [t(p) for p in oracle.trace(f(a), f(b))]

    def color(gamma):
        g = f(gamma)
        return lambda xi: oracle.color(g, f(xi))

    return Engine(
        rho2=lambda a, b: oracle.rho2(f(a), f(b)),
        trace=walk,
        color=color,
        rung=lambda lam, i: t(oracle.fund(f(lam), i)),
    )


def _production_engine() -> Engine:
    return Engine(
        rho2=rho2,
        trace=lambda a, b: list(trace(a, b).points),
        color=lambda gamma: build_coloring(gamma).evaluate,
        rung=fund_seq,
    )


def _trace_record(engine: Engine, a: Ordinal, b: Ordinal) -> dict:
    points = engine.trace(a, b)
    return {"alpha": str(a), "beta": str(b), "points": [str(p) for p in points], "rho2": len(points) - 1}


def _traces(engine: Engine) -> list:
    pairs = [(parse(a), parse(b)) for a, b in EXAMPLE_TRACES]
    probe = enumerate_probe(parse("w^2"), 2).members
    pairs += [(a, b) for b in probe for a in probe if a <= b]
    return [_trace_record(engine, a, b) for a, b in pairs]


def _coherence(engine: Engine) -> list:
    out = []
    for b, g in COHERENCE_PAIRS:
        beta, gamma = parse(b), parse(g)
        for tier in (2, 3):
            best, arg = -1, None
            for xi in enumerate_probe(beta, tier).members:
                d = abs(engine.rho2(xi, beta) - engine.rho2(xi, gamma))
                if d > best:
                    best, arg = d, xi
            out.append({"beta": b, "gamma": g, "tier": tier, "maxDelta": best, "argmax": str(arg)})
    return out


def _witness(engine: Engine) -> list:
    out = []
    for cap, tier, n in WITNESS_RUNS:
        probe = enumerate_probe(parse(cap), tier).members
        hit = next(
            ((a, b) for a in probe for b in probe if a < b and engine.rho2(a, b) > n),
            None,
        )
        out.append({
            "cap": cap, "tier": tier, "n": n,
            "alpha": str(hit[0]) if hit else None,
            "beta": str(hit[1]) if hit else None,
            "rho2": engine.rho2(*hit) if hit else None,
        })
    return out


def _space(engine: Engine) -> dict:
    w_w = parse("w^(w)")
    A = [parse(s) for s in ("w", "w^2", "w^3")]
    greedy, used = [], set()
    for n in range(4):
        pick = next((x for x in A if x not in used and engine.rho2(x, w_w) >= n), None)
        if pick is None:
            break
        greedy.append(pick)
        used.add(pick)
    separations = {}
    for members in (["0"], ["5"], ["w + 2", "w*2", "w^2 + 3"]):
        B = sorted(parse(s) for s in members)
        beta = B[-1].split_finite()[0] + parse("w")
        separations[", ".join(members)] = {
            "beta": str(beta),
            "certificate": {str(x): engine.rho2(x, beta) for x in B},
        }
    omega = parse("w")
    families = [[parse("1"), parse("2")], [parse("2"), parse("3")]]
    merged = sorted({x for n, fam in enumerate(families) for x in fam if engine.rho2(x, omega) > n})
    return {
        "frechet": {"A": [str(x) for x in A], "alpha": str(w_w), "m": 3, "sequence": [str(x) for x in greedy]},
        "merge": {"alpha": "w", "families": [["1", "2"], ["2", "3"]], "merged": [str(x) for x in merged]},
        "separations": separations,
        "descriptor": {"point": "0", "entries": [["w^2", 2]], "member": engine.rho2(parse("0"), parse("w^2")) > 2},
    }


def _colorings(engine: Engine) -> list:
    out = []
    for g in COLORING_GAMMAS:
        gamma = parse(g)
        color = engine.color(gamma)
        probe = enumerate_probe(gamma, 2).members
        fibers = []
        for alpha in probe:
            if not alpha.is_limit:
                continue
            rungs = [color(engine.rung(alpha, i)) for i in range(max(FIBER_PREFIXES))]
            for prefix in FIBER_PREFIXES:
                counts: dict[int, int] = {}
                for v in rungs[:prefix]:
                    counts[v] = counts.get(v, 0) + 1
                fibers.append({"alpha": str(alpha), "prefix": prefix,
                               "maxFiber": max(counts.values()), "distinct": len(counts)})
        out.append({
            "gamma": g,
            "values": {str(xi): color(xi) for xi in probe},
            "fibers": fibers,
        })
    return out


_BUILDERS = {
    "traces": _traces,
    "coherence": _coherence,
    "witness": _witness,
    "space": _space,
    "colorings": _colorings,
}


def generate() -> dict[str, object]:
    engine = _oracle_engine()
    return {name: _BUILDERS[name](engine) for name in SECTIONS}


def compute() -> dict[str, object]:
    """Production-path values for every golden section.

    Besides the shared engine primitives this also routes the composite
    operations (coherence scan, witness search, space procedures) through
    their production implementations and cross-checks them.
    """
    engine = _production_engine()
    payload = {name: _BUILDERS[name](engine) for name in SECTIONS}
    payload["coherence"] = [
        dict(rec, **coherence_delta(parse(rec["beta"]), parse(rec["gamma"]),
                                    enumerate_probe(parse(rec["beta"]), rec["tier"])).to_json())
        for rec in payload["coherence"]
    ]
    for rec in payload["witness"]:
        probe = enumerate_probe(parse(rec["cap"]), rec["tier"])
        hit = unbounded_witness(probe, probe, rec["n"])
        rec["alpha"], rec["beta"] = (str(hit[0]), str(hit[1])) if hit else (None, None)
        rec["rho2"] = rho2(*hit) if hit else None
    space = payload["space"]
    fr = space["frechet"]
    fr["sequence"] = [str(x) for x in frechet_extract(map(parse, fr["A"]), parse(fr["alpha"]), fr["m"])]
    mg = space["merge"]
    mg["merged"] = [str(x) for x in alpha1_merge([list(map(parse, f)) for f in mg["families"]], parse(mg["alpha"]))]
    for key in space["separations"]:
        space["separations"][key] = gdelta_separate(parse(s) for s in key.split(", ")).to_json()
    desc = space["descriptor"]
    desc["member"] = member_descriptor(
        parse(desc["point"]),
        NeighborhoodDescriptor(tuple((parse(a), n) for a, n in desc["entries"])),
    )
    return payload


def dumps(value: object) -> str:
    return json.dumps(value, indent=1, sort_keys=True, ensure_ascii=False) + "\n"


def write(payload: dict[str, object], directory: Path = GOLDEN_DIR) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name in SECTIONS:
        path = directory / f"{name}.json"
        path.write_text(dumps(payload[name]), encoding="utf-8")
        paths.append(path)
    return paths


def load(directory: Path = GOLDEN_DIR) -> dict[str, object]:
    return {name: json.loads((directory / f"{name}.json").read_text(encoding="utf-8")) for name in SECTIONS}


def diff(expected: dict[str, object], actual: dict[str, object]) -> list[str]:
    """Names of golden sections (and first differing entries) that disagree."""
    problems = []
    for name in SECTIONS:
        want, got = expected.get(name), actual.get(name)
        if want == got:
            continue
        if isinstance(want, list) and isinstance(got, list):
            for i, (w, g) in enumerate(zip(want, got)):
                if w != g:
                    problems.append(f"{name}[{i}]: expected {json.dumps(w)} got {json.dumps(g)}")
                    break
            else:
                problems.append(f"{name}: length {len(want)} != {len(got)}")
        else:
            problems.append(f"{name}: section differs")
    return problems
