"""Seeded property suites run by ``selftest``.

Each suite returns a JSON-ready summary; ``failures`` lists offending
instances as literals so a failing run can be replayed by hand.
"""

from __future__ import annotations

import random

from .ordinals import Ordinal, enumerate_probe, parse
from .space import APEX, BasicOpen, alpha1_merge, frechet_extract, gdelta_separate, member
from .walks import rho2, stabilizer, trace

MERGE_ANCHORS = ("w^3", "w^2*2", "w^2 + w*3", "w^(w)")


def _summary(name: str, instances: int, failures: list) -> dict:
    return {"name": name, "instances": instances, "failures": failures, "passed": not failures}


def stabilizer_suite(seed: int, pairs: int = 200) -> dict:
    rng = random.Random(seed)
    probe = enumerate_probe(parse("w^4"), 2).members
    failures = []
    checked = 0
    for _ in range(pairs):
        alpha, beta = sorted(rng.sample(probe, 2))
        eta = stabilizer(alpha, beta)
        walk = trace(alpha, beta)
        for xi in probe:
            if not eta < xi < alpha:
                continue
            checked += 1
            other = trace(xi, beta)
            if other.rho2 < walk.rho2 or other.points[: walk.rho2] != walk.points[:-1]:
                failures.append({"alpha": str(alpha), "beta": str(beta), "xi": str(xi)})
    summary = _summary("stabilizer", pairs, failures)
    summary["pointsChecked"] = checked
    return summary


def separation_suite(seed: int, trials: int = 100, levels: int = 32) -> dict:
    rng = random.Random(seed)
    probe = enumerate_probe(parse("w^3"), 2).members
    failures = []
    for _ in range(trials):
        B = rng.sample(probe, rng.randint(1, 12))
        result = gdelta_separate(B)
        beta = result.scheme.beta
        for xi, level in result.certificate.items():
            if member(xi, BasicOpen(beta, level)):
                failures.append({"beta": str(beta), "xi": str(xi), "level": level})
        if not all(member(APEX, result.scheme.open_set(n)) for n in range(levels + 1)):
            failures.append({"beta": str(beta), "apex": True})
    return _summary("separation", trials, failures)


def _random_subset(rng: random.Random, pool: list[Ordinal], most: int) -> list[Ordinal]:
    return rng.sample(pool, rng.randint(0, min(most, len(pool))))


def extraction_suite(seed: int, instances: int = 50) -> dict:
    rng = random.Random(seed)
    failures = []
    for _ in range(instances):
        alpha = parse(rng.choice(MERGE_ANCHORS))
        pool = [xi for xi in enumerate_probe(alpha, 2).members]
        A = _random_subset(rng, pool, 40)
        m = rng.randint(0, 8)
        seq = frechet_extract(A, alpha, m)
        ok = (
            len(seq) <= m + 1
            and len(set(seq)) == len(seq)
            and all(xi in A and rho2(xi, alpha) >= n for n, xi in enumerate(seq))
        )
        if not ok:
            failures.append({"alpha": str(alpha), "A": sorted(map(str, A)), "m": m})
    return _summary("frechet-extract", instances, failures)


def merge_suite(seed: int, instances: int = 50) -> dict:
    rng = random.Random(seed)
    failures = []
    for _ in range(instances):
        alpha = parse(rng.choice(MERGE_ANCHORS))
        pool = enumerate_probe(alpha, 2).members
        families = [_random_subset(rng, list(pool), 25) for _ in range(rng.randint(0, 6))]
        merged = alpha1_merge(families, alpha)
        weight = {xi: rho2(xi, alpha) for fam in families for xi in fam}
        merged_set = set(merged)
        ok = True
        for n, fam in enumerate(families):
            if any(weight[xi] > n for xi in set(fam) - merged_set):
                ok = False
        top = max(weight.values(), default=0) + 1
        for k in range(top + 1):
            lhs = sum(1 for xi in merged if weight[xi] <= k)
            rhs = sum(
                sum(1 for xi in set(fam) if weight[xi] <= k)
                for n, fam in enumerate(families)
                if n <= k
            )
            if lhs > rhs:
                ok = False
        if not ok:
            failures.append({"alpha": str(alpha), "families": [sorted(map(str, f)) for f in families]})
    return _summary("alpha1-merge", instances, failures)


def run_all(seed: int) -> list[dict]:
    return [
        stabilizer_suite(seed),
        separation_suite(seed),
        extraction_suite(seed),
        merge_suite(seed),
    ]
