from __future__ import annotations

import pytest
from hypothesis import strategies as st

from minwalks.ordinals import ZERO, Ordinal, enumerate_probe, parse


def _normalize(pairs) -> Ordinal:
    seen = {}
    for exp, coef in pairs:
        seen.setdefault(exp, coef)
    return Ordinal(tuple(sorted(seen.items(), key=lambda t: t[0], reverse=True)))


def ordinals(depth: int = 3, max_coef: int = 10**6, max_terms: int = 4):
    """Hypothesis strategy for ordinals of exponent nesting depth <= ``depth``."""
    if depth == 0:
        return st.just(ZERO)
    exps = ordinals(depth - 1, max_coef=8, max_terms=3)
    return st.lists(st.tuples(exps, st.integers(1, max_coef)), max_size=max_terms).map(_normalize)


def limits(depth: int = 3):
    return ordinals(depth).filter(lambda a: a.is_limit)


@pytest.fixture(scope="session")
def probe_w3():
    return enumerate_probe(parse("w^3"), 2).members


@pytest.fixture(scope="session")
def probe_w3_pairs(probe_w3):
    return [(a, b) for b in probe_w3 for a in probe_w3 if a <= b]


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # lets fixtures see the outcome of the test body during teardown
    outcome = yield
    report = outcome.get_result()
    setattr(item, f"rep_{report.when}", report)
