from __future__ import annotations

import pytest
from conftest import ordinals
from hypothesis import assume, given, settings

from minwalks import oracle, walks
from minwalks.cseq import c_members, min_above
from minwalks.errors import DomainError, ResourceLimitError
from minwalks.golden import load
from minwalks.ordinals import ZERO, enumerate_probe, parse
from minwalks.walks import coherence_delta, rho2, stabilizer, trace, unbounded_witness


def P(text):
    return parse(text)


def naive_rho2(a, b):
    return oracle.rho2(oracle.from_ordinal(a), oracle.from_ordinal(b))


@pytest.mark.parametrize(
    "alpha, beta, points",
    [
        ("0", "w^2", ["w^2", "w", "1", "0"]),
        ("2", "w*2", ["w*2", "w + 1", "w", "2"]),
        ("w*3", "w*3", ["w*3"]),
        ("2", "w", ["w", "2"]),
    ],
)
def test_trace_examples(alpha, beta, points):
    t = trace(P(alpha), P(beta))
    assert [str(p) for p in t.points] == points
    assert t.rho2 == len(points) - 1


def test_trace_json_shape():
    assert trace(P("0"), P("w^2")).to_json() == {
        "alpha": "0", "beta": "w^2", "points": ["w^2", "w", "1", "0"], "rho2": 3,
    }


def test_traces_match_committed_golden_records():
    for record in load()["traces"]:
        assert trace(P(record["alpha"]), P(record["beta"])).to_json() == record


def test_walk_rejects_reversed_arguments():
    with pytest.raises(DomainError):
        trace(P("w"), P("3"))
    with pytest.raises(DomainError):
        rho2(P("w + 1"), P("w"))


def test_recursion_law_and_step_lower_bound(probe_w3_pairs):
    for alpha, beta in probe_w3_pairs:
        if alpha == beta:
            assert rho2(alpha, beta) == 0
        elif alpha < beta:
            r = rho2(alpha, beta)
            assert r >= 1
            assert r == 1 + rho2(alpha, min_above(beta, alpha))


def test_rho2_agrees_with_trace_and_oracle(probe_w3_pairs):
    for alpha, beta in probe_w3_pairs:
        if alpha <= beta:
            r = rho2(alpha, beta)
            assert r == trace(alpha, beta).rho2 == naive_rho2(alpha, beta)


@settings(max_examples=60, deadline=None)
@given(ordinals(depth=3, max_coef=6, max_terms=3), ordinals(depth=3, max_coef=6, max_terms=3))
def test_rho2_agrees_with_oracle_on_random_pairs(a, b):
    alpha, beta = min(a, b), max(a, b)
    assert rho2(alpha, beta) == naive_rho2(alpha, beta)


def test_rho2_examples():
    assert rho2(P("2"), P("w")) == 1
    for text in ("0", "7", "w^2 + w*3", "w^(w)"):
        a = P(text)
        assert rho2(a, a) == 0
        assert rho2(a, a + 1) == 1


def test_step_guard_is_enforced():
    with pytest.raises(ResourceLimitError):
        rho2(P("0"), P("w^2"), guard=2)
    assert rho2(P("0"), P("w^2"), guard=3) == 3


def test_module_default_guard_is_read_at_call_time(monkeypatch):
    monkeypatch.setattr(walks, "DEFAULT_STEP_GUARD", 1)
    with pytest.raises(ResourceLimitError):
        trace(P("0"), P("w^2"))


def test_stabilizer_examples():
    assert stabilizer(P("w"), P("w*2")) == ZERO
    for k in range(1, 21):
        assert rho2(P(str(k)), P("w*2")) >= rho2(P("w"), P("w*2"))
    # beta = alpha + 1: empty supremum
    assert stabilizer(P("w^2 + 3"), P("w^2 + 4")) == ZERO


def test_stabilizer_rejects_non_increasing_pairs():
    with pytest.raises(DomainError):
        stabilizer(P("w"), P("w"))


def test_stabilizer_is_sup_of_c_members_below_alpha():
    probe = enumerate_probe(P("w^3"), 2).members
    for beta in probe:
        for alpha in probe:
            if not alpha < beta:
                continue
            points = trace(alpha, beta).points
            eta = ZERO
            for p in points[:-2]:
                below = c_members(p, alpha) if p.is_limit or p > alpha else []
                if below:
                    eta = max(eta, below[-1])
            assert stabilizer(alpha, beta) == eta


def test_stabilizer_soundness_on_probes():
    probe = enumerate_probe(P("w^3"), 2).members
    for beta in probe:
        for alpha in probe:
            if not alpha < beta:
                continue
            eta = stabilizer(alpha, beta)
            walk = trace(alpha, beta)
            for xi in probe:
                if eta < xi < alpha:
                    other = trace(xi, beta)
                    assert other.rho2 >= walk.rho2
                    assert other.points[: walk.rho2] == walk.points[:-1]


def test_coherence_singleton_probe():
    beta, gamma = P("w"), P("w^2")
    report = coherence_delta(beta, gamma, [ZERO])
    assert report.max_delta == abs(rho2(ZERO, beta) - rho2(ZERO, gamma))
    assert report.argmax == ZERO


def test_coherence_example_and_json():
    report = coherence_delta(P("w"), P("w*2"), enumerate_probe(P("w"), 2))
    assert report.to_json() == {"maxDelta": 2, "argmax": "0"}


def test_coherence_preconditions():
    with pytest.raises(DomainError):
        coherence_delta(P("w"), P("w"), [ZERO])
    with pytest.raises(DomainError):
        coherence_delta(P("w"), P("w*2"), enumerate_probe(P("w^2"), 2))


@pytest.mark.parametrize("beta, gamma", [("w", "w*2"), ("w^2", "w^2*2 + w"), ("w*3", "w^2 + 1")])
def test_coherence_is_monotone_in_tier(beta, gamma):
    b, g = P(beta), P(gamma)
    deltas = [coherence_delta(b, g, enumerate_probe(b, t)).max_delta for t in range(4)]
    assert deltas == sorted(deltas)


def test_coherence_reports_least_maximizer():
    b, g = P("w^2"), P("w^2*2")
    probe = enumerate_probe(b, 2)
    report = coherence_delta(b, g, probe)
    deltas = {xi: abs(rho2(xi, b) - rho2(xi, g)) for xi in probe}
    assert report.max_delta == max(deltas.values())
    assert report.argmax == min(xi for xi, d in deltas.items() if d == report.max_delta)


def test_witness_examples():
    assert unbounded_witness([P("0")], [P("1")], 5) is None
    assert unbounded_witness([P("w")], [P("w^2")], 0) == (P("w"), P("w^2"))
    assert unbounded_witness([], [P("w")], 0) is None


def test_witness_is_first_in_lexicographic_order():
    probe = enumerate_probe(P("w^3"), 2).members
    expected = next((a, b) for a in probe for b in probe if a < b and rho2(a, b) > 2)
    assert unbounded_witness(probe, probe, 2) == expected


@given(ordinals(depth=2, max_coef=8, max_terms=3))
def test_witness_result_is_valid(a):
    assume(not a.is_zero)
    hit = unbounded_witness([ZERO, a], [a, a + 1, a + a], 1)
    if hit is not None:
        alpha, beta = hit
        assert alpha < beta and rho2(alpha, beta) > 1
