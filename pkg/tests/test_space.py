from __future__ import annotations

import pytest

from minwalks.errors import DomainError
from minwalks.ordinals import enumerate_probe, parse
from minwalks.space import (
    APEX,
    Apex,
    BasicOpen,
    GdeltaScheme,
    NeighborhoodDescriptor,
    alpha1_merge,
    convergence_report,
    frechet_extract,
    gdelta_separate,
    member,
    member_descriptor,
)
from minwalks.walks import rho2


def P(text):
    return parse(text)


def test_apex_is_a_singleton():
    assert Apex() is APEX
    assert str(APEX) == "apex"


def test_member_examples():
    u = BasicOpen(P("w^2"), 2)
    assert member(APEX, u)
    assert member(P("w^2"), u) and member(P("w^3"), u)
    assert member(P("0"), u)  # rho2(0, w^2) = 3
    assert not member(P("w"), u)  # rho2(w, w^2) = 1
    assert P("5") not in u


def test_basic_open_requires_limit_anchor():
    with pytest.raises(DomainError):
        BasicOpen(P("w + 1"), 0)


def test_descriptor_example():
    d = NeighborhoodDescriptor.from_mapping({P("w^2"): 2})
    assert member_descriptor(P("0"), d)
    assert P("0") in d
    assert APEX in d


def test_descriptor_rejects_duplicate_anchors():
    with pytest.raises(DomainError):
        NeighborhoodDescriptor(((P("w"), 1), (P("w"), 2)))


def test_descriptor_union_over_anchors():
    d = NeighborhoodDescriptor.from_mapping({P("w"): 0, P("w^2"): 2})
    assert member_descriptor(P("3"), d)  # via w
    assert not member_descriptor(P("w + 1"), d)  # above w, rho2(w + 1, w^2) = 2


@pytest.mark.parametrize("anchor", ["w", "w*2", "w^2", "w^2*2 + w", "w^3"])
def test_basic_open_monotone_in_level(anchor):
    a = P(anchor)
    probe = enumerate_probe(P("w^3 + 1"), 2).members
    for n in range(5):
        for xi in probe:
            if member(xi, BasicOpen(a, n + 1)):
                assert member(xi, BasicOpen(a, n))


@pytest.mark.parametrize("anchor", ["w", "w^2", "w^2*2 + w*3"])
def test_descriptor_agrees_with_basic_open_below_anchor(anchor):
    a = P(anchor)
    for n in range(4):
        d = NeighborhoodDescriptor(((a, n),))
        for xi in enumerate_probe(a, 2):
            assert member_descriptor(xi, d) == member(xi, BasicOpen(a, n))


def test_frechet_example():
    A = [P("w"), P("w^2"), P("w^3")]
    seq = frechet_extract(A, P("w^(w)"), 3)
    assert seq == [P("w"), P("w^2")]
    assert [rho2(x, P("w^(w)")) for x in seq] == [1, 1]


def test_frechet_edge_cases():
    assert frechet_extract([], P("w"), 5) == []
    # members at or above alpha are ignored
    assert frechet_extract([P("w"), P("w + 1")], P("w"), 2) == []
    assert frechet_extract([P("3")], P("w"), 0) == [P("3")]
    # distinctness: a single member cannot fill a second slot
    assert frechet_extract([P("2")], P("w"), 1) == [P("2")]
    with pytest.raises(DomainError):
        frechet_extract([P("1")], P("5"), 1)


def test_frechet_output_contract():
    alpha = P("w^3")
    A = enumerate_probe(alpha, 2).members
    for m in range(8):
        seq = frechet_extract(A, alpha, m)
        assert len(seq) <= m + 1 and len(set(seq)) == len(seq)
        assert all(rho2(xi, alpha) >= n for n, xi in enumerate(seq))


def test_merge_examples():
    alpha = P("w")
    assert alpha1_merge([[P("1"), P("2")], [P("2"), P("3")]], alpha) == [P("1"), P("2")]
    assert alpha1_merge([], alpha) == []
    A0 = [P("0"), P("4"), P("9")]
    assert alpha1_merge([A0], alpha) == sorted(A0)


def test_merge_rejects_out_of_range_members():
    with pytest.raises(DomainError):
        alpha1_merge([[P("w")]], P("w"))


def test_merge_dominance():
    alpha = P("w^2*2")
    pool = enumerate_probe(alpha, 2).members
    families = [pool[i::3] for i in range(3)] + [pool[:10]]
    merged = alpha1_merge(families, alpha)
    weight = {xi: rho2(xi, alpha) for xi in pool}
    for n, fam in enumerate(families):
        assert all(weight[xi] <= n for xi in set(fam) - set(merged))
    for k in range(max(weight.values()) + 2):
        lhs = sum(1 for xi in merged if weight[xi] <= k)
        rhs = sum(sum(1 for xi in fam if weight[xi] <= k) for n, fam in enumerate(families) if n <= k)
        assert lhs <= rhs


@pytest.mark.parametrize("members, beta, levels", [(["0"], "w", {"0": 2}), (["5"], "w", {"5": 1})])
def test_separation_examples(members, beta, levels):
    sep = gdelta_separate(P(x) for x in members)
    assert sep.to_json() == {"beta": beta, "certificate": levels}


def test_separation_excludes_every_point_and_keeps_apex():
    B = [P(x) for x in ("w + 2", "w*2", "w^2 + 3", "7")]
    sep = gdelta_separate(B)
    assert sep.scheme.beta == P("w^2 + w")
    for xi, n in sep.certificate.items():
        assert not member(xi, sep.scheme.open_set(n))
        assert not sep.scheme.in_intersection(xi)
    assert all(member(APEX, sep.scheme.open_set(n)) for n in range(33))
    assert sep.scheme.in_intersection(APEX) and sep.scheme.in_intersection(P("w^3"))


def test_separation_rejects_empty_set():
    with pytest.raises(DomainError):
        gdelta_separate([])
    with pytest.raises(DomainError):
        GdeltaScheme(P("3"))


def test_convergence_report_examples():
    report = convergence_report([P(str(k)) for k in range(1, 21)], [P("w")])
    assert report.to_json() == {"anchors": [{"anchor": "w", "histogram": {"1": 20}}], "maxFiber": 20}
    assert convergence_report([], [P("w")]).max_fiber == 0


def test_convergence_report_of_extracted_sequence():
    alpha = P("w^3")
    seq = frechet_extract(enumerate_probe(alpha, 2), alpha, 6)
    report = convergence_report(seq, [alpha, P("w^2")])
    hist = report.histograms[alpha]
    assert sum(hist.values()) == len(seq)
    assert sum(report.histograms[P("w^2")].values()) == sum(1 for x in seq if x < P("w^2"))
