"""Finite-witness procedures for the space ``kappa + 1`` topologized by rho2.

Ordinal points are isolated; neighborhoods of the apex (the point ``kappa``)
are generated by basic opens ``{apex} + ordinals >= anchor + {xi < anchor :
rho2(xi, anchor) > level}``.  Every procedure here works on finite data and
returns either a concrete witness or a report about the data it was given.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

from .errors import DomainError, check_natural
from .ordinals import Ordinal, least_limit_above
from .walks import rho2


class Apex:
    """The point above every ordinal."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "APEX"

    def __str__(self) -> str:
        return "apex"


APEX = Apex()
Point = Union[Apex, Ordinal]


def _require_limit(alpha: Ordinal, what: str = "anchor"):
    if not alpha.is_limit:
        raise DomainError(f"{what} {alpha} is not a limit ordinal")


@dataclass(frozen=True)
class BasicOpen:
    anchor: Ordinal
    level: int

    def __post_init__(self):
        _require_limit(self.anchor)
        check_natural(self.level, "level")

    def __contains__(self, p: Point) -> bool:
        return member(p, self)


@dataclass(frozen=True)
class NeighborhoodDescriptor:
    """Finitely supported union ``{apex} + U_j {xi < anchor_j : rho2(xi, anchor_j) > level_j}``."""

    entries: tuple[tuple[Ordinal, int], ...] = ()

    def __post_init__(self):
        anchors = [a for a, _ in self.entries]
        if len(set(anchors)) != len(anchors):
            raise DomainError("descriptor anchors must be pairwise distinct")
        for anchor, level in self.entries:
            _require_limit(anchor)
            check_natural(level, "level")

    @classmethod
    def from_mapping(cls, levels: Mapping[Ordinal, int]) -> NeighborhoodDescriptor:
        return cls(tuple(sorted(levels.items())))

    def __contains__(self, p: Point) -> bool:
        return member_descriptor(p, self)


@dataclass(frozen=True)
class GdeltaScheme:
    """The family ``{BasicOpen(beta, n) : n < w}``; its intersection is ``{apex} + [beta, cap)``."""

    beta: Ordinal

    def __post_init__(self):
        _require_limit(self.beta, "beta")

    def open_set(self, n: int) -> BasicOpen:
        return BasicOpen(self.beta, n)

    def in_intersection(self, p: Point) -> bool:
        return p is APEX or p >= self.beta


@dataclass(frozen=True)
class Separation:
    scheme: GdeltaScheme
    certificate: dict[Ordinal, int]

    def to_json(self) -> dict:
        return {
            "beta": str(self.scheme.beta),
            "certificate": {str(xi): n for xi, n in sorted(self.certificate.items())},
        }


@dataclass
class ConvergenceReport:
    sequence: list[Ordinal]
    histograms: dict[Ordinal, Counter] = field(default_factory=dict)

    @property
    def max_fiber(self) -> int:
        return max((max(h.values(), default=0) for h in self.histograms.values()), default=0)

    def to_json(self) -> dict:
        return {
            "anchors": [
                {"anchor": str(a), "histogram": {str(v): h[v] for v in sorted(h)}}
                for a, h in sorted(self.histograms.items())
            ],
            "maxFiber": self.max_fiber,
        }


def member(p: Point, u: BasicOpen) -> bool:
    if p is APEX or p >= u.anchor:
        return True
    return rho2(p, u.anchor) > u.level


def member_descriptor(p: Point, d: NeighborhoodDescriptor) -> bool:
    # ordinals above every anchor are not in the union form
    if p is APEX:
        return True
    return any(p < anchor and rho2(p, anchor) > level for anchor, level in d.entries)


def frechet_extract(A: Iterable[Ordinal], alpha: Ordinal, m: int) -> list[Ordinal]:
    """Greedy ``xi_0, xi_1, ...`` (at most ``m + 1`` terms) from ``A`` below
    ``alpha`` with ``rho2(xi_n, alpha) >= n``, least eligible and unused first.
    Stops early once no member of ``A`` qualifies."""
    _require_limit(alpha, "alpha")
    pool = sorted({xi for xi in A if xi < alpha})
    weights = {xi: rho2(xi, alpha) for xi in pool}
    out: list[Ordinal] = []
    used = set()
    for n in range(m + 1):
        pick = next((xi for xi in pool if xi not in used and weights[xi] >= n), None)
        if pick is None:
            break
        out.append(pick)
        used.add(pick)
    return out


def alpha1_merge(families: Sequence[Iterable[Ordinal]], alpha: Ordinal) -> list[Ordinal]:
    """Union over n of ``{xi in A_n : rho2(xi, alpha) > n}``, sorted."""
    _require_limit(alpha, "alpha")
    merged = set()
    for n, family in enumerate(families):
        for xi in family:
            if not xi < alpha:
                raise DomainError(f"family member {xi} is not below {alpha}")
            if rho2(xi, alpha) > n:
                merged.add(xi)
    return sorted(merged)


def gdelta_separate(B: Iterable[Ordinal]) -> Separation:
    """G-delta scheme around the apex missing every point of the finite set ``B``.

    ``beta`` is the least limit above ``max(B)``; each ``xi`` in ``B`` is
    excluded from the scheme member at level ``rho2(xi, beta)``.
    """
    points = sorted(set(B))
    if not points:
        raise DomainError("cannot separate an empty set")
    beta = least_limit_above(points[-1])
    return Separation(GdeltaScheme(beta), {xi: rho2(xi, beta) for xi in points})


def convergence_report(seq: Iterable[Ordinal], anchors: Iterable[Ordinal]) -> ConvergenceReport:
    """Per-anchor multiplicities of rho2 values over the sequence members below each anchor.

    Diagnostic only: growth of a fiber is visible, finiteness is not.
    """
    sequence = sorted(set(seq))
    report = ConvergenceReport(sequence)
    for anchor in sorted(set(anchors)):
        _require_limit(anchor)
        report.histograms[anchor] = Counter(rho2(xi, anchor) for xi in sequence if xi < anchor)
    return report
