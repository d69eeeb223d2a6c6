"""Minimal walks along the canonical C-sequence and the step count rho2."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Iterable

from .cseq import max_member_below, min_above
from .errors import DomainError, ResourceLimitError
from .ordinals import ZERO, Ordinal, ProbeSet

DEFAULT_STEP_GUARD = 10**6


@dataclass(frozen=True)
class WalkTrace:
    alpha: Ordinal
    beta: Ordinal
    points: tuple[Ordinal, ...]

    @property
    def rho2(self) -> int:
        return len(self.points) - 1

    def to_json(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "points": [str(p) for p in self.points],
            "rho2": self.rho2,
        }


def _guard(guard: int | None) -> int:
    # read at call time so the CLI can reconfigure the default
    return DEFAULT_STEP_GUARD if guard is None else guard


def _check(alpha: Ordinal, beta: Ordinal):
    if alpha > beta:
        raise DomainError(f"walk needs alpha <= beta, got {alpha} > {beta}")


def trace(alpha: Ordinal, beta: Ordinal, guard: int | None = None) -> WalkTrace:
    """Walk from ``beta`` down to ``alpha``, recording every point visited."""
    _check(alpha, beta)
    guard = _guard(guard)
    points = [beta]
    while points[-1] != alpha:
        if len(points) > guard:
            raise ResourceLimitError(f"walk from {beta} to {alpha} exceeded {guard} steps")
        points.append(min_above(points[-1], alpha))
    return WalkTrace(alpha, beta, tuple(points))


def rho2(alpha: Ordinal, beta: Ordinal, guard: int | None = None) -> int:
    _check(alpha, beta)
    guard = _guard(guard)
    steps = 0
    while beta != alpha:
        if steps >= guard:
            raise ResourceLimitError(f"walk to {alpha} exceeded {guard} steps")
        beta = min_above(beta, alpha)
        steps += 1
    return steps


def stabilizer(alpha: Ordinal, beta: Ordinal, guard: int | None = None) -> Ordinal:
    """Ordinal ``eta < alpha`` below which nothing in ``(eta, alpha)`` shortens the walk.

    For every ``xi`` with ``eta < xi < alpha`` the walk from ``beta`` to ``xi``
    passes through all points of the walk to ``alpha`` except ``alpha`` itself,
    so ``rho2(xi, beta) >= rho2(alpha, beta)``.  Only the points before the
    last step contribute: from each of them the next step is the same whether
    the target is ``alpha`` or any ``xi`` above every C-member below ``alpha``.
    """
    if not alpha < beta:
        raise DomainError(f"stabilizer needs alpha < beta, got {alpha} >= {beta}")
    points = trace(alpha, beta, guard).points
    eta = ZERO
    for point in points[:-2]:
        below = max_member_below(point, alpha)
        if below is not None and below > eta:
            eta = below
    return eta


@dataclass(frozen=True)
class CoherenceReport:
    max_delta: int
    argmax: Ordinal

    def to_json(self) -> dict:
        return {"maxDelta": self.max_delta, "argmax": str(self.argmax)}


def coherence_delta(beta: Ordinal, gamma: Ordinal, probes: ProbeSet | Iterable[Ordinal],
                    guard: int | None = None) -> CoherenceReport:
    """Largest ``|rho2(xi, beta) - rho2(xi, gamma)|`` over the probe ordinals.

    This only bounds the true supremum from below; the least maximizer is reported.
    """
    if not beta < gamma:
        raise DomainError(f"coherence scan needs beta < gamma, got {beta} >= {gamma}")
    if isinstance(probes, ProbeSet) and probes.cap > beta:
        raise DomainError(f"probe cap {probes.cap} exceeds {beta}")
    best = None
    for xi in sorted(probes):
        if xi > beta:
            raise DomainError(f"probe {xi} exceeds {beta}")
        delta = abs(rho2(xi, beta, guard) - rho2(xi, gamma, guard))
        if best is None or delta > best.max_delta:
            best = CoherenceReport(delta, xi)
    if best is None:
        raise DomainError("empty probe set")
    return best


def unbounded_witness(A: Iterable[Ordinal], B: Iterable[Ordinal], n: int,
                      guard: int | None = None) -> tuple[Ordinal, Ordinal] | None:
    """First ``(alpha, beta)`` in lexicographic order with alpha in A, beta in B,
    ``alpha < beta`` and ``rho2(alpha, beta) > n``."""
    bs = sorted(set(B))
    for alpha in sorted(set(A)):
        for beta in bs[bisect.bisect_right(bs, alpha):]:
            if rho2(alpha, beta, guard) > n:
                return alpha, beta
    return None
