"""Ladder systems and the stage-by-stage coloring that is finite-to-one on every ladder.

The ladder ``S_alpha`` of a limit ``alpha`` is its canonical fundamental
sequence.  :func:`build_coloring` produces ``F: gamma -> w`` by recursion on
``gamma``; every stage also carries a certificate ``bound(alpha)`` capping the
size of each fiber of ``F`` on ``S_alpha``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from .cseq import fund_seq, least_index
from .errors import CertificateViolation, DomainError, ResourceLimitError, check_natural
from .ordinals import OMEGA, ONE, Ordinal

DEFAULT_STAGE_LIMIT = 100_000


def ladder(alpha: Ordinal, i: int) -> Ordinal:
    return fund_seq(alpha, i)


def ladder_position(alpha: Ordinal, xi: Ordinal) -> int | None:
    """Index of ``xi`` on ``S_alpha``, or ``None`` when it is not a rung."""
    i = least_index(alpha, xi)
    return i if fund_seq(alpha, i) == xi else None


def enum_index(alpha: Ordinal, xi: Ordinal) -> int:
    """Increasing enumeration of ``S_alpha``, extended by 0 off the ladder."""
    if not alpha.is_limit:
        raise DomainError(f"{alpha} is not a limit ordinal")
    if not xi < alpha:
        raise DomainError(f"{xi} is not below {alpha}")
    return ladder_position(alpha, xi) or 0


def _cantor(a: int, b: int) -> int:
    s = a + b
    return s * (s + 1) // 2 + b


def pair(a: int, b: int) -> int:
    """Cantor pairing ``(a+b)(a+b+1)/2 + b``, limited to the 64-bit natural range."""
    check_natural(a)
    check_natural(b)
    return check_natural(_cantor(a, b), "pair value")


def unpair(m: int) -> tuple[int, int]:
    check_natural(m)
    s = (math.isqrt(8 * m + 1) - 1) // 2
    b = m - s * (s + 1) // 2
    return s - b, b


def is_delta_plus_omega(gamma: Ordinal) -> bool:
    return gamma.is_limit and gamma.last_term[0] == ONE


@dataclass(frozen=True)
class Club:
    """Club ``E`` in ``gamma`` of order type w made of limit ordinals."""

    gamma: Ordinal

    def __getitem__(self, k: int) -> Ordinal:
        return fund_seq(self.gamma, k)

    def first_above(self, xi: Ordinal) -> int:
        """Least ``k`` with ``E[k] > xi``."""
        return least_index(self.gamma, xi + 1)

    def first_at_least(self, xi: Ordinal) -> int:
        return least_index(self.gamma, xi)


def club_of(gamma: Ordinal) -> Club:
    if not gamma.is_limit:
        raise DomainError(f"{gamma} is not a limit ordinal")
    if is_delta_plus_omega(gamma):
        raise DomainError(f"{gamma} has the form delta + w; its club would contain successors")
    return Club(gamma)


@dataclass(frozen=True)
class Uniformizer:
    """``F'`` on the union of the ladders ``S_E[k]``, ``k < depth``: ``pair(k, i)``
    for the ``i``-th rung of the first such ladder containing the point, 0 elsewhere.

    ``depth=None`` removes the horizon.
    """

    club: Club
    depth: int | None = None

    def level(self, xi: Ordinal) -> tuple[int, int] | None:
        k = self.club.first_above(xi)
        while self.depth is None or k < self.depth:
            top = self.club[k]
            # ladders of later club points start at or above the previous club point
            if fund_seq(top, 0) > xi:
                return None
            pos = ladder_position(top, xi)
            if pos is not None:
                return k, pos
            k += 1
        return None

    def __call__(self, xi: Ordinal) -> int:
        found = self.level(xi)
        return _cantor(*found) if found else 0


def uniformize(club: Club, depth: int | None) -> Uniformizer:
    return Uniformizer(club, depth)


class Coloring:
    """One stage of the recursion; build instances with :func:`build_coloring`."""

    def __init__(self, gamma: Ordinal, builder: _Builder):
        self.gamma = gamma
        self._builder = builder
        if gamma <= OMEGA:
            self.kind = "finite"
        elif gamma.is_successor:
            self.top = gamma.predecessor()
            self.kind = "ladder-successor" if self.top.is_limit else "successor"
        elif is_delta_plus_omega(gamma):
            exp, coef = gamma.last_term
            # delta is a limit here (gamma > w)
            self.delta = Ordinal(gamma.terms[:-1] + (((exp, coef - 1),) if coef > 1 else ()))
            self.kind = "omega-step"
        else:
            self.club = club_of(gamma)
            self.uniformizer = Uniformizer(self.club)
            self.kind = "club"

    def __repr__(self) -> str:
        return f"Coloring({str(self.gamma)!r}, kind={self.kind!r})"

    def _stage(self, gamma: Ordinal) -> Coloring:
        return self._builder.stage(gamma)

    def evaluate(self, xi: Ordinal) -> int:
        if not xi < self.gamma:
            raise DomainError(f"{xi} is outside the domain {self.gamma}")
        outer: list[int] = []
        stage = self
        while True:
            kind = stage.kind
            if kind == "finite":
                value = int(xi)
                break
            if kind in ("successor", "ladder-successor"):
                if xi == stage.top:
                    value = 0
                    break
                if kind == "ladder-successor":
                    outer.append(enum_index(stage.top, xi))
                stage = stage._stage(stage.top)
            elif kind == "omega-step":
                if xi > stage.delta:
                    value = 0
                    break
                stage = stage._stage(stage.delta + 1)
            else:
                outer.append(stage.uniformizer(xi))
                stage = stage._stage(stage.club[stage.club.first_above(xi)])
        # nested pairing outgrows 64 bits quickly above w^w; colors are exact big ints
        for second in reversed(outer):
            value = _cantor(value, second)
        return value

    __call__ = evaluate

    def bound(self, alpha: Ordinal) -> int:
        """Certificate: no value is taken more than ``bound(alpha)`` times on ``S_alpha``."""
        if not alpha.is_limit or not alpha < self.gamma:
            raise DomainError(f"{alpha} is not a limit below {self.gamma}")
        total = 0
        stage = self
        while True:
            kind = stage.kind
            if kind == "ladder-successor" and alpha == stage.top:
                return total + 1
            if kind in ("successor", "ladder-successor"):
                stage = stage._stage(stage.top)
            elif kind == "omega-step":
                stage = stage._stage(stage.delta + 1)
            elif kind == "club":
                # rungs of S_alpha fall into groups by the club point above them:
                # those below the last club point under alpha are finitely many,
                # the rest use the stage at the first club point >= alpha
                club = stage.club
                j = club.first_at_least(alpha)
                if j:
                    total += least_index(alpha, club[j - 1])
                if club[j] == alpha:
                    # F' is injective on S_alpha
                    return total + 1
                stage = stage._stage(club[j])
            else:
                raise AssertionError("no limit below w")


@dataclass
class _Builder:
    limit: int = DEFAULT_STAGE_LIMIT
    stages: dict[Ordinal, Coloring] = field(default_factory=dict)

    def stage(self, gamma: Ordinal) -> Coloring:
        found = self.stages.get(gamma)
        if found is None:
            if len(self.stages) >= self.limit:
                raise ResourceLimitError(f"coloring construction exceeded {self.limit} stages")
            found = self.stages[gamma] = Coloring(gamma, self)
        return found


def build_coloring(gamma: Ordinal, stage_limit: int = DEFAULT_STAGE_LIMIT) -> Coloring:
    if gamma.is_zero:
        raise DomainError("coloring needs gamma > 0")
    return _Builder(stage_limit).stage(gamma)


@dataclass(frozen=True)
class FiberReport:
    alpha: Ordinal
    prefix: int
    histogram: dict[int, int]
    bound: int

    @property
    def max_fiber(self) -> int:
        return max(self.histogram.values(), default=0)

    def csv_rows(self) -> list[tuple[str, int, int, int]]:
        return [(str(self.alpha), self.prefix, v, c) for v, c in sorted(self.histogram.items())]


def fiber_report(coloring: Coloring, alpha: Ordinal, prefix: int) -> FiberReport:
    """Multiplicities of ``coloring`` on the first ``prefix`` rungs of ``S_alpha``."""
    bound = coloring.bound(alpha)
    counts = Counter(coloring.evaluate(fund_seq(alpha, i)) for i in range(prefix))
    report = FiberReport(alpha, prefix, dict(counts), bound)
    if report.max_fiber > bound:
        raise CertificateViolation(
            f"fiber of size {report.max_fiber} on S_{alpha} exceeds certificate bound {bound}"
        )
    return report
