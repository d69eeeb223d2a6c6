"""Ordinals below epsilon_0 in hereditary Cantor normal form.

An ordinal is stored as a tuple of ``(exponent, coefficient)`` pairs with
strictly decreasing exponents, each exponent itself an :class:`Ordinal`.
Because the representation is unique, structural equality is ordinal
equality and lexicographic tuple order is ordinal order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import (
    MAX_NATURAL,
    DomainError,
    NaturalOverflowError,
    OrdinalSyntaxError,
    ResourceLimitError,
    check_natural,
)

DEFAULT_PROBE_LIMIT = 250_000


@dataclass(frozen=True, order=True)
class Ordinal:
    terms: tuple[tuple[Ordinal, int], ...] = ()

    def __post_init__(self):
        prev = None
        for exp, coef in self.terms:
            if not isinstance(exp, Ordinal):
                raise TypeError(f"exponent must be an Ordinal, got {type(exp).__name__}")
            if coef < 1:
                raise DomainError(f"coefficient must be positive, got {coef}")
            check_natural(coef, "coefficient")
            if prev is not None and not exp < prev:
                raise DomainError("exponents must be strictly decreasing")
            prev = exp

    @classmethod
    def of(cls, n: int) -> Ordinal:
        """The finite ordinal ``n``."""
        check_natural(n)
        return cls(((ZERO, n),)) if n else ZERO

    @classmethod
    def power(cls, exponent: Ordinal | int, coefficient: int = 1) -> Ordinal:
        """``w^exponent * coefficient``."""
        if isinstance(exponent, int):
            exponent = cls.of(exponent)
        if coefficient == 0:
            return ZERO
        return cls(((exponent, coefficient),))

    @classmethod
    def parse(cls, text: str) -> Ordinal:
        return parse(text)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0].is_zero)

    @property
    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero

    @property
    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero

    @property
    def leading_exponent(self) -> Ordinal:
        return self.terms[0][0] if self.terms else ZERO

    @property
    def last_term(self) -> tuple[Ordinal, int]:
        if not self.terms:
            raise DomainError("0 has no Cantor normal form terms")
        return self.terms[-1]

    @property
    def depth(self) -> int:
        """Exponent nesting depth: 0 for zero, 1 for positive naturals, 2 for w, ..."""
        if not self.terms:
            return 0
        return 1 + max(exp.depth for exp, _ in self.terms)

    def __int__(self) -> int:
        if not self.is_finite:
            raise DomainError(f"{self} is not finite")
        return self.terms[0][1] if self.terms else 0

    def split_finite(self) -> tuple[Ordinal, int]:
        """Return ``(limit_part, n)`` with ``self = limit_part + n``."""
        if self.is_successor:
            return Ordinal(self.terms[:-1]), self.terms[-1][1]
        return self, 0

    def predecessor(self) -> Ordinal:
        if not self.is_successor:
            raise DomainError(f"{self} has no predecessor")
        limit, n = self.split_finite()
        return limit + (n - 1)

    def __add__(self, other: Ordinal | int) -> Ordinal:
        if isinstance(other, int):
            other = Ordinal.of(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return add(self, other)

    def __radd__(self, other: int) -> Ordinal:
        if isinstance(other, int):
            return add(Ordinal.of(other), self)
        return NotImplemented

    def __str__(self) -> str:
        return format_ordinal(self)

    def __repr__(self) -> str:
        return f"Ordinal({format_ordinal(self)!r})"


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def compare(a: Ordinal, b: Ordinal) -> str:
    if a == b:
        return "equal"
    return "less" if a < b else "greater"


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    if b.is_zero:
        return a
    lead = b.terms[0][0]
    kept = [t for t in a.terms if t[0] > lead]
    rest = list(b.terms)
    for exp, coef in a.terms:
        if exp == lead:
            rest[0] = (lead, check_natural(coef + rest[0][1], "coefficient"))
            break
    return Ordinal(tuple(kept + rest))


def successor(a: Ordinal) -> Ordinal:
    return add(a, ONE)


def is_limit(a: Ordinal) -> bool:
    return a.is_limit


def least_limit_above(a: Ordinal) -> Ordinal:
    """The least limit ordinal strictly greater than ``a``."""
    return a.split_finite()[0] + OMEGA


# -- literals ---------------------------------------------------------------


def format_ordinal(a: Ordinal) -> str:
    if a.is_zero:
        return "0"
    parts = []
    for exp, coef in a.terms:
        if exp.is_zero:
            parts.append(str(coef))
            continue
        if exp == ONE:
            head = "w"
        elif exp.is_finite:
            head = f"w^{int(exp)}"
        else:
            head = f"w^({format_ordinal(exp)})"
        parts.append(head if coef == 1 else f"{head}*{coef}")
    return " + ".join(parts)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str):
        raise OrdinalSyntaxError(message, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def nat(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in "0123456789":
            self.pos += 1
        if start == self.pos:
            self.fail("expected a natural number")
        value = int(self.text[start:self.pos])
        if value > MAX_NATURAL:
            raise NaturalOverflowError(f"natural {value} exceeds {MAX_NATURAL} at position {start} in {self.text!r}")
        return value

    def ordinal(self) -> Ordinal:
        value = self.term()
        while self.peek() == "+":
            self.pos += 1
            value = value + self.term()
        return value

    def term(self) -> Ordinal:
        ch = self.peek()
        if ch == "w":
            self.pos += 1
            exponent = ONE
            if self.peek() == "^":
                self.pos += 1
                if self.peek() == "(":
                    self.pos += 1
                    exponent = self.ordinal()
                    self.expect(")")
                else:
                    exponent = Ordinal.of(self.nat())
            coefficient = 1
            if self.peek() == "*":
                self.pos += 1
                coefficient = self.nat()
            return Ordinal.power(exponent, coefficient)
        if ch.isdigit():
            return Ordinal.of(self.nat())
        self.fail("expected 'w' or a natural number" if ch else "unexpected end of input")

    def parse(self) -> Ordinal:
        value = self.ordinal()
        if self.peek():
            self.fail(f"unexpected {self.peek()!r}")
        return value


def parse(text: str) -> Ordinal:
    """Parse an ordinal literal such as ``"w^(w)*2 + w*3 + 1"`` into CNF."""
    return _Parser(text).parse()


# -- probe sets ---------------------------------------------------------------


@dataclass(frozen=True)
class ProbeSet:
    cap: Ordinal
    tier: int
    members: tuple[Ordinal, ...] = field(repr=False)

    def __iter__(self) -> Iterator[Ordinal]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, item: object) -> bool:
        return item in self._lookup

    @cached_property
    def _lookup(self) -> frozenset[Ordinal]:
        return frozenset(self.members)


def _notations(bound: Ordinal, depth: int, tier: int, budget: list[int]) -> list[Ordinal]:
    """Tier-bounded notations of nesting depth <= ``depth`` that are < ``bound``."""
    if bound.is_zero:
        return []
    if depth == 0:
        return [ZERO]
    # every exponent of a member is <= the leading exponent of bound
    exps = _notations(successor(bound.leading_exponent), depth - 1, tier, budget)
    exps.reverse()
    out = []
    coefs = range(1, tier + 2)
    for k in range(tier + 2):
        for chosen in itertools.combinations(exps, k):
            for cs in itertools.product(coefs, repeat=k):
                a = Ordinal(tuple(zip(chosen, cs)))
                if a < bound:
                    out.append(a)
                    budget[0] -= 1
                    if budget[0] < 0:
                        raise ResourceLimitError("probe enumeration exceeded the member limit")
    out.sort()
    return out


def enumerate_probe(cap: Ordinal, tier: int, limit: int = DEFAULT_PROBE_LIMIT) -> ProbeSet:
    """All ordinals below ``cap`` whose hereditary CNF has depth <= tier,
    at most tier+1 terms and coefficients <= tier+1, in increasing order."""
    if cap.is_zero:
        raise DomainError("probe cap must be positive")
    if tier < 0:
        raise DomainError("tier must be non-negative")
    members = _notations(cap, tier, tier, [limit])
    if len(members) > limit:
        raise ResourceLimitError(f"probe set has {len(members)} members, limit is {limit}")
    return ProbeSet(cap, tier, tuple(members))


def parse_many(texts: Iterable[str]) -> list[Ordinal]:
    return [parse(t) for t in texts]
