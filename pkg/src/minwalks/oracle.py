"""Naive reference evaluator, coded independently of the production path.

Ordinals are plain nested tuples ``((exp, coef), ...)``.  Fundamental
sequences are rebuilt from their definition, ``min(C_beta \\ alpha)`` is a
linear scan, and rho2 follows the defining recursion.  Nothing here imports
the production C-sequence or walk code; it only converts to and from
:class:`~minwalks.ordinals.Ordinal` at the boundary.
"""

from __future__ import annotations

import sys

from .ordinals import Ordinal

SCAN_LIMIT = 100_000

Z: tuple = ()
ONE: tuple = ((Z, 1),)
OMEGA: tuple = ((ONE, 1),)


def from_ordinal(a: Ordinal) -> tuple:
    return tuple((from_ordinal(e), c) for e, c in a.terms)


def to_ordinal(t: tuple) -> Ordinal:
    return Ordinal(tuple((to_ordinal(e), c) for e, c in t))


def cmp(a: tuple, b: tuple) -> int:
    for (ea, ca), (eb, cb) in zip(a, b):
        c = cmp(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a) == len(b):
        return 0
    return -1 if len(a) < len(b) else 1


def is_successor(a: tuple) -> bool:
    return bool(a) and a[-1][0] == Z


def is_limit(a: tuple) -> bool:
    return bool(a) and a[-1][0] != Z


def pred(a: tuple) -> tuple:
    e, c = a[-1]
    assert e == Z
    return a[:-1] + (((Z, c - 1),) if c > 1 else ())


def nat(n: int) -> tuple:
    return ((Z, n),) if n else Z


def fund(lam: tuple, i: int) -> tuple:
    e, c = lam[-1]
    nu = lam[:-1] + (((e, c - 1),) if c > 1 else ())
    if is_successor(e):
        return nu + ((pred(e), i + 1),)
    return nu + ((fund(e, i), 1),)


def first_index_at_least(lam: tuple, alpha: tuple) -> int:
    for i in range(SCAN_LIMIT):
        if cmp(fund(lam, i), alpha) >= 0:
            return i
    raise RuntimeError("scan limit reached")


def min_above(beta: tuple, alpha: tuple) -> tuple:
    if is_successor(beta):
        return pred(beta)
    return fund(beta, first_index_at_least(beta, alpha))


def rho2(alpha: tuple, beta: tuple) -> int:
    if alpha == beta:
        return 0
    return rho2(alpha, min_above(beta, alpha)) + 1


def trace(alpha: tuple, beta: tuple) -> list[tuple]:
    if alpha == beta:
        return [beta]
    return [beta] + trace(alpha, min_above(beta, alpha))


# -- coloring -----------------------------------------------------------------


def pair(a: int, b: int) -> int:
    return (a + b) * (a + b + 1) // 2 + b


def ladder_position(lam: tuple, xi: tuple) -> int | None:
    for i in range(SCAN_LIMIT):
        c = cmp(fund(lam, i), xi)
        if c == 0:
            return i
        if c > 0:
            return None
    raise RuntimeError("scan limit reached")


def color(gamma: tuple, xi: tuple, horizon: int = 8) -> int:
    """The ladder coloring at stage ``gamma``, by direct structural recursion.

    The club-level search checks ``horizon`` club points past the first one
    above ``xi`` instead of assuming later ladders start above ``xi``.
    """
    if cmp(gamma, OMEGA) <= 0:
        return xi[0][1] if xi else 0
    if is_successor(gamma):
        beta = pred(gamma)
        if xi == beta:
            return 0
        inner = color(beta, xi, horizon)
        if is_limit(beta):
            pos = ladder_position(beta, xi)
            return pair(inner, pos or 0)
        return inner
    e, c = gamma[-1]
    if e == ONE:
        delta = gamma[:-1] + (((e, c - 1),) if c > 1 else ())
        if cmp(xi, delta) > 0:
            return 0
        return color(delta + ((Z, 1),), xi, horizon)
    k0 = 0
    while cmp(fund(gamma, k0), xi) <= 0:
        k0 += 1
    level = 0
    for k in range(k0, k0 + horizon):
        pos = ladder_position(fund(gamma, k), xi)
        if pos is not None:
            level = pair(k, pos)
            break
    return pair(color(fund(gamma, k0), xi, horizon), level)


sys.setrecursionlimit(max(sys.getrecursionlimit(), 20_000))
