"""The canonical C-sequence: Wainer-style fundamental sequences below epsilon_0.

For a successor ``b + 1`` the set C is ``{b}``.  For a limit
``lam = nu + w^e`` (``nu`` carrying any remaining copies of ``w^e``) the i-th
element is ``nu + w^(e-1) * (i+1)`` when ``e`` is a successor and
``nu + w^(C_e[i])`` when ``e`` is a limit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ResourceLimitError, check_natural
from .ordinals import Ordinal

DEFAULT_MEMBER_LIMIT = 1_000_000


def _split(lam: Ordinal) -> tuple[tuple, Ordinal]:
    """Terms of ``nu`` and the exponent ``e`` of the final term of ``lam``."""
    exp, coef = lam.terms[-1]
    nu_terms = lam.terms[:-1]
    if coef > 1:
        nu_terms += ((exp, coef - 1),)
    return nu_terms, exp


def _require_limit(lam: Ordinal):
    if not lam.is_limit:
        raise DomainError(f"{lam} is not a limit ordinal")


def fund_seq(lam: Ordinal, i: int) -> Ordinal:
    """``C_lam[i]``; strictly increasing in ``i`` with supremum ``lam``."""
    _require_limit(lam)
    check_natural(i, "index")
    nu_terms, exp = _split(lam)
    nu = Ordinal(nu_terms)
    if exp.is_successor:
        return nu + Ordinal.power(exp.predecessor(), check_natural(i + 1))
    return nu + Ordinal.power(fund_seq(exp, i))


def least_index(lam: Ordinal, alpha: Ordinal) -> int:
    """Least ``i`` with ``fund_seq(lam, i) >= alpha``, for ``alpha < lam``.

    Closed form on the CNF of ``alpha``; cost is linear in the size of the
    notation rather than in the index returned.
    """
    _require_limit(lam)
    if not alpha < lam:
        raise DomainError(f"{alpha} is not below {lam}")
    nu_terms, exp = _split(lam)
    n = len(nu_terms)
    # alpha < lam, so either alpha <= nu or alpha = nu + delta with 0 < delta < w^exp
    if alpha.terms[:n] != nu_terms:
        return 0
    delta = alpha.terms[n:]
    if not delta:
        return 0
    lead, coef = delta[0]
    exact_power = coef == 1 and len(delta) == 1
    if exp.is_successor:
        if lead < exp.predecessor():
            return 0
        return coef - 1 if len(delta) == 1 else check_natural(coef, "index")
    # need w^(C_exp[i]) >= delta
    target = lead if exact_power else lead + 1
    return least_index(exp, target)


def min_above(beta: Ordinal, alpha: Ordinal) -> Ordinal:
    """``min(C_beta \\ alpha)``: one step of a minimal walk from ``beta`` towards ``alpha``."""
    if not alpha < beta:
        raise DomainError(f"min-above needs alpha < beta, got {alpha} >= {beta}")
    if beta.is_successor:
        return beta.predecessor()
    return fund_seq(beta, least_index(beta, alpha))


def c_members(alpha: Ordinal, below: Ordinal, limit: int = DEFAULT_MEMBER_LIMIT) -> list[Ordinal]:
    """Elements of ``C_alpha`` strictly below ``below``, increasing."""
    if alpha.is_zero:
        raise DomainError("C_0 is not defined")
    if alpha.is_successor:
        pred = alpha.predecessor()
        return [pred] if pred < below else []
    if below >= alpha:
        raise DomainError(f"C_{alpha} below {below} is infinite")
    count = least_index(alpha, below)
    if count > limit:
        raise ResourceLimitError(f"C_{alpha} has more than {limit} members below {below}")
    return [fund_seq(alpha, i) for i in range(count)]


def max_member_below(alpha: Ordinal, below: Ordinal) -> Ordinal | None:
    """Largest element of ``C_alpha`` below ``below`` (``None`` if there is none)."""
    if alpha.is_successor:
        pred = alpha.predecessor()
        return pred if pred < below else None
    if below >= alpha:
        raise DomainError(f"C_{alpha} has no largest member below {below}")
    k = least_index(alpha, below)
    return fund_seq(alpha, k - 1) if k else None


@dataclass(frozen=True)
class CSequenceRule:
    """Tag selecting the assignment alpha -> C_alpha. Only ``canonical`` exists."""

    identifier: str = "canonical"

    def __post_init__(self):
        if self.identifier != "canonical":
            raise DomainError(f"unknown C-sequence rule {self.identifier!r}")

    def members(self, alpha: Ordinal, below: Ordinal) -> list[Ordinal]:
        return c_members(alpha, below)

    def at(self, lam: Ordinal, i: int) -> Ordinal:
        return fund_seq(lam, i)

    def step(self, beta: Ordinal, alpha: Ordinal) -> Ordinal:
        return min_above(beta, alpha)


CANONICAL = CSequenceRule()

