"""Per-argument checks for the seven labeling postulates.

Two conventions settle every unattacked argument: a maximum over no
attackers is 0 and a minimum over no attackers is 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .core import (
    FAS,
    ONE,
    ZERO,
    FuzzyLabeling,
    attack_intensity,
    is_sufficient,
    require_total,
)


class Postulate(enum.Enum):
    BP = "BP"
    RP = "RP"
    UP = "UP"
    WP = "WP"
    SWP = "SWP"
    DP = "DP"
    SDP = "SDP"


@dataclass(frozen=True)
class Witness:
    argument: str
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class PostulateReport:
    postulate: Postulate
    witnesses: tuple = field(default_factory=tuple)

    @property
    def satisfied(self) -> bool:
        return not self.witnesses

    def witness_for(self, argument):
        for w in self.witnesses:
            if w.argument == argument:
                return w
        return None


def max_over_empty_zero(values) -> Fraction:
    return max(values, default=ZERO)


def min_over_empty_one(values) -> Fraction:
    return min(values, default=ONE)


def acceptability_intensity(fas: FAS, lab: FuzzyLabeling, x) -> Fraction:
    """max over attackers B of min(B^a, R(B, x))."""
    return max_over_empty_zero(
        attack_intensity(lab[b][0], fas.weight(b, x)) for b in fas.attackers(x)
    )


def defense_bound(fas: FAS, lab: FuzzyLabeling, x) -> Fraction:
    """min over attackers B of max(B^r, 1 - min(A(B), R(B, x)))."""
    return min_over_empty_one(
        max(lab[b][1], ONE - attack_intensity(fas.degree(b), fas.weight(b, x)))
        for b in fas.attackers(x)
    )


def _sides(fas, lab, p, x):
    """Return (lhs, rhs, holds) for postulate *p* at argument *x*."""
    a, r, u = lab[x]
    if p is Postulate.BP:
        rhs = fas.degree(x)
        return a, rhs, a <= rhs
    if p is Postulate.RP:
        lhs = a + r + u
        return lhs, ONE, lhs == 1
    if p is Postulate.UP:
        lhs = a + acceptability_intensity(fas, lab, x)
        return lhs, ONE, lhs <= 1
    if p is Postulate.WP:
        rhs = acceptability_intensity(fas, lab, x)
        return r, rhs, r <= rhs
    if p is Postulate.SWP:
        rhs = acceptability_intensity(fas, lab, x)
        return r, rhs, r == rhs
    if p is Postulate.DP:
        rhs = defense_bound(fas, lab, x)
        return a, rhs, a <= rhs
    if p is Postulate.SDP:
        rhs = min(defense_bound(fas, lab, x), fas.degree(x))
        return a, rhs, a == rhs
    raise ValueError(p)


def check_postulate(fas: FAS, lab: FuzzyLabeling, p) -> PostulateReport:
    p = Postulate(p)
    require_total(fas, lab)
    witnesses = []
    for x in fas.names:
        lhs, rhs, holds = _sides(fas, lab, p, x)
        if not holds:
            witnesses.append(Witness(x, lhs, rhs))
    return PostulateReport(p, tuple(witnesses))


def check_profile(fas: FAS, lab: FuzzyLabeling, profile) -> dict:
    require_total(fas, lab)
    wanted = sorted({Postulate(p) for p in profile}, key=lambda p: list(Postulate).index(p))
    return {p: check_postulate(fas, lab, p) for p in wanted}


def satisfies(fas: FAS, lab: FuzzyLabeling, profile) -> bool:
    require_total(fas, lab)
    return all(
        _sides(fas, lab, Postulate(p), x)[2] for p in profile for x in fas.names
    )


@dataclass(frozen=True)
class SufficientAttackerSet:
    target: str
    members: frozenset


def sufficient_attacker_set(fas: FAS, lab: FuzzyLabeling, x) -> SufficientAttackerSet:
    """Attackers B whose full-strength attack on (x, x^a) is sufficient."""
    fas.require(x)
    require_total(fas, lab)
    ax = lab[x][0]
    members = frozenset(
        b for b in fas.attackers(x)
        if is_sufficient(fas.degree(b), fas.weight(b, x), ax)
    )
    return SufficientAttackerSet(x, members)


def dp_by_sufficient_attackers(fas: FAS, lab: FuzzyLabeling, x) -> bool:
    """DP at *x*, restated as: x^a <= B^r for every sufficient attacker B."""
    s = sufficient_attacker_set(fas, lab, x).members
    return all(lab[x][0] <= lab[b][1] for b in s)


def sdp_closed_form(fas: FAS, lab: FuzzyLabeling, x) -> Fraction:
    """min(min_{B in S} B^r, 1 - max_{B not in S} A(B)*R(B,x), A(x))."""
    s = sufficient_attacker_set(fas, lab, x).members
    rest = fas.attackers(x) - s
    return min(
        min_over_empty_one(lab[b][1] for b in s),
        ONE - max_over_empty_zero(
            attack_intensity(fas.degree(b), fas.weight(b, x)) for b in rest
        ),
        fas.degree(x),
    )
