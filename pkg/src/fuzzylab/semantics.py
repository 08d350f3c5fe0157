"""The ten fuzzy labeling semantics.

Conflict-free, admissible, JV-, VJ-admissible and complete labelings are
recognised by their postulate profiles.  Complete labelings generally form
a continuum, so every enumerating solver here works over the
*characteristic grid*: the smallest set of degrees that contains 0, 1, the
system's degrees and weights, and is closed under ``x -> 1 - x``.  The grid
is closed under the operators defining complete labelings, so it holds the
grounded labeling and every Kleene iterate.  Grounded, preferred,
semi-stable, stable and ideal results are extremal relative to the grid.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ._kernel import Kernel, cartesian, product_size
from .core import (
    FAS,
    ONE,
    ZERO,
    FuzzyLabeling,
    attack_intensity,
    fs_subset,
    require_total,
)
from .errors import DomainError, ResourceError
from .postulates import check_postulate, satisfies

DEFAULT_MAX_ENUM = 10
DEFAULT_MAX_CANDIDATES = 2_000_000


def default_max_enum() -> int:
    value = os.environ.get("FLAB_MAX_ENUM")
    if not value:
        return DEFAULT_MAX_ENUM
    try:
        return int(value)
    except ValueError:
        raise DomainError(f"FLAB_MAX_ENUM must be an integer, not {value!r}") from None


class Semantics(enum.Enum):
    CONFLICT_FREE = "conflict-free"
    ADMISSIBLE = "admissible"
    JV_ADMISSIBLE = "jv-admissible"
    VJ_ADMISSIBLE = "vj-admissible"
    COMPLETE = "complete"
    GROUNDED = "grounded"
    PREFERRED = "preferred"
    SEMI_STABLE = "semi-stable"
    STABLE = "stable"
    IDEAL = "ideal"

    @classmethod
    def parse(cls, value) -> "Semantics":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("_", "-")
        aliases = {
            "cf": "conflict-free", "conflictfree": "conflict-free",
            "adm": "admissible", "jv": "jv-admissible", "jvadmissible": "jv-admissible",
            "vj": "vj-admissible", "vjadmissible": "vj-admissible",
            "co": "complete", "gr": "grounded", "pr": "preferred",
            "semistable": "semi-stable", "ss": "semi-stable", "st": "stable",
            "id": "ideal",
        }
        key = aliases.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise DomainError(f"unknown semantics {value!r}") from None


PROFILES = {
    Semantics.CONFLICT_FREE: ("BP", "RP", "UP", "WP"),
    Semantics.ADMISSIBLE: ("BP", "RP", "WP", "DP"),
    Semantics.JV_ADMISSIBLE: ("BP", "RP", "SWP", "DP"),
    Semantics.VJ_ADMISSIBLE: ("BP", "RP", "WP", "SDP"),
    Semantics.COMPLETE: ("BP", "RP", "SWP", "SDP"),
}

COMPLETE_PROFILE = PROFILES[Semantics.COMPLETE]


@dataclass(frozen=True)
class LabelingSet:
    """Duplicate-free labelings in canonical order.

    Labelings are compared argument by argument (sorted by name) on their
    exact (a, r, u) triples.
    """

    labelings: tuple = ()

    @classmethod
    def of(cls, labelings) -> "LabelingSet":
        unique = set(labelings)
        return cls(tuple(sorted(unique, key=FuzzyLabeling.sort_key)))

    def __iter__(self):
        return iter(self.labelings)

    def __len__(self) -> int:
        return len(self.labelings)

    def __contains__(self, lab) -> bool:
        return lab in self.labelings

    def __getitem__(self, i) -> FuzzyLabeling:
        return self.labelings[i]

    def rename(self, f) -> "LabelingSet":
        return LabelingSet.of(lab.rename(f) for lab in self.labelings)


@dataclass(frozen=True)
class CharacteristicValueSet:
    values: tuple

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __contains__(self, v) -> bool:
        return Fraction(v) in self.values


def characteristic_values(fas: FAS) -> CharacteristicValueSet:
    base = {ZERO, ONE}
    base.update(fas.arguments.values())
    base.update(fas.attacks.values())
    for x in fas.names:
        for b in fas.attackers(x):
            base.add(attack_intensity(fas.degree(b), fas.weight(b, x)))
    closed = base | {ONE - v for v in base}
    return CharacteristicValueSet(tuple(sorted(closed)))


def leq_labeling(l1: FuzzyLabeling, l2: FuzzyLabeling) -> bool:
    """Pointwise order on acceptability and rejectability (u ignored)."""
    if set(l1.names) != set(l2.names):
        raise DomainError("labelings over different arguments")
    return all(
        l1[x][0] <= l2[x][0] and l1[x][1] <= l2[x][1] for x in l1.names
    )


def _check_cap(fas: FAS, max_args) -> None:
    bound = default_max_enum() if max_args is None else max_args
    if len(fas) > bound:
        raise ResourceError(
            f"{len(fas)} arguments exceed the enumeration bound of {bound}", bound
        )


def swp_rejectability(fas: FAS, a) -> dict:
    return {
        x: max(
            (attack_intensity(a.get(b, ZERO), fas.weight(b, x)) for b in fas.attackers(x)),
            default=ZERO,
        )
        for x in fas.names
    }


def complete_from_acceptability(fas: FAS, a) -> FuzzyLabeling | None:
    """The complete labeling with acceptability part *a*, if there is one.

    Rejectability follows from *a* by SWP and undecidability is the
    residue; the result is returned only when that residue is
    non-negative and SDP holds everywhere.
    """
    a = {x: Fraction(a.get(x, ZERO)) for x in fas.names}
    if any(v < 0 or v > 1 for v in a.values()):
        return None
    r = swp_rejectability(fas, a)
    if any(a[x] + r[x] > 1 for x in fas.names):
        return None
    lab = FuzzyLabeling.from_parts(fas.names, a, r)
    if not check_postulate(fas, lab, "SDP").satisfied:
        return None
    return lab


def _labeling_from_vector(k: Kernel, a: np.ndarray) -> FuzzyLabeling:
    r = k.swp(a)
    return FuzzyLabeling({
        x: (k.to_frac(a[i]), k.to_frac(r[i]), k.to_frac(k.L - a[i] - r[i]))
        for i, x in enumerate(k.names)
    })


def _labelings_from_rows(k: Kernel, a, r, u) -> list:
    return [
        FuzzyLabeling({
            x: (k.to_frac(a[j, i]), k.to_frac(r[j, i]), k.to_frac(u[j, i]))
            for i, x in enumerate(k.names)
        })
        for j in range(a.shape[0])
    ]


def grounded_fixpoint(fas: FAS) -> FuzzyLabeling:
    """Least complete labeling by Kleene iteration from a = r = 0.

    Each round recomputes rejectability from acceptability (SWP) and then
    acceptability from rejectability (the SDP right-hand side).  Both maps
    are monotone and keep every value on the characteristic grid, so the
    ascending sequence stabilises after finitely many rounds.
    """
    k = Kernel(fas)
    return _labeling_from_vector(k, k.least_fixpoint())


def enumerate_complete(fas: FAS, max_args=None) -> LabelingSet:
    """All complete labelings whose degrees lie on the characteristic grid."""
    _check_cap(fas, max_args)
    k = Kernel(fas)
    return LabelingSet.of(_labeling_from_vector(k, a) for a in k.complete_acceptabilities())


def _extremal(labs, part: int, maximal: bool) -> list:
    """Elements whose *part* is minimal/maximal under fuzzy-set inclusion."""
    parts = [lab.part(part) for lab in labs]
    keep = []
    for i, p in enumerate(parts):
        dominated = False
        for j, q in enumerate(parts):
            if i == j or p == q:
                continue
            if (maximal and fs_subset(p, q)) or (not maximal and fs_subset(q, p)):
                dominated = True
                break
        if not dominated:
            keep.append(labs[i])
    return keep


def select_extremal(fas: FAS, s, max_args=None, complete=None) -> LabelingSet:
    s = Semantics.parse(s)
    labs = list(complete if complete is not None else enumerate_complete(fas, max_args))
    if s is Semantics.GROUNDED:
        return LabelingSet.of(_extremal(labs, 0, maximal=False))
    if s is Semantics.PREFERRED:
        return LabelingSet.of(_extremal(labs, 0, maximal=True))
    if s is Semantics.SEMI_STABLE:
        return LabelingSet.of(_extremal(labs, 2, maximal=False))
    if s is Semantics.STABLE:
        return LabelingSet.of(lab for lab in labs if not lab.u)
    raise DomainError(f"{s.value} is not selected by extremality")


def _pointwise_min(parts, names) -> dict:
    return {x: min((p[x] for p in parts), default=ONE) for x in names}


def ideal(fas: FAS, max_args=None, complete=None) -> LabelingSet:
    """Largest complete labelings lying below every preferred labeling."""
    labs = list(complete if complete is not None else enumerate_complete(fas, max_args))
    preferred = select_extremal(fas, Semantics.PREFERRED, complete=labs)
    bound_a = _pointwise_min([p.a for p in preferred], fas.names)
    bound_r = _pointwise_min([p.r for p in preferred], fas.names)
    below = [
        lab for lab in labs
        if all(lab[x][0] <= bound_a[x] and lab[x][1] <= bound_r[x] for x in fas.names)
    ]
    top = [
        lab for lab in below
        if not any(other != lab and leq_labeling(lab, other) for other in below)
    ]
    if not top:
        raise AssertionError("no complete labeling below the preferred ones")
    return LabelingSet.of(top)


def enumerate_profile(fas: FAS, s, max_args=None, max_candidates=DEFAULT_MAX_CANDIDATES) -> LabelingSet:
    """Grid labelings of a postulate-profile semantics, by exhaustive search.

    Acceptability ranges over grid values up to each initial degree;
    rejectability over grid values up to the SWP bound and the residue.
    """
    s = Semantics.parse(s)
    if s not in PROFILES:
        raise DomainError(f"{s.value} is not a postulate-profile semantics")
    _check_cap(fas, max_args)
    if s is Semantics.COMPLETE:
        return enumerate_complete(fas, max_args)
    k = Kernel(fas)
    profile = PROFILES[s]
    domains = k.grid_domains()
    if product_size(domains) > max_candidates:
        raise ResourceError(
            f"more than {max_candidates} acceptability vectors to examine", max_candidates
        )
    A = cartesian(domains, k.dtype)
    S = k.swp(A)
    if "UP" in profile:
        keep = (A + S <= k.L).all(axis=-1)
        A, S = A[keep], S[keep]
    found = []
    if "SWP" in profile:
        R = S
        U = k.L - A - R
        ok = (U >= 0).all(axis=-1) & k.check(A, R, U, profile)
        found.extend(_labelings_from_rows(k, A[ok], R[ok], U[ok]))
        return LabelingSet.of(found)
    budget = max_candidates
    for a, s_ in zip(A, S):
        choices = [k.values[k.values <= min(s_[i], k.L - a[i])] for i in range(k.n)]
        count = product_size(choices)
        budget -= count
        if budget < 0:
            raise ResourceError(
                f"more than {max_candidates} candidate labelings to examine", max_candidates
            )
        R = cartesian(choices, k.dtype)
        Arep = np.broadcast_to(a, R.shape)
        U = k.L - Arep - R
        ok = k.check(Arep, R, U, profile)
        if ok.any():
            found.extend(_labelings_from_rows(k, Arep[ok], R[ok], U[ok]))
    return LabelingSet.of(found)


def solve(fas: FAS, s, max_args=None, max_candidates=DEFAULT_MAX_CANDIDATES) -> LabelingSet:
    """Labelings of *fas* under semantics *s* (over the characteristic grid)."""
    s = Semantics.parse(s)
    if s is Semantics.GROUNDED:
        return LabelingSet.of([grounded_fixpoint(fas)])
    if s in PROFILES:
        return enumerate_profile(fas, s, max_args, max_candidates)
    complete = enumerate_complete(fas, max_args)
    if s is Semantics.IDEAL:
        return ideal(fas, complete=complete)
    return select_extremal(fas, s, complete=complete)


def is_labeling(fas: FAS, lab: FuzzyLabeling, s, max_args=None) -> bool:
    """Membership of *lab* in the semantics *s* of *fas*.

    Extremal semantics other than stable compare *lab* against the
    complete labelings on the characteristic grid.
    """
    s = Semantics.parse(s)
    require_total(fas, lab)
    if s in PROFILES:
        return satisfies(fas, lab, PROFILES[s])
    if not satisfies(fas, lab, COMPLETE_PROFILE):
        return False
    if s is Semantics.STABLE:
        return not lab.u
    if s is Semantics.GROUNDED:
        return lab == grounded_fixpoint(fas)
    complete = list(enumerate_complete(fas, max_args))
    if s is Semantics.PREFERRED:
        return not any(
            fs_subset(lab.a, other.a) and lab.a != other.a for other in complete
        )
    if s is Semantics.SEMI_STABLE:
        return not any(
            fs_subset(other.u, lab.u) and lab.u != other.u for other in complete
        )
    if s is Semantics.IDEAL:
        preferred = select_extremal(fas, Semantics.PREFERRED, complete=complete)
        if not all(leq_labeling(lab, p) for p in preferred):
            return False
        return not any(
            other != lab and leq_labeling(lab, other)
            and all(leq_labeling(other, p) for p in preferred)
            for other in complete
        )
    raise AssertionError(s)
