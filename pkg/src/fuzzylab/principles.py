"""Empirical evaluation of the nine semantic principles.

A principle is tested on a seeded family of random systems, after the
registered counterexamples for the cell have been tried.  Testing can only
refute a principle, so outcomes are ``VIOLATED`` (with a re-checkable
witness) or ``NO_VIOLATION_FOUND``; never "satisfied".

Semantics defined by postulate profiles (conflict-free, admissible, JV-,
VJ-admissible) usually have infinitely many labelings.  For those the
result set is represented by a seeded sample of grid labelings that pass
the profile, which is enough to refute universally quantified principles
and uniqueness; existence is witnessed by the grounded labeling.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ._kernel import Kernel
from .core import FAS, FuzzyLabeling, apply_isomorphism
from .errors import DomainError, ResourceError
from .postulates import satisfies
from .semantics import (
    PROFILES,
    LabelingSet,
    Semantics,
    default_max_enum,
    enumerate_complete,
    grounded_fixpoint,
    ideal,
    leq_labeling,
    select_extremal,
    _labelings_from_rows,
)

REGISTRY_VERSION = 1

ENUMERATED = (
    Semantics.COMPLETE,
    Semantics.GROUNDED,
    Semantics.PREFERRED,
    Semantics.SEMI_STABLE,
    Semantics.STABLE,
    Semantics.IDEAL,
)


class Principle(enum.Enum):
    LIP = "LIP"
    CFP = "CFP"
    ADP = "ADP"
    COP = "COP"
    STP = "STP"
    EXP = "EXP"
    UNP = "UNP"
    IMP = "IMP"
    CLP = "CLP"


class Outcome(enum.Enum):
    NO_VIOLATION_FOUND = "NoViolationFound"
    VIOLATED = "Violated"


# cells marked as violated in the published satisfaction table
KNOWN_VIOLATIONS = {
    Semantics.CONFLICT_FREE: {"ADP", "COP", "STP", "UNP", "IMP", "CLP"},
    Semantics.ADMISSIBLE: {"COP", "STP", "UNP", "IMP", "CLP"},
    Semantics.JV_ADMISSIBLE: {"COP", "STP", "UNP", "IMP", "CLP"},
    Semantics.VJ_ADMISSIBLE: {"COP", "UNP", "IMP", "CLP"},
    Semantics.COMPLETE: {"UNP", "IMP", "CLP"},
    Semantics.GROUNDED: {"CLP"},
    Semantics.PREFERRED: {"UNP", "CLP"},
    Semantics.SEMI_STABLE: {"UNP", "CLP"},
    Semantics.STABLE: {"EXP", "UNP"},
    Semantics.IDEAL: {"CLP"},
}


def expected_outcome(s, p) -> Outcome:
    s, p = Semantics.parse(s), Principle(p)
    if p.value in KNOWN_VIOLATIONS[s]:
        return Outcome.VIOLATED
    return Outcome.NO_VIOLATION_FOUND


def _tenths():
    return tuple(Fraction(i, 10) for i in range(11))


@dataclass(frozen=True)
class InstanceFamily:
    """Seeded family of random systems; generation is a pure function of the fields."""

    seed: int = 0
    count: int = 500
    max_args: int = 5
    degree_grid: tuple = field(default_factory=_tenths)


def _names(n: int) -> list:
    letters = "ABCDEFGHIJKLMNOPQRSTUVWXYZ"
    return [letters[i] if n <= 26 else f"A{i}" for i in range(n)]


def random_fas(family: InstanceFamily, index: int) -> FAS:
    if not 0 <= index < family.count:
        raise DomainError(f"index {index} outside family of {family.count}")
    rng = np.random.default_rng([family.seed, index])
    grid = [Fraction(g) for g in family.degree_grid]
    n = int(rng.integers(1, family.max_args + 1))
    names = _names(n)
    density = float(rng.uniform(0.0, 1.0))
    args = {x: grid[int(rng.integers(len(grid)))] for x in names}
    atts = []
    for b in names:
        for a in names:
            if rng.uniform() < density:
                atts.append((b, a, grid[int(rng.integers(len(grid)))]))
    return FAS(args, atts)


@dataclass(frozen=True)
class RegistryEntry:
    semantics: Semantics
    principle: Principle
    fas: FAS
    expected: Outcome
    labelings: tuple = ()
    note: str = ""


def _single():
    return FAS({"A": "0.8"})


def _two_cycle():
    return FAS({"A": "0.8", "B": "0.6"}, [("A", "B", 1), ("B", "A", 1)])


def _chain():
    return FAS({"A": "0.8", "B": "0.7", "C": "0.6"}, [("A", "B", 1), ("B", "C", "0.9")])


def _lab(**triples) -> FuzzyLabeling:
    return FuzzyLabeling({x: tuple(Fraction(v) for v in t.split()) for x, t in triples.items()})


def counterexample_registry() -> list:
    """Fixed witnesses for every violated cell of the satisfaction table.

    The complete-semantics I-maximality witness is the two-cycle, where the
    grounded labeling lies strictly below a stable one.  The unattacked
    argument labeled fully undecided, sometimes offered for that cell, is
    not complete: SDP pins an unattacked argument to its initial degree.
    """
    single, cyc, chain = _single(), _two_cycle(), _chain()
    undec = _lab(A="0 0 1")
    top = _lab(A="0.8 0 0.2")
    flab1 = _lab(A="0.5 0 0.5", B="0.4 0.5 0.1", C="0.6 0.4 0")
    cyc1 = _lab(A="0.8 0.2 0", B="0.2 0.8 0")
    cyc3 = _lab(A="0.4 0.2 0.4", B="0.2 0.4 0.4")
    vj_fas = FAS({"A": "0.8", "B": "0.6"}, [("A", "B", 1)])
    vj_lab = _lab(A="0.8 0 0.2", B="0.2 0.5 0.3")
    V = Outcome.VIOLATED
    S = Semantics
    P = Principle
    entries = [
        (S.CONFLICT_FREE, P.ADP, chain, (flab1,), "conflict-free but DP fails at B and C"),
        (S.CONFLICT_FREE, P.COP, single, (undec,), ""),
        (S.CONFLICT_FREE, P.STP, single, (undec,), ""),
        (S.CONFLICT_FREE, P.UNP, single, (undec, top), ""),
        (S.CONFLICT_FREE, P.IMP, single, (undec, top), ""),
        (S.CONFLICT_FREE, P.CLP, single, (undec,), ""),
    ]
    for s in (S.ADMISSIBLE, S.JV_ADMISSIBLE):
        entries += [
            (s, P.COP, single, (undec,), ""),
            (s, P.STP, single, (undec,), "unattacked argument left undecided"),
            (s, P.UNP, single, (undec, top), ""),
            (s, P.IMP, single, (undec, top), ""),
            (s, P.CLP, single, (undec,), ""),
        ]
    entries += [
        (S.VJ_ADMISSIBLE, P.COP, vj_fas, (vj_lab,), "rejectability below its SWP value"),
        (S.VJ_ADMISSIBLE, P.UNP, cyc, (cyc3, cyc1), ""),
        (S.VJ_ADMISSIBLE, P.IMP, cyc, (cyc3, cyc1), ""),
        (S.VJ_ADMISSIBLE, P.CLP, cyc, (cyc3,), ""),
        (S.COMPLETE, P.UNP, cyc, (), ""),
        (S.COMPLETE, P.IMP, cyc, (), "grounded lies strictly below a stable labeling"),
        (S.COMPLETE, P.CLP, cyc, (), ""),
        (S.GROUNDED, P.CLP, cyc, (), ""),
        (S.PREFERRED, P.UNP, cyc, (), ""),
        (S.PREFERRED, P.CLP, single, (), ""),
        (S.SEMI_STABLE, P.UNP, cyc, (), ""),
        (S.SEMI_STABLE, P.CLP, single, (), ""),
        (S.STABLE, P.EXP, single, (), "single argument below full degree"),
        (S.STABLE, P.UNP, cyc, (), ""),
        (S.IDEAL, P.CLP, cyc, (), ""),
    ]
    return [RegistryEntry(s, p, f, V, labs, note) for s, p, f, labs, note in entries]


@dataclass(frozen=True)
class PrincipleVerdict:
    principle: Principle
    semantics: Semantics
    outcome: Outcome
    witness: dict | None
    trials: int
    seed: int
    skipped: int = 0

    @property
    def text(self) -> str:
        if self.outcome is Outcome.VIOLATED:
            return f"{self.semantics.value}/{self.principle.value}: violated ({self.witness['details']})"
        return (
            f"{self.semantics.value}/{self.principle.value}: no violation found in "
            f"{self.trials} trials (not a proof)"
        )


# -- result sets -------------------------------------------------------------

SAMPLES_PER_STRATEGY = 16


def _profile_sample(fas: FAS, s: Semantics, rng, extra=()) -> list:
    """Seeded sample of grid labelings passing the profile of *s*."""
    k = Kernel(fas)
    L, vals, m = k.L, k.values, SAMPLES_PER_STRATEGY

    def below(bound):
        # uniform grid value <= bound, entrywise
        idx = np.searchsorted(vals, bound, side="right")
        pick = (rng.random(bound.shape) * idx).astype(np.int64)
        return vals[pick]

    A = np.broadcast_to(k.A, (m, k.n))
    a1 = below(A)
    r_rand = below(np.broadcast_to(L, (m, k.n)))
    blocks = []
    blocks.append((a1, k.swp(a1)))
    blocks.append((a1, below(np.minimum(k.swp(a1), L - a1))))
    blocks.append((k.sdp(r_rand), r_rand))
    a4 = np.minimum(below(A), k.sdp(r_rand))
    blocks.append((a4, r_rand))
    blocks.append((a4, np.minimum(r_rand, k.swp(a4))))
    zero = np.zeros((1, k.n), dtype=k.dtype)
    blocks.append((zero, zero))
    g = k.least_fixpoint()[None, :]
    blocks.append((g, k.swp(g)))
    a = np.concatenate([b[0] for b in blocks])
    r = np.concatenate([b[1] for b in blocks])
    u = L - a - r
    ok = (u >= 0).all(axis=-1) & k.check(a, r, np.maximum(u, 0), PROFILES[s])
    members = set(_labelings_from_rows(k, a[ok], r[ok], u[ok]))
    members.update(lab for lab in extra if satisfies(fas, lab, PROFILES[s]))
    return sorted(members, key=FuzzyLabeling.sort_key)


class _Solved:
    """Lazily computed result sets of one system."""

    def __init__(self, fas: FAS, rng_seed, extra=()):
        self.fas = fas
        self.rng_seed = rng_seed
        self.extra = extra
        self._cache = {}

    def complete(self):
        if "complete" not in self._cache:
            self._cache["complete"] = list(enumerate_complete(self.fas, max_args=len(self.fas)))
        return self._cache["complete"]

    def results(self, s: Semantics) -> list:
        if s in self._cache:
            return self._cache[s]
        if s is Semantics.COMPLETE:
            out = self.complete()
        elif s is Semantics.GROUNDED:
            out = [grounded_fixpoint(self.fas)]
        elif s is Semantics.IDEAL:
            out = list(ideal(self.fas, complete=self.complete()))
        elif s in ENUMERATED:
            out = list(select_extremal(self.fas, s, complete=self.complete()))
        else:
            rng = np.random.default_rng(self.rng_seed)
            out = _profile_sample(self.fas, s, rng, self.extra)
        self._cache[s] = out
        return out


def _renaming(fas: FAS, rng) -> dict:
    names = list(fas.names)
    perm = rng.permutation(len(names))
    return {x: f"Z{names[int(j)]}" for x, j in zip(names, perm)}


def _fas_doc(fas: FAS) -> dict:
    return {
        "arguments": {x: fas.degree(x) for x in fas.names},
        "attacks": {f"{b}->{a}": w for (b, a), w in sorted(fas.attacks.items())},
    }


def _violation(fas: FAS, s: Semantics, p: Principle, solved: _Solved, rng):
    """Return (labelings, details) of a violation, or None."""
    members = solved.results(s)
    exact = s in ENUMERATED
    if p is Principle.LIP:
        f = _renaming(fas, rng)
        image = apply_isomorphism(fas, f)
        if exact:
            other = _Solved(image, solved.rng_seed).results(s)
            if LabelingSet.of(other) != LabelingSet.of(m.rename(f) for m in members):
                return list(members), f"results not preserved under renaming {f}"
            return None
        for lab in members:
            if not satisfies(image, lab.rename(f), PROFILES[s]):
                return [lab], f"membership not preserved under renaming {f}"
        return None
    if p in (Principle.CFP, Principle.ADP, Principle.COP):
        target = {
            Principle.CFP: Semantics.CONFLICT_FREE,
            Principle.ADP: Semantics.ADMISSIBLE,
            Principle.COP: Semantics.COMPLETE,
        }[p]
        for lab in members:
            if not satisfies(fas, lab, PROFILES[target]):
                return [lab], f"result is not {target.value}"
        return None
    if p is Principle.STP:
        free = [x for x in fas.names if not fas.attackers(x)]
        for lab in members:
            for x in free:
                if lab[x][0] != fas.degree(x) or lab[x][1] != 0:
                    return [lab], f"unattacked {x} labeled {lab[x]}"
        return None
    if p is Principle.EXP:
        if not members:
            return [], "no result"
        return None
    if p is Principle.UNP:
        if len(members) >= 2:
            return list(members[:2]), f"{len(members)} results"
        if exact and len(members) == 0:
            return [], "no result"
        return None
    if p is Principle.IMP:
        for l1 in members:
            for l2 in members:
                if l1 != l2 and leq_labeling(l1, l2):
                    return [l1, l2], "a result lies strictly below another"
        return None
    if p is Principle.CLP:
        for lab in members:
            if lab.u:
                return [lab], "result with positive undecidability"
        return None
    raise AssertionError(p)


class PrincipleLab:
    """Evaluates principles over one instance family, caching solved systems."""

    def __init__(self, family: InstanceFamily | None = None, max_enum=None):
        self.family = family or InstanceFamily()
        self.max_enum = default_max_enum() if max_enum is None else max_enum
        self._instances = {}

    def instance(self, index: int) -> _Solved:
        if index not in self._instances:
            fas = random_fas(self.family, index)
            self._instances[index] = _Solved(fas, [self.family.seed, index, 1])
        return self._instances[index]

    def evaluate(self, s, p) -> PrincipleVerdict:
        s, p = Semantics.parse(s), Principle(p)
        trials = 0
        for pos, entry in enumerate(counterexample_registry()):
            if entry.semantics is not s or entry.principle is not p:
                continue
            trials += 1
            solved = _Solved(entry.fas, [REGISTRY_VERSION, pos], extra=entry.labelings)
            rng = np.random.default_rng([REGISTRY_VERSION, pos, 2])
            found = _violation(entry.fas, s, p, solved, rng)
            if found is not None:
                return self._verdict(s, p, "registry", pos, entry.fas, found, trials)
        skipped = 0
        for index in range(self.family.count):
            solved = self.instance(index)
            if len(solved.fas) > self.max_enum:
                skipped += 1
                continue
            trials += 1
            rng = np.random.default_rng([self.family.seed, index, 2])
            try:
                found = _violation(solved.fas, s, p, solved, rng)
            except ResourceError:
                skipped += 1
                continue
            if found is not None:
                return self._verdict(s, p, "family", index, solved.fas, found, trials, skipped)
        return PrincipleVerdict(p, s, Outcome.NO_VIOLATION_FOUND, None, trials, self.family.seed, skipped)

    def _verdict(self, s, p, source, index, fas, found, trials, skipped=0):
        labs, details = found
        witness = {
            "source": source,
            "index": index,
            "fas": fas,
            "labelings": list(labs),
            "details": details,
        }
        return PrincipleVerdict(p, s, Outcome.VIOLATED, witness, trials, self.family.seed, skipped)

    def sweep(self, semantics=None, principles=None) -> "SweepTable":
        semantics = [Semantics.parse(s) for s in (semantics or list(Semantics))]
        principles = [Principle(p) for p in (principles or list(Principle))]
        cells = {}
        for s in semantics:
            for p in principles:
                cells[(s, p)] = self.evaluate(s, p)
        return SweepTable(self.family, cells)


def evaluate_principle(s, p, family: InstanceFamily | None = None) -> PrincipleVerdict:
    return PrincipleLab(family).evaluate(s, p)


@dataclass(frozen=True)
class SweepTable:
    family: InstanceFamily
    cells: dict

    def outcome(self, s, p) -> Outcome:
        return self.cells[(Semantics.parse(s), Principle(p))].outcome

    def mismatches(self) -> list:
        """Cells whose outcome differs from the published table."""
        return [
            (s, p) for (s, p), v in self.cells.items()
            if v.outcome is not expected_outcome(s, p)
        ]

    def rows(self) -> list:
        semantics = list(dict.fromkeys(s for s, _ in self.cells))
        principles = list(dict.fromkeys(p for _, p in self.cells))
        return [
            (s, [self.cells[(s, p)] for p in principles]) for s in semantics
        ], principles
