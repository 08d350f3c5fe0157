"""Fuzzy sets, fuzzy argumentation systems and fuzzy labelings.

Every degree is an exact :class:`fractions.Fraction` in ``[0, 1]``.  The
Gödel t-norm ``x * y = min(x, y)`` is the only conjunction used; it is
isolated in :func:`attack_intensity`.
"""

from __future__ import annotations

import enum
import re
from collections.abc import Iterable, Mapping
from fractions import Fraction
from typing import Callable, Union

from .errors import DomainError

Degree = Fraction
DegreeLike = Union[Fraction, int, str, float]

ZERO = Fraction(0)
ONE = Fraction(1)

_NAME_RE = re.compile(r"^[A-Za-z0-9_]+$")


def degree(value: DegreeLike) -> Fraction:
    """Return *value* as an exact degree, checking that it lies in [0, 1].

    Floats are converted through their shortest decimal repr, so ``0.1``
    becomes ``1/10`` rather than the binary approximation.
    """
    if type(value) is Fraction:
        if 0 <= value <= 1:
            return value
        raise DomainError(f"degree {value} outside [0, 1]")
    if isinstance(value, bool):
        raise DomainError(f"not a degree: {value!r}")
    if isinstance(value, float):
        value = repr(value)
    try:
        d = Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a degree: {value!r}") from exc
    if d < 0 or d > 1:
        raise DomainError(f"degree {value!r} outside [0, 1]")
    return d


def check_name(name: str) -> str:
    if not isinstance(name, str) or not _NAME_RE.match(name):
        raise DomainError(f"invalid argument name: {name!r}")
    return name


def _pairs(entries) -> Iterable:
    if entries is None:
        return ()
    if isinstance(entries, Mapping):
        return entries.items()
    return entries


class FuzzySet(Mapping):
    """Finite fuzzy set over argument names.

    Zero grades are never stored; looking up an absent element gives 0.
    Iteration runs over the support in sorted order.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries=None):
        stored = {}
        for name, value in _pairs(entries):
            d = degree(value)
            if d:
                stored[name] = d
        self._entries = stored

    def __getitem__(self, name) -> Fraction:
        return self._entries.get(name, ZERO)

    def __call__(self, name) -> Fraction:
        return self._entries.get(name, ZERO)

    def __contains__(self, name) -> bool:
        return name in self._entries

    def __iter__(self):
        return iter(sorted(self._entries))

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, FuzzySet):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self == FuzzySet(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._entries.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"({k}, {self._entries[k]})" for k in self)
        return "FuzzySet{" + body + "}"

    def support(self) -> frozenset:
        return frozenset(self._entries)


def fs_union(s1: FuzzySet, s2: FuzzySet) -> FuzzySet:
    keys = set(s1.support()) | set(s2.support())
    return FuzzySet({k: max(s1(k), s2(k)) for k in keys})


def fs_intersect(s1: FuzzySet, s2: FuzzySet) -> FuzzySet:
    keys = set(s1.support()) & set(s2.support())
    return FuzzySet({k: min(s1(k), s2(k)) for k in keys})


def fs_complement(s: FuzzySet, universe) -> FuzzySet:
    universe = set(universe)
    outside = s.support() - universe
    if outside:
        raise DomainError(f"support outside universe: {sorted(outside)}")
    return FuzzySet({k: ONE - s(k) for k in universe})


def fs_subset(s1: FuzzySet, s2: FuzzySet) -> bool:
    return all(s1(k) <= s2(k) for k in s1.support())


class FAS:
    """A fuzzy argumentation system: initial degrees plus weighted attacks.

    ``arguments`` maps names to degrees (zero degrees are kept, since the
    argument still exists); ``attacks`` maps ``(attacker, target)`` to a
    weight, with zero weights dropped.
    """

    __slots__ = ("_args", "_atts", "_attackers")

    def __init__(self, arguments=None, attacks=None):
        args = {}
        for name, value in _pairs(arguments):
            check_name(name)
            if name in args:
                raise DomainError(f"duplicate argument {name!r}")
            args[name] = degree(value)
        atts = {}
        if isinstance(attacks, Mapping):
            items = [(b, a, w) for (b, a), w in attacks.items()]
        else:
            items = list(attacks or ())
        for b, a, w in items:
            for end in (b, a):
                if end not in args:
                    raise DomainError(f"attack ({b}, {a}) uses undeclared argument {end!r}")
            if (b, a) in atts:
                raise DomainError(f"duplicate attack ({b}, {a})")
            w = degree(w)
            if w:
                atts[(b, a)] = w
        self._args = args
        self._atts = atts
        incoming = {name: [] for name in args}
        for (b, a), w in atts.items():
            if args[b]:
                incoming[a].append(b)
        self._attackers = {a: frozenset(bs) for a, bs in incoming.items()}

    @property
    def arguments(self) -> Mapping:
        return dict(self._args)

    @property
    def attacks(self) -> Mapping:
        return dict(self._atts)

    @property
    def names(self) -> tuple:
        return tuple(sorted(self._args))

    def __len__(self) -> int:
        return len(self._args)

    def __contains__(self, name) -> bool:
        return name in self._args

    def degree(self, name) -> Fraction:
        self.require(name)
        return self._args[name]

    def weight(self, attacker, target) -> Fraction:
        return self._atts.get((attacker, target), ZERO)

    def attackers(self, name) -> frozenset:
        self.require(name)
        return self._attackers[name]

    def require(self, name) -> None:
        if name not in self._args:
            raise DomainError(f"unknown argument {name!r}")

    def as_fuzzy_set(self) -> FuzzySet:
        return FuzzySet(self._args)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FAS):
            return NotImplemented
        return self._args == other._args and self._atts == other._atts

    def __hash__(self) -> int:
        return hash((frozenset(self._args.items()), frozenset(self._atts.items())))

    def __repr__(self) -> str:
        args = ", ".join(f"({k}, {self._args[k]})" for k in self.names)
        atts = ", ".join(f"(({b}, {a}), {w})" for (b, a), w in sorted(self._atts.items()))
        return f"FAS<{{{args}}}, {{{atts}}}>"


def attackers(fas: FAS, a) -> frozenset:
    """Non-trivial attackers of *a*: positive degree and positive weight."""
    return fas.attackers(a)


def attack_intensity(b: Fraction, weight: Fraction) -> Fraction:
    """Gödel t-norm of an attacker's degree and the attack weight."""
    return min(b, weight)


def joint_attack_intensity(fas: FAS, s, a) -> Fraction:
    """Strongest attack on *a* from the fuzzy set *s* (0 without attackers)."""
    s = s if isinstance(s, FuzzySet) else FuzzySet(s)
    return max(
        (attack_intensity(s[b], fas.weight(b, a)) for b in fas.attackers(a)),
        default=ZERO,
    )


class AttackKind(enum.Enum):
    TOLERABLE = "tolerable"
    SUFFICIENT = "sufficient"


def classify_attack(b: Fraction, weight: Fraction, a: Fraction) -> AttackKind:
    if attack_intensity(b, weight) + a <= 1:
        return AttackKind.TOLERABLE
    return AttackKind.SUFFICIENT


def is_sufficient(b: Fraction, weight: Fraction, a: Fraction) -> bool:
    return classify_attack(b, weight, a) is AttackKind.SUFFICIENT


def _as_mapping(fas: FAS, f) -> dict:
    if callable(f) and not isinstance(f, Mapping):
        return {x: f(x) for x in fas.names}
    return dict(f)


def apply_isomorphism(fas: FAS, f: Union[Mapping, Callable]) -> FAS:
    """Rename the arguments of *fas* through the bijection *f*."""
    mapping = _as_mapping(fas, f)
    missing = [x for x in fas.names if x not in mapping]
    if missing:
        raise DomainError(f"renaming not total: {missing}")
    images = [mapping[x] for x in fas.names]
    if len(set(images)) != len(images):
        raise DomainError("renaming is not injective")
    return FAS(
        {mapping[x]: d for x, d in fas.arguments.items()},
        [(mapping[b], mapping[a], w) for (b, a), w in fas.attacks.items()],
    )


class FuzzyLabeling:
    """Total assignment of (acceptability, rejectability, undecidability).

    The three degrees are stored as given; nothing ties their sum to 1
    here (that is the residual postulate, checked separately).
    """

    __slots__ = ("_triples",)

    def __init__(self, triples):
        stored = {}
        for name, triple in _pairs(triples):
            check_name(name)
            if name in stored:
                raise DomainError(f"duplicate argument {name!r}")
            a, r, u = triple
            stored[name] = (degree(a), degree(r), degree(u))
        self._triples = stored

    @classmethod
    def from_parts(cls, names, a, r, u=None) -> "FuzzyLabeling":
        """Build a labeling from its parts; ``u`` defaults to ``1 - a - r``."""
        triples = {}
        for x in names:
            ax, rx = Fraction(a.get(x, 0)), Fraction(r.get(x, 0))
            if u is None:
                ux = 1 - ax - rx
                if ux < 0:
                    raise DomainError(f"acceptability plus rejectability exceeds 1 at {x!r}")
            else:
                ux = u.get(x, 0)
            triples[x] = (ax, rx, ux)
        return cls(triples)

    @property
    def names(self) -> tuple:
        return tuple(sorted(self._triples))

    def __getitem__(self, name) -> tuple:
        return self._triples[name]

    def __contains__(self, name) -> bool:
        return name in self._triples

    def __len__(self) -> int:
        return len(self._triples)

    def items(self):
        return ((x, self._triples[x]) for x in self.names)

    def part(self, index: int) -> FuzzySet:
        return FuzzySet({x: t[index] for x, t in self._triples.items()})

    @property
    def a(self) -> FuzzySet:
        return self.part(0)

    @property
    def r(self) -> FuzzySet:
        return self.part(1)

    @property
    def u(self) -> FuzzySet:
        return self.part(2)

    def sort_key(self) -> tuple:
        return tuple((x, self._triples[x]) for x in self.names)

    def rename(self, f) -> "FuzzyLabeling":
        mapping = f if isinstance(f, Mapping) else {x: f(x) for x in self._triples}
        return FuzzyLabeling({mapping[x]: t for x, t in self._triples.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, FuzzyLabeling):
            return NotImplemented
        return self._triples == other._triples

    def __hash__(self) -> int:
        return hash(frozenset(self._triples.items()))

    def __repr__(self) -> str:
        body = ", ".join(
            f"{x}=({a}, {r}, {u})" for x, (a, r, u) in self.items()
        )
        return f"FuzzyLabeling({body})"


def require_total(fas: FAS, lab: FuzzyLabeling) -> None:
    if set(lab.names) != set(fas.names):
        missing = sorted(set(fas.names) - set(lab.names))
        extra = sorted(set(lab.names) - set(fas.names))
        raise DomainError(f"labeling not total over the system (missing {missing}, unknown {extra})")
