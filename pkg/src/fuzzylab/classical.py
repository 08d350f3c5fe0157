"""Dung frameworks, their complete labelings, and the embedding into FAS."""

from __future__ import annotations

import enum
import itertools
from collections.abc import Mapping
from dataclasses import dataclass

from .core import FAS, FuzzyLabeling, check_name
from .errors import DomainError
from .semantics import _check_cap


class Label(enum.Enum):
    IN = "in"
    OUT = "out"
    UNDEC = "undec"


_TRIPLES = {Label.IN: (1, 0, 0), Label.OUT: (0, 1, 0), Label.UNDEC: (0, 0, 1)}


@dataclass(frozen=True)
class AF:
    args: frozenset
    atts: frozenset

    def __init__(self, args, atts=()):
        args = frozenset(check_name(a) for a in args)
        atts = frozenset((b, a) for b, a in atts)
        for b, a in atts:
            if b not in args or a not in args:
                raise DomainError(f"attack ({b}, {a}) uses an undeclared argument")
        object.__setattr__(self, "args", args)
        object.__setattr__(self, "atts", atts)

    @property
    def names(self) -> tuple:
        return tuple(sorted(self.args))

    def attackers(self, a) -> frozenset:
        return frozenset(b for b, x in self.atts if x == a)


class ClassicalLabeling(Mapping):
    """Total map from argument names to ``Label``."""

    def __init__(self, labels):
        self._labels = {x: Label(v) for x, v in dict(labels).items()}

    def __getitem__(self, x) -> Label:
        return self._labels[x]

    def __iter__(self):
        return iter(sorted(self._labels))

    def __len__(self) -> int:
        return len(self._labels)

    def __eq__(self, other):
        if isinstance(other, ClassicalLabeling):
            return self._labels == other._labels
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._labels.items()))

    def __repr__(self):
        return "ClassicalLabeling(" + ", ".join(f"{x}={self._labels[x].value}" for x in self) + ")"

    def with_label(self, label: Label) -> frozenset:
        return frozenset(x for x, v in self._labels.items() if v is label)


def is_classical_complete(af: AF, lab: ClassicalLabeling) -> bool:
    if set(lab) != set(af.args):
        raise DomainError("labeling not total over the framework")
    for a in af.args:
        labels = [lab[b] for b in af.attackers(a)]
        if all(v is Label.OUT for v in labels):
            expected = Label.IN
        elif any(v is Label.IN for v in labels):
            expected = Label.OUT
        else:
            expected = Label.UNDEC
        if lab[a] is not expected:
            return False
    return True


def enumerate_classical_complete(af: AF, max_args=None) -> list:
    """Brute force over all 3^n labelings."""
    _check_cap(af_to_fas(af), max_args)
    names = af.names
    found = []
    for combo in itertools.product(list(Label), repeat=len(names)):
        lab = ClassicalLabeling(dict(zip(names, combo)))
        if is_classical_complete(af, lab):
            found.append(lab)
    order = {Label.IN: 0, Label.OUT: 1, Label.UNDEC: 2}
    return sorted(found, key=lambda l: tuple(order[l[x]] for x in names))


def af_to_fas(af: AF) -> FAS:
    return FAS({a: 1 for a in af.names}, [(b, a, 1) for b, a in sorted(af.atts)])


def clab_to_flab(lab: ClassicalLabeling) -> FuzzyLabeling:
    return FuzzyLabeling({x: _TRIPLES[lab[x]] for x in lab})
