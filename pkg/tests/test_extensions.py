from fractions import Fraction as F

import numpy as np
import pytest

from corpus import CHAIN_FLAB2, CYCLE_FLAB1, CYCLE_FLAB3, chain, single, two_cycle
from fuzzylab import (
    FAS,
    DomainError,
    ExtensionKind,
    FuzzySet,
    InstanceFamily,
    check_fextension,
    enumerate_fextensions,
    ext_to_flab,
    flab_to_ext,
    random_fas,
    weakening_defends,
)
from fuzzylab._kernel import Kernel
from fuzzylab.extensions import _defends_rows, weaken
from fuzzylab.semantics import characteristic_values


def fs(**kw):
    return FuzzySet({k: F(v) for k, v in kw.items()})


def test_weaken():
    assert weaken(F("0.8"), F(1), F("0.6")) == F("0.2")
    with pytest.raises(DomainError):
        weaken(F("0.2"), F(1), F("0.6"))


def test_examples():
    cyc = two_cycle()
    assert check_fextension(cyc, fs(A="0.8", B="0.2"), "admissible")
    assert check_fextension(cyc, fs(A="0.4", B="0.2"), "complete")
    assert check_fextension(cyc, FuzzySet(), "conflict-free")
    assert not check_fextension(cyc, fs(A="0.8", B="0.6"), "conflict-free")
    assert enumerate_fextensions(cyc, "grounded") == [fs(A="0.4", B="0.2")]
    assert enumerate_fextensions(single(), "complete") == [fs(A="0.8")]


def test_stable_equals_preferred_on_two_cycle():
    cyc = two_cycle()
    stable = enumerate_fextensions(cyc, "stable")
    assert stable == enumerate_fextensions(cyc, "preferred")
    assert {(s["A"], s["B"]) for s in stable} == {(F("0.8"), F("0.2")), (F("0.6"), F("0.4")), (F("0.4"), F("0.6"))}


def self_attacking(fas):
    return any(b == a for b, a in fas.attacks)


def test_stable_equals_preferred_without_self_attacks():
    family = InstanceFamily(seed=3, count=150, max_args=4)
    for i in range(family.count):
        fas = random_fas(family, i)
        if not self_attacking(fas):
            assert enumerate_fextensions(fas, "stable") == enumerate_fextensions(fas, "preferred"), fas


@pytest.mark.xfail(strict=True, reason="grid artefact: a self-attack's balanced degree is off the characteristic grid")
def test_stable_equals_preferred_everywhere():
    family = InstanceFamily(seed=3, count=150, max_args=4)
    for i in range(family.count):
        fas = random_fas(family, i)
        assert enumerate_fextensions(fas, "stable") == enumerate_fextensions(fas, "preferred"), fas


def test_self_attack_grid_gap():
    # over the continuum {A: 1/2} would be admissible and stable; the grid stops at 3/10
    fas = FAS({"A": "0.9"}, [("A", "A", "0.7")])
    assert F(1, 2) not in characteristic_values(fas)
    assert enumerate_fextensions(fas, "preferred") == [fs(A="0.3")]
    assert enumerate_fextensions(fas, "stable") == []
    assert check_fextension(fas, fs(A="0.5"), "admissible")
    assert check_fextension(fas, fs(A="0.5"), "stable")


def test_bridges():
    cyc = two_cycle()
    assert ext_to_flab(cyc, fs(A="0.8", B="0.2")) == CYCLE_FLAB1
    assert ext_to_flab(chain(), fs(A="0.8", B="0.2", C="0.6")) == CHAIN_FLAB2
    assert flab_to_ext(CHAIN_FLAB2) == fs(A="0.8", B="0.2", C="0.6")
    assert flab_to_ext(CYCLE_FLAB3) == fs(A="0.4", B="0.2")
    empty = ext_to_flab(cyc, FuzzySet())
    assert all(empty[x] == (0, 0, 1) for x in empty.names)
    with pytest.raises(DomainError, match="non-residual"):
        ext_to_flab(cyc, fs(A="0.8", B="0.6"))
    with pytest.raises(DomainError):
        ext_to_flab(cyc, fs(A="0.9"))


def test_vectorised_defense_matches_definition():
    family = InstanceFamily(seed=17, count=60, max_args=4)
    rng = np.random.default_rng(17)
    for i in range(family.count):
        fas = random_fas(family, i)
        k = Kernel(fas)
        rows = np.stack([rng.choice(d, size=20) for d in k.grid_domains()], axis=-1)
        plus = k.swp(rows)
        for x, name in enumerate(k.names):
            for c in k.values[k.values <= k.A[x]]:
                fast = _defends_rows(k, rows, plus, x, c)
                for row, got in zip(rows, fast):
                    s = FuzzySet({y: k.to_frac(row[j]) for j, y in enumerate(k.names)})
                    assert got == weakening_defends(fas, s, name, k.to_frac(c))


def test_enumerated_sets_pass_checker():
    family = InstanceFamily(seed=23, count=40, max_args=3)
    for i in range(family.count):
        fas = random_fas(family, i)
        for kind in ExtensionKind:
            for s in enumerate_fextensions(fas, kind):
                assert check_fextension(fas, s, kind)
