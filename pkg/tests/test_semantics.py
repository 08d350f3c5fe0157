import itertools
from fractions import Fraction as F

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from corpus import CYCLE_FLAB1, CYCLE_FLAB3, chain, lab, ref_sdp, ref_swp, single, two_cycle
from fuzzylab import (
    FAS,
    PROFILES,
    DomainError,
    InstanceFamily,
    LabelingSet,
    ResourceError,
    Semantics,
    characteristic_values,
    enumerate_complete,
    grounded_fixpoint,
    is_labeling,
    leq_labeling,
    random_fas,
    solve,
)
from fuzzylab.postulates import satisfies
from fuzzylab.semantics import complete_from_acceptability, default_max_enum, enumerate_profile

S = Semantics

tenth = st.integers(0, 10).map(lambda i: F(i, 10))


@st.composite
def small_fas(draw, max_args=3):
    n = draw(st.integers(1, max_args))
    names = "ABCD"[:n]
    args = {x: draw(tenth) for x in names}
    atts = draw(st.dictionaries(st.tuples(st.sampled_from(names), st.sampled_from(names)), tenth, max_size=n * n))
    return FAS(args, {k: w for k, w in atts.items()})


def brute_complete(fas):
    """Every grid a-vector that closes into a complete labeling."""
    values = list(characteristic_values(fas))
    out = []
    for combo in itertools.product(values, repeat=len(fas)):
        flab = complete_from_acceptability(fas, dict(zip(fas.names, combo)))
        if flab is not None:
            out.append(flab)
    return LabelingSet.of(out)


def kleene_grounded(fas):
    a = {x: F(0) for x in fas.names}
    while True:
        r = ref_swp(fas, a)
        nxt = ref_sdp(fas, r)
        if nxt == a:
            return lab(**{x: f"{a[x]} {r[x]} {1 - a[x] - r[x]}" for x in fas.names})
        a = nxt


def brute_profile(fas, s):
    values = list(characteristic_values(fas))
    triples = [(a, r, 1 - a - r) for a in values for r in values if a + r <= 1]
    out = []
    for combo in itertools.product(triples, repeat=len(fas)):
        flab = lab(**{x: " ".join(map(str, t)) for x, t in zip(fas.names, combo)})
        if satisfies(fas, flab, PROFILES[s]):
            out.append(flab)
    return LabelingSet.of(out)


def test_characteristic_values_two_cycle():
    assert list(characteristic_values(two_cycle())) == [F(i, 5) for i in range(6)]


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(small_fas())
def test_enumeration_matches_brute_force(fas):
    assert enumerate_complete(fas) == brute_complete(fas)


@settings(max_examples=100, deadline=None)
@given(small_fas(max_args=4))
def test_grounded_matches_reference_iteration(fas):
    assert grounded_fixpoint(fas) == kleene_grounded(fas)


@settings(max_examples=30, deadline=None)
@given(small_fas(max_args=2))
def test_profile_enumeration_matches_brute_force(fas):
    for s in (S.CONFLICT_FREE, S.ADMISSIBLE, S.JV_ADMISSIBLE, S.VJ_ADMISSIBLE):
        assert enumerate_profile(fas, s) == brute_profile(fas, s), s


def test_profile_counts_two_cycle():
    counts = {s: len(solve(two_cycle(), s)) for s in (S.CONFLICT_FREE, S.ADMISSIBLE, S.JV_ADMISSIBLE, S.VJ_ADMISSIBLE)}
    assert counts == {S.CONFLICT_FREE: 99, S.ADMISSIBLE: 37, S.JV_ADMISSIBLE: 17, S.VJ_ADMISSIBLE: 17}


def test_two_cycle_complete_acceptabilities():
    pairs = {(l["A"][0], l["B"][0]) for l in enumerate_complete(two_cycle())}
    want = {("0.4", "0.2"), ("0.4", "0.4"), ("0.4", "0.6"), ("0.6", "0.2"), ("0.6", "0.4"), ("0.8", "0.2")}
    assert pairs == {(F(a), F(b)) for a, b in want}


def test_semi_stable_two_cycle():
    assert solve(two_cycle(), S.SEMI_STABLE) == solve(two_cycle(), S.STABLE)


def test_membership():
    fas = two_cycle()
    assert is_labeling(fas, CYCLE_FLAB1, "stable")
    assert not is_labeling(fas, CYCLE_FLAB3, "preferred")
    assert is_labeling(fas, CYCLE_FLAB3, "grounded")
    assert is_labeling(fas, CYCLE_FLAB3, "ideal")
    assert not is_labeling(single(), lab(A="0.8 0 0.2"), "stable")


def test_ideal_is_unique_on_random_systems():
    family = InstanceFamily(seed=41, count=80, max_args=4)
    for i in range(family.count):
        fas = random_fas(family, i)
        ideal = solve(fas, S.IDEAL)
        assert len(ideal) == 1
        for p in solve(fas, S.PREFERRED):
            assert leq_labeling(ideal[0], p)


def test_leq_labeling_requires_same_arguments():
    assert leq_labeling(CYCLE_FLAB3, CYCLE_FLAB1)
    with pytest.raises(DomainError):
        leq_labeling(CYCLE_FLAB1, lab(A="0 0 1"))


def test_semantics_aliases():
    assert Semantics.parse("SEMI_STABLE") is S.SEMI_STABLE
    assert Semantics.parse("jv") is S.JV_ADMISSIBLE
    with pytest.raises(DomainError):
        Semantics.parse("naive")


def test_enumeration_cap(monkeypatch):
    with pytest.raises(ResourceError):
        enumerate_complete(chain(), max_args=2)
    monkeypatch.setenv("FLAB_MAX_ENUM", "2")
    assert default_max_enum() == 2
    with pytest.raises(ResourceError):
        solve(chain(), "preferred")
    # grounded needs no enumeration
    assert len(solve(chain(), "grounded")) == 1
    monkeypatch.setenv("FLAB_MAX_ENUM", "lots")
    with pytest.raises(DomainError):
        default_max_enum()


def test_candidate_budget():
    with pytest.raises(ResourceError):
        enumerate_profile(two_cycle(), S.ADMISSIBLE, max_candidates=10)


def test_empty_system():
    fas = FAS()
    assert list(solve(fas, "complete")) == [lab()]
    assert len(solve(fas, "stable")) == 1
