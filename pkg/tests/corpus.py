"""Shared example systems and seeded fuzz corpora for the test suite."""

from fractions import Fraction

import numpy as np

from fuzzylab import FAS, AF, FuzzyLabeling, InstanceFamily, random_fas

F = Fraction


def lab(**triples):
    """lab(A="0.4 0.2 0.4") -> FuzzyLabeling."""
    return FuzzyLabeling({x: tuple(F(v) for v in t.split()) for x, t in triples.items()})


def motivating():
    return FAS({"A": "0.5", "B": "0.8"}, [("A", "B", 1)])


def chain():
    return FAS({"A": "0.8", "B": "0.7", "C": "0.6"}, [("A", "B", 1), ("B", "C", "0.9")])


def two_cycle():
    return FAS({"A": "0.8", "B": "0.6"}, [("A", "B", 1), ("B", "A", 1)])


def single():
    return FAS({"A": "0.8"})


CHAIN_FLAB1 = lab(A="0.5 0 0.5", B="0.4 0.5 0.1", C="0.6 0.4 0")
CHAIN_FLAB2 = lab(A="0.8 0 0.2", B="0.2 0.8 0", C="0.6 0.2 0.2")
CYCLE_FLAB1 = lab(A="0.8 0.2 0", B="0.2 0.8 0")
CYCLE_FLAB2 = lab(A="0.4 0.6 0", B="0.6 0.4 0")
CYCLE_FLAB3 = lab(A="0.4 0.2 0.4", B="0.2 0.4 0.4")

TENTHS = [F(i, 10) for i in range(11)]


# -- independent reference formulas (plain loops over Fractions) -------------

def ref_swp(fas, a):
    return {
        x: max([min(a[b], fas.weight(b, x)) for b in fas.names if fas.degree(b) > 0 and fas.weight(b, x) > 0],
               default=F(0))
        for x in fas.names
    }


def ref_sdp(fas, r):
    out = {}
    for x in fas.names:
        vals = [max(r[b], 1 - min(fas.degree(b), fas.weight(b, x)))
                for b in fas.names if fas.degree(b) > 0 and fas.weight(b, x) > 0]
        out[x] = min(min(vals, default=F(1)), fas.degree(x))
    return out


def fuzz_pairs(count=1000, seed=20240, max_args=5):
    """Seeded (FAS, labeling) pairs on the 0.1 grid.

    Labelings mix four shapes: arbitrary triples (RP may fail), residual
    triples, rejectability forced by SWP, and acceptability forced by SDP.
    """
    family = InstanceFamily(seed=seed, count=count, max_args=max_args)
    for i in range(count):
        fas = random_fas(family, i)
        rng = np.random.default_rng([seed, i, 99])
        pick = lambda hi=F(1): F(int(rng.integers(0, int(hi * 10) + 1)), 10)
        names = fas.names
        shape = i % 4
        if shape == 0:
            triples = {x: (pick(), pick(), pick()) for x in names}
        elif shape == 1:
            triples = {}
            for x in names:
                a = pick(fas.degree(x))
                r = pick(1 - a)
                triples[x] = (a, r, 1 - a - r)
        elif shape == 2:
            a = {x: pick(fas.degree(x)) for x in names}
            r = ref_swp(fas, a)
            triples = {x: (a[x], r[x], max(F(0), 1 - a[x] - r[x])) for x in names}
        else:
            r = {x: pick() for x in names}
            a = ref_sdp(fas, r)
            triples = {x: (a[x], r[x], max(F(0), 1 - a[x] - r[x])) for x in names}
        yield fas, FuzzyLabeling(triples)


def random_af(seed, index, max_args=6):
    rng = np.random.default_rng([seed, index])
    n = int(rng.integers(1, max_args + 1))
    names = [chr(ord("A") + i) for i in range(n)]
    p = rng.uniform()
    atts = [(b, a) for b in names for a in names if rng.uniform() < p]
    return AF(names, atts)
