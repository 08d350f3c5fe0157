"""Integer-scaled array kernel behind the enumerating solvers.

All degrees of a system share a common denominator ``L``; scaling by ``L``
turns every degree into an integer and min, max and ``1 - x`` into exact
integer operations.  Arrays have the argument axis last, so the same
functions act on a single vector or on a batch of candidate vectors.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .core import FAS

_INT_LIMIT = 2**62


def common_denominator(values) -> int:
    den = 1
    for v in values:
        den = math.lcm(den, Fraction(v).denominator)
    return den


class Kernel:
    """Compiled, index-based view of a :class:`FAS`."""

    def __init__(self, fas: FAS, extra=()):
        """*extra* degrees only refine the common denominator."""
        self.fas = fas
        self.names = fas.names
        self.index = {x: i for i, x in enumerate(self.names)}
        n = self.n = len(self.names)
        degrees = [fas.degree(x) for x in self.names]
        weights = list(fas.attacks.values())
        L = self.L = common_denominator(degrees + weights + list(extra))
        self.dtype = np.int64 if L < _INT_LIMIT else object
        self.A = np.array([int(d * L) for d in degrees], dtype=self.dtype).reshape(n)
        Rm = np.zeros((n, n), dtype=self.dtype)
        for (b, x), w in fas.attacks.items():
            i, j = self.index[b], self.index[x]
            if self.A[i] > 0:
                Rm[i, j] = int(w * L)
        self.R = Rm
        self.W = np.minimum(self.A[:, None], Rm) if n else Rm
        # L - W is the neutral value L wherever b does not attack x
        self.neutral = L - self.W
        self.values = self._characteristic()

    def _characteristic(self) -> np.ndarray:
        L = self.L
        base = {0, L}
        base.update(int(v) for v in self.A)
        base.update(self.to_int(w) for w in self.fas.attacks.values())
        base.update(int(v) for v in self.W.ravel() if v)
        closed = base | {L - v for v in base}
        return np.array(sorted(closed), dtype=self.dtype)

    # -- conversions -------------------------------------------------------
    def to_int(self, value) -> int:
        scaled = Fraction(value) * self.L
        if scaled.denominator != 1:
            raise ValueError(f"{value} is not on the 1/{self.L} grid")
        return int(scaled)

    def to_frac(self, value) -> Fraction:
        return Fraction(int(value), self.L)

    def vector(self, fuzzy) -> np.ndarray:
        return np.array([self.to_int(fuzzy[x]) for x in self.names], dtype=self.dtype)

    # -- operators ---------------------------------------------------------
    def swp(self, a: np.ndarray) -> np.ndarray:
        """Rejectability forced by acceptability: max_b min(a_b, R[b, x])."""
        if self.n == 0:
            return np.zeros_like(a)
        return np.minimum(a[..., :, None], self.R).max(axis=-2)

    def defense(self, r: np.ndarray) -> np.ndarray:
        """min_b max(r_b, 1 - W[b, x]); 1 for unattacked arguments."""
        if self.n == 0:
            return np.zeros_like(r)
        return np.maximum(r[..., :, None], self.neutral).min(axis=-2)

    def sdp(self, r: np.ndarray) -> np.ndarray:
        return np.minimum(self.A, self.defense(r))

    def step(self, a: np.ndarray) -> np.ndarray:
        return self.sdp(self.swp(a))

    def iterate(self, a: np.ndarray) -> tuple:
        """Apply ``step`` until a fixpoint is reached; returns (a, rounds)."""
        rounds = 0
        while True:
            nxt = self.step(a)
            rounds += 1
            if np.array_equal(nxt, a):
                return a, rounds
            a = nxt

    def least_fixpoint(self) -> np.ndarray:
        return self.iterate(np.zeros(self.n, dtype=self.dtype))[0]

    def greatest_fixpoint(self) -> np.ndarray:
        return self.iterate(self.A.copy())[0]

    # -- batch postulate checks --------------------------------------------
    def check(self, a, r, u, profile) -> np.ndarray:
        """Row-wise truth of every postulate named in *profile*."""
        ok = np.ones(a.shape[:-1], dtype=bool)
        need_swp = any(p in ("UP", "WP", "SWP") for p in profile)
        s = self.swp(a) if need_swp else None
        d = self.defense(r) if any(p in ("DP", "SDP") for p in profile) else None
        for p in profile:
            if p == "BP":
                ok &= (a <= self.A).all(axis=-1)
            elif p == "RP":
                ok &= (a + r + u == self.L).all(axis=-1)
            elif p == "UP":
                ok &= (a + s <= self.L).all(axis=-1)
            elif p == "WP":
                ok &= (r <= s).all(axis=-1)
            elif p == "SWP":
                ok &= (r == s).all(axis=-1)
            elif p == "DP":
                ok &= (a <= d).all(axis=-1)
            elif p == "SDP":
                ok &= (a == np.minimum(self.A, d)).all(axis=-1)
            else:
                raise ValueError(p)
        return ok

    # -- enumeration -------------------------------------------------------
    def _tighten(self, lo, hi):
        L = self.L
        while True:
            nlo = np.maximum(lo, self.step(lo))
            nhi = np.minimum(hi, self.step(hi))
            if (nlo > nhi).any():
                return None
            # every fixpoint above nlo has a + r >= nlo + swp(nlo)
            if (nlo + self.swp(nlo) > L).any():
                return None
            if np.array_equal(nlo, lo) and np.array_equal(nhi, hi):
                return nlo, nhi
            lo, hi = nlo, nhi

    def complete_acceptabilities(self) -> list:
        """Every fixpoint of ``step`` on the characteristic grid with a + r <= 1.

        Branch on one argument's value at a time, then shrink the box
        [lo, hi] with the monotone operator; each fixpoint inside the box
        lies in [step(lo), step(hi)].
        """
        start = self._tighten(self.least_fixpoint(), self.greatest_fixpoint())
        found = []
        stack = [start] if start is not None else []
        while stack:
            lo, hi = stack.pop()
            open_ = np.nonzero(lo != hi)[0]
            if len(open_) == 0:
                found.append(lo)
                continue
            i = open_[0]
            vals = self.values[(self.values >= lo[i]) & (self.values <= hi[i])]
            for v in vals[::-1]:
                nlo, nhi = lo.copy(), hi.copy()
                nlo[i] = v
                nhi[i] = v
                box = self._tighten(nlo, nhi)
                if box is not None:
                    stack.append(box)
        return found

    def grid_domains(self, upper=None) -> list:
        """Per-argument grid values between 0 and *upper* (default: A)."""
        upper = self.A if upper is None else upper
        return [self.values[self.values <= upper[i]] for i in range(self.n)]


def product_size(domains) -> int:
    size = 1
    for d in domains:
        size *= len(d)
    return size


def cartesian(domains, dtype) -> np.ndarray:
    """All combinations of the per-column *domains* as rows."""
    if not domains:
        return np.zeros((1, 0), dtype=dtype)
    grids = np.meshgrid(*domains, indexing="ij")
    return np.stack([g.ravel() for g in grids], axis=-1).astype(dtype)
