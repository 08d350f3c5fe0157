"""Fuzzy extension semantics and the bridges to fuzzy labelings.

An f-extension is a fuzzy subset ``S`` of the system's argument set
(``S(X) <= A(X)`` everywhere).  Quantifications over candidate degrees
("contains every fuzzy argument it defends") are decided over the
characteristic grid, the same grid used by the labeling solvers.
"""

from __future__ import annotations

import enum
from fractions import Fraction

import numpy as np

from ._kernel import Kernel, cartesian, product_size
from .core import (
    FAS,
    ONE,
    ZERO,
    FuzzyLabeling,
    FuzzySet,
    attack_intensity,
    is_sufficient,
)
from .errors import DomainError, ResourceError
from .semantics import DEFAULT_MAX_CANDIDATES, _check_cap, characteristic_values

FExtension = FuzzySet


class ExtensionKind(enum.Enum):
    CONFLICT_FREE = "conflict-free"
    ADMISSIBLE = "admissible"
    COMPLETE = "complete"
    PREFERRED = "preferred"
    GROUNDED = "grounded"
    STABLE = "stable"

    @classmethod
    def parse(cls, value) -> "ExtensionKind":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("_", "-")
        key = {"cf": "conflict-free", "conflictfree": "conflict-free"}.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise DomainError(f"unknown f-extension kind {value!r}") from None


def validate_fextension(fas: FAS, s) -> FuzzySet:
    s = s if isinstance(s, FuzzySet) else FuzzySet(s)
    for x in s:
        if x not in fas:
            raise DomainError(f"unknown argument {x!r} in fuzzy set")
        if s[x] > fas.degree(x):
            raise DomainError(f"{x!r} has degree {s[x]} above its initial degree {fas.degree(x)}")
    return s


def weaken(a: Fraction, weight: Fraction, b: Fraction) -> Fraction:
    """Residual degree of (B, b) after a sufficient attack from (A, a)."""
    if not is_sufficient(a, weight, b):
        raise DomainError("weakening needs a sufficient attack")
    return ONE - attack_intensity(a, weight)


def weakening_defends(fas: FAS, s, c, cdeg) -> bool:
    """Whether *s* weakens every sufficient attacker of (c, cdeg) into a tolerable one."""
    fas.require(c)
    cdeg = Fraction(cdeg)
    for b in fas.attackers(c):
        bdeg = fas.degree(b)
        if not is_sufficient(bdeg, fas.weight(b, c), cdeg):
            continue
        defended = False
        for x in s:
            if is_sufficient(s[x], fas.weight(x, b), bdeg):
                residual = weaken(s[x], fas.weight(x, b), bdeg)
                if not is_sufficient(residual, fas.weight(b, c), cdeg):
                    defended = True
                    break
        if not defended:
            return False
    return True


def is_conflict_free_fset(fas: FAS, s) -> bool:
    return all(
        not is_sufficient(s[b], fas.weight(b, x), s[x])
        for x in s for b in s
    )


def max_defended_degree(fas: FAS, s, x) -> Fraction:
    grid = [v for v in characteristic_values(fas) if v <= fas.degree(x)]
    return max(v for v in grid if weakening_defends(fas, s, x, v))


def check_fextension(fas: FAS, s, kind) -> bool:
    kind = ExtensionKind.parse(kind)
    s = validate_fextension(fas, s)
    if kind in (ExtensionKind.PREFERRED, ExtensionKind.GROUNDED):
        return s in enumerate_fextensions(fas, kind)
    if not is_conflict_free_fset(fas, s):
        return False
    if kind is ExtensionKind.CONFLICT_FREE:
        return True
    if kind is ExtensionKind.STABLE:
        # each argument below its initial degree is attacked so strongly
        # that every stronger version of it is sufficiently attacked
        plus = attacked_degrees(fas, s)
        return all(s[x] + plus[x] >= 1 for x in fas.names if s[x] < fas.degree(x))
    if not all(weakening_defends(fas, s, x, s[x]) for x in s):
        return False
    if kind is ExtensionKind.ADMISSIBLE:
        return True
    return all(s[x] >= max_defended_degree(fas, s, x) for x in fas.names)


def attacked_degrees(fas: FAS, s) -> FuzzySet:
    """S+: the strongest attack S mounts on each argument."""
    return FuzzySet({
        x: max((attack_intensity(s[b], fas.weight(b, x)) for b in fas.attackers(x)), default=ZERO)
        for x in fas.names
    })


def ext_to_flab(fas: FAS, s) -> FuzzyLabeling:
    s = validate_fextension(fas, s)
    plus = attacked_degrees(fas, s)
    triples = {}
    for x in fas.names:
        u = ONE - s[x] - plus[x]
        if u < 0:
            raise DomainError(f"non-residual source set: acceptability plus rejectability exceeds 1 at {x!r}")
        triples[x] = (s[x], plus[x], u)
    return FuzzyLabeling(triples)


def flab_to_ext(lab: FuzzyLabeling) -> FuzzySet:
    return lab.a


# -- enumeration -----------------------------------------------------------

def _defends_rows(k: Kernel, S, plus, x: int, c) -> np.ndarray:
    """Vectorised weakening defense of (x, c) by each row of S.

    A sufficient attacker b of (x, c) is neutralised exactly when S+(b) >= c:
    the weakening attack is then automatically sufficient and leaves b at
    1 - S+(b) <= 1 - c.
    """
    ok = np.ones(S.shape[0], dtype=bool)
    for b in range(k.n):
        if k.W[b, x] + c > k.L:
            ok &= plus[:, b] >= c
    return ok


def _classify_rows(k: Kernel, S, kind: ExtensionKind) -> np.ndarray:
    plus = k.swp(S)
    cf = (S + plus <= k.L).all(axis=-1)
    if kind is ExtensionKind.CONFLICT_FREE:
        return cf
    if kind is ExtensionKind.STABLE:
        below = S < k.A
        return cf & (~below | (S + plus >= k.L)).all(axis=-1)
    ok = cf.copy()
    for x in range(k.n):
        for c in np.unique(S[:, x]):
            rows = S[:, x] == c
            ok[rows] &= _defends_rows(k, S[rows], plus[rows], x, c)
    if kind is ExtensionKind.ADMISSIBLE:
        return ok
    for x in range(k.n):
        best = np.zeros(S.shape[0], dtype=k.dtype)
        for c in k.values[k.values <= k.A[x]]:
            d = _defends_rows(k, S, plus, x, c)
            best = np.where(d, np.maximum(best, c), best)
        ok &= S[:, x] >= best
    return ok


def _fsets_from_rows(k: Kernel, rows) -> list:
    return [
        FuzzySet({x: k.to_frac(row[i]) for i, x in enumerate(k.names)})
        for row in rows
    ]


def _extremal_rows(M: np.ndarray, maximal: bool) -> np.ndarray:
    """Rows of M that are maximal (or minimal) under the pointwise order.

    Rows are visited by decreasing (increasing) sum, so any strict
    dominator of a row has already been kept when the row is examined.
    """
    if len(M) == 0:
        return M
    sums = M.sum(axis=-1)
    order = np.argsort(-sums if maximal else sums, kind="stable")
    kept = []
    for i in order:
        row = M[i]
        if kept:
            K = np.array(kept)
            dom = (K >= row) if maximal else (K <= row)
            if dom.all(axis=-1).any():
                continue
        kept.append(row)
    return np.array(kept)


def _canonical(sets) -> list:
    return sorted(set(sets), key=lambda s: tuple(sorted(s.items())))


def enumerate_fextensions(fas: FAS, kind, max_args=None, max_candidates=DEFAULT_MAX_CANDIDATES) -> list:
    """Brute force over fuzzy sets on the characteristic grid below A."""
    kind = ExtensionKind.parse(kind)
    _check_cap(fas, max_args)
    k = Kernel(fas)
    domains = k.grid_domains()
    if product_size(domains) > max_candidates:
        raise ResourceError(f"more than {max_candidates} fuzzy sets to examine", max_candidates)
    S = cartesian(domains, k.dtype)
    base = {
        ExtensionKind.PREFERRED: ExtensionKind.ADMISSIBLE,
        ExtensionKind.GROUNDED: ExtensionKind.COMPLETE,
    }.get(kind, kind)
    rows = S[_classify_rows(k, S, base)]
    if kind is ExtensionKind.PREFERRED:
        rows = _extremal_rows(rows, maximal=True)
    elif kind is ExtensionKind.GROUNDED:
        rows = _extremal_rows(rows, maximal=False)
    return _canonical(_fsets_from_rows(k, rows))
