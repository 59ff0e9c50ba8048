"""Exhaustive ground truth at small N.

Everything here enumerates all r^N colorings of [1, N] (within an explicit
budget) and measures exactly: how many colorings contain a monochromatic
k-term progression, whether the analytic counting bounds really dominate
those counts, and whether the primary-progression partition argument holds
coloring by coloring.  This is the module the analytic side is checked
against, so it stays deliberately dumb: no symmetry tricks, no sampling,
exact integers or refusal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import List, Optional, Tuple

from .bounds import quasi_counting_bound, semi_counting_bound
from .errors import BudgetExceededError
from .progressions import (
    SEMI,
    Coloring,
    Family,
    Progression,
    conjugate_vector,
    primary_progression,
    weight,
)


@dataclass(frozen=True)
class OracleBudget:
    """Hard caps for exhaustive enumeration."""

    max_points: int = 24
    max_colorings: int = 2**24

    def check(self, r: int, N: int) -> None:
        if N > self.max_points:
            raise BudgetExceededError(
                f"N={N} exceeds the {self.max_points}-point oracle budget"
            )
        if r**N > self.max_colorings:
            raise BudgetExceededError(
                f"r^N = {r**N} colorings exceed the budget of {self.max_colorings}"
            )


@dataclass(frozen=True)
class CountReport:
    """Exact enumeration result, optionally paired with an analytic bound."""

    N: int
    k: int
    family: Family
    r: int
    mono_count: int
    total: int
    bound_value: Optional[Fraction] = None
    bound_satisfied: Optional[bool] = None


@lru_cache(maxsize=None)
def all_progressions(N: int, k: int, family: Family) -> Tuple[Tuple[int, ...], ...]:
    """Term tuples of every k-term progression of the family inside [1, N].

    Ordered by (first term, low-difference, conjugate vector) ascending, so
    a linear scan respects the primary tie-break.  Coloring-independent and
    cached: the oracle sweeps reuse one list across all r^N colorings.
    """
    if k < 2:
        raise ValueError("need at least 2 terms")
    out: List[Tuple[int, ...]] = []

    def extend(terms: List[int], d: int) -> None:
        if len(terms) == k:
            out.append(tuple(terms))
            return
        if terms[-1] + (k - len(terms)) * d > N:
            return
        for gap in family.allowed_gaps(d):
            nxt = terms[-1] + gap
            if nxt > N:
                break
            terms.append(nxt)
            extend(terms, d)
            terms.pop()

    for a in range(1, N + 1):
        for d in range(1, max(0, (N - a) // (k - 1)) + 1):
            extend([a], d)
    return tuple(out)


@lru_cache(maxsize=None)
def progression_masks(N: int, k: int, family: Family) -> Tuple[int, ...]:
    """The progressions of all_progressions as point bitmasks (bit i = point
    i+1), deduplicated: distinct low-differences can yield the same terms,
    and monochromaticity only sees the point set."""
    masks = []
    seen = set()
    for terms in all_progressions(N, k, family):
        m = 0
        for t in terms:
            m |= 1 << (t - 1)
        if m not in seen:
            seen.add(m)
            masks.append(m)
    return tuple(masks)


def progressions_from(
    N: int, k: int, family: Family, a: int, d: int
) -> Tuple[Tuple[int, ...], ...]:
    """Every k-term progression with first term a and low-difference d inside
    [1, N], in ascending conjugate-vector order.

    Generated for the given d directly (a term tuple can be valid under
    several low-differences, so filtering a mixed list would conflate them).
    """
    if not 1 <= a <= N:
        raise ValueError(f"first term {a} outside [1, {N}]")
    if d < 1:
        raise ValueError("low-difference must be a positive integer")
    out: List[Tuple[int, ...]] = []

    def extend(terms: List[int]) -> None:
        if len(terms) == k:
            out.append(tuple(terms))
            return
        if terms[-1] + (k - len(terms)) * d > N:
            return
        for gap in family.allowed_gaps(d):
            nxt = terms[-1] + gap
            if nxt > N:
                break
            terms.append(nxt)
            extend(terms)
            terms.pop()

    extend([a])
    return tuple(out)


def _mono_exists_bits(x: int, masks: Tuple[int, ...]) -> bool:
    for m in masks:
        b = x & m
        if b == 0 or b == m:
            return True
    return False


def _mono_exists_general(colors: Tuple[int, ...], termlists: List[Tuple[int, ...]]) -> bool:
    for terms in termlists:
        c = colors[terms[0]]
        for t in terms[1:]:
            if colors[t] != c:
                break
        else:
            return True
    return False


def count_mono_colorings(
    r: int, N: int, k: int, family: Family, budget: OracleBudget = OracleBudget()
) -> CountReport:
    """Exactly count the r-colorings of [1, N] containing at least one
    monochromatic k-term progression of the family.

    Full enumeration with early-exit detection against the cached
    progression list.  Two colors sweep an integer counter with bitmask
    tests; more colors fall back to tuple scanning.
    """
    budget.check(r, N)
    count = 0
    if r == 2:
        masks = progression_masks(N, k, family)
        for x in range(1 << N):
            if _mono_exists_bits(x, masks):
                count += 1
    else:
        termlists = list(
            dict.fromkeys(
                tuple(t - 1 for t in p) for p in all_progressions(N, k, family)
            )
        )
        for colors in product(range(r), repeat=N):
            if _mono_exists_general(colors, termlists):
                count += 1
    return CountReport(N, k, family, r, count, r**N)


def _family_bound(r: int, N: int, k: int, family: Family) -> Fraction:
    if family.kind == SEMI:
        if r != 2:
            raise ValueError("the scope counting bound is specific to 2 colors")
        return semi_counting_bound(N, k, family.param).sum_form
    return quasi_counting_bound(r, N, k, family.param)


def verify_counting_inequality(
    r: int, N: int, k: int, family: Family, budget: OracleBudget = OracleBudget()
) -> CountReport:
    """Compare the exhaustive monochromatic-coloring count against the
    analytic upper bound for the family; bound_satisfied records whether
    the bound held.  A False result is a finding, not an exception."""
    plain = count_mono_colorings(r, N, k, family, budget)
    bound = _family_bound(r, N, k, family)
    return CountReport(
        N,
        k,
        family,
        r,
        plain.mono_count,
        plain.total,
        bound_value=bound,
        bound_satisfied=plain.mono_count <= bound,
    )


def _primary_by_scan(
    colors: Tuple[int, ...], candidates: Tuple[Tuple[int, ...], ...]
) -> Optional[Tuple[int, ...]]:
    """First monochromatic candidate in conjugate-lex order, or None."""
    for terms in candidates:
        c = colors[terms[0] - 1]
        if all(colors[t - 1] == c for t in terms[1:]):
            return terms
    return None


def primary_partition_check(
    r: int,
    N: int,
    k: int,
    family: Family,
    a: int,
    d: int,
    budget: OracleBudget = OracleBudget(),
) -> bool:
    """Verify by enumeration that "which progression is primary" partitions
    the colorings admitting a monochromatic progression with first term a
    and low-difference d.

    For every such coloring there must be exactly one primary progression,
    the per-progression primary counts must sum to the total count of
    colorings with any monochromatic (a, d) candidate, and the scan-based
    primary must agree with primary_progression.  Vacuously true when no
    candidate fits in [1, N].
    """
    budget.check(r, N)
    candidates = progressions_from(N, k, family, a, d)
    per_progression = {terms: 0 for terms in candidates}
    with_mono = 0
    for colors in product(range(r), repeat=N):
        primary = _primary_by_scan(colors, candidates)
        chi = Coloring(colors, r)
        from_search = primary_progression(chi, a, d, k, family)
        if primary is None:
            if from_search is not None:
                return False
            continue
        if from_search is None or from_search.terms != primary:
            return False
        with_mono += 1
        per_progression[primary] += 1
    return sum(per_progression.values()) == with_mono


def forced_count_check(
    r: int,
    N: int,
    k: int,
    family: Family,
    a: int,
    d: int,
    budget: OracleBudget = OracleBudget(),
) -> bool:
    """Check the per-progression primary-count bound implied by forced
    elements: a progression P of weight w fixes its own k cells and forces
    w more cells off its color, so at most r * (r-1)^w * r^(N-k-w)
    colorings can have P as their (a, d)-primary progression."""
    budget.check(r, N)
    candidates = progressions_from(N, k, family, a, d)
    if not candidates:
        return True
    counts = {terms: 0 for terms in candidates}
    for colors in product(range(r), repeat=N):
        primary = _primary_by_scan(colors, candidates)
        if primary is not None:
            counts[primary] += 1
    for terms, observed in counts.items():
        p = Progression(terms, d, family)
        w = weight(conjugate_vector(p))
        allowed = r * (r - 1) ** w * r ** (N - k - w)
        if observed > allowed:
            return False
    return True
