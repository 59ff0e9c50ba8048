"""Exact Ramsey thresholds at small parameters, plus randomized witnesses.

The exact route is depth-first extension of partial colorings, left to
right, rejecting a color as soon as it completes a monochromatic k-term
progression ending at the newly colored point.  When the search exhausts
all colorings of [1, N] without finding a valid one, every coloring of
[1, N] contains a monochromatic progression and N is the threshold.  The
randomized route exhibits valid colorings at sizes where exhaustive proof
is pointless: random start, then local repair on detected progressions.

Both routes emit re-verifiable artifacts: a ThresholdCertificate carries a
maximal witness coloring, and check_witness re-validates any coloring with
no reference to how it was produced.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import BudgetExceededError, WitnessFormatError
from .progressions import SEMI, Coloring, Family, find_monochromatic


@dataclass(frozen=True)
class SearchBudget:
    """Caps and reproducibility knobs for the searches."""

    max_nodes: int = 2_000_000
    max_length: int = 64
    seed: int = 0
    restarts: int = 10

    def __post_init__(self):
        if min(self.max_nodes, self.max_length, self.restarts) < 1 or self.seed < 0:
            raise ValueError("budget fields must be positive (seed non-negative)")


@dataclass(frozen=True)
class ThresholdCertificate:
    """A Ramsey threshold claim with its evidence.

    With exhaustive=True, ``value`` is exact: the witness shows some
    coloring of [1, value-1] avoids monochromatic k-term progressions, and
    the search proved no coloring of [1, value] does.  With
    exhaustive=False (budget ran out), ``value`` is only a lower bound,
    still backed by the witness.
    """

    family: Family
    r: int
    k: int
    value: int
    witness: Coloring
    nodes_explored: int
    exhaustive: bool


def _completes_mono(colors: List[int], pos: int, k: int, family: Family) -> bool:
    """Does some monochromatic k-term progression end exactly at point pos?

    Only colors[0:pos] are inspected, so this is safe on partial colorings.
    Backward depth-first search per low-difference, gaps tried smallest
    first, cut off when even minimal gaps would run past point 1.
    """
    c = colors[pos - 1]
    top = family.max_excess
    semi = family.kind == SEMI

    def back(cur: int, remaining: int, d: int) -> bool:
        if remaining == 0:
            return True
        if cur - remaining * d < 1:
            return False
        for e in range(top + 1):
            prev = cur - ((e + 1) * d if semi else d + e)
            if prev < 1:
                break
            if colors[prev - 1] == c and back(prev, remaining - 1, d):
                return True
        return False

    for d in range(1, (pos - 1) // (k - 1) + 1):
        if back(pos, k - 1, d):
            return True
    return False


class _NodeMeter:
    """Cumulative node counter that raises once the cap is crossed."""

    def __init__(self, cap: int):
        self.count = 0
        self.cap = cap

    def tick(self) -> None:
        self.count += 1
        if self.count > self.cap:
            raise BudgetExceededError(f"node budget {self.cap} exhausted")


def _find_valid_coloring(
    r: int, N: int, k: int, family: Family, meter: _NodeMeter
) -> Optional[Tuple[int, ...]]:
    """Some coloring of [1, N] with no monochromatic k-term progression, or
    None after exhausting the (symmetry-reduced) space.

    Colors are tried in ascending order and a color may exceed the largest
    used so far by at most one, so exactly one representative per
    color-permutation class is visited; a class contains a valid coloring
    iff its representative is valid.
    """
    colors = [0] * N

    def assign(pos: int, max_used: int) -> bool:
        if pos > N:
            return True
        for c in range(min(max_used + 2, r)):
            meter.tick()
            colors[pos - 1] = c
            if not _completes_mono(colors, pos, k, family):
                if assign(pos + 1, max(max_used, c)):
                    return True
        return False

    if assign(1, -1):
        return tuple(colors)
    return None


def exact_threshold(
    r: int, k: int, family: Family, budget: SearchBudget = SearchBudget()
) -> ThresholdCertificate:
    """The least N such that every r-coloring of [1, N] contains a
    monochromatic k-term progression of the family.

    Raises N starting from k (below k no progression fits, so every
    coloring is vacuously valid) until the backtracking search proves no
    valid coloring of [1, N] exists; that N is the value and the last
    valid coloring found is the witness.  On budget exhaustion raises
    BudgetExceededError whose ``partial`` field carries the best
    lower-bound certificate (exhaustive=False).
    """
    if k < 2:
        raise ValueError("need at least 2 terms")
    if r < 2:
        raise ValueError("need at least 2 colors")
    meter = _NodeMeter(budget.max_nodes)
    witness = Coloring((0,) * (k - 1), r)

    def partial() -> ThresholdCertificate:
        return ThresholdCertificate(
            family, r, k, witness.n_points + 1, witness, meter.count, False
        )

    N = k
    while True:
        if N > budget.max_length:
            raise BudgetExceededError(
                f"threshold exceeds max_length={budget.max_length}", partial=partial()
            )
        try:
            found = _find_valid_coloring(r, N, k, family, meter)
        except BudgetExceededError as exc:
            exc.partial = partial()
            raise
        if found is None:
            return ThresholdCertificate(family, r, k, N, witness, meter.count, True)
        witness = Coloring(found, r)
        N += 1


def check_witness(chi: Coloring, k: int, family: Family) -> bool:
    """True iff chi contains no monochromatic k-term progression of the
    family; independent re-verification for certificates."""
    return find_monochromatic(chi, k, family) is None


def _mono_through_count(
    colors: List[int], p: int, c: int, k: int, family: Family
) -> int:
    """Number of k-term progressions through point p that would be
    monochromatic if p had color c (all other terms already colored c).

    Used by the repair step to score candidate colors when r > 2.  Splits
    each progression at p: for every low-difference, chains extending
    backward and forward from p are counted by depth-first search and
    combined over all splits.
    """
    N = len(colors)
    top = family.max_excess
    semi = family.kind == SEMI
    total = 0

    def chains(cur: int, steps: int, sign: int, d: int) -> int:
        if steps == 0:
            return 1
        acc = 0
        for e in range(top + 1):
            nxt = cur + sign * ((e + 1) * d if semi else d + e)
            if nxt < 1 or nxt > N:
                break
            if colors[nxt - 1] == c:
                acc += chains(nxt, steps - 1, sign, d)
        return acc

    for d in range(1, (N - 1) // (k - 1) + 1):
        back = [chains(p, L, -1, d) for L in range(k)]
        fwd = [chains(p, R, +1, d) for R in range(k)]
        total += sum(back[L] * fwd[k - 1 - L] for L in range(k))
    return total


def random_witness_search(
    r: int, N: int, k: int, family: Family, budget: SearchBudget = SearchBudget()
) -> Optional[Coloring]:
    """Search for a coloring of [1, N] with no monochromatic k-term
    progression by random restarts plus local repair.

    Each attempt draws a uniform random coloring, then repeatedly recolors
    one uniformly chosen term of the first detected monochromatic
    progression; the new color is the one creating fewest monochromatic
    progressions through that point (ties to the smallest color; with two
    colors this is just a flip).  Repair moves are capped at
    max_nodes / restarts per attempt and max_nodes overall.  Returns the
    first valid coloring, or None when the budget is spent: absence of a
    witness is a normal outcome, not an error.  Fixed seed makes the whole
    trajectory reproducible.
    """
    if k < 2:
        raise ValueError("need at least 2 terms")
    rng = random.Random(budget.seed)
    per_attempt = max(1, budget.max_nodes // budget.restarts)
    moves_total = 0
    for _ in range(budget.restarts):
        colors = [rng.randrange(r) for _ in range(N)]
        moves_here = 0
        while True:
            chi = Coloring(colors, r)
            bad = find_monochromatic(chi, k, family)
            if bad is None:
                return chi
            if moves_here >= per_attempt or moves_total >= budget.max_nodes:
                break
            p = bad.terms[rng.randrange(k)]
            old = colors[p - 1]
            if r == 2:
                colors[p - 1] = 1 - old
            else:
                best_c, best_score = old, None
                for c in range(r):
                    if c == old:
                        continue
                    score = _mono_through_count(colors, p, c, k, family)
                    if best_score is None or score < best_score:
                        best_c, best_score = c, score
                colors[p - 1] = best_c
            moves_here += 1
            moves_total += 1
        if moves_total >= budget.max_nodes:
            break
    return None


def write_witness(path: str, chi: Coloring, k: int, family: Family) -> None:
    """Write a two-line witness certificate: a JSON header, then the
    coloring as base-r digits (position i+1's color at index i)."""
    header = {
        "family": family.kind,
        "param": family.param,
        "r": chi.r,
        "k": k,
        "n_points": chi.n_points,
    }
    with open(path, "w", encoding="ascii") as fh:
        fh.write(json.dumps(header) + "\n")
        fh.write(chi.digits() + "\n")


def read_witness(path: str) -> Tuple[Coloring, int, Family]:
    """Parse a witness certificate file back into (coloring, k, family).

    Raises WitnessFormatError on any structural problem; the returned
    coloring still needs check_witness to be believed.
    """
    try:
        with open(path, "r", encoding="ascii") as fh:
            header_line = fh.readline()
            digit_line = fh.readline().strip()
    except (OSError, UnicodeDecodeError) as exc:
        raise WitnessFormatError(f"cannot read witness file: {exc}") from exc
    try:
        header = json.loads(header_line)
    except json.JSONDecodeError as exc:
        raise WitnessFormatError(f"bad witness header: {exc}") from exc
    if not isinstance(header, dict):
        raise WitnessFormatError("witness header must be a JSON object")
    missing = {"family", "param", "r", "k", "n_points"} - header.keys()
    if missing:
        raise WitnessFormatError(f"witness header missing {sorted(missing)}")
    try:
        family = Family(header["family"], int(header["param"]))
        r = int(header["r"])
        k = int(header["k"])
        n_points = int(header["n_points"])
        chi = Coloring.from_digits(digit_line, r)
    except (ValueError, TypeError) as exc:
        raise WitnessFormatError(f"bad witness contents: {exc}") from exc
    if chi.n_points != n_points:
        raise WitnessFormatError(
            f"header says {n_points} points but found {chi.n_points} digits"
        )
    if k < 2:
        raise WitnessFormatError("witness k must be at least 2")
    return chi, k, family
