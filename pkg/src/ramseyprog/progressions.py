"""Core types and pure operations for generalized progressions.

A k-term *semi-progression of scope m* is an increasing integer sequence
whose successive gaps all lie in {d, 2d, ..., md} for one positive integer d
(the *low-difference*).  A k-term *quasi-progression of diameter n* has all
gaps in {d, d+1, ..., d+n}.  Scope 1 and diameter 0 both recover ordinary
arithmetic progressions.

Each progression has a *conjugate vector* recording the per-gap excess over
the minimal gap (normalized by d for semi, shifted by d for quasi), a
*weight*, and a set of *forced elements*: ground-set points whose color is
pinned to the opposite color whenever the progression is the first-term /
low-difference primary one under a coloring.  These are the combinatorial
levers used by the counting bounds and the exhaustive oracles.

Everything here is a pure function of its inputs; there is no shared state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

SEMI = "semi"
QUASI = "quasi"


@dataclass(frozen=True)
class Family:
    """A progression family: semi of a given scope, or quasi of a given diameter."""

    kind: str
    param: int

    def __post_init__(self):
        if self.kind not in (SEMI, QUASI):
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind == SEMI and self.param < 1:
            raise ValueError("semi-progression scope must be at least 1")
        if self.kind == QUASI and self.param < 0:
            raise ValueError("quasi-progression diameter must be at least 0")

    @classmethod
    def semi(cls, scope: int) -> "Family":
        return cls(SEMI, scope)

    @classmethod
    def quasi(cls, diameter: int) -> "Family":
        return cls(QUASI, diameter)

    def allowed_gaps(self, d: int) -> range:
        """Successive gaps permitted for low-difference d, smallest first."""
        if d < 1:
            raise ValueError("low-difference must be a positive integer")
        if self.kind == SEMI:
            return range(d, self.param * d + 1, d)
        return range(d, d + self.param + 1)

    @property
    def max_excess(self) -> int:
        """Largest conjugate-vector entry: scope-1 for semi, diameter for quasi."""
        return self.param - 1 if self.kind == SEMI else self.param

    def __str__(self) -> str:
        tag = "m" if self.kind == SEMI else "n"
        return f"{self.kind}({tag}={self.param})"


@dataclass(frozen=True)
class Coloring:
    """An r-coloring of the integer interval [1, N].

    Point i (1-based) has color ``colors[i-1]``; colors are integers in
    [0, r-1].
    """

    colors: tuple
    r: int = 2

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        if self.r < 2:
            raise ValueError("a coloring needs at least 2 colors")
        if not self.colors:
            raise ValueError("a coloring must cover at least one point")
        if any(not (0 <= c < self.r) for c in self.colors):
            raise ValueError(f"colors must be integers in [0, {self.r - 1}]")

    @property
    def n_points(self) -> int:
        return len(self.colors)

    def color_of(self, point: int) -> int:
        if not 1 <= point <= len(self.colors):
            raise ValueError(f"point {point} outside [1, {len(self.colors)}]")
        return self.colors[point - 1]

    def digits(self) -> str:
        """The coloring as a base-r digit string (r <= 10)."""
        if self.r > 10:
            raise ValueError("digit serialization supports at most 10 colors")
        return "".join(str(c) for c in self.colors)

    @classmethod
    def from_digits(cls, text: str, r: int) -> "Coloring":
        if not text.isdigit():
            raise ValueError("coloring digits must be decimal digits")
        return cls(tuple(int(ch) for ch in text), r)


def validate_progression(terms: Sequence[int], d: int, family: Family) -> bool:
    """True iff every successive gap of ``terms`` is allowed for low-difference d.

    Raises ValueError for malformed input (fewer than two terms, non-positive
    or non-increasing terms, d < 1); returns False only for well-formed terms
    whose gaps fall outside the family's gap set.
    """
    terms = tuple(terms)
    if len(terms) < 2:
        raise ValueError("a progression needs at least two terms")
    if d < 1:
        raise ValueError("low-difference must be a positive integer")
    if terms[0] < 1:
        raise ValueError("terms must be positive integers")
    if any(b <= a for a, b in zip(terms, terms[1:])):
        raise ValueError("terms must be strictly increasing")
    gaps = family.allowed_gaps(d)
    return all(b - a in gaps for a, b in zip(terms, terms[1:]))


@dataclass(frozen=True)
class Progression:
    """A k-term progression with its low-difference and family.

    Validity (all gaps in the family's gap set) is enforced on construction.
    """

    terms: tuple
    low_difference: int
    family: Family

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not validate_progression(self.terms, self.low_difference, self.family):
            raise ValueError(
                f"gaps of {self.terms} not allowed for {self.family} "
                f"with low-difference {self.low_difference}"
            )

    @property
    def k(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class ConjugateVector:
    """Per-gap excess over the minimal gap; entries in [0, max_excess]."""

    entries: tuple
    family: Family

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if not self.entries:
            raise ValueError("conjugate vector must have at least one entry")
        top = self.family.max_excess
        if any(not (0 <= u <= top) for u in self.entries):
            raise ValueError(f"entries must lie in [0, {top}] for {self.family}")


@dataclass(frozen=True)
class FrequencyVector:
    """Histogram of conjugate-vector entries (semi case): counts[j] = #{i : u_i = j}."""

    counts: tuple

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be non-negative")


def conjugate_vector(p: Progression) -> ConjugateVector:
    """The conjugate vector of p: (gap - d)/d per gap for semi, gap - d for quasi."""
    d = p.low_difference
    gaps = [b - a for a, b in zip(p.terms, p.terms[1:])]
    if p.family.kind == SEMI:
        entries = tuple((g - d) // d for g in gaps)
    else:
        entries = tuple(g - d for g in gaps)
    return ConjugateVector(entries, p.family)


def frequency_vector(u: Union[ConjugateVector, Sequence[int]], m: int) -> FrequencyVector:
    """Histogram (v_0, ..., v_{m-1}) of a semi conjugate vector's entries."""
    entries = u.entries if isinstance(u, ConjugateVector) else tuple(u)
    if m < 1:
        raise ValueError("scope must be at least 1")
    if any(not (0 <= e < m) for e in entries):
        raise ValueError(f"conjugate entries must lie in [0, {m - 1}]")
    counts = [0] * m
    for e in entries:
        counts[e] += 1
    return FrequencyVector(tuple(counts))


def pair_multiplicity(x: int, y: int, n: int) -> int:
    """min(x, n - y): the number of quasi-progressions obtained from a gap pair
    with excesses (x, y) by moving the shared endpoint down, each yielding a
    lexicographically smaller conjugate vector."""
    if not (0 <= x <= n and 0 <= y <= n):
        raise ValueError(f"excesses must lie in [0, {n}]")
    return min(x, n - y)


def weight(u: ConjugateVector) -> int:
    """Number of ground-set elements whose color is forced opposite when a
    progression with conjugate vector u is primary.

    Semi: the sum of the entries.  Quasi: the last entry plus the pair
    multiplicities min(u_i, n - u_{i+1}) of all adjacent entry pairs.
    """
    if u.family.kind == SEMI:
        return sum(u.entries)
    n = u.family.param
    total = u.entries[-1]
    for x, y in zip(u.entries, u.entries[1:]):
        total += pair_multiplicity(x, y, n)
    return total


def forced_elements(p: Progression) -> set:
    """The points strictly inside p's span whose color must differ from p's
    color whenever p is the primary progression for its first term and
    low-difference.

    Each such point e admits an exchange: a valid progression with the same
    first term and low-difference that uses e and has a lexicographically
    smaller conjugate vector, so e colored like p would contradict primality.
    The set has exactly weight(conjugate_vector(p)) elements.
    """
    d = p.low_difference
    u = conjugate_vector(p).entries
    out = set()
    if p.family.kind == SEMI:
        # inside gap i, every multiple of d strictly below the next term
        for a_i, u_i in zip(p.terms, u):
            for j in range(u_i):
                out.add(a_i + (j + 1) * d)
        return out
    n = p.family.param
    for i in range(len(u) - 1):
        # interior gap: only offsets whose exchange keeps the following gap
        # within diameter, which is exactly min(u_i, n - u_{i+1}) of them
        lo = max(0, u[i] - (n - u[i + 1]))
        for j in range(lo, u[i]):
            out.add(p.terms[i] + d + j)
    for j in range(u[-1]):
        out.add(p.terms[-2] + d + j)
    return out


def primary_progression(
    chi: Coloring, a: int, d: int, k: int, family: Family
) -> Optional[Progression]:
    """The monochromatic k-term progression with first term a and
    low-difference d whose conjugate vector is lexicographically least, or
    None if no such monochromatic progression fits inside [1, N].

    Depth-first search over conjugate entries in increasing order; the first
    complete monochromatic completion is the lexicographic minimum.  Plain
    greedy is wrong here: the smallest feasible entry can dead-end before k
    terms are reached, so the search backtracks.
    """
    if k < 2:
        raise ValueError("progressions need at least two terms")
    if d < 1:
        raise ValueError("low-difference must be a positive integer")
    n_points = chi.n_points
    if not 1 <= a <= n_points:
        raise ValueError(f"first term {a} outside [1, {n_points}]")
    color = chi.color_of(a)
    colors = chi.colors
    top = family.max_excess
    semi = family.kind == SEMI
    terms = [a]

    def extend() -> bool:
        if len(terms) == k:
            return True
        last = terms[-1]
        # remaining gaps are each at least d
        if last + (k - len(terms)) * d > n_points:
            return False
        for e in range(top + 1):
            nxt = last + (d * (e + 1) if semi else d + e)
            if nxt > n_points:
                break
            if colors[nxt - 1] != color:
                continue
            terms.append(nxt)
            if extend():
                return True
            terms.pop()
        return False

    if extend():
        return Progression(tuple(terms), d, family)
    return None


def find_monochromatic(chi: Coloring, k: int, family: Family) -> Optional[Progression]:
    """Some monochromatic k-term progression of the family inside [1, N], or None.

    Deterministic: scans (first term, low-difference) pairs in lexicographic
    order, each resolved to its primary progression, so the result is the
    smallest (a, d, conjugate vector) triple.  d never exceeds
    (N - a) // (k - 1) because even the tightest progression spans (k-1)d.
    """
    if k < 2:
        raise ValueError("progressions need at least two terms")
    n_points = chi.n_points
    for a in range(1, n_points + 1):
        for d in range(1, (n_points - a) // (k - 1) + 1):
            p = primary_progression(chi, a, d, k, family)
            if p is not None:
                return p
    return None
