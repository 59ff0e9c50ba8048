"""Analytic lower bounds for progression Ramsey thresholds.

Two bound families live here.  For semi-progressions of scope m (two colors)
the base constant is alpha(m) = sqrt(2^m / (2^m - 1)) and the supporting
counting bound collapses, via the multinomial theorem, from a sum over
frequency vectors to a closed form.  For quasi-progressions of diameter n
with r colors the base is beta = sqrt(r / lambda_max) where lambda_max is
the Perron root of a positive (n+1) x (n+1) transfer matrix with entries
alpha^min(i, n-j), alpha = 1 - 1/r.

Rational quantities (matrix entries, weighted sums, counting bounds) are
kept as exact Fractions; only eigenvalues and roots are floating point, with
the achieved residual reported rather than assumed.  The eigenvalue comes
two independent ways: float power iteration and exact-rational bisection on
the characteristic polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import ConvergenceError
from .progressions import Family, FrequencyVector, pair_multiplicity

MAX_MATRIX_DIM = 64


def alpha_semi(m: int) -> float:
    """The semi-progression bound base alpha(m) = sqrt(2^m / (2^m - 1))."""
    if m < 1:
        raise ValueError("scope must be at least 1")
    return math.sqrt(2**m / (2**m - 1))


def multinomial_count(v) -> int:
    """Exact multinomial coefficient (sum v)! / prod(v_j!).

    Counts the conjugate vectors sharing the frequency histogram v.  Exact
    big-integer arithmetic; no overflow possible.
    """
    counts = v.counts if isinstance(v, FrequencyVector) else tuple(v)
    if any(c < 0 for c in counts):
        raise ValueError("counts must be non-negative")
    out = math.factorial(sum(counts))
    for c in counts:
        out //= math.factorial(c)
    return out


def frequency_vectors(total: int, m: int) -> Iterator[Tuple[int, ...]]:
    """All m-slot histograms with entry sum ``total`` (stars and bars)."""
    if m < 1:
        raise ValueError("need at least one slot")
    for bars in combinations(range(total + m - 1), m - 1):
        prev = -1
        counts = []
        for b in bars:
            counts.append(b - prev - 1)
            prev = b
        counts.append(total + m - 1 - prev - 1)
        yield tuple(counts)


@dataclass(frozen=True)
class SemiCountingBound:
    """Upper bounds on the number of 2-colorings of [1, N] containing a
    monochromatic k-term semi-progression of scope m.

    ``sum_form`` iterates over all frequency vectors v with sum k-1,
    weighting each by its multinomial count and 2^(-weight):

        (N^2 * 2^(N-k+1) / (k-1)) * sum_v M(v) * 2^(-sum_j j*v_j)

    ``closed_form`` is what the multinomial theorem collapses that to:

        (N^2 * 2^N / (k-1)) * (1 - 2^(-m))^(k-1)

    The two are equal exactly.  ``displayed_form`` is the same expression
    with exponent k instead of k-1; it is strictly smaller and is reported
    for comparison only, while inequality checking uses the k-1 forms.
    """

    N: int
    k: int
    m: int
    sum_form: Fraction
    closed_form: Fraction
    displayed_form: Fraction


def semi_counting_bound(N: int, k: int, m: int) -> SemiCountingBound:
    """Evaluate both faces of the scope-m counting bound, exactly."""
    if k < 2:
        raise ValueError("need at least 2 terms")
    if N < 1:
        raise ValueError("ground set must be non-empty")
    if m < 1:
        raise ValueError("scope must be at least 1")
    half = Fraction(1, 2)
    acc = Fraction(0)
    for v in frequency_vectors(k - 1, m):
        w = sum(j * vj for j, vj in enumerate(v))
        acc += multinomial_count(v) * half**w
    sum_form = Fraction(N * N, k - 1) * Fraction(2) ** (N - k + 1) * acc
    base = 1 - half**m
    closed = Fraction(N * N, k - 1) * Fraction(2) ** N * base ** (k - 1)
    displayed = Fraction(N * N, k - 1) * Fraction(2) ** N * base**k
    return SemiCountingBound(N, k, m, sum_form, closed, displayed)


@dataclass(frozen=True)
class TransferMatrix:
    """The positive (n+1) x (n+1) matrix driving the quasi-progression bound.

    entry[i][j] = alpha^min(i, n-j) with alpha = 1 - 1/r, so row 0 and
    column n are all ones and the exponent is exactly the pair multiplicity
    of adjacent conjugate entries (i, j).
    """

    r: int
    n: int
    entries: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "entries", tuple(tuple(row) for row in self.entries)
        )
        dim = self.n + 1
        if dim > MAX_MATRIX_DIM:
            raise ValueError(f"matrix dimension {dim} exceeds {MAX_MATRIX_DIM}")
        if len(self.entries) != dim or any(len(row) != dim for row in self.entries):
            raise ValueError(f"entries must be {dim}x{dim}")

    @property
    def alpha(self) -> Fraction:
        return 1 - Fraction(1, self.r)

    @property
    def dim(self) -> int:
        return self.n + 1

    def row_sums(self) -> List[Fraction]:
        return [sum(row) for row in self.entries]

    def apply(self, vec: Sequence[Fraction]) -> List[Fraction]:
        """Matrix-vector product in exact rationals."""
        if len(vec) != self.dim:
            raise ValueError("vector length must match matrix dimension")
        return [sum(a * x for a, x in zip(row, vec)) for row in self.entries]


def transfer_matrix(r: int, n: int) -> TransferMatrix:
    """Build the transfer matrix for r colors and diameter n."""
    if r < 2:
        raise ValueError("need at least 2 colors")
    if n < 0:
        raise ValueError("diameter must be non-negative")
    alpha = 1 - Fraction(1, r)
    entries = tuple(
        tuple(alpha ** pair_multiplicity(i, j, n) for j in range(n + 1))
        for i in range(n + 1)
    )
    return TransferMatrix(r, n, entries)


def dominant_eigenpair(
    A: TransferMatrix, tol: float = 1e-12, max_iter: int = 100_000
) -> Tuple[float, List[float], float]:
    """Perron root, positive eigenvector, and achieved residual.

    Power iteration from the all-ones vector with sup-norm normalization;
    the eigenvalue estimate is the Rayleigh quotient.  Stops when
    ||A v - lambda v||_inf <= tol * ||v||_inf.  The matrix is positive, so
    the Perron root is simple and the iteration converges from this start.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    rows = [[float(x) for x in row] for row in A.entries]
    dim = len(rows)
    v = [1.0] * dim
    best = math.inf
    for _ in range(max_iter):
        w = [sum(a * x for a, x in zip(row, v)) for row in rows]
        lam = sum(wi * vi for wi, vi in zip(w, v)) / sum(vi * vi for vi in v)
        residual = max(abs(wi - lam * vi) for wi, vi in zip(w, v))
        norm = max(abs(wi) for wi in w)
        v = [wi / norm for wi in w]
        if residual < best:
            best = residual
        if residual <= tol:  # ||v||_inf == 1 after normalization
            return lam, v, residual
    raise ConvergenceError(
        f"power iteration did not reach tol={tol} in {max_iter} iterations",
        best_residual=best,
    )


def dominant_eigenvalue(A: TransferMatrix, tol: float = 1e-12) -> Tuple[float, float]:
    """Perron root of A with the achieved residual (see dominant_eigenpair)."""
    lam, _, residual = dominant_eigenpair(A, tol)
    return lam, residual


def _det(rows: List[List[Fraction]]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    rows = [list(r) for r in rows]
    dim = len(rows)
    det = Fraction(1)
    for col in range(dim):
        pivot = next((i for i in range(col, dim) if rows[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        for i in range(col + 1, dim):
            factor = rows[i][col] * inv
            if factor == 0:
                continue
            for j in range(col, dim):
                rows[i][j] -= factor * rows[col][j]
    return det


def lambda_max_by_charpoly(A: TransferMatrix, tol: float = 1e-12) -> float:
    """Perron root by exact-rational bisection on det(xI - A).

    Independent of power iteration: the characteristic polynomial is
    positive for x above the spectral radius and negative just below the
    (simple) Perron root, so the first sign change scanning down from
    max-row-sum + 1 brackets it.  Intended for small matrices (cross-check
    path); cost grows quickly with dimension.
    """

    def charpoly(x: Fraction) -> Fraction:
        shifted = [
            [(x if i == j else Fraction(0)) - A.entries[i][j] for j in range(A.dim)]
            for i in range(A.dim)
        ]
        return _det(shifted)

    hi = max(A.row_sums()) + 1
    step = Fraction(1, 4)
    lo = hi - step
    while charpoly(lo) > 0:
        hi = lo
        lo -= step
        if lo < 0:
            raise ArithmeticError("no sign change above zero; matrix not positive?")
    while float(hi - lo) > tol:
        mid = (lo + hi) / 2
        if charpoly(mid) > 0:
            hi = mid
        else:
            lo = mid
    return float((lo + hi) / 2)


@dataclass(frozen=True)
class BoundResult:
    """A computed lower-bound base together with its provenance.

    ``base`` is alpha(m) for semi or sqrt(r / lambda_max) for quasi.  The
    bound asserts that the Ramsey threshold exceeds base^k; ``threshold(k)``
    gives floor(base^k).  ``useful`` records whether base > 1 (a base at or
    below 1 bounds nothing).  For semi, ``base_squared`` holds the exact
    rational base^2, letting threshold() avoid float floor errors.
    """

    family: Family
    r: int
    base: float
    lambda_max: Optional[float]
    residual: float
    useful: bool
    base_squared: Optional[Fraction] = None

    def threshold(self, k: int) -> int:
        if k < 0:
            raise ValueError("exponent must be non-negative")
        if self.base_squared is not None:
            p = self.base_squared.numerator**k
            q = self.base_squared.denominator**k
            # floor(sqrt(p/q)) = floor(sqrt(p*q)) // q for integer q >= 1
            return math.isqrt(p * q) // q
        return math.floor(self.base**k)


def semi_bound(m: int) -> BoundResult:
    """The scope-m semi-progression bound base as a BoundResult (2 colors)."""
    return BoundResult(
        family=Family.semi(m),
        r=2,
        base=alpha_semi(m),
        lambda_max=None,
        residual=0.0,
        useful=True,
        base_squared=Fraction(2**m, 2**m - 1),
    )


def beta_quasi(r: int, n: int, tol: float = 1e-12) -> BoundResult:
    """The diameter-n, r-color quasi-progression bound base
    beta = sqrt(r / lambda_max(transfer_matrix(r, n)))."""
    if n < 1:
        raise ValueError("diameter must be at least 1 for the spectral bound")
    lam, residual = dominant_eigenvalue(transfer_matrix(r, n), tol)
    base = math.sqrt(r / lam)
    return BoundResult(
        family=Family.quasi(n),
        r=r,
        base=base,
        lambda_max=lam,
        residual=residual,
        useful=base > 1,
    )


def quartic_root_check() -> float:
    """The smallest positive root of y^4 - 8y^2 + 8 = 0, cross-checked.

    The root is sqrt(4 - 2*sqrt(2)).  Verifies that it satisfies the quartic
    to 1e-12, matches beta for 2 colors at diameter 1 to 1e-6, and exceeds
    1.08226, the best previously published base for that case.
    """
    root = math.sqrt(4 - 2 * math.sqrt(2))
    if abs(root**4 - 8 * root**2 + 8) > 1e-12:
        raise ArithmeticError("quartic residual too large")
    beta = beta_quasi(2, 1).base
    if abs(beta - root) > 1e-6:
        raise ArithmeticError(
            f"spectral beta {beta!r} disagrees with quartic root {root!r}"
        )
    if not root > 1.08226:
        raise ArithmeticError("root does not exceed the prior constant")
    return root


def weighted_conjugate_sum(
    t: int, r: int, n: int
) -> Tuple[List[Fraction], Fraction]:
    """The weighted sums (S_t0, ..., S_tn) and their total, exactly.

    S_tj is the sum of alpha^weight over all length-t quasi conjugate
    vectors whose first entry is j (alpha = 1 - 1/r).  Base case: length-1
    vectors have weight equal to their single entry, so S_1j = alpha^j.
    Longer lengths follow the transfer-matrix recursion S_{t+1} = A S_t.
    """
    if t < 1:
        raise ValueError("length must be at least 1")
    A = transfer_matrix(r, n)
    vec = [A.alpha**j for j in range(n + 1)]
    for _ in range(t - 1):
        vec = A.apply(vec)
    return vec, sum(vec)


def quasi_counting_bound(r: int, N: int, k: int, n: int) -> Fraction:
    """Exact upper bound (N^2 * r^(N-k+1) / (k-1)) * S_{k-1}(r, n) on the
    number of r-colorings of [1, N] containing a monochromatic k-term
    quasi-progression of diameter n."""
    if k < 2:
        raise ValueError("need at least 2 terms")
    if N < 1:
        raise ValueError("ground set must be non-empty")
    _, total = weighted_conjugate_sum(k - 1, r, n)
    return Fraction(N * N, k - 1) * Fraction(r) ** (N - k + 1) * total


@dataclass(frozen=True)
class ComparisonBounds:
    """Side-by-side bound bases and values for one parameter point.

    ``naive_quasi`` = (sqrt(r/(n+1)))^k, the first-moment bound that needs
    no structure; ``landman_semi`` = 2k^2/m, the prior quadratic semi bound;
    ``semi_power`` and ``quasi_power`` are alpha(m)^k and beta_{r,n}^k.
    """

    r: int
    n: int
    k: int
    m: int
    naive_quasi: float
    landman_semi: float
    semi_power: float
    quasi_power: float


def comparison_bounds(r: int, n: int, k: int, m: int) -> ComparisonBounds:
    """Evaluate the competing lower-bound formulas at one (r, n, k, m)."""
    if min(r, k, m) < 1 or n < 1:
        raise ValueError("parameters must be positive")
    naive = math.sqrt(r / (n + 1)) ** k
    landman = 2 * k * k / m
    semi_power = alpha_semi(m) ** k
    quasi_power = beta_quasi(r, n).base ** k
    return ComparisonBounds(r, n, k, m, naive, landman, semi_power, quasi_power)


def beta_table(r_max: int, n_max: int, tol: float = 1e-12) -> List[BoundResult]:
    """Quasi bound bases for every 2 <= r <= r_max, 1 <= n <= n_max."""
    if r_max < 2 or n_max < 1:
        raise ValueError("table needs r_max >= 2 and n_max >= 1")
    return [
        beta_quasi(r, n, tol)
        for r in range(2, r_max + 1)
        for n in range(1, n_max + 1)
    ]
