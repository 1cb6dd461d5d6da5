"""Finite-type approximations of the survivor set of x -> kx mod 1 with a hole.

A depth-n approximation admits length-n digit words by testing every suffix's
cylinder against the open hole (a, b):

* Inner mode keeps a word only if every suffix cylinder is disjoint from the
  hole.  Every infinite path through admitted windows then projects into the
  survivor set, so inner quantities are lower bounds.
* Outer mode keeps a word unless some suffix cylinder is contained in the
  hole.  Every surviving point's windows are admitted, so outer quantities are
  upper bounds; outer counts are submultiplicative in the depth.

All hole comparisons are exact integer arithmetic on cylinder endpoints.
Word sets are stored as sorted integer codes (the word read as a base-k
number), and the depth-n transition relation w -> w' (last n-1 digits of w =
first n-1 of w') is kept in successor-index form, never as a dense matrix.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .symbolic import Word, as_fraction, _check_base

DEFAULT_STATE_BUDGET = 1 << 24
DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 10_000


class BudgetError(RuntimeError):
    """Raised when a requested depth would exceed the word-space budget."""


class ConvergenceError(RuntimeError):
    """Power iteration failed to stabilize; carries the last estimate."""

    def __init__(self, message: str, last_estimate: float):
        super().__init__(message)
        self.last_estimate = last_estimate


class Mode(Enum):
    INNER = "inner"
    OUTER = "outer"


def _as_mode(mode) -> Mode:
    return mode if isinstance(mode, Mode) else Mode(str(mode).lower())


@dataclass(frozen=True)
class Hole:
    """An open interval (a, b) in [0,1] removed under the base-k map."""

    k: int
    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        _check_base(self.k)
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))
        if not 0 <= self.a < self.b <= 1:
            raise ValueError(f"need 0 <= a < b <= 1, got ({self.a}, {self.b})")

    @property
    def width(self) -> Fraction:
        return self.b - self.a

    def contains(self, x) -> bool:
        x = as_fraction(x)
        return self.a < x < self.b

    def reflected(self) -> "Hole":
        return Hole(self.k, 1 - self.b, 1 - self.a)


def _keep_thresholds(hole: Hole, length: int, mode: Mode) -> Tuple[int, int]:
    # A word code c of the given length is kept iff c <= X or c >= Y.
    # Inner: cylinder [c, c+1)/k^m disjoint from (a,b); outer: not contained.
    K = hole.k ** length
    pa, qa = hole.a.numerator, hole.a.denominator
    pb, qb = hole.b.numerator, hole.b.denominator
    if mode is Mode.INNER:
        return (pa * K) // qa - 1, -((-pb * K) // qb)
    return (pa * K) // qa, (pb * K) // qb


def _levels(hole: Hole, mode: Mode, depth: int) -> Iterator[Tuple[int, List[int]]]:
    k = hole.k
    codes = [0]
    base_pow = 1  # k^(current depth)
    for n in range(1, depth + 1):
        X, Y = _keep_thresholds(hole, n, mode)
        out: List[int] = []
        for d in range(k):
            base = d * base_pow
            hi = bisect_right(codes, X - base)
            lo = bisect_left(codes, Y - base)
            if hi >= lo:
                out.extend(base + c for c in codes)
            else:
                out.extend(base + c for c in codes[:hi])
                out.extend(base + c for c in codes[lo:])
        codes = out
        base_pow *= k
        yield n, codes


@dataclass(frozen=True)
class Relation:
    """A finite directed transition structure in successor-index form.

    succ has one row per state; entries are successor state indices, -1 for
    unused slots.  This is the k-out-degree sparse shape; a dense matrix is
    never formed.
    """

    succ: np.ndarray

    @property
    def num_states(self) -> int:
        return int(self.succ.shape[0])

    def edges(self) -> Tuple[np.ndarray, np.ndarray]:
        valid = self.succ >= 0
        src = np.repeat(np.arange(self.num_states, dtype=np.int64),
                        valid.sum(axis=1))
        dst = self.succ[valid]
        return src, dst

    @classmethod
    def from_successor_lists(cls, lists: Sequence[Sequence[int]]) -> "Relation":
        n = len(lists)
        deg = max((len(l) for l in lists), default=0)
        succ = np.full((n, max(deg, 1)), -1, dtype=np.int64)
        for i, l in enumerate(lists):
            for j, t in enumerate(l):
                succ[i, j] = t
        return cls(succ)


@dataclass
class DepthApproximation:
    """Admitted words at one depth, with the counts of every shallower level."""

    hole: Hole
    mode: Mode
    depth: int
    codes: List[int]
    counts: List[int]
    _relation: Optional[Relation] = field(default=None, repr=False, compare=False)

    @property
    def count(self) -> int:
        return len(self.codes)

    def words(self) -> List[Word]:
        k, n = self.hole.k, self.depth
        out = []
        for c in self.codes:
            digits = []
            for _ in range(n):
                c, d = divmod(c, k)
                digits.append(d)
            out.append(Word(k, tuple(reversed(digits))))
        return out

    def relation(self) -> Relation:
        if self._relation is None:
            k = self.hole.k
            codes = np.asarray(self.codes, dtype=np.int64)
            S = codes.size
            if S == 0:
                self._relation = Relation(np.empty((0, k), dtype=np.int64))
                return self._relation
            M = k ** (self.depth - 1)
            succ = np.full((S, k), -1, dtype=np.int64)
            stems = (codes % M) * k
            for d in range(k):
                targets = stems + d
                idx = np.searchsorted(codes, targets)
                idx_c = np.minimum(idx, S - 1)
                valid = codes[idx_c] == targets
                succ[:, d] = np.where(valid, idx_c, -1)
            self._relation = Relation(succ)
        return self._relation


@dataclass(frozen=True)
class SurvivorCounts:
    hole: Hole
    mode: Mode
    counts: Tuple[int, ...]

    def mu(self, n: int) -> int:
        return self.counts[n - 1]


def _check_budget(k: int, depth: int, state_budget: int) -> None:
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if k ** depth > state_budget:
        raise BudgetError(
            f"k^depth = {k}^{depth} exceeds the state budget {state_budget}"
        )


def build_approximation(hole: Hole, depth: int, mode,
                        state_budget: int = DEFAULT_STATE_BUDGET) -> DepthApproximation:
    """Admitted word set at the given depth, built level by level.

    Each level extends the previous one on the left by one digit and re-tests
    only the full-word cylinder; the shorter suffix conditions are inherited.
    """
    mode = _as_mode(mode)
    _check_budget(hole.k, depth, state_budget)
    counts: List[int] = []
    codes: List[int] = []
    for _, codes in _levels(hole, mode, depth):
        counts.append(len(codes))
    return DepthApproximation(hole, mode, depth, codes, counts)


def count_sequence(hole: Hole, mode, n_max: int,
                   state_budget: int = DEFAULT_STATE_BUDGET) -> SurvivorCounts:
    """Admitted word counts mu(1..n_max) for one mode."""
    mode = _as_mode(mode)
    _check_budget(hole.k, n_max, state_budget)
    counts = [len(codes) for _, codes in _levels(hole, mode, n_max)]
    return SurvivorCounts(hole, mode, tuple(counts))


# === spectral radius ========================================================

def _as_relation(obj) -> Relation:
    if isinstance(obj, Relation):
        return obj
    rel = getattr(obj, "relation", None)
    if callable(rel):
        return rel()
    raise TypeError(f"cannot extract a transition relation from {obj!r}")


def _component_stats(rel: Relation):
    src, dst = rel.edges()
    S = rel.num_states
    if S == 0 or src.size == 0:
        return None
    A = csr_matrix((np.ones(src.size), (src, dst)), shape=(S, S))
    ncomp, labels = connected_components(A, directed=True, connection="strong")
    sizes = np.bincount(labels, minlength=ncomp)
    internal = labels[src] == labels[dst]
    edge_counts = np.bincount(labels[src[internal]], minlength=ncomp)
    return A, labels, sizes, edge_counts


def spectral_radius(relation, tol: float = DEFAULT_TOL,
                    max_iter: int = DEFAULT_MAX_ITER) -> float:
    """Largest eigenvalue magnitude of the 0/1 transition relation.

    Decomposes into strongly connected components and runs power iteration on
    the identity-shifted restriction of each (primitive, so the Rayleigh
    estimates converge geometrically); the result is the maximum over
    components.  A component that is a bare cycle contributes exactly 1, an
    empty or cycle-free relation gives 0.  Iteration is declared converged
    when two successive Rayleigh estimates agree within tol, twice in a row;
    exceeding max_iter raises ConvergenceError with the last estimate.
    """
    rel = _as_relation(relation)
    stats = _component_stats(rel)
    if stats is None:
        return 0.0
    A, labels, sizes, edge_counts = stats
    best = 0.0
    for comp in range(sizes.size):
        size, ne = int(sizes[comp]), int(edge_counts[comp])
        if size == 1:
            if ne >= 1:
                best = max(best, 1.0)
            continue
        if ne == size:
            best = max(best, 1.0)  # strongly connected with n edges: one cycle
            continue
        idx = np.flatnonzero(labels == comp)
        sub = A[idx][:, idx]
        v = np.full(idx.size, 1.0 / idx.size)
        prev = None
        stable = 0
        estimate = 0.0
        for _ in range(max_iter):
            w = sub.dot(v) + v
            s = float(w.sum())
            v = w / s
            estimate = s - 1.0
            if prev is not None and abs(s - prev) < tol:
                stable += 1
                if stable >= 2:
                    break
            else:
                stable = 0
            prev = s
        else:
            raise ConvergenceError(
                f"power iteration did not stabilize within {max_iter} steps "
                f"(last estimate {estimate})", estimate)
        best = max(best, estimate)
    return best


def has_entropy_certificate(relation) -> bool:
    """Exact test for spectral radius > 1.

    True iff some strongly connected component carries more edges than
    states; an irreducible 0/1 relation that is not a bare cycle has radius
    strictly above 1, so this is float-free and equivalent.
    """
    rel = _as_relation(relation)
    stats = _component_stats(rel)
    if stats is None:
        return False
    _, _, sizes, edge_counts = stats
    return bool(np.any(edge_counts > sizes))


# === entropy bounds =========================================================

@dataclass(frozen=True)
class EntropyBounds:
    """Certified entropy bracket for the symbolic survivor set."""

    lower: float
    upper: float
    inner_radius: float
    outer_radius: float
    count_upper: float  # best per-depth bound log mu_outer(n) / n

    def dimension_bounds(self, k: int) -> Tuple[float, float]:
        logk = math.log(k)
        lo = min(1.0, max(0.0, self.lower / logk))
        hi = min(1.0, max(0.0, self.upper / logk))
        return lo, hi


def entropy_bounds(inner: DepthApproximation, outer: DepthApproximation,
                   tol: float = DEFAULT_TOL) -> EntropyBounds:
    """Two-sided entropy bracket from a matched inner/outer approximation pair.

    Lower: log of the inner relation's spectral radius (the inner subshift
    embeds in the survivor set).  Upper: the smaller of the best per-depth
    count bound log mu_outer(n)/n (valid at every n by submultiplicativity)
    and the log of the outer relation's spectral radius (the survivor shift
    embeds in the outer subshift).
    """
    if inner.mode is not Mode.INNER or outer.mode is not Mode.OUTER:
        raise ValueError("pass one Inner and one Outer approximation, in order")
    if inner.hole != outer.hole:
        raise ValueError("approximations describe different holes")
    count_upper = math.inf
    for n, mu in enumerate(outer.counts, start=1):
        bound = math.log(mu) / n if mu > 0 else 0.0
        count_upper = min(count_upper, bound)
    inner_radius = spectral_radius(inner.relation(), tol=tol)
    outer_radius = spectral_radius(outer.relation(), tol=tol)
    lower = math.log(inner_radius) if inner_radius > 1.0 else 0.0
    radius_upper = math.log(outer_radius) if outer_radius > 1.0 else 0.0
    return EntropyBounds(
        lower=lower,
        upper=min(count_upper, radius_upper),
        inner_radius=inner_radius,
        outer_radius=outer_radius,
        count_upper=count_upper,
    )


# === reference subshifts ====================================================

@dataclass(frozen=True)
class ForcedRunSubshift:
    """Sequences over {k-2, k-1} where each k-2 forces run_length copies of k-1.

    States 0..run_length count the forced letters still owed; state 0 is free.
    Strongly connected, with cycles of lengths 1 and run_length+1, so the
    characteristic polynomial is x^(N+1) - x^N - 1 and the radius exceeds 1.
    """

    k: int
    run_length: int

    def __post_init__(self) -> None:
        _check_base(self.k)
        if self.run_length < 1:
            raise ValueError("run_length must be >= 1")

    @property
    def low_digit(self) -> int:
        return self.k - 2

    @property
    def high_digit(self) -> int:
        return self.k - 1

    def adjacency_matrix(self) -> List[List[int]]:
        n = self.run_length + 1
        m = [[0] * n for _ in range(n)]
        m[0][0] = 1                    # free state emits k-1 and stays free
        m[0][self.run_length] = 1      # or emits k-2 and owes a full run
        for i in range(1, n):
            m[i][i - 1] = 1            # forced k-1, one fewer owed
        return m

    def relation(self) -> Relation:
        succ = [[0, self.run_length]] + [[i - 1] for i in range(1, self.run_length + 1)]
        return Relation.from_successor_lists(succ)

    def word_counts(self, n_max: int) -> List[int]:
        """Exact admissible word counts for lengths 1..n_max (paths from the
        free state; a trailing partial run is completable, so it is allowed)."""
        m = self.adjacency_matrix()
        n = len(m)
        u = [1] + [0] * (n - 1)
        out = []
        for _ in range(n_max):
            u = [sum(u[i] * m[i][j] for i in range(n)) for j in range(n)]
            out.append(sum(u))
        return out

    def characteristic_coefficients(self) -> List[int]:
        # x^(N+1) - x^N - 1, descending powers
        return [1, -1] + [0] * (self.run_length - 1) + [-1]


def forced_run_subshift(k: int, run_length: int) -> ForcedRunSubshift:
    return ForcedRunSubshift(k, run_length)


def full_shift_relation(j: int) -> Relation:
    """The complete relation on j one-letter states."""
    if j < 1:
        raise ValueError("need at least one letter")
    return Relation(np.tile(np.arange(j, dtype=np.int64), (j, 1)))


def full_shift_entropy(j: int) -> float:
    if j < 1:
        raise ValueError("need at least one letter")
    return math.log(j)
