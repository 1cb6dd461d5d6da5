"""Slow reference implementations used only by the test suite.

Everything here recomputes results from first principles with exact rational
arithmetic and no shared code paths with the fast modules: word admission
enumerates all k^n digit words and re-tests every suffix cylinder directly,
and root finding is plain bisection.  Tests freeze values produced here
against the production implementations.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Callable, List, Sequence, Tuple

from .sft import Hole, Mode, _as_mode
from .symbolic import k_transform

_BRUTE_LIMIT = 10_000_000


def _suffix_cylinders(word: Sequence[int], k: int):
    """Cylinder [left, right) of every suffix of the word, exact."""
    n = len(word)
    for start in range(n):
        suffix = word[start:]
        m = len(suffix)
        val = 0
        for d in suffix:
            val = val * k + d
        left = Fraction(val, k ** m)
        yield left, left + Fraction(1, k ** m)


def brute_counts(hole: Hole, mode, n_max: int) -> List[int]:
    """Admitted word counts by total enumeration, lengths 1..n_max.

    Inner keeps a word iff every suffix cylinder misses the open hole
    entirely; outer drops it iff some suffix cylinder sits inside the hole.
    """
    mode = _as_mode(mode)
    k, a, b = hole.k, hole.a, hole.b
    if k ** n_max > _BRUTE_LIMIT:
        raise ValueError("brute-force enumeration capped at 10^7 words")
    out = []
    for n in range(1, n_max + 1):
        count = 0
        for word in product(range(k), repeat=n):
            ok = True
            for left, right in _suffix_cylinders(word, k):
                if mode is Mode.INNER:
                    if not (right <= a or left >= b):
                        ok = False
                        break
                else:
                    if a < left and right <= b:
                        ok = False
                        break
            if ok:
                count += 1
        out.append(count)
    return out


def brute_words(hole: Hole, mode, n: int) -> List[Tuple[int, ...]]:
    """The admitted length-n digit words themselves, lexicographically."""
    mode = _as_mode(mode)
    k, a, b = hole.k, hole.a, hole.b
    out = []
    for word in product(range(k), repeat=n):
        ok = True
        for left, right in _suffix_cylinders(word, k):
            if mode is Mode.INNER:
                if not (right <= a or left >= b):
                    ok = False
                    break
            else:
                if a < left and right <= b:
                    ok = False
                    break
        if ok:
            out.append(word)
    return out


def orbit_escape_table(hole: Hole, grid: int, steps: int) -> List[Tuple[Fraction, int]]:
    """For each grid point i/grid, the first hit time of the open hole under
    x -> kx mod 1, or -1 if the orbit stays out for the full horizon."""
    rows = []
    for i in range(grid):
        x = Fraction(i, grid)
        t = -1
        y = x
        for step in range(steps):
            if hole.contains(y):
                t = step
                break
            y = k_transform(y, hole.k)
        rows.append((x, t))
    return rows


def bisect_root(f: Callable[[float], float], lo: float, hi: float,
                tol: float = 1e-12) -> float:
    """Root of a sign-changing continuous function by bisection."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = (lo + hi) / 2.0
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2.0


def poly_root(coeffs: Sequence[float], lo: float, hi: float,
              tol: float = 1e-12) -> float:
    """Bisection root of a polynomial given by descending coefficients."""

    def f(x: float) -> float:
        acc = 0.0
        for c in coeffs:
            acc = acc * x + c
        return acc

    return bisect_root(f, lo, hi, tol=tol)
