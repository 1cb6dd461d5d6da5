"""Hole classification, positivity certificates, and dimension estimation.

The dimension of the survivor set of x -> kx mod 1 with hole (a, b) is
h_top / log k for the entropy of the surviving digit shift.  This module
combines three rigorous ingredients:

* inner/outer finite-type approximations from `sft` (two-sided bounds),
* embedded full shifts on hole-free unions of branches (exact lower bounds),
* the staircase reduction: when the hole strictly covers the middle branches,
  the survivor set lives in C_k and the problem transports to the doubling
  map, scaling dimension by log 2 / log k.

Positivity has its own cheaper dispatch that never reports "dimension is
zero": it certifies positivity or declines.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .cantor import cantor_function, thue_morse_preimage
from .sft import (
    DEFAULT_STATE_BUDGET,
    DEFAULT_TOL,
    Hole,
    Mode,
    build_approximation,
    entropy_bounds,
    forced_run_subshift,
    has_entropy_certificate,
    spectral_radius,
)

THRESHOLD_PRECISION = 64  # base-k digits kept of the critical-width constant


@dataclass(frozen=True)
class RegionClass:
    """Where the hole sits relative to the outermost branches of the map.

    Tags (non-exclusive, at least one always applies):
      "left"    the hole misses the top branch:  b <= (k-1)/k
      "right"   the hole misses the bottom branch:  a >= 1/k
      "central" the hole covers all middle branches:  a <= 1/k and b >= (k-1)/k
    """

    tags: Tuple[str, ...]
    primary: str


def classify(hole: Hole) -> RegionClass:
    k = hole.k
    tags: List[str] = []
    if hole.b <= Fraction(k - 1, k):
        tags.append("left")
    if hole.a >= Fraction(1, k):
        tags.append("right")
    if hole.a <= Fraction(1, k) and hole.b >= Fraction(k - 1, k):
        tags.append("central")
    return RegionClass(tuple(tags), tags[0])


def is_strictly_central(hole: Hole) -> bool:
    """True when the hole strictly contains [1/k, (k-1)/k], the hypothesis of
    the staircase reduction: survivors then use only the digits 0 and k-1."""
    k = hole.k
    return hole.a < Fraction(1, k) and hole.b > Fraction(k - 1, k)


def full_shift_lower_bound(hole: Hole) -> Optional[float]:
    """log j / log k for the most letters j >= 2 on hole-free outer branches.

    If (a, b) misses [0, j/k) or [(k-j)/k, 1), every sequence over the j
    corresponding digits stays outside the hole forever, so the survivor set
    contains a full j-shift.  None when not even two branches are free.
    """
    k = hole.k
    for j in range(k - 1, 1, -1):
        if hole.b <= Fraction(k - j, k) or hole.a >= Fraction(j, k):
            return math.log(j) / math.log(k)
    return None


def reflect_hole(hole: Hole) -> Hole:
    """The hole (1-b, 1-a); the map's digit reversal d -> k-1-d carries one
    survivor set onto the other, so all inner counts and bounds agree."""
    return hole.reflected()


def reduce_to_doubling(hole: Hole) -> Tuple[Fraction, Fraction]:
    """Staircase image (g(a), g(b)) of a strictly central hole.

    Requires a < 1/k and b > (k-1)/k; then survivors never leave C_k, the
    staircase conjugates the dynamics to the doubling map, and the returned
    pair is a valid doubling-map hole with g(a) < 1/2 < g(b).
    """
    if not is_strictly_central(hole):
        raise ValueError(
            "reduction needs a < 1/k and b > (k-1)/k strictly; "
            f"got ({hole.a}, {hole.b}) for k={hole.k}")
    ga = cantor_function(hole.a, hole.k)
    gb = cantor_function(hole.b, hole.k)
    return ga, gb


# === positivity =============================================================

class Positivity(Enum):
    POSITIVE = "positive"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class PositivityResult:
    status: Positivity
    certificate: Optional[str]
    detail: Dict[str, object]

    @property
    def is_positive(self) -> bool:
        return self.status is Positivity.POSITIVE


def narrow_hole_threshold(k: int, precision_digits: int = THRESHOLD_PRECISION) -> Fraction:
    """A certified under-estimate of the critical symmetric hole width.

    The true critical width is 1 - 2x where x is the C_k point whose
    staircase value is the Thue-Morse constant; x is irrational, so we
    over-estimate it by one trailing ulp of its truncated expansion.  Holes
    narrower than the returned value are narrower than the true threshold.
    """
    x_over = thue_morse_preimage(k, precision_digits) + Fraction(1, k ** precision_digits)
    return 1 - 2 * x_over


def _edge_gap(hole: Hole) -> Optional[Tuple[str, Fraction]]:
    # which outermost branch the hole stays strictly clear of, and by how much
    k = hole.k
    top_gap = Fraction(k - 1, k) - hole.b
    if top_gap > 0:
        return "upper", top_gap
    low_gap = hole.a - Fraction(1, k)
    if low_gap > 0:
        return "lower", low_gap
    return None


def _edge_run_certificate(hole: Hole, side: str, gap: Fraction,
                          tol: float) -> PositivityResult:
    """Embed a forced-run shift on two extreme digits beside the hole.

    With the hole strictly below (k-1)/k, sequences over {k-2, k-1} in which
    every k-2 is followed by run_length copies of k-1 have all orbit values
    at least (k-1)/k - k^-(run_length+1), which clears b for run_length large
    enough; the mirrored statement covers a > 1/k.  The embedded shift has
    positive entropy, so the dimension is positive.
    """
    k = hole.k
    run_length = 1
    while Fraction(1, k ** (run_length + 1)) > gap:
        run_length += 1
    shift = forced_run_subshift(k, run_length)
    rate = spectral_radius(shift.relation(), tol=tol)
    return PositivityResult(
        Positivity.POSITIVE,
        "edge-shift",
        {
            "side": side,
            "run_length": run_length,
            "growth_rate": rate,
            "dimension_floor": math.log(rate) / math.log(k),
        },
    )


def positivity(hole: Hole, depth_budget: int = 8,
               state_budget: int = DEFAULT_STATE_BUDGET,
               tol: float = DEFAULT_TOL) -> PositivityResult:
    """Certify that the survivor set has positive dimension, or decline.

    Dispatch, cheapest sound argument first:
      1. the hole strictly misses an outermost branch: embed a forced-run
         shift on the two extreme digits of that side ("edge-shift");
      2. strictly central hole narrower than the certified critical width:
         positive by the doubling-map threshold ("narrow-hole");
      3. search inner approximations up to depth_budget for a component with
         more edges than states, an exact witness of entropy ("inner-sft").
    Anything else is Undetermined; zero dimension is never asserted.
    """
    edge = _edge_gap(hole)
    if edge is not None:
        return _edge_run_certificate(hole, edge[0], edge[1], tol)
    if is_strictly_central(hole):
        threshold = narrow_hole_threshold(hole.k)
        if hole.width < threshold:
            return PositivityResult(
                Positivity.POSITIVE,
                "narrow-hole",
                {
                    "width": float(hole.width),
                    "width_threshold": float(threshold),
                },
            )
    for depth in range(1, depth_budget + 1):
        approx = build_approximation(hole, depth, Mode.INNER, state_budget)
        relation = approx.relation()
        if has_entropy_certificate(relation):
            src, _ = relation.edges()
            return PositivityResult(
                Positivity.POSITIVE,
                "inner-sft",
                {
                    "depth": depth,
                    "states": relation.num_states,
                    "edges": int(src.size),
                },
            )
    return PositivityResult(Positivity.UNDETERMINED, None, {"depth": depth_budget})


# === dimension estimation ===================================================

class Method(Enum):
    DIRECT = "direct"
    REDUCED = "reduced"
    BOTH = "both"


def _as_method(method) -> Method:
    return method if isinstance(method, Method) else Method(str(method).lower())


@dataclass(frozen=True)
class DimensionEstimate:
    hole: Hole
    lower: float
    upper: float
    positivity: PositivityResult
    methods: Tuple[str, ...]
    depth: int
    reduced_hole: Optional[Tuple[Fraction, Fraction]] = None


def _direct_bounds(hole: Hole, depth: int, state_budget: int,
                   tol: float) -> Tuple[float, float]:
    inner = build_approximation(hole, depth, Mode.INNER, state_budget)
    outer = build_approximation(hole, depth, Mode.OUTER, state_budget)
    return entropy_bounds(inner, outer, tol=tol).dimension_bounds(hole.k)


def estimate_dimension(hole: Hole, depth: int, method=Method.BOTH,
                       state_budget: int = DEFAULT_STATE_BUDGET,
                       tol: float = DEFAULT_TOL) -> DimensionEstimate:
    """Two-sided dimension bracket for the survivor set at one depth.

    Direct brackets the digit shift of the hole itself.  Reduced (strictly
    central holes only) brackets the doubling-map image and scales by
    log 2 / log k; requesting it elsewhere is an error, but Both quietly
    drops the reduced leg when the hypothesis fails.  Both intersects the
    two brackets.  The embedded full-shift bound, when available, floors the
    lower bound.  The positivity verdict is attached, computed at the same
    depth budget.
    """
    method = _as_method(method)
    central = is_strictly_central(hole)
    if method is Method.REDUCED and not central:
        raise ValueError("reduced estimation needs a strictly central hole")
    run_direct = method in (Method.DIRECT, Method.BOTH)
    run_reduced = method is Method.REDUCED or (method is Method.BOTH and central)

    lower, upper = 0.0, 1.0
    methods: List[str] = []
    reduced_pair: Optional[Tuple[Fraction, Fraction]] = None
    if run_direct:
        lo, hi = _direct_bounds(hole, depth, state_budget, tol)
        lower, upper = max(lower, lo), min(upper, hi)
        methods.append("inner-outer-sft")
    if run_reduced:
        ga, gb = reduce_to_doubling(hole)
        reduced_pair = (ga, gb)
        lo2, hi2 = _direct_bounds(Hole(2, ga, gb), depth, state_budget, tol)
        scale = math.log(2) / math.log(hole.k)
        lower, upper = max(lower, lo2 * scale), min(upper, hi2 * scale)
        methods.append("doubling-reduction")
    floor = full_shift_lower_bound(hole)
    if floor is not None and floor > lower:
        lower = floor
        methods.append("full-shift-floor")
    verdict = positivity(hole, depth_budget=depth, state_budget=state_budget, tol=tol)
    return DimensionEstimate(
        hole=hole,
        lower=lower,
        upper=upper,
        positivity=verdict,
        methods=tuple(methods),
        depth=depth,
        reduced_hole=reduced_pair,
    )
