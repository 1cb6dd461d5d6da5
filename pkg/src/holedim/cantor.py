"""The base-k Cantor set of {0, k-1} expansions and its staircase conjugacy.

C_k is the set of points in [0,1] with a base-k expansion using only the
digits 0 and k-1.  The staircase function collapses each digit to a binary one
(0 or 1), mapping C_k onto [0,1] and conjugating x -> kx mod 1 on C_k to the
doubling map; it is constant on the closure of each removed gap.  All
evaluation is exact on rationals via remainder-cycle detection, so runtime is
proportional to the expansion's preperiod plus period.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .symbolic import Word, as_fraction, thue_morse_digits, word_value, _check_base


def _check_unit_interval(x: Fraction) -> None:
    if not 0 <= x <= 1:
        raise ValueError(f"expected 0 <= x <= 1, got {x}")


def in_cantor_set(x, k: int) -> bool:
    """True iff x in [0,1] has some base-k expansion over the digits {0, k-1}."""
    _check_base(k)
    x = as_fraction(x)
    _check_unit_interval(x)
    if x == 1:
        return True  # expansion (k-1)^inf
    top = k - 1
    seen = set()
    r = x
    while r not in seen:
        seen.add(r)
        d = int(r * k)
        r = r * k - d
        if d != 0 and d != top:
            # the only alternative expansion swaps a terminating ...d 0^inf
            # for ...(d-1) (k-1)^inf, so d=1 with a zero tail still qualifies
            return d == 1 and r == 0
    return True


def cantor_function(x, k: int) -> Fraction:
    """The staircase value g(x): binary-collapse the expansion of x.

    With digits a_1 a_2 ... of x, let N be the first index where a_N is
    neither 0 nor k-1.  The value is sum_{n<N} [a_n = k-1] 2^-n + 2^-N, or the
    full collapsed binary value when no such N exists.  Both expansions of a
    k-adic point give the same value, so g is well defined on [0,1].
    """
    _check_base(k)
    x = as_fraction(x)
    _check_unit_interval(x)
    if x == 1:
        return Fraction(1)
    top = k - 1
    seen = {}
    bits = 0  # binary prefix, accumulated as an integer
    n = 0
    r = x
    while r not in seen:
        seen[r] = n
        d = int(r * k)
        r = r * k - d
        if d != 0 and d != top:
            return Fraction(bits, 1 << n) + Fraction(1, 1 << (n + 1))
        bits = (bits << 1) | (1 if d == top else 0)
        n += 1
    s = seen[r]  # preperiod length; the last n - s bits repeat forever
    p = n - s
    cycle = bits & ((1 << p) - 1)
    head = bits >> p
    return Fraction(head, 1 << s) + Fraction(cycle, ((1 << p) - 1) << s)


def cantor_function_inverse(y, k: int) -> Fraction:
    """The point of C_k whose staircase value is y, taken with binary 0-tails.

    Dyadic y have two binary expansions; the terminating one is used, which
    selects the right endpoint of the staircase's plateau at y.  The full
    preimage set is recoverable via plateau_of on the returned point.
    """
    _check_base(k)
    y = as_fraction(y)
    _check_unit_interval(y)
    if y == 1:
        return Fraction(1)
    top = k - 1
    seen = {}
    acc = 0  # base-k prefix with digits (k-1)*b_n, as an integer
    n = 0
    r = y
    while r not in seen:
        seen[r] = n
        b = int(r * 2)
        r = r * 2 - b
        acc = acc * k + top * b
        n += 1
    s = seen[r]
    p = n - s
    kp = k ** p
    cycle = acc % kp
    head = acc // kp
    return Fraction(head, k ** s) + Fraction(cycle, (kp - 1) * k ** s)


def thue_morse_preimage(k: int, precision_digits: int) -> Fraction:
    """Partial sum of the C_k point whose staircase value is the Thue-Morse
    constant: sum_n (k-1) t_n k^-(n+1) over the first precision_digits terms.

    A lower approximant; the truncation error is strictly below
    k^-precision_digits.
    """
    _check_base(k)
    t = thue_morse_digits(precision_digits)
    acc = 0
    for b in t.digits:
        acc = acc * k + (k - 1) * b
    return Fraction(acc, k ** precision_digits)


@dataclass(frozen=True)
class PlateauInterval:
    """Closure [left, right] of one removed gap, tagged by its {0,k-1} prefix."""

    prefix: Word
    left: Fraction
    right: Fraction

    @property
    def height(self) -> Fraction:
        """The constant staircase value on this plateau."""
        n = len(self.prefix)
        bits = 0
        for d in self.prefix.digits:
            bits = (bits << 1) | (1 if d == self.prefix.base - 1 else 0)
        return Fraction(bits, 1 << n) + Fraction(1, 1 << (n + 1))


def plateau_of(x, k: int) -> Optional[PlateauInterval]:
    """The plateau whose closed interval contains x, or None.

    Gap endpoints belong to C_k and to their gap's closure; they report the
    plateau, so callers can recover the full staircase preimage of a dyadic
    value.  None means x lies in C_k away from every gap.
    """
    _check_base(k)
    x = as_fraction(x)
    _check_unit_interval(x)
    if x == 1:
        return None
    top = k - 1
    lo = Fraction(1, k)
    hi = Fraction(top, k)
    seen = set()
    prefix = []
    r = x
    while r not in seen:
        seen.add(r)
        if lo <= r <= hi:
            base_val = x - r / k ** len(prefix)  # value of the consumed prefix
            n1 = k ** (len(prefix) + 1)
            return PlateauInterval(
                Word(k, tuple(prefix)),
                base_val + Fraction(1, n1),
                base_val + Fraction(top, n1),
            )
        d = int(r * k)
        r = r * k - d
        # outside [1/k, (k-1)/k] the digit is forced to an extreme
        assert d == 0 or d == top
        prefix.append(d)
    return None


def to_binary_word(word: Word) -> Word:
    """Collapse a {0, k-1} digit word to the binary word of its staircase image."""
    top = word.base - 1
    bits = []
    for d in word.digits:
        if d != 0 and d != top:
            raise ValueError(f"digit {d} is not 0 or {top}; word is not in C_k")
        bits.append(1 if d == top else 0)
    return Word(2, tuple(bits))


@dataclass(frozen=True)
class CantorPoint:
    """A point of C_k given by its collapsed binary digits, b = head (cycle)^inf."""

    base: int
    head: Tuple[int, ...]
    cycle: Tuple[int, ...]

    def __post_init__(self) -> None:
        _check_base(self.base)
        for b in self.head + self.cycle:
            if b not in (0, 1):
                raise ValueError("collapsed digits must be 0 or 1")

    def value(self) -> Fraction:
        k = self.base
        top = k - 1
        acc = 0
        for b in self.head:
            acc = acc * k + top * b
        v = Fraction(acc, k ** len(self.head))
        if self.cycle:
            c = 0
            for b in self.cycle:
                c = c * k + top * b
            p = len(self.cycle)
            v += Fraction(c, (k ** p - 1) * k ** len(self.head))
        return v

    def staircase_value(self) -> Fraction:
        return cantor_function(self.value(), self.base)


def _word_prefix_value(word: Word) -> Fraction:
    # convenience for tests: exact left endpoint of the word's cylinder
    return word_value(word)
