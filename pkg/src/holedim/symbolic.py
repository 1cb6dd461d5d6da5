"""Digit-level machinery for the expanding map x -> kx mod 1.

Points in [0,1) are handled through their base-k digit expansions, with the
convention that an expansion never ends in an infinite tail of the top digit
k-1 (k-adic rationals take the terminating form).  Everything is exact: inputs
are rationals, outputs are rationals or digit words.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Tuple


def as_fraction(value) -> Fraction:
    """Coerce an exact input (Fraction, int, or string) to Fraction.

    Floats are rejected: a binary float silently misrepresents decimal input,
    and every comparison downstream is exact.
    """
    if isinstance(value, bool):
        raise TypeError("expected an exact rational, got a bool")
    if isinstance(value, float):
        raise TypeError(
            "floats are not accepted; pass a Fraction, an int, or a string "
            "like '1/3' or '0.32'"
        )
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _check_base(k: int) -> None:
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise ValueError(f"base must be an integer >= 2, got {k!r}")


@dataclass(frozen=True)
class Word:
    """A finite digit word over the alphabet {0, ..., base-1}."""

    base: int
    digits: Tuple[int, ...]

    def __post_init__(self) -> None:
        _check_base(self.base)
        object.__setattr__(self, "digits", tuple(self.digits))
        for d in self.digits:
            if not isinstance(d, int) or d < 0 or d >= self.base:
                raise ValueError(f"digit {d!r} out of range for base {self.base}")

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)


def word_value(word: Word) -> Fraction:
    """Value of word as the left endpoint sum_i d_i k^-i."""
    acc = 0
    for d in word.digits:
        acc = acc * word.base + d
    return Fraction(acc, word.base ** len(word.digits))


def word_from_digits(digits: Iterable[int], k: int) -> Word:
    return Word(k, tuple(digits))


def k_expansion(x, k: int, n: int) -> Word:
    """First n digits of the base-k expansion of x in [0,1).

    Greedy digit extraction, so k-adic points come out with the terminating
    (all-zero tail) expansion, never the (k-1)^inf form.  The returned prefix w
    satisfies value(w) <= x < value(w) + k^-n.
    """
    _check_base(k)
    x = as_fraction(x)
    if not 0 <= x < 1:
        raise ValueError(f"expected 0 <= x < 1, got {x}")
    if n < 0:
        raise ValueError("digit count must be nonnegative")
    digits = []
    r = x
    for _ in range(n):
        r *= k
        d = int(r)  # floor: r is in [0, k)
        digits.append(d)
        r -= d
    return Word(k, tuple(digits))


@dataclass(frozen=True)
class KExpansionPrefix:
    """A finite expansion prefix plus whether it is the whole point.

    exact_tail_zero is True when the represented point equals value(word)
    exactly, i.e. the expansion continues with 0^inf.
    """

    word: Word
    exact_tail_zero: bool

    @classmethod
    def from_point(cls, x, k: int, n: int) -> "KExpansionPrefix":
        w = k_expansion(x, k, n)
        return cls(w, word_value(w) == as_fraction(x))


def cylinder(word: Word) -> Tuple[Fraction, Fraction]:
    """Half-open interval [left, right) of points whose expansion starts with word."""
    left = word_value(word)
    return left, left + Fraction(1, word.base ** len(word.digits))


def is_k_adic(x, k: int) -> bool:
    """True iff x is l/k^m for some integers l, m (the two-expansion points)."""
    _check_base(k)
    x = as_fraction(x)
    q = x.denominator
    g = gcd(q, k)
    while g > 1:
        while q % g == 0:
            q //= g
        g = gcd(q, k)
    return q == 1


def reflect_word(word: Word) -> Word:
    """Digit-wise reflection d -> k-1-d (the symmetry x -> 1-x on words)."""
    k = word.base
    return Word(k, tuple(k - 1 - d for d in word.digits))


def k_transform(x, k: int) -> Fraction:
    """One step of the map x -> kx mod 1, exactly."""
    _check_base(k)
    x = as_fraction(x)
    if not 0 <= x < 1:
        raise ValueError(f"expected 0 <= x < 1, got {x}")
    y = x * k
    return y - int(y)


def thue_morse_digits(n: int) -> Word:
    """First n digits of the Thue-Morse sequence t (t_0 = 0, bit-parity rule)."""
    if n < 0:
        raise ValueError("digit count must be nonnegative")
    return Word(2, tuple(m.bit_count() & 1 for m in range(n)))


def thue_morse_constant(precision_bits: int) -> Fraction:
    """Partial sum of sum_m t_m 2^-(m+1), a lower approximant of the limit.

    The truncation error is below 2^-precision_bits.
    """
    t = thue_morse_digits(precision_bits)
    acc = 0
    for d in t.digits:
        acc = 2 * acc + d
    return Fraction(acc, 2 ** precision_bits)
