"""Exact base-d digit arithmetic on [0, oo).

Numbers with terminating base-d expansions, carry-free digitwise addition
mod d, d-adic intervals, and the character pairing that plays the role of
e^{2 pi i x xi} in this model.  Everything is integer-exact; floating point
enters only through the final root-of-unity lookup in ``character``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np


class RadixMismatchError(ValueError):
    """Operands live over different radices."""


@lru_cache(maxsize=None)
def unit_roots(d: int) -> np.ndarray:
    """exp(2 pi i s/d) for s = 0..d-1, computed once per radix.

    Every phase in the package is looked up here from an integer exponent
    mod d, so equal exponents give bit-identical complex values.
    """
    roots = np.exp(2j * np.pi * np.arange(d) / d)
    roots.flags.writeable = False
    return roots


def _check_radix(d) -> None:
    if isinstance(d, bool) or int(d) != d or d < 2:
        raise ValueError(f"radix must be an integer >= 2, got {d!r}")


@dataclass(frozen=True)
class DadicRational:
    """Nonnegative value numerator * d**(-scale) with finitely many digits.

    The representation is canonical: either scale == 0 or the numerator is
    not divisible by d.  Only terminating expansions exist here, so digit
    sequences are unambiguous.
    """

    d: int
    numerator: int
    scale: int

    def __post_init__(self):
        _check_radix(self.d)
        if self.numerator < 0 or self.scale < 0:
            raise ValueError("numerator and scale must be nonnegative")
        num, sc = int(self.numerator), int(self.scale)
        while sc > 0 and num % self.d == 0:
            num //= self.d
            sc -= 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "scale", sc)

    @classmethod
    def zero(cls, d: int) -> "DadicRational":
        return cls(d, 0, 0)

    @classmethod
    def integer(cls, d: int, n: int) -> "DadicRational":
        return cls(d, n, 0)

    @classmethod
    def scaled(cls, d: int, k: int, exponent: int) -> "DadicRational":
        """The point k * d**exponent, exponent of either sign."""
        if k < 0:
            raise ValueError("points are nonnegative")
        if exponent >= 0:
            return cls(d, k * d**exponent, 0)
        return cls(d, k, -exponent)

    def digit(self, n: int) -> int:
        """Base-d digit at position n, i.e. the coefficient of d**n."""
        k = n + self.scale
        if k < 0:
            return 0
        return (self.numerator // self.d**k) % self.d

    @property
    def is_zero(self) -> bool:
        return self.numerator == 0

    @property
    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.d**self.scale)

    def __float__(self) -> float:
        return self.numerator / self.d**self.scale

    def _align(self, other: "DadicRational") -> tuple[int, int]:
        if not isinstance(other, DadicRational):
            raise TypeError("expected a DadicRational")
        if other.d != self.d:
            raise RadixMismatchError(f"radix {self.d} vs {other.d}")
        s = max(self.scale, other.scale)
        return (
            self.numerator * self.d ** (s - self.scale),
            other.numerator * self.d ** (s - other.scale),
        )

    def __lt__(self, other):
        a, b = self._align(other)
        return a < b

    def __le__(self, other):
        a, b = self._align(other)
        return a <= b


def group_add(x: DadicRational, y: DadicRational) -> DadicRational:
    """Digitwise sum mod d with no carries (the group law on digit strings)."""
    nx, ny = x._align(y)
    d = x.d
    s = max(x.scale, y.scale)
    out, place = 0, 1
    while nx or ny:
        out += ((nx % d + ny % d) % d) * place
        nx //= d
        ny //= d
        place *= d
    return DadicRational(d, out, s)


def character(x: DadicRational, xi: DadicRational) -> complex:
    """Pairing exp((2 pi i/d) * sum_n x_n xi_{-1-n}) between digit strings.

    The digit sum is accumulated as an integer and reduced mod d before the
    single root-of-unity lookup, so phases are bit-stable.
    """
    if x.d != xi.d:
        raise RadixMismatchError(f"radix {x.d} vs {xi.d}")
    d = x.d
    s = 0
    # x_n vanishes below -x.scale and xi_{-1-n} vanishes for n >= xi.scale.
    for n in range(-x.scale, xi.scale):
        s += x.digit(n) * xi.digit(-1 - n)
    return complex(unit_roots(d)[s % d])


@dataclass(frozen=True)
class DadicInterval:
    """The half-open interval [index * d**exponent, (index+1) * d**exponent)."""

    d: int
    exponent: int
    index: int

    def __post_init__(self):
        _check_radix(self.d)
        if self.index < 0:
            raise ValueError("index must be nonnegative")

    @property
    def left(self) -> DadicRational:
        return DadicRational.scaled(self.d, self.index, self.exponent)

    @property
    def right(self) -> DadicRational:
        return DadicRational.scaled(self.d, self.index + 1, self.exponent)

    @property
    def length(self) -> Fraction:
        return Fraction(self.d) ** self.exponent

    def children(self) -> list["DadicInterval"]:
        return [
            DadicInterval(self.d, self.exponent - 1, self.index * self.d + j)
            for j in range(self.d)
        ]

    def contains(self, x: DadicRational) -> bool:
        if x.d != self.d:
            raise RadixMismatchError(f"radix {self.d} vs {x.d}")
        return self.left.as_fraction <= x.as_fraction < self.right.as_fraction


def refine_interval(interval: DadicInterval) -> list[DadicInterval]:
    """The d congruent children of a d-adic interval, in increasing order."""
    return interval.children()


@dataclass(frozen=True)
class Tile:
    """Phase-plane rectangle time x freq with |time| * |freq| = 1."""

    time: DadicInterval
    freq: DadicInterval

    def __post_init__(self):
        if self.time.d != self.freq.d:
            raise RadixMismatchError("tile sides must share a radix")
        if self.time.exponent + self.freq.exponent != 0:
            raise ValueError("tile area must be 1 (exponents must cancel)")
