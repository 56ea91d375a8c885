"""Exact arithmetic on finite Lukasiewicz chains with the square operator.

The chain with n+1 elements lives on {0, 1/n, ..., (n-1)/n, 1}. Elements are
stored as integer numerators over the ambient denominator n; no floats
anywhere. Everything here is immutable and pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class MixedChains(ValueError):
    """Two elements of different chains were combined."""


@dataclass(frozen=True, order=False)
class ChainElem:
    """k/n inside the (n+1)-element chain, kept in ambient form (2/4 stays 2/4)."""

    num: int
    den: int

    def __post_init__(self):
        if not (self.den >= 1 and 0 <= self.num <= self.den):
            raise ValueError(f"numerator {self.num} out of range for denominator {self.den}")

    def _same(self, other: "ChainElem") -> None:
        if not isinstance(other, ChainElem):
            raise TypeError(f"expected ChainElem, got {type(other).__name__}")
        if self.den != other.den:
            raise MixedChains(f"cannot mix {self} with {other}")

    # Order is by numerator; comparisons across chains are a contract violation.
    def __lt__(self, other):
        self._same(other)
        return self.num < other.num

    def __le__(self, other):
        self._same(other)
        return self.num <= other.num

    def __gt__(self, other):
        self._same(other)
        return self.num > other.num

    def __ge__(self, other):
        self._same(other)
        return self.num >= other.num

    def __str__(self):
        if self.num == 0:
            return "0"
        if self.num == self.den:
            return "1"
        return f"{self.num}/{self.den}"

    def __repr__(self):
        return f"ChainElem({self.num}/{self.den})"

    @property
    def value(self) -> Fraction:
        return Fraction(self.num, self.den)

    def is_positive(self) -> bool:
        """x > 1-x, i.e. x lies strictly above 1/2."""
        return 2 * self.num > self.den

    def is_bound(self) -> bool:
        return self.num == 0 or self.num == self.den

    def neg(self) -> "ChainElem":
        """Involutive negation 1 - x."""
        return ChainElem(self.den - self.num, self.den)

    def star(self) -> "ChainElem":
        """Square x (.) x = max(0, 2x - 1)."""
        return ChainElem(max(0, 2 * self.num - self.den), self.den)

    def plus(self) -> "ChainElem":
        """Double, the neg-dual of star: min(1, 2x)."""
        return ChainElem(min(self.den, 2 * self.num), self.den)

    def baaz(self) -> "ChainElem":
        """Indicator of 1 (equals star iterated n times)."""
        return ChainElem(self.den if self.num == self.den else 0, self.den)

    def join(self, other: "ChainElem") -> "ChainElem":
        self._same(other)
        return self if self.num >= other.num else other

    def meet(self, other: "ChainElem") -> "ChainElem":
        self._same(other)
        return self if self.num <= other.num else other

    def luk_imp(self, other: "ChainElem") -> "ChainElem":
        """min(1, 1 - x + y)."""
        self._same(other)
        return ChainElem(min(self.den, self.den - self.num + other.num), self.den)

    def luk_conj(self, other: "ChainElem") -> "ChainElem":
        """max(0, x + y - 1)."""
        self._same(other)
        return ChainElem(max(0, self.num + other.num - self.den), self.den)

    def oplus(self, other: "ChainElem") -> "ChainElem":
        """min(1, x + y)."""
        self._same(other)
        return ChainElem(min(self.den, self.num + other.num), self.den)

    def goedel_imp(self, other: "ChainElem") -> "ChainElem":
        """1 if x <= y, else y."""
        self._same(other)
        return ChainElem(self.den, self.den) if self.num <= other.num else other

    def crisp_imp(self, other: "ChainElem") -> "ChainElem":
        """1 if x <= y, else 0."""
        self._same(other)
        return ChainElem(self.den if self.num <= other.num else 0, self.den)


@lru_cache(maxsize=None)
def _universe(n: int) -> tuple:
    return tuple(ChainElem(k, n) for k in range(n + 1))


@dataclass(frozen=True)
class Chain:
    """The (n+1)-element chain under join, square and involutive negation."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("chain parameter n must be >= 1")

    def __str__(self):
        return f"L*_{self.n + 1}"

    def elem(self, num: int) -> ChainElem:
        return ChainElem(num, self.n)

    @property
    def ambient_n(self) -> int:
        return self.n

    @property
    def universe(self) -> tuple:
        return _universe(self.n)

    @property
    def bottom(self) -> ChainElem:
        return ChainElem(0, self.n)

    @property
    def top(self) -> ChainElem:
        return ChainElem(self.n, self.n)

    def coatom(self) -> ChainElem:
        return ChainElem(self.n - 1, self.n)

    def atom(self) -> ChainElem:
        return ChainElem(1, self.n)

    def contains(self, x: ChainElem) -> bool:
        return x.den == self.n

    # Structure protocol shared with Subalgebra and AbstractIGChain.
    def star(self, x: ChainElem) -> ChainElem:
        assert x.den == self.n
        return x.star()

    def inv(self, x: ChainElem) -> ChainElem:
        assert x.den == self.n
        return x.neg()

    def plus(self, x: ChainElem) -> ChainElem:
        assert x.den == self.n
        return x.plus()

    def is_positive(self, x: ChainElem) -> bool:
        assert x.den == self.n
        return x.is_positive()
