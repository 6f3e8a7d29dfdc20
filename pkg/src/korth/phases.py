"""Exact dyadic phases: angles p*pi/2**(k-1) held as integers modulo 2**k.

No floating point is used anywhere; every angle comparison is a congruence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DimensionError, RangeError

__all__ = ["DyadicPhase", "DyadicPhaseVector"]


@dataclass(frozen=True, slots=True)
class DyadicPhase:
    """The angle numerator*pi/2**(k-1), stored in lowest terms.

    The numerator is reduced modulo 2**k and shared factors of two are
    cancelled, so equal angles compare equal regardless of how they were
    produced.  Zero is represented as (0, 1).
    """

    numerator: int
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise RangeError(f"denominator exponent must be >= 1, got {self.k}")
        num = self.numerator % (1 << self.k)
        k = self.k
        while num and num % 2 == 0 and k > 1:
            num //= 2
            k -= 1
        if num == 0:
            k = 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "k", k)

    def is_zero(self) -> bool:
        return self.numerator == 0

    def __str__(self) -> str:
        if self.numerator == 0:
            return "0"
        denom = 1 << (self.k - 1)
        num = "pi" if self.numerator == 1 else f"{self.numerator}pi"
        return num if denom == 1 else f"{num}/{denom}"


@dataclass(frozen=True, slots=True)
class DyadicPhaseVector:
    """Per-qubit phase exponents: qubit i receives P(p[i]*pi/2**(k-1))."""

    k: int
    p: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise RangeError(f"denominator exponent must be >= 1, got {self.k}")
        q = 1 << self.k
        object.__setattr__(self, "p", tuple(x % q for x in self.p))

    @classmethod
    def all_ones(cls, n: int, k: int) -> "DyadicPhaseVector":
        return cls(k, (1,) * n)

    @classmethod
    def zeros(cls, n: int, k: int) -> "DyadicPhaseVector":
        return cls(k, (0,) * n)

    @classmethod
    def from_list(cls, k: int, values: Iterable[int]) -> "DyadicPhaseVector":
        return cls(k, tuple(values))

    @property
    def n(self) -> int:
        return len(self.p)

    @property
    def modulus(self) -> int:
        return 1 << self.k

    def __len__(self) -> int:
        return len(self.p)

    def check_length(self, n: int) -> None:
        if len(self.p) != n:
            raise DimensionError(f"phase vector length {len(self.p)} != {n} qubits")

    def masked_sum(self, bits: int) -> int:
        """Sum of p[i] over the set bits of ``bits`` (plain integer sum)."""
        total = 0
        while bits:
            low = bits & -bits
            total += self.p[low.bit_length() - 1]
            bits ^= low
        return total
