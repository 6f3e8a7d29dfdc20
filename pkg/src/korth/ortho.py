"""k-orthogonality certification and the column-isolation transform.

A check matrix is k-orthogonal when every AND-product of up to k elements of
its row span has even weight.  By parity multilinearity this is equivalent to
checking only the t-subsets of generator rows for t = 1..k, which is what the
production path does; the span-level equivalence is covered by property tests.
The optional restriction vector counts weight only on its support.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import NoSyndromeError, RangeError
from .gf2 import BitMat, BitVec

__all__ = [
    "OrthogonalityWitness",
    "OrthogonalityReport",
    "is_k_orthogonal",
    "max_orthogonality",
    "isolate_column",
]


@dataclass(frozen=True, slots=True)
class OrthogonalityWitness:
    """A failing product: AND of the given rows has odd restricted weight."""

    t: int
    rows: tuple[int, ...]
    restriction: BitVec


@dataclass(frozen=True, slots=True)
class OrthogonalityReport:
    level: int
    holds: bool
    witness: Optional[OrthogonalityWitness] = None


def is_k_orthogonal(a_x: BitMat, k: int, r: BitVec | None = None) -> OrthogonalityReport:
    """Check k-orthogonality of ``a_x``, optionally restricted to support ``r``.

    Returns a report whose witness, when present, is the first failing row
    subset in (t, lexicographic) order.
    """
    if k < 1:
        raise RangeError(f"orthogonality level must be >= 1, got {k}")
    if r is None:
        r = BitVec.ones(a_x.ncols)
    elif r.n != a_x.ncols:
        raise RangeError(f"restriction length {r.n} != column count {a_x.ncols}")
    rows = a_x.row_ints()
    rbits = r.bits
    for t in range(1, min(k, len(rows)) + 1):
        for subset in combinations(range(len(rows)), t):
            acc = rbits
            for i in subset:
                acc &= rows[i]
            if acc.bit_count() & 1:
                return OrthogonalityReport(
                    k, False, OrthogonalityWitness(t, subset, r)
                )
    return OrthogonalityReport(k, True)


def max_orthogonality(a_x: BitMat) -> int:
    """Largest level at which ``a_x`` certifies as k-orthogonal, capped at
    the row count (subset checks above it are vacuous)."""
    best = 0
    for k in range(1, a_x.nrows + 1):
        if not is_k_orthogonal(a_x, k).holds:
            break
        best = k
    return best


def isolate_column(a_x: BitMat, q: int) -> BitMat:
    """Row-equivalent matrix in which column ``q`` (0-based) is all ones.

    Picks the first row with a 1 at ``q`` and adds it to every row with a 0
    there; the row space is unchanged.  On a matrix with distinct columns the
    AND of all output rows is the indicator of column ``q``.
    """
    if not 0 <= q < a_x.ncols:
        raise RangeError(f"column {q} out of range for {a_x.ncols} columns")
    mask = 1 << q
    rows = a_x.row_ints()
    pivot = next((r for r in rows if r & mask), None)
    if pivot is None:
        raise NoSyndromeError(
            f"column {q} is all-zero: a phase-type error there has no syndrome"
        )
    return BitMat.from_ints(
        a_x.ncols, [r if r & mask else r ^ pivot for r in rows]
    )
