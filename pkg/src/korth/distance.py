"""Exact CSS code distances by coset enumeration or weight-increasing search.

A Z-type logical is a null-space member of A_X outside the row space of A_Z
(and symmetrically for X-type).  The null space of the Z checks in the
sub-dual family is tiny while the X-check null space is huge, so each side
picks its strategy independently: enumerate the whole null space when its
dimension is small, otherwise search supports by increasing weight, which
stops at the first (hence minimum-weight) logical found.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidCodeError, RangeError
from .gf2 import BitMat, BitVec, null_space, rank, rref

__all__ = ["DistanceReport", "ThreeColumnCheck", "css_distances", "z_distance_floor"]

_COSET_HARD_LIMIT = 26


@dataclass(frozen=True, slots=True)
class DistanceReport:
    """Per-type minimum logical weights with re-checkable witnesses.

    ``exact_*`` is False only when a weight cap stopped the search early, in
    which case ``d_*`` is a lower bound (cap + 1) and the witness is absent.
    """

    d_z: int
    d_x: int
    witness_z: Optional[BitVec]
    witness_x: Optional[BitVec]
    method_z: str
    method_x: str
    exact_z: bool
    exact_x: bool


@dataclass(frozen=True, slots=True)
class ThreeColumnCheck:
    """Whether distinct nonzero columns force distance >= 3, plus a weight-3
    null triple when one exists (making the distance exactly 3)."""

    distance_at_least_3: bool
    triple: Optional[tuple[int, int, int]]


class _SpanReducer:
    """Reduce vectors against a fixed row space; zero residue = member."""

    def __init__(self, M: BitMat):
        reduced, pivots = rref(M)
        self.rows = reduced.row_ints()
        self.pivots = pivots

    def contains(self, bits: int) -> bool:
        for prow, pcol in zip(self.rows, self.pivots):
            if (bits >> pcol) & 1:
                bits ^= prow
        return bits == 0


def _min_logical_coset(
    check: BitMat, other: BitMat
) -> tuple[int, BitVec] | None:
    """Scan the whole null space of ``check``, skipping stabilizer members."""
    basis = null_space(check)
    reducer = _SpanReducer(other)
    rows = basis.row_ints()
    best_w = None
    best = None
    acc = 0
    for idx in range(1, 1 << len(rows)):
        acc ^= rows[(idx & -idx).bit_length() - 1]
        w = acc.bit_count()
        if (best_w is None or w < best_w) and not reducer.contains(acc):
            best_w = w
            best = acc
    if best_w is None:
        return None
    return best_w, BitVec(check.ncols, best)


def _min_logical_weight_search(
    check: BitMat, other: BitMat, cap: int
) -> tuple[int, BitVec] | None | tuple[None, None]:
    """Search supports of increasing weight; the first hit is the minimum.

    Returns (weight, witness), None when no logical exists at all, or
    (None, None) when the cap was exhausted without a hit.
    """
    n = check.ncols
    cols = check.column_ints()
    reducer = _SpanReducer(other)
    for w in range(1, min(cap, n) + 1):
        for support in itertools.combinations(range(n), w):
            syndrome = 0
            bits = 0
            for j in support:
                syndrome ^= cols[j]
                bits |= 1 << j
            if syndrome == 0 and not reducer.contains(bits):
                return w, BitVec(n, bits)
    if cap >= n:
        return None
    return None, None


def _one_side(
    check: BitMat,
    other: BitMat,
    strategy: str,
    coset_dim_limit: int,
    weight_cap: int | None,
) -> tuple[int, Optional[BitVec], str, bool]:
    dim = check.ncols - rank(check)
    if strategy == "auto":
        strategy = "coset" if dim <= coset_dim_limit else "weight"
    if strategy == "coset":
        if dim > _COSET_HARD_LIMIT:
            raise RangeError(
                f"coset enumeration over a {dim}-dimensional null space exceeds "
                f"the 2**{_COSET_HARD_LIMIT} ceiling; use the weight strategy"
            )
        found = _min_logical_coset(check, other)
        if found is None:
            raise InvalidCodeError("no logical operator of this type exists")
        return found[0], found[1], "coset", True
    if strategy != "weight":
        raise RangeError(f"unknown strategy {strategy!r}")
    cap = check.ncols if weight_cap is None else weight_cap
    found = _min_logical_weight_search(check, other, cap)
    if found is None:
        raise InvalidCodeError("no logical operator of this type exists")
    if found == (None, None):
        return cap + 1, None, "weight", False
    return found[0], found[1], "weight", True


def css_distances(
    a_x: BitMat,
    a_z: BitMat,
    r: BitVec | None = None,
    s: BitVec | None = None,
    strategy: str = "auto",
    coset_dim_limit: int = 16,
    weight_cap: int | None = None,
) -> DistanceReport:
    """Exact minimum-weight Z-type and X-type logicals of a CSS pair.

    ``r`` and ``s`` are accepted for interface symmetry and witness sanity
    checks but the search itself only needs the two check blocks.  Each side
    auto-selects coset enumeration when its null-space dimension is at most
    ``coset_dim_limit``, else the capped weight-increasing search.
    """
    if a_x.ncols != a_z.ncols:
        raise InvalidCodeError("check blocks have different widths")
    for c in a_z.rows:
        for a in a_x.rows:
            if c.dot_parity(a):
                raise InvalidCodeError("A_Z is not orthogonal to A_X; not a CSS pair")
    d_z, wit_z, method_z, exact_z = _one_side(
        a_x, a_z, strategy, coset_dim_limit, weight_cap
    )
    d_x, wit_x, method_x, exact_x = _one_side(
        a_z, a_x, strategy, coset_dim_limit, weight_cap
    )
    for wit, check, other in ((wit_z, a_x, a_z), (wit_x, a_z, a_x)):
        if wit is None:
            continue
        if any(wit.dot_parity(row) for row in check.rows):
            raise AssertionError("distance witness fails the null-space check")
        if _SpanReducer(other).contains(wit.bits):
            raise AssertionError("distance witness is a stabilizer")
    return DistanceReport(
        d_z=d_z, d_x=d_x,
        witness_z=wit_z, witness_x=wit_x,
        method_z=method_z, method_x=method_x,
        exact_z=exact_z, exact_x=exact_x,
    )


def z_distance_floor(a_x: BitMat) -> ThreeColumnCheck:
    """Confirm distinct nonzero columns (distance >= 3 against single- and
    double-qubit phase errors) and exhibit a trivial three-column sum.

    The triple, when present, pins the Z distance to exactly 3; it is the
    lexicographically first one.
    """
    cols = a_x.column_ints()
    if 0 in cols or len(set(cols)) != len(cols):
        return ThreeColumnCheck(False, None)
    index_of = {}
    for j, c in enumerate(cols):
        index_of.setdefault(c, j)
    for i, j in itertools.combinations(range(len(cols)), 2):
        t = cols[i] ^ cols[j]
        k = index_of.get(t)
        if k is not None and k > j:
            return ThreeColumnCheck(True, (i, j, k))
    return ThreeColumnCheck(True, None)
