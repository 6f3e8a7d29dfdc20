"""Exhaustive minimality search for k-orthogonal check matrices.

Candidates at (m, n) are the n-subsets of the 2**m - 1 nonzero column
values (distinct nonzero columns for free) that have full row rank.  The
fast path folds a precomputed per-column parity table: one bit per row
subset T with |T| <= k, set when T lies inside the column's support, so a
candidate is k-orthogonal exactly when the XOR of its column entries is
zero.  Boxes small enough to afford per-candidate rank counting take a slow
path over :func:`enumerate_candidates` instead; both paths visit every
subset, and any hit is re-verified before it is reported as a witness.

Work inside a fast box is partitioned by leading column index into
independent chunks; with ``workers > 1`` the chunks run in a process pool
and are merged deterministically.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .errors import RangeError
from .gf2 import BitMat, rank
from .ortho import is_k_orthogonal

__all__ = [
    "SearchSpace",
    "SearchWitness",
    "BoxResult",
    "SearchReport",
    "subset_parity_table",
    "enumerate_candidates",
    "minimality_search",
]

_SLOW_PATH_LIMIT = 200_000


@dataclass(frozen=True, slots=True)
class SearchSpace:
    """Parameter boxes to scan: row counts in ``m_range``, columns up to
    ``n_max``, with optional wall-clock or subset budgets."""

    k: int
    m_range: tuple[int, ...]
    n_max: int
    budget_seconds: Optional[float] = None
    budget_subsets: Optional[int] = None

    def __post_init__(self):
        if self.k < 1:
            raise RangeError(f"orthogonality level must be >= 1, got {self.k}")
        if self.n_max < 1:
            raise RangeError(f"n_max must be >= 1, got {self.n_max}")


@dataclass(frozen=True, slots=True)
class SearchWitness:
    """A full-rank k-orthogonal candidate (would refute minimality)."""

    m: int
    n: int
    columns: tuple[int, ...]

    def matrix(self) -> BitMat:
        return _matrix_from_columns(self.m, self.columns)


@dataclass(frozen=True, slots=True)
class BoxResult:
    m: int
    n: int
    subsets: int = 0
    candidates: Optional[int] = None
    hits: int = 0
    witnesses: tuple[SearchWitness, ...] = ()
    complete: bool = True
    skipped: Optional[str] = None
    mode: str = "fast"


@dataclass(frozen=True, slots=True)
class SearchReport:
    k: int
    prune: str
    boxes: tuple[BoxResult, ...]
    elapsed_seconds: float
    notes: tuple[str, ...] = ()

    @property
    def witnesses(self) -> tuple[SearchWitness, ...]:
        return tuple(w for b in self.boxes for w in b.witnesses)

    @property
    def complete(self) -> bool:
        return all(b.complete for b in self.boxes)

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "k": self.k,
            "prune": self.prune,
            "complete": self.complete,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
            "notes": list(self.notes),
            "witnesses": [
                {
                    "m": w.m,
                    "n": w.n,
                    "columns": list(w.columns),
                    "rows": [str(r) for r in w.matrix().rows],
                }
                for w in self.witnesses
            ],
            "boxes": [
                {
                    "m": b.m,
                    "n": b.n,
                    "subsets": b.subsets,
                    "candidates": b.candidates,
                    "hits": b.hits,
                    "witnesses": len(b.witnesses),
                    "complete": b.complete,
                    "skipped": b.skipped,
                    "mode": b.mode,
                }
                for b in self.boxes
            ],
        }


def _matrix_from_columns(m: int, cols: tuple[int, ...]) -> BitMat:
    rows = [
        sum(((col >> i) & 1) << j for j, col in enumerate(cols))
        for i in range(m)
    ]
    return BitMat.from_ints(len(cols), rows)


def subset_parity_table(m: int, k: int) -> list[int]:
    """Per-column-value parity fingerprints for the fast k-orthogonality scan.

    Entry v packs one bit per nonempty row subset T with |T| <= k, set when
    T is contained in the support of v; a column multiset is k-orthogonal
    iff its fingerprints XOR to zero.
    """
    subs = [T for t in range(1, k + 1) for T in combinations(range(m), t)]
    table = []
    for v in range(1 << m):
        fp = 0
        for bit, T in enumerate(subs):
            if all((v >> i) & 1 for i in T):
                fp |= 1 << bit
        table.append(fp)
    return table


def enumerate_candidates(m: int, n: int) -> Iterator[BitMat]:
    """All full-rank m x n matrices with n distinct nonzero columns, as
    ascending combinations of the column values 1..2**m-1."""
    if m > n:
        return
    for cols in combinations(range(1, 1 << m), n):
        mat = _matrix_from_columns(m, cols)
        if rank(mat) == m:
            yield mat


def _scan_range(
    values: list[int],
    fps: list[int],
    n: int,
    chunk_indices: list[int],
    base: tuple[int, ...],
    base_acc: int,
    deadline: Optional[float],
) -> tuple[int, list[tuple[int, ...]], bool]:
    """Scan the subsets whose first free column index is in ``chunk_indices``.

    Every subset extends ``base`` (already-fixed columns).  Returns the
    visited count, the fingerprint hits, and whether the range completed
    before the deadline.
    """
    length = len(values)
    hits: list[tuple[int, ...]] = []
    visited = 0
    chosen: list[int] = list(base)

    def rec(start: int, depth: int, acc: int) -> bool:
        nonlocal visited
        if depth == n - 1:
            count = length - start
            visited += count
            for i in range(start, length):
                if acc == fps[i]:
                    hits.append(tuple(chosen) + (values[i],))
            return deadline is None or time.monotonic() <= deadline
        for i in range(start, length - (n - depth) + 1):
            chosen.append(values[i])
            ok = rec(i + 1, depth + 1, acc ^ fps[i])
            chosen.pop()
            if not ok:
                return False
        return True

    if n == 0:
        if base_acc == 0:
            hits.append(tuple(base))
        return 1, hits, True
    complete = True
    for i0 in chunk_indices:
        if n == 1:
            visited += 1
            if base_acc == fps[i0]:
                hits.append(tuple(base) + (values[i0],))
            continue
        chosen.append(values[i0])
        ok = rec(i0 + 1, 1, base_acc ^ fps[i0])
        chosen.pop()
        if not ok:
            complete = False
            break
    return visited, hits, complete


def _chunk_task(payload) -> tuple[int, list[tuple[int, ...]], bool]:
    values, fps, n, chunk_indices, base, base_acc, deadline = payload
    return _scan_range(values, fps, n, chunk_indices, base, base_acc, deadline)


def _scan_fast(
    values: list[int],
    table: list[int],
    n: int,
    budget: "_Budget",
    base: tuple[int, ...] = (),
    base_acc: int = 0,
    workers: int = 1,
) -> tuple[int, list[tuple[int, ...]], bool]:
    fps = [table[v] for v in values]
    if n == 0:
        visited, hits, _ = _scan_range(values, fps, 0, [], base, base_acc, None)
        return visited, hits, budget.charge(visited)
    leading = list(range(len(values) - n + 1))
    if workers <= 1 or len(leading) < 2:
        visited, hits, complete = _scan_range(
            values, fps, n, leading, base, base_acc, budget.deadline
        )
        return visited, hits, budget.charge(visited) and complete
    # Round-robin the leading indices so chunk costs balance.
    chunks = [leading[w::workers] for w in range(workers)]
    payloads = [
        (values, fps, n, chunk, base, base_acc, budget.deadline)
        for chunk in chunks if chunk
    ]
    visited = 0
    hits: list[tuple[int, ...]] = []
    complete = True
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part_visited, part_hits, part_complete in pool.map(_chunk_task, payloads):
            visited += part_visited
            hits.extend(part_hits)
            complete = complete and part_complete
    hits.sort()
    return visited, hits, budget.charge(visited) and complete


def _scan_box(
    m: int,
    n: int,
    k: int,
    table: list[int],
    prune: str,
    budget: "_Budget",
    workers: int,
) -> BoxResult:
    if prune == "orbit":
        # Every full-rank candidate is row-space equivalent to one containing
        # the identity columns, and k-orthogonality only sees the row space.
        identity = [1 << i for i in range(m)]
        base_acc = 0
        for v in identity:
            base_acc ^= table[v]
        id_set = set(identity)
        values = [v for v in range(1, 1 << m) if v not in id_set]
        visited, raw_hits, complete = _scan_fast(
            values, table, n - m, budget, tuple(identity), base_acc, workers
        )
        mode = "fast-orbit"
        candidates = None
    elif math.comb((1 << m) - 1, n) <= _SLOW_PATH_LIMIT:
        return _scan_box_slow(m, n, k, budget)
    else:
        values = list(range(1, 1 << m))
        visited, raw_hits, complete = _scan_fast(
            values, table, n, budget, workers=workers
        )
        mode = "fast"
        candidates = None
    witnesses = []
    for cols in raw_hits:
        cols = tuple(sorted(cols))
        mat = _matrix_from_columns(m, cols)
        if rank(mat) == m and is_k_orthogonal(mat, k).holds:
            witnesses.append(SearchWitness(m, n, cols))
    return BoxResult(
        m=m, n=n, subsets=visited, candidates=candidates, hits=len(raw_hits),
        witnesses=tuple(witnesses), complete=complete, mode=mode,
    )


def _scan_box_slow(m: int, n: int, k: int, budget: "_Budget") -> BoxResult:
    subsets = 0
    candidates = 0
    hits = 0
    witnesses = []
    complete = True
    for cols in combinations(range(1, 1 << m), n):
        subsets += 1
        mat = _matrix_from_columns(m, cols)
        if rank(mat) == m:
            candidates += 1
            if is_k_orthogonal(mat, k).holds:
                hits += 1
                witnesses.append(SearchWitness(m, n, cols))
        if not budget.charge(1):
            complete = False
            break
    return BoxResult(
        m=m, n=n, subsets=subsets, candidates=candidates, hits=hits,
        witnesses=tuple(witnesses), complete=complete, mode="slow",
    )


class _Budget:
    def __init__(self, seconds: Optional[float], subsets: Optional[int]):
        self.deadline = None if seconds is None else time.monotonic() + seconds
        self.subset_cap = subsets
        self.used = 0
        self.exhausted = False

    def charge(self, amount: int) -> bool:
        """Account for visited subsets; True while within budget."""
        self.used += amount
        if self.subset_cap is not None and self.used > self.subset_cap:
            self.exhausted = True
        if self.deadline is not None and time.monotonic() > self.deadline:
            self.exhausted = True
        return not self.exhausted


def minimality_search(
    space: SearchSpace, prune: str = "none", workers: int = 1
) -> SearchReport:
    """Scan every (m, n) box for full-rank k-orthogonal candidates.

    Skipped boxes record the sound reason for the exclusion; a budget abort
    marks the affected box (and hence the report) incomplete.  Witnesses are
    independently re-verified before being reported.
    """
    if prune not in ("none", "orbit"):
        raise RangeError(f"unknown prune mode {prune!r}")
    k = space.k
    start = time.monotonic()
    budget = _Budget(space.budget_seconds, space.budget_subsets)
    notes = []
    floor = (1 << (k + 1)) - 1
    if space.n_max >= floor:
        notes.append(
            f"n_max {space.n_max} reaches the k={k} size floor {floor}; "
            "witnesses at or beyond it are expected, not refutations"
        )
    boxes: list[BoxResult] = []
    tables: dict[int, list[int]] = {}
    for m in space.m_range:
        for n in range(1, space.n_max + 1):
            if m <= k:
                boxes.append(BoxResult(
                    m=m, n=n, skipped=f"m={m} <= k={k}: any distinct-nonzero-"
                    "column matrix with so few check rows fails at level m",
                    mode="skip",
                ))
                continue
            if m > n:
                boxes.append(BoxResult(
                    m=m, n=n, skipped="m > n: full rank impossible", mode="skip",
                ))
                continue
            if n > (1 << m) - 1:
                boxes.append(BoxResult(
                    m=m, n=n,
                    skipped=f"n > 2**{m}-1: not enough distinct nonzero columns",
                    mode="skip",
                ))
                continue
            if budget.exhausted:
                boxes.append(BoxResult(m=m, n=n, complete=False, mode="skip",
                                       skipped="budget exhausted"))
                continue
            if m not in tables:
                tables[m] = subset_parity_table(m, k)
            boxes.append(_scan_box(m, n, k, tables[m], prune, budget, workers))
    return SearchReport(
        k=k,
        prune=prune,
        boxes=tuple(boxes),
        elapsed_seconds=time.monotonic() - start,
        notes=tuple(notes),
    )
