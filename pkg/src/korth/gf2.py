"""Bit-packed GF(2) vectors and matrices.

Vectors are packed into a single Python int (bit ``i`` holds position ``i``,
so position 0 is the leftmost character of the string form) with the tail
beyond the declared length masked to zero.  All values are immutable and
hashable, so they can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DimensionError, MatrixParseError, RangeError

__all__ = [
    "BitVec",
    "BitMat",
    "and_product",
    "weight",
    "xor_add",
    "rank",
    "rref",
    "null_space",
    "span_enumerate",
    "covered_columns_count",
    "in_rowspan",
    "solve",
    "parse_matrix_text",
    "format_matrix_text",
]


@dataclass(frozen=True, slots=True)
class BitVec:
    """An immutable binary string of length ``n`` packed into an int."""

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 0:
            raise RangeError("BitVec length must be nonnegative")
        object.__setattr__(self, "bits", self.bits & ((1 << self.n) - 1))

    @classmethod
    def from_string(cls, text: str) -> "BitVec":
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise ValueError(f"invalid bit character {ch!r}")
        return cls(len(text), bits)

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "BitVec":
        bits = 0
        for i in indices:
            if not 0 <= i < n:
                raise RangeError(f"index {i} out of range for length {n}")
            bits |= 1 << i
        return cls(n, bits)

    @classmethod
    def zeros(cls, n: int) -> "BitVec":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitVec":
        return cls(n, (1 << n) - 1)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        return ((self.bits >> i) & 1 for i in range(self.n))

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))

    def __repr__(self) -> str:
        return f"BitVec({str(self)!r})"

    def _check_len(self, other: "BitVec") -> None:
        if self.n != other.n:
            raise DimensionError(f"length mismatch: {self.n} vs {other.n}")

    def __xor__(self, other: "BitVec") -> "BitVec":
        self._check_len(other)
        return BitVec(self.n, self.bits ^ other.bits)

    def __and__(self, other: "BitVec") -> "BitVec":
        self._check_len(other)
        return BitVec(self.n, self.bits & other.bits)

    def __or__(self, other: "BitVec") -> "BitVec":
        self._check_len(other)
        return BitVec(self.n, self.bits | other.bits)

    def __invert__(self) -> "BitVec":
        return BitVec(self.n, ~self.bits)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if (self.bits >> i) & 1)

    def dot_parity(self, other: "BitVec") -> int:
        """Parity of the overlap |self . other| (mod-2 dot product)."""
        self._check_len(other)
        return (self.bits & other.bits).bit_count() & 1


@dataclass(frozen=True, slots=True)
class BitMat:
    """A row-major binary matrix; every row is a BitVec of length ``ncols``."""

    ncols: int
    rows: tuple[BitVec, ...]

    def __post_init__(self):
        if self.ncols < 0:
            raise RangeError("column count must be nonnegative")
        for row in self.rows:
            if row.n != self.ncols:
                raise DimensionError(
                    f"row length {row.n} does not match column count {self.ncols}"
                )

    @classmethod
    def from_rows(cls, rows: Sequence[BitVec]) -> "BitMat":
        if not rows:
            raise ValueError("cannot infer column count from an empty row list")
        return cls(rows[0].n, tuple(rows))

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "BitMat":
        return cls.from_rows([BitVec.from_string(r) for r in rows])

    @classmethod
    def from_ints(cls, ncols: int, rows: Iterable[int]) -> "BitMat":
        return cls(ncols, tuple(BitVec(ncols, r) for r in rows))

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "BitMat":
        return cls(ncols, tuple(BitVec.zeros(ncols) for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "BitMat":
        return cls(n, tuple(BitVec(n, 1 << i) for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> BitVec:
        return self.rows[i]

    def row_ints(self) -> list[int]:
        return [r.bits for r in self.rows]

    def column(self, j: int) -> BitVec:
        if not 0 <= j < self.ncols:
            raise IndexError(j)
        bits = 0
        for i, r in enumerate(self.rows):
            bits |= ((r.bits >> j) & 1) << i
        return BitVec(self.nrows, bits)

    def columns(self) -> list[BitVec]:
        return [self.column(j) for j in range(self.ncols)]

    def column_ints(self) -> list[int]:
        """Columns packed as ints (bit i of entry j = row i, column j)."""
        out = [0] * self.ncols
        for i, r in enumerate(self.rows):
            bits = r.bits
            while bits:
                low = bits & -bits
                out[low.bit_length() - 1] |= 1 << i
                bits ^= low
        return out

    def transpose(self) -> "BitMat":
        return BitMat(self.nrows, tuple(self.columns()))

    def mul_vec(self, v: BitVec) -> BitVec:
        """Matrix-vector product over GF(2); entry i = parity of row_i . v."""
        if v.n != self.ncols:
            raise DimensionError(f"vector length {v.n} != column count {self.ncols}")
        bits = 0
        for i, r in enumerate(self.rows):
            bits |= ((r.bits & v.bits).bit_count() & 1) << i
        return BitVec(self.nrows, bits)

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rows)


def and_product(vs: Sequence[BitVec]) -> BitVec:
    """Bitwise AND across one or more equal-length vectors."""
    if not vs:
        raise ValueError("and_product requires at least one vector")
    n = vs[0].n
    acc = (1 << n) - 1
    for v in vs:
        if v.n != n:
            raise DimensionError(f"length mismatch: {v.n} vs {n}")
        acc &= v.bits
    return BitVec(n, acc)


def weight(v: BitVec) -> int:
    """Population count of a vector."""
    return v.bits.bit_count()


def xor_add(a: BitVec, b: BitVec) -> BitVec:
    """Sum modulo 2 (bitwise XOR) of two equal-length vectors."""
    return a ^ b


def _eliminate(rows: list[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon over GF(2); returns (nonzero rows, pivot columns)."""
    work = list(rows)
    pivots: list[int] = []
    row_idx = 0
    for col in range(ncols):
        mask = 1 << col
        pivot = None
        for i in range(row_idx, len(work)):
            if work[i] & mask:
                pivot = i
                break
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for i in range(len(work)):
            if i != row_idx and work[i] & mask:
                work[i] ^= work[row_idx]
        pivots.append(col)
        row_idx += 1
        if row_idx == len(work):
            break
    return work[: len(pivots)], pivots


def rref(M: BitMat) -> tuple[BitMat, tuple[int, ...]]:
    """Reduced row echelon form (zero rows dropped) and its pivot columns."""
    reduced, pivots = _eliminate(M.row_ints(), M.ncols)
    return BitMat.from_ints(M.ncols, reduced), tuple(pivots)


def rank(M: BitMat) -> int:
    """Row rank over GF(2)."""
    _, pivots = _eliminate(M.row_ints(), M.ncols)
    return len(pivots)


def null_space(M: BitMat) -> BitMat:
    """Basis of {v : M.v = 0 mod 2}, one row per free column (ascending)."""
    reduced, pivots = _eliminate(M.row_ints(), M.ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(M.ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for prow, pcol in zip(reduced, pivots):
            if (prow >> free) & 1:
                v |= 1 << pcol
        basis.append(v)
    return BitMat.from_ints(M.ncols, basis)


def span_enumerate(M: BitMat) -> list[BitVec]:
    """All XOR combinations of the rows, in Gray-code order starting at zero.

    Yields 2**nrows entries; when the rows are dependent each span element
    appears 2**(nrows - rank) times, so pass an independent basis if distinct
    values are wanted.
    """
    rows = M.row_ints()
    out = [BitVec(M.ncols, 0)]
    acc = 0
    for i in range(1, 1 << len(rows)):
        acc ^= rows[(i & -i).bit_length() - 1]
        out.append(BitVec(M.ncols, acc))
    return out


def covered_columns_count(M: BitMat, q: int) -> int:
    """Number of columns with at least one 1 among the first ``q`` rows."""
    if not 1 <= q <= M.nrows:
        raise RangeError(f"q={q} outside 1..{M.nrows}")
    acc = 0
    for r in M.rows[:q]:
        acc |= r.bits
    return acc.bit_count()


def in_rowspan(v: BitVec, M: BitMat) -> bool:
    """True when ``v`` lies in the GF(2) row space of ``M``."""
    if v.n != M.ncols:
        raise DimensionError(f"vector length {v.n} != column count {M.ncols}")
    reduced, pivots = _eliminate(M.row_ints(), M.ncols)
    res = v.bits
    for prow, pcol in zip(reduced, pivots):
        if (res >> pcol) & 1:
            res ^= prow
    return res == 0


def solve(M: BitMat, b: BitVec) -> BitVec | None:
    """A particular solution x of M.x = b over GF(2), or None if inconsistent.

    Pivot variables are read off the reduced system and free variables are
    set to zero, so the result is deterministic.
    """
    if b.n != M.nrows:
        raise DimensionError(f"rhs length {b.n} != row count {M.nrows}")
    n = M.ncols
    aug = [r.bits | (((b.bits >> i) & 1) << n) for i, r in enumerate(M.rows)]
    reduced, pivots = _eliminate(aug, n + 1)
    x = 0
    for prow, pcol in zip(reduced, pivots):
        if pcol == n:
            return None
        if (prow >> n) & 1:
            x |= 1 << pcol
    return BitVec(n, x)


def parse_matrix_text(text: str) -> BitMat:
    """Parse the matrix text format: an "m n" header then m rows of {0,1}."""
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        raise MatrixParseError("missing header line", 1)
    header = lines[0].split()
    if len(header) != 2:
        raise MatrixParseError('header must be "<rows> <cols>"', 1)
    try:
        nrows, ncols = int(header[0]), int(header[1])
    except ValueError:
        raise MatrixParseError("header entries must be integers", 1) from None
    if nrows < 0 or ncols < 0:
        raise MatrixParseError("matrix dimensions must be nonnegative", 1)
    rows = []
    for i in range(nrows):
        lineno = i + 2
        if lineno > len(lines):
            raise MatrixParseError(f"expected {nrows} rows, found {i}", len(lines))
        line = lines[lineno - 1]
        if len(line) != ncols:
            raise MatrixParseError(
                f"row has {len(line)} characters, expected {ncols}", lineno
            )
        bits = 0
        for j, ch in enumerate(line):
            if ch == "1":
                bits |= 1 << j
            elif ch != "0":
                raise MatrixParseError(f"invalid character {ch!r}", lineno, j + 1)
        rows.append(bits)
    for extra in range(nrows + 2, len(lines) + 1):
        if lines[extra - 1].strip():
            raise MatrixParseError("unexpected content after matrix rows", extra)
    return BitMat.from_ints(ncols, rows)


def format_matrix_text(M: BitMat) -> str:
    """Render a matrix in the text format accepted by parse_matrix_text."""
    body = "".join(f"{r}\n" for r in M.rows)
    return f"{M.nrows} {M.ncols}\n{body}"
