"""Builders for the minimal k-orthogonal matrices and sub-dual CSS codes.

The Hamming parity-check matrix over m bits (all distinct nonzero columns)
is (m-1)-orthogonal and meets the 2**(k+1)-1 size floor for k-orthogonal
matrices.  Pairing it with the null-space-derived Z checks gives a CSS code
on 2**m - 1 qubits with all-ones logicals whose X-check span sits inside the
Z-check span; the m=3 member is the Steane code and m=4 is the 15-qubit
Reed-Muller code.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import StandardFormCode
from .errors import RangeError
from .gf2 import BitMat, BitVec

__all__ = [
    "SubdualParts",
    "subdual_parts",
    "hamming_parity_check",
    "subdual_css",
    "minimal_korth_matrix",
]


@dataclass(frozen=True, slots=True)
class SubdualParts:
    """Column blocks of the sub-dual construction.

    ``c`` is the fixed weight-2 column (bits 0 and 1); ``v`` collects every
    other column of weight >= 2; ``d[j]`` is the complement of the parity of
    column j of ``v``; ``j_block`` is v-transposed plus the outer product
    d c^T, so the Z checks (j_block | d | I) are orthogonal to the X checks
    (I | c | v) and have even row weights.
    """

    m: int
    c: BitVec
    v: BitMat
    d: BitVec
    j_block: BitMat


def _column_value(col: int, m: int) -> int:
    """Column read top-to-bottom as a binary numeral (row 0 most significant)."""
    return sum(((col >> i) & 1) << (m - 1 - i) for i in range(m))


def _mat_from_columns(cols: list[int], m: int) -> BitMat:
    rows = [
        sum(((col >> i) & 1) << j for j, col in enumerate(cols))
        for i in range(m)
    ]
    return BitMat.from_ints(len(cols), rows)


def subdual_parts(m: int) -> SubdualParts:
    """The (c, V, d, J) blocks used by :func:`subdual_css`."""
    if m < 2:
        raise RangeError(f"need at least 2 check rows, got m={m}")
    c = 0b11
    v_cols = sorted(
        (col for col in range(1, 1 << m) if col.bit_count() >= 2 and col != c),
        key=lambda col: (-col.bit_count(), _column_value(col, m)),
    )
    d = [1 ^ (col.bit_count() & 1) for col in v_cols]
    j_rows = [col ^ (c if dj else 0) for col, dj in zip(v_cols, d)]
    return SubdualParts(
        m=m,
        c=BitVec(m, c),
        v=_mat_from_columns(v_cols, m),
        d=BitVec.from_indices(len(v_cols), [j for j, dj in enumerate(d) if dj]),
        j_block=BitMat.from_ints(m, j_rows),
    )


def hamming_parity_check(m: int) -> BitMat:
    """The m x (2**m - 1) matrix whose columns are all nonzero m-bit vectors.

    Columns are laid out as (identity | c | V) with V sorted by descending
    weight then ascending column numeral; every row has weight 2**(m-1) and
    the matrix is (m-1)-orthogonal.
    """
    if m < 2:
        raise RangeError(f"need at least 2 check rows, got m={m}")
    parts = subdual_parts(m)
    cols = [1 << i for i in range(m)]
    cols.append(parts.c.bits)
    cols.extend(parts.v.column_ints())
    return _mat_from_columns(cols, m)


def subdual_css(m: int) -> StandardFormCode:
    """CSS code on 2**m - 1 qubits with X checks the Hamming parity check,
    Z checks (J | d | I), and all-ones logical supports.

    The X-check span is contained in the Z-check span, the code encodes one
    qubit at distance 3, and the all-ones transversal P(pi/2**(m-2)) vector
    implements a logical phase gate.
    """
    if m < 3:
        raise RangeError(
            f"m={m} is too small: a 2**{m}-1 qubit layout leaves "
            f"{2 ** m - 2 - m} Z-check rows, so single-qubit X errors would "
            "go undetected; the construction needs m >= 3"
        )
    parts = subdual_parts(m)
    n = (1 << m) - 1
    n_z = n - m - 1
    a_x = hamming_parity_check(m)
    j_rows = parts.j_block.row_ints()  # one per Z-check row
    a_z_rows = [
        j_rows[t] | (((parts.d.bits >> t) & 1) << m) | (1 << (m + 1 + t))
        for t in range(n_z)
    ]
    sf = StandardFormCode(
        a_x=a_x,
        b=BitMat.zero(m, n),
        a_z=BitMat.from_ints(n, a_z_rows),
        r=BitVec.ones(n),
        s=BitVec.ones(n),
    )
    sf.validate()
    return sf


def minimal_korth_matrix(k: int) -> BitMat:
    """The smallest k-orthogonal matrix: 2**(k+1) - 1 distinct nonzero columns.

    Column order: the all-ones column first, then blocks of descending
    weight; within a weight block the column numerals run descending for odd
    weights and ascending for even weights.
    """
    if k < 1:
        raise RangeError(f"orthogonality level must be >= 1, got {k}")
    m = k + 1
    cols = sorted(
        range(1, 1 << m),
        key=lambda col: (
            -col.bit_count(),
            _column_value(col, m) * (1 if col.bit_count() % 2 == 0 else -1),
        ),
    )
    return _mat_from_columns(cols, m)
