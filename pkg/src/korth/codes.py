"""Stabilizer codes, exact sign tracking, and reduction to standard form.

The standard form keeps the X-bearing generators in as few rows as possible
(a full-rank block ``a_x`` with Z-parts ``b``), the remaining generators as
pure-Z rows ``a_z`` normalized to carry + signs, and single-qubit logical
supports ``r`` (Z type) and ``s`` (X type).

Pauli operators are stored as ``i**e * X_x * Z_z`` with the exponent ``e``
tracked exactly through every product and conjugation; no sign is ever
discarded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DimensionError, InvalidCodeError, SignFixError
from .gf2 import BitMat, BitVec, in_rowspan, null_space, rank, rref, solve
from .phases import DyadicPhaseVector

__all__ = [
    "PauliOp",
    "StabilizerCode",
    "StandardFormCode",
    "DegeneracyClass",
    "DegeneracyPartition",
    "ReducedView",
    "commutes",
    "to_standard_form",
    "is_css",
    "logical_zero_support",
    "degeneracy_classes",
    "nondegenerate_reduction",
    "css_standard_form",
    "code_to_json_dict",
    "code_from_json_dict",
    "code_to_json",
    "code_from_json",
]

_SIGN_LABELS = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_SIGN_VALUES = {"+": 0, "+i": 1, "-": 2, "-i": 3}
_PHASE_COMPLEX = (1 + 0j, 1j, -1 + 0j, -1j)


@dataclass(frozen=True, slots=True)
class PauliOp:
    """An n-qubit Pauli operator ``i**i_exp * X_x * Z_z`` (bits packed)."""

    n: int
    x: int
    z: int
    i_exp: int = 0

    def __post_init__(self):
        mask = (1 << self.n) - 1
        object.__setattr__(self, "x", self.x & mask)
        object.__setattr__(self, "z", self.z & mask)
        object.__setattr__(self, "i_exp", self.i_exp % 4)

    @classmethod
    def from_label(cls, label: str) -> "PauliOp":
        """Parse a signed Pauli string such as "+XZZXI" or "-iYZ"."""
        sign = None
        for prefix in ("+i", "-i", "+", "-"):
            if label.startswith(prefix):
                sign = prefix
                break
        if sign is None:
            raise ValueError(f"Pauli label must start with one of +, -, +i, -i: {label!r}")
        body = label[len(sign):]
        x = z = 0
        e = _SIGN_VALUES[sign]
        for i, ch in enumerate(body):
            if ch == "X":
                x |= 1 << i
            elif ch == "Z":
                z |= 1 << i
            elif ch == "Y":
                x |= 1 << i
                z |= 1 << i
                e += 1
            elif ch != "I":
                raise ValueError(f"invalid Pauli letter {ch!r} in {label!r}")
        return cls(len(body), x, z, e)

    def label(self) -> str:
        """Canonical signed string; inverse of :meth:`from_label`."""
        letters = [
            "IXZY"[((self.x >> i) & 1) + 2 * ((self.z >> i) & 1)]
            for i in range(self.n)
        ]
        n_y = (self.x & self.z).bit_count()
        return _SIGN_LABELS[(self.i_exp - n_y) % 4] + "".join(letters)

    @property
    def xbits(self) -> BitVec:
        return BitVec(self.n, self.x)

    @property
    def zbits(self) -> BitVec:
        return BitVec(self.n, self.z)

    @property
    def phase(self) -> complex:
        return _PHASE_COMPLEX[self.i_exp]

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def squares_to_identity(self) -> bool:
        return (self.i_exp + (self.x & self.z).bit_count()) % 2 == 0

    def __mul__(self, other: "PauliOp") -> "PauliOp":
        if self.n != other.n:
            raise DimensionError(f"qubit count mismatch: {self.n} vs {other.n}")
        e = self.i_exp + other.i_exp + 2 * (self.z & other.x).bit_count()
        return PauliOp(self.n, self.x ^ other.x, self.z ^ other.z, e)

    def commutes_with(self, other: "PauliOp") -> bool:
        if self.n != other.n:
            raise DimensionError(f"qubit count mismatch: {self.n} vs {other.n}")
        anti = (self.x & other.z).bit_count() + (self.z & other.x).bit_count()
        return anti % 2 == 0

    def conjugated_by_x(self, y: int) -> "PauliOp":
        """X_y P X_y: flips the sign when y overlaps the Z part oddly."""
        return PauliOp(self.n, self.x, self.z, self.i_exp + 2 * (y & self.z).bit_count())

    def conjugated_by_z(self, w: int) -> "PauliOp":
        """Z_w P Z_w: flips the sign when w overlaps the X part oddly."""
        return PauliOp(self.n, self.x, self.z, self.i_exp + 2 * (w & self.x).bit_count())

    def conjugated_by_s(self, mask: int) -> "PauliOp":
        """Conjugation by the phase gate S on every qubit in ``mask``.

        Rotates X into Y on those sites: z ^= (mask & x) with an i per hit.
        """
        hits = mask & self.x
        return PauliOp(self.n, self.x, self.z ^ hits, self.i_exp + hits.bit_count())


def commutes(p: PauliOp, q: PauliOp) -> bool:
    """Symplectic commutation test for two Pauli operators."""
    return p.commutes_with(q)


@dataclass(frozen=True, slots=True)
class StabilizerCode:
    """A stabilizer code given by generators, with optional logicals."""

    n: int
    generators: tuple[PauliOp, ...]
    logical_x: Optional[PauliOp] = None
    logical_z: Optional[PauliOp] = None

    def validate(self) -> None:
        for g in self.generators:
            if g.n != self.n:
                raise InvalidCodeError(f"generator on {g.n} qubits in an n={self.n} code")
            if g.is_identity():
                raise InvalidCodeError("identity (or phase-only) generator")
            if not g.squares_to_identity():
                raise InvalidCodeError(f"generator {g.label()} does not square to +1")
        for i, g in enumerate(self.generators):
            for h in self.generators[i + 1:]:
                if not g.commutes_with(h):
                    raise InvalidCodeError(
                        f"generators {g.label()} and {h.label()} anticommute"
                    )
        symp = BitMat.from_ints(
            2 * self.n, [g.x | (g.z << self.n) for g in self.generators]
        ) if self.generators else BitMat.zero(0, 2 * self.n)
        if rank(symp) != len(self.generators):
            raise InvalidCodeError("generators are dependent")
        for name, op in (("logical_x", self.logical_x), ("logical_z", self.logical_z)):
            if op is None:
                continue
            if op.n != self.n:
                raise InvalidCodeError(f"{name} acts on {op.n} qubits, code has {self.n}")
            if op.is_identity() or not op.squares_to_identity():
                raise InvalidCodeError(f"{name} is not a valid order-2 Pauli")
            for g in self.generators:
                if not op.commutes_with(g):
                    raise InvalidCodeError(f"{name} anticommutes with stabilizer {g.label()}")
        if self.logical_x is not None and self.logical_z is not None:
            if self.logical_x.commutes_with(self.logical_z):
                raise InvalidCodeError("logical X and logical Z must anticommute")


@dataclass(frozen=True)
class StandardFormCode:
    """A single-logical-qubit code in standard form.

    ``a_x`` (m x n, full rank) and ``b`` hold the X-bearing generators
    ``i**x_phases[i] * X_{a_x[i]} * Z_{b[i]}``; ``a_z`` holds the pure-Z
    generators, all with + sign; ``r`` and ``s`` are the supports of the
    logical Z and logical X.

    Reaching all-plus Z signs may require conjugating the whole code by a
    local frame change; the reduction records it in the three masks (applied
    to the input in the order X, S-rotation, Z).  All masks are zero when
    the input signs were already consistent, in which case the output blocks
    generate exactly the input group.
    """

    a_x: BitMat
    b: BitMat
    a_z: BitMat
    r: BitVec
    s: BitVec
    x_phases: tuple[int, ...] = ()
    local_x_mask: BitVec | None = None
    local_s_mask: BitVec | None = None
    local_z_mask: BitVec | None = None

    def __post_init__(self):
        if not self.x_phases:
            object.__setattr__(self, "x_phases", (0,) * self.a_x.nrows)
        zero = BitVec.zeros(self.a_x.ncols)
        for name in ("local_x_mask", "local_s_mask", "local_z_mask"):
            if getattr(self, name) is None:
                object.__setattr__(self, name, zero)

    def frame_conjugate(self, op: PauliOp) -> PauliOp:
        """Map an input-frame Pauli into this code's frame."""
        return (
            op.conjugated_by_x(self.local_x_mask.bits)
            .conjugated_by_s(self.local_s_mask.bits)
            .conjugated_by_z(self.local_z_mask.bits)
        )

    @property
    def n(self) -> int:
        return self.a_x.ncols

    @property
    def m(self) -> int:
        return self.a_x.nrows

    def x_row_pauli(self, i: int) -> PauliOp:
        return PauliOp(self.n, self.a_x.rows[i].bits, self.b.rows[i].bits, self.x_phases[i])

    def z_row_pauli(self, j: int) -> PauliOp:
        return PauliOp(self.n, 0, self.a_z.rows[j].bits, 0)

    def to_stabilizer_code(self) -> StabilizerCode:
        gens = [self.x_row_pauli(i) for i in range(self.m)]
        gens += [self.z_row_pauli(j) for j in range(self.a_z.nrows)]
        return StabilizerCode(
            self.n,
            tuple(gens),
            logical_x=PauliOp(self.n, self.s.bits, 0, 0),
            logical_z=PauliOp(self.n, 0, self.r.bits, 0),
        )

    def validate(self) -> None:
        n, m = self.n, self.m
        if self.b.nrows != m or self.b.ncols != n:
            raise InvalidCodeError("B block shape must match A_X")
        if self.a_z.ncols != n or self.r.n != n or self.s.n != n:
            raise InvalidCodeError("block widths disagree")
        if len(self.x_phases) != m:
            raise InvalidCodeError("one phase per X-bearing row required")
        if rank(self.a_x) != m:
            raise InvalidCodeError("A_X is not full rank")
        if rank(self.a_z) != self.a_z.nrows:
            raise InvalidCodeError("A_Z rows are dependent")
        if m + self.a_z.nrows != n - 1:
            raise InvalidCodeError(
                f"{m} + {self.a_z.nrows} generators on {n} qubits does not leave one logical qubit"
            )
        for i in range(m):
            gi = self.x_row_pauli(i)
            if self.x_phases[i] not in (0, 1) or not gi.squares_to_identity():
                raise InvalidCodeError(f"X-bearing row {i} has a non-normalized sign")
            for j in range(i + 1, m):
                if not gi.commutes_with(self.x_row_pauli(j)):
                    raise InvalidCodeError(f"X-bearing rows {i} and {j} anticommute")
        for c in self.a_z.rows:
            for a in self.a_x.rows:
                if c.dot_parity(a):
                    raise InvalidCodeError("a Z row anticommutes with an X-bearing row")
        for a in self.a_x.rows:
            if self.r.dot_parity(a):
                raise InvalidCodeError("logical Z support anticommutes with A_X")
        if in_rowspan(self.r, self.a_z):
            raise InvalidCodeError("logical Z support lies in the stabilizer")
        for row in self.b.rows:
            if self.s.dot_parity(row):
                raise InvalidCodeError("logical X support anticommutes with a B part")
        for c in self.a_z.rows:
            if self.s.dot_parity(c):
                raise InvalidCodeError("logical X support anticommutes with A_Z")
        if not self.r.dot_parity(self.s):
            raise InvalidCodeError("logical X and Z supports overlap evenly")


def is_css(sf: StandardFormCode) -> bool:
    """True when the B block vanishes (pure X / pure Z generator split)."""
    return all(row.bits == 0 for row in sf.b.rows)


def _x_part_reduce(gens: Sequence[PauliOp], n: int) -> tuple[list[PauliOp], list[PauliOp]]:
    """RREF on the X parts via exact Pauli row operations."""
    work = list(gens)
    row_idx = 0
    for col in range(n):
        mask = 1 << col
        pivot = next((i for i in range(row_idx, len(work)) if work[i].x & mask), None)
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for i in range(len(work)):
            if i != row_idx and work[i].x & mask:
                work[i] = work[i] * work[row_idx]
        row_idx += 1
    return work[:row_idx], work[row_idx:]


def _z_part_reduce(gens: Sequence[PauliOp], n: int) -> list[PauliOp]:
    work = list(gens)
    row_idx = 0
    for col in range(n):
        mask = 1 << col
        pivot = next((i for i in range(row_idx, len(work)) if work[i].z & mask), None)
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for i in range(len(work)):
            if i != row_idx and work[i].z & mask:
                work[i] = work[i] * work[row_idx]
        row_idx += 1
    return work


def _coset_residue(v: BitVec, basis: BitMat) -> BitVec:
    """Reduce v against an RREF basis; zero iff v is in the row span."""
    reduced, pivots = rref(basis)
    res = v.bits
    for prow, pcol in zip(reduced.row_ints(), pivots):
        if (res >> pcol) & 1:
            res ^= prow
    return BitVec(v.n, res)


def _derive_r(a_x: BitMat, z_block: BitMat) -> BitVec:
    for v in null_space(a_x).rows:
        res = _coset_residue(v, z_block)
        if not res.is_zero():
            return res
    raise InvalidCodeError("no pure-Z logical operator exists; not a one-qubit code")


def _purified_logical_z(declared: PauliOp, x_rows: list[PauliOp], n: int) -> BitVec | None:
    if declared.x == 0:
        return BitVec(n, declared.z)
    # Clear the X content by multiplying with X-bearing stabilizers, which
    # stays within the declared logical's coset.
    a_x_t = BitMat.from_ints(n, [g.x for g in x_rows]).transpose()
    lam = solve(a_x_t, BitVec(n, declared.x))
    if lam is None:
        return None
    acc = declared
    for i in range(len(x_rows)):
        if lam[i]:
            acc = acc * x_rows[i]
    assert acc.x == 0
    return BitVec(n, acc.z)


def _solve_pure_x_support(
    x_rows: list[PauliOp], z_block: BitMat, r: BitVec, n: int
) -> BitVec | None:
    rows = [g.z for g in x_rows] + z_block.row_ints() + [r.bits]
    rhs = BitVec.from_indices(len(rows), [len(rows) - 1])
    return solve(BitMat.from_ints(n, rows), rhs)


def _logical_x_fallback(
    x_rows: list[PauliOp], z_block: BitMat, r: BitVec, n: int
) -> tuple[BitVec, int]:
    """Find a logical X and the Z-axis rotation mask that makes it pure X.

    Only reached when no pure-X logical exists outright, i.e. the code has
    Y content that a qubit-wise S conjugation can absorb.
    """
    sympl_rows = [g.z | (g.x << n) for g in x_rows]
    sympl_rows += z_block.row_ints()
    sympl_rows.append(r.bits)
    rhs = BitVec.from_indices(len(sympl_rows), [len(sympl_rows) - 1])
    base = solve(BitMat.from_ints(2 * n, sympl_rows), rhs)
    if base is None:
        raise InvalidCodeError("no logical X operator exists; not a one-qubit code")
    k_op = PauliOp(n, base.bits & ((1 << n) - 1), base.bits >> n)
    candidates = [k_op] + [k_op * g for g in x_rows]
    for cand in candidates:
        pool = z_block.row_ints() + [r.bits]
        pool += [1 << pos for pos in BitVec(n, cand.x).support()]
        mat = BitMat.from_ints(n, pool).transpose()
        mu = solve(mat, BitVec(n, cand.z))
        if mu is None:
            continue
        fixed = cand.z
        for j in range(z_block.nrows + 1):
            if mu[j]:
                fixed ^= pool[j]
        # fixed is supported inside the candidate's X support; S gates there
        # rotate the residual Y content onto the X axis.
        return BitVec(n, cand.x), fixed
    raise InvalidCodeError(
        "logical X cannot be made pure X by stabilizer redefinition and "
        "single-qubit Z-axis rotations"
    )


def to_standard_form(code: StabilizerCode) -> StandardFormCode:
    """Reduce a one-logical-qubit stabilizer code to standard form.

    Pure-Z rows come out with + signs and declared pure-type logicals are
    kept verbatim.  The output blocks generate the input stabilizer group
    conjugated by the recorded local frame masks, which stay zero whenever
    the input signs are already consistent.
    """
    code.validate()
    n = code.n
    if len(code.generators) != n - 1:
        k = n - len(code.generators)
        raise InvalidCodeError(
            f"expected one logical qubit ({n - 1} generators on {n} qubits), got {k}; "
            "promote the logical operators of the extra qubits to stabilizers first"
        )
    x_rows, z_raw = _x_part_reduce(code.generators, n)
    assert all(g.x == 0 for g in z_raw)
    z_rows = _z_part_reduce(z_raw, n)

    # Reduce the Z parts of the X-bearing rows against the (reduced-echelon)
    # Z block; for a CSS group this empties B entirely.
    for idx, g in enumerate(x_rows):
        for zr in z_rows:
            pivot = (zr.z & -zr.z).bit_length() - 1
            if (g.z >> pivot) & 1:
                g = g * zr
        x_rows[idx] = g

    # Normalize the pure-Z signs with a single X-type conjugation.
    x_mask = 0
    bad = [j for j, g in enumerate(z_rows) if g.i_exp != 0]
    if bad:
        z_mat = BitMat.from_ints(n, [g.z for g in z_rows])
        target = BitVec.from_indices(len(z_rows), bad)
        y = solve(z_mat, target)
        if y is None:
            pattern = "".join("-" if g.i_exp else "+" for g in z_rows)
            raise SignFixError(
                f"no X-type operator fixes the Z-row sign pattern {pattern}; "
                "the generators do not describe a stabilizer code"
            )
        x_mask = y.bits
        x_rows = [g.conjugated_by_x(x_mask) for g in x_rows]
        z_rows = [g.conjugated_by_x(x_mask) for g in z_rows]
    assert all(g.i_exp == 0 for g in z_rows)

    a_x = BitMat.from_ints(n, [g.x for g in x_rows])
    z_block = BitMat.from_ints(n, [g.z for g in z_rows])

    # Logical Z support.
    r = None
    if code.logical_z is not None:
        r = _purified_logical_z(code.logical_z, x_rows, n)
    if r is None:
        r = _derive_r(a_x, z_block)

    # Logical X support, preferring a declared pure-X operator.
    s = None
    s_mask = 0
    if (
        code.logical_x is not None
        and code.logical_x.z == 0
        and BitVec(n, code.logical_x.x).dot_parity(r)
    ):
        s = BitVec(n, code.logical_x.x)
    if s is None:
        s = _solve_pure_x_support(x_rows, z_block, r, n)
    if s is None:
        s, s_mask = _logical_x_fallback(x_rows, z_block, r, n)
        x_rows = [g.conjugated_by_s(s_mask) for g in x_rows]

    # Normalize the X-bearing signs to + (or +i where the row squares demand).
    z_mask = 0
    bad_x = [i for i, g in enumerate(x_rows) if g.i_exp >= 2]
    if bad_x:
        w = solve(a_x, BitVec.from_indices(len(x_rows), bad_x))
        assert w is not None  # a_x is full rank
        z_mask = w.bits
        x_rows = [g.conjugated_by_z(z_mask) for g in x_rows]

    sf = StandardFormCode(
        a_x=a_x,
        b=BitMat.from_ints(n, [g.z for g in x_rows]),
        a_z=z_block,
        r=r,
        s=s,
        x_phases=tuple(g.i_exp for g in x_rows),
        local_x_mask=BitVec(n, x_mask),
        local_s_mask=BitVec(n, s_mask),
        local_z_mask=BitVec(n, z_mask),
    )
    sf.validate()
    return sf


def logical_zero_support(sf: StandardFormCode) -> list[tuple[BitVec, complex]]:
    """Basis-state expansion of the logical zero state.

    Returns 2**m pairs aligned with ``span_enumerate(a_x)``: the support
    strings and the exact fourth-root-of-unity coefficient each one carries.
    For CSS codes every coefficient is +1.
    """
    n, m = sf.n, sf.m
    ops = [sf.x_row_pauli(i) for i in range(m)]
    pairs = [(BitVec.zeros(n), _PHASE_COMPLEX[0])]
    acc = PauliOp(n, 0, 0, 0)
    for idx in range(1, 1 << m):
        acc = acc * ops[(idx & -idx).bit_length() - 1]
        pairs.append((BitVec(n, acc.x), _PHASE_COMPLEX[acc.i_exp]))
    return pairs


@dataclass(frozen=True, slots=True)
class DegeneracyClass:
    """Qubits whose check columns coincide; undetectable when all zero."""

    indices: tuple[int, ...]
    representative: int
    undetectable: bool


@dataclass(frozen=True, slots=True)
class DegeneracyPartition:
    n: int
    classes: tuple[DegeneracyClass, ...]

    def representatives(self) -> tuple[int, ...]:
        return tuple(c.representative for c in self.classes)


def degeneracy_classes(a_x: BitMat) -> DegeneracyPartition:
    """Partition qubit indices by identical columns of ``a_x``."""
    groups: dict[int, list[int]] = {}
    cols = a_x.column_ints()
    for j, col in enumerate(cols):
        groups.setdefault(col, []).append(j)
    classes = [
        DegeneracyClass(tuple(idx), idx[0], col == 0)
        for col, idx in groups.items()
    ]
    classes.sort(key=lambda c: c.representative)
    return DegeneracyPartition(a_x.ncols, tuple(classes))


@dataclass(frozen=True, slots=True)
class ReducedView:
    """Restriction of a check matrix to one representative per class."""

    partition: DegeneracyPartition
    representatives: tuple[int, ...]
    a_x: BitMat


def nondegenerate_reduction(
    sf: StandardFormCode, theta: DyadicPhaseVector
) -> tuple[ReducedView, DyadicPhaseVector]:
    """Aggregate per-class phase exponents onto class representatives.

    The returned phase vector acts identically on the code: every class sums
    its exponents modulo 2**k onto the representative qubit, and all other
    members carry zero.
    """
    theta.check_length(sf.n)
    part = degeneracy_classes(sf.a_x)
    q = theta.modulus
    agg = [0] * sf.n
    for cls in part.classes:
        agg[cls.representative] = sum(theta.p[i] for i in cls.indices) % q
    reps = part.representatives()
    reduced = BitMat.from_ints(
        len(reps),
        [
            sum(((row.bits >> j) & 1) << t for t, j in enumerate(reps))
            for row in sf.a_x.rows
        ],
    )
    return ReducedView(part, reps, reduced), DyadicPhaseVector(theta.k, tuple(agg))


def css_standard_form(
    a_x: BitMat,
    a_z: BitMat,
    r: BitVec | None = None,
    s: BitVec | None = None,
) -> StandardFormCode:
    """Assemble a standard-form CSS code from its two parity-check blocks.

    The blocks must be independent and mutually orthogonal and must leave
    exactly one logical qubit; omitted logical supports are derived from the
    null spaces.
    """
    n = a_x.ncols
    if a_z.ncols != n:
        raise DimensionError("check blocks have different widths")
    if rank(a_x) != a_x.nrows:
        raise InvalidCodeError("A_X rows are dependent")
    if rank(a_z) != a_z.nrows:
        raise InvalidCodeError("A_Z rows are dependent")
    for c in a_z.rows:
        for a in a_x.rows:
            if c.dot_parity(a):
                raise InvalidCodeError("A_Z is not orthogonal to A_X")
    if a_x.nrows + a_z.nrows != n - 1:
        raise InvalidCodeError(
            f"{a_x.nrows} + {a_z.nrows} checks on {n} qubits does not leave one logical qubit"
        )
    if r is None:
        r = _derive_r(a_x, a_z)
    if s is None:
        s = _derive_r(a_z, a_x)
    sf = StandardFormCode(
        a_x=a_x, b=BitMat.zero(a_x.nrows, n), a_z=a_z, r=r, s=s
    )
    sf.validate()
    return sf


def code_to_json_dict(code: StabilizerCode) -> dict:
    """JSON descriptor: {"n", "stabilizers", "logical_x"?, "logical_z"?}."""
    out: dict = {
        "n": code.n,
        "stabilizers": [g.label() for g in code.generators],
    }
    if code.logical_x is not None:
        out["logical_x"] = code.logical_x.label()
    if code.logical_z is not None:
        out["logical_z"] = code.logical_z.label()
    return out


def code_from_json_dict(data: dict) -> StabilizerCode:
    try:
        n = int(data["n"])
        labels = data["stabilizers"]
    except (KeyError, TypeError) as exc:
        raise InvalidCodeError(f"code descriptor missing field: {exc}") from None
    gens = []
    for label in labels:
        op = PauliOp.from_label(label)
        if op.n != n:
            raise InvalidCodeError(f"stabilizer {label!r} acts on {op.n} qubits, n={n}")
        gens.append(op)
    lx = data.get("logical_x")
    lz = data.get("logical_z")
    return StabilizerCode(
        n,
        tuple(gens),
        logical_x=PauliOp.from_label(lx) if lx is not None else None,
        logical_z=PauliOp.from_label(lz) if lz is not None else None,
    )


def code_to_json(code: StabilizerCode) -> str:
    return json.dumps(code_to_json_dict(code), indent=2) + "\n"


def code_from_json(text: str) -> StabilizerCode:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidCodeError(f"invalid JSON: {exc}") from None
    return code_from_json_dict(data)
