"""Shared builders and independent oracles for the test suite.

The oracles here deliberately avoid the library's own code paths: ranks and
null spaces are recomputed with numpy elimination, and code states are
simulated as sparse amplitude maps so stabilizer and gate claims can be
checked against actual quantum states.
"""

from __future__ import annotations

import cmath
import random

import numpy as np
import pytest

from korth.codes import PauliOp, StabilizerCode, StandardFormCode, css_standard_form
from korth.gf2 import BitMat, BitVec, null_space
from korth.phases import DyadicPhaseVector

# ---------------------------------------------------------------------------
# numpy GF(2) oracles


def np_matrix(M: BitMat) -> np.ndarray:
    return np.array([[r[j] for j in range(M.ncols)] for r in M.rows], dtype=np.uint8)


def oracle_rank(rows: np.ndarray) -> int:
    a = rows.copy() % 2
    m, n = a.shape
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i, c]), None)
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        for i in range(m):
            if i != r and a[i, c]:
                a[i] ^= a[r]
        r += 1
    return r


def oracle_in_span(vec: np.ndarray, rows: np.ndarray) -> bool:
    if rows.size == 0:
        return not vec.any()
    stacked = np.vstack([rows, vec])
    return oracle_rank(stacked) == oracle_rank(rows)


def spans_equal(A: BitMat, B: BitMat) -> bool:
    a, b = np_matrix(A), np_matrix(B)
    if a.size == 0 and b.size == 0:
        return True
    ra, rb = oracle_rank(a), oracle_rank(b)
    if ra != rb:
        return False
    if a.size == 0 or b.size == 0:
        return ra == rb == 0
    return oracle_rank(np.vstack([a, b])) == ra


# ---------------------------------------------------------------------------
# sparse state-vector oracle


def sparse_logical_zero(sf: StandardFormCode) -> dict[int, complex]:
    from korth.codes import logical_zero_support

    state: dict[int, complex] = {}
    for vec, phase in logical_zero_support(sf):
        state[vec.bits] = state.get(vec.bits, 0) + phase
    return state


def apply_pauli(state: dict[int, complex], g: PauliOp) -> dict[int, complex]:
    out: dict[int, complex] = {}
    coeff = 1j ** g.i_exp
    for bits, amp in state.items():
        sign = -1 if (bits & g.z).bit_count() & 1 else 1
        key = bits ^ g.x
        out[key] = out.get(key, 0) + amp * coeff * sign
    return {k: v for k, v in out.items() if abs(v) > 1e-12}


def apply_phases(state: dict[int, complex], theta: DyadicPhaseVector) -> dict[int, complex]:
    unit = cmath.pi / (1 << (theta.k - 1))
    return {
        bits: amp * cmath.exp(1j * unit * theta.masked_sum(bits))
        for bits, amp in state.items()
    }


def states_proportional(a: dict[int, complex], b: dict[int, complex]) -> complex | None:
    """The constant c with a == c*b, or None when not proportional."""
    if set(a) != set(b):
        return None
    ratio = None
    for key, amp in a.items():
        c = amp / b[key]
        if ratio is None:
            ratio = c
        elif abs(c - ratio) > 1e-9:
            return None
    return ratio


# ---------------------------------------------------------------------------
# reference codes


def five_qubit_code() -> StabilizerCode:
    return StabilizerCode(
        5,
        tuple(
            PauliOp.from_label(s)
            for s in ("+XZZXI", "+IXZZX", "+XIXZZ", "+ZXIXZ")
        ),
        logical_x=PauliOp.from_label("+XXXXX"),
        logical_z=PauliOp.from_label("+ZZZZZ"),
    )


def textbook_steane() -> StabilizerCode:
    """Steane's code with parity-check columns in binary counting order."""
    h = ["1010101", "0110011", "0001111"]
    gens = []
    for row in h:
        gens.append(PauliOp.from_label("+" + "".join("X" if c == "1" else "I" for c in row)))
    for row in h:
        gens.append(PauliOp.from_label("+" + "".join("Z" if c == "1" else "I" for c in row)))
    return StabilizerCode(
        7,
        tuple(gens),
        logical_x=PauliOp.from_label("+XXXXXXX"),
        logical_z=PauliOp.from_label("+ZZZZZZZ"),
    )


# ---------------------------------------------------------------------------
# randomized builders


def random_full_rank(rng: random.Random, m: int, n: int) -> BitMat:
    assert m <= n
    while True:
        mat = BitMat.from_ints(n, [rng.getrandbits(n) for _ in range(m)])
        from korth.gf2 import rank

        if rank(mat) == m:
            return mat


def random_css_sf(rng: random.Random, n: int, m: int) -> StandardFormCode:
    """A random one-logical-qubit CSS standard form with m X-check rows."""
    assert 1 <= m <= n - 1
    a_x = random_full_rank(rng, m, n)
    kernel = null_space(a_x)
    rows = list(kernel.rows)
    rng.shuffle(rows)
    a_z = BitMat.from_rows(rows[: n - 1 - m]) if n - 1 - m else BitMat.zero(0, n)
    return css_standard_form(a_x, a_z)


def scrambled(code: StabilizerCode, rng: random.Random,
              sign_flips: bool = True, drop_logicals: bool = False,
              s_mask: int = 0) -> StabilizerCode:
    """Mix, reorder, sign-flip, and optionally S-conjugate a code's generators."""
    gens = list(code.generators)
    for _ in range(2 * len(gens)):
        i, j = rng.randrange(len(gens)), rng.randrange(len(gens))
        if i != j:
            gens[i] = gens[i] * gens[j]
    if sign_flips:
        gens = [
            PauliOp(g.n, g.x, g.z, g.i_exp + 2 * rng.randint(0, 1)) for g in gens
        ]
    lx, lz = code.logical_x, code.logical_z
    if s_mask:
        gens = [g.conjugated_by_s(s_mask) for g in gens]
        lx = lx.conjugated_by_s(s_mask) if lx else None
        lz = lz.conjugated_by_s(s_mask) if lz else None
    rng.shuffle(gens)
    if drop_logicals:
        lx = lz = None
    return StabilizerCode(code.n, tuple(gens), logical_x=lx, logical_z=lz)


def pauli_group_member(target: PauliOp, gens: list[PauliOp]) -> bool:
    """Exact (sign-included) membership of ``target`` in the generated group."""
    from korth.gf2 import solve

    n = target.n
    if not gens:
        return target.x == 0 and target.z == 0 and target.i_exp == 0
    mat = BitMat.from_ints(2 * n, [g.x | (g.z << n) for g in gens]).transpose()
    lam = solve(mat, BitVec(2 * n, target.x | (target.z << n)))
    if lam is None:
        return False
    acc = PauliOp(n, 0, 0, 0)
    for i, g in enumerate(gens):
        if lam[i]:
            acc = acc * g
    return acc == target


def groups_equal(a: list[PauliOp], b: list[PauliOp]) -> bool:
    return all(pauli_group_member(g, b) for g in a) and all(
        pauli_group_member(g, a) for g in b
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
