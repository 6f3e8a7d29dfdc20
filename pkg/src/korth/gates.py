"""Exact verification and discovery of transversal diagonal logical gates.

All phase arithmetic happens on integer numerators modulo 2**k; a gate claim
is accepted only when every required congruence holds exactly, and failures
carry the violating string and residue.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .codes import StandardFormCode, degeneracy_classes, is_css
from .errors import CongruenceError, DegenerateCodeError, RangeError, UnsupportedCodeError
from .gf2 import BitMat, BitVec
from .ortho import OrthogonalityReport, is_k_orthogonal, isolate_column
from .phases import DyadicPhase, DyadicPhaseVector

__all__ = [
    "DyadicPhase",
    "DyadicPhaseVector",
    "GateDescriptor",
    "PhaseActionResult",
    "PhaseSolutionSet",
    "ControlledPhaseReport",
    "logical_phase_action",
    "phase_quantization_exponent",
    "find_transversal_phases",
    "verify_korth_necessity",
    "controlled_phase_action",
    "transversal_cnot_check",
]


@dataclass(frozen=True, slots=True)
class PhaseActionResult:
    """Outcome of checking a transversal phase vector against a code.

    ``ok`` means every codeword-support congruence held and ``phase`` is the
    induced logical phase; otherwise ``violation`` is a support string whose
    numerator sum leaves the nonzero ``residue`` modulo 2**k.
    """

    ok: bool
    phase: Optional[DyadicPhase] = None
    violation: Optional[BitVec] = None
    residue: Optional[int] = None


@dataclass(frozen=True, slots=True)
class GateDescriptor:
    """A claimed transversal diagonal gate with ``controls`` control qubits.

    Every physical gate is a power of the single base phase P(pi/2**(k-1)),
    with the powers listed per qubit label in ``realized``; a gate on q
    controls targets P(p*pi/2**(k-q-1)).  ``logical_phase`` optionally
    records the logical target phase the realization claims to induce, which
    verification then confirms or refutes.
    """

    controls: int
    realized: DyadicPhaseVector
    logical_phase: Optional[DyadicPhase] = None

    def validate(self, n: int) -> None:
        if self.controls < 0:
            raise RangeError(f"control count must be nonnegative, got {self.controls}")
        if self.controls > self.realized.k - 1:
            raise RangeError(
                f"{self.controls} controls leave no target phase at base exponent "
                f"{self.realized.k}"
            )
        self.realized.check_length(n)


@dataclass(frozen=True, slots=True)
class PhaseSolutionSet:
    """All phase vectors acting trivially on every codeword support.

    The set is a module over Z_{2**k}: each solution is a unique combination
    sum(t_j * generators[j]) with 0 <= t_j < orders[j].  The generators serve
    as particular solutions and carry their induced logical phases.
    """

    k: int
    n: int
    generators: tuple[DyadicPhaseVector, ...]
    orders: tuple[int, ...]
    phases: tuple[DyadicPhase, ...]

    def count(self) -> int:
        total = 1
        for o in self.orders:
            total *= o
        return total

    def enumerate_all(self) -> list[tuple[int, ...]]:
        """Materialize every solution vector; only sensible for tiny sets."""
        q = 1 << self.k
        out = [(0,) * self.n]
        for gen, order in zip(self.generators, self.orders):
            new = []
            for base in out:
                for t in range(order):
                    new.append(
                        tuple((b + t * g) % q for b, g in zip(base, gen.p))
                    )
            out = new
        return out


@dataclass(frozen=True, slots=True)
class ControlledPhaseReport:
    """Verdict for a q-controlled transversal phase gate."""

    passed: bool
    controls: int
    k: int
    induced_r: BitVec
    non_clifford: bool
    size_bound_ok: Optional[bool] = None
    logical_numerator: Optional[int] = None
    claim_ok: Optional[bool] = None
    witness_rows: Optional[tuple[int, ...]] = None
    witness_residue: Optional[int] = None
    witness_modulus: Optional[int] = None


def _span_masks(a_x: BitMat) -> list[int]:
    rows = a_x.row_ints()
    masks = [0]
    acc = 0
    for i in range(1, 1 << len(rows)):
        acc ^= rows[(i & -i).bit_length() - 1]
        masks.append(acc)
    return masks


def logical_phase_action(
    sf: StandardFormCode, theta: DyadicPhaseVector
) -> PhaseActionResult:
    """Check that the phase vector fixes every logical-zero component and
    report the induced logical phase.

    Diagonal gates act on basis-state supports regardless of the codeword
    coefficients, so this applies to non-CSS standard forms as well.  The
    reported phase is sum(p_i * s_i) * pi/2**(k-1), the action picked up on
    the logical-one support.
    """
    theta.check_length(sf.n)
    q = theta.modulus
    for mask in _span_masks(sf.a_x):
        residue = theta.masked_sum(mask) % q
        if residue:
            return PhaseActionResult(
                ok=False, violation=BitVec(sf.n, mask), residue=residue
            )
    return PhaseActionResult(
        ok=True, phase=DyadicPhase(theta.masked_sum(sf.s.bits), theta.k)
    )


def phase_quantization_exponent(sf: StandardFormCode) -> int:
    """Exponent e such that every admissible transversal angle on this code
    is a multiple of pi/2**e.

    Isolating each column in turn shows 2**(m-1) times any single-qubit
    angle must vanish modulo 2*pi, giving e = m - 2.  Requires distinct
    nonzero check columns; reduce degeneracy first otherwise.
    """
    part = degeneracy_classes(sf.a_x)
    for cls in part.classes:
        if cls.undetectable:
            raise DegenerateCodeError(
                f"column {cls.representative} has no syndrome; apply "
                "nondegenerate_reduction first"
            )
        if len(cls.indices) > 1:
            raise DegenerateCodeError(
                f"columns {cls.indices} share a syndrome; apply "
                "nondegenerate_reduction first"
            )
    for col in range(sf.n):
        iso = isolate_column(sf.a_x, col)
        acc = (1 << sf.n) - 1
        for row in iso.row_ints():
            acc &= row
        assert acc == 1 << col, "column isolation failed on distinct columns"
    return max(sf.m - 2, 0)


def find_transversal_phases(sf: StandardFormCode, k: int) -> PhaseSolutionSet:
    """Solve for every phase vector passing :func:`logical_phase_action`.

    The congruences sum(x_i * p_i) = 0 mod 2**k over all codeword supports x
    form a linear system over the residue ring Z_{2**k}; it is solved exactly
    by diagonalization with odd-unit pivots (the ring is local, so minimum
    2-adic valuation entries can always pivot).
    """
    if k < 1:
        raise RangeError(f"denominator exponent must be >= 1, got {k}")
    n = sf.n
    q = 1 << k
    masks = _span_masks(sf.a_x)
    rows = [[(mask >> j) & 1 for j in range(n)] for mask in masks]
    gens = _kernel_mod_power_of_two(rows, n, k)
    generators = tuple(DyadicPhaseVector(k, vec) for vec, _ in gens)
    orders = tuple(order for _, order in gens)
    phases = tuple(
        DyadicPhase(g.masked_sum(sf.s.bits), k) for g in generators
    )
    return PhaseSolutionSet(k, n, generators, orders, phases)


def _kernel_mod_power_of_two(
    rows: list[list[int]], n: int, k: int
) -> list[tuple[tuple[int, ...], int]]:
    """Generators (vector, additive order) of {p : A p = 0 mod 2**k}."""
    q = 1 << k
    a = [[entry % q for entry in row] for row in rows]
    nr = len(a)
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    piv_vals: list[int] = []
    r = 0
    while r < min(nr, n):
        best = None
        for i in range(r, nr):
            for j in range(r, n):
                entry = a[i][j]
                if entry:
                    val = (entry & -entry).bit_length() - 1
                    if best is None or val < best[0]:
                        best = (val, i, j)
                    if val == 0:
                        break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        val, bi, bj = best
        a[r], a[bi] = a[bi], a[r]
        if bj != r:
            for row in a:
                row[r], row[bj] = row[bj], row[r]
            for row in v:
                row[r], row[bj] = row[bj], row[r]
        unit_inv = pow(a[r][r] >> val, -1, q)
        a[r] = [(x * unit_inv) % q for x in a[r]]
        for i in range(nr):
            if i != r and a[i][r]:
                factor = a[i][r] >> val
                a[i] = [(x - factor * y) % q for x, y in zip(a[i], a[r])]
        for j in range(r + 1, n):
            if a[r][j]:
                factor = a[r][j] >> val
                for i in range(nr):
                    a[i][j] = (a[i][j] - factor * a[i][r]) % q
                for i in range(n):
                    v[i][j] = (v[i][j] - factor * v[i][r]) % q
        piv_vals.append(val)
        r += 1
    gens: list[tuple[tuple[int, ...], int]] = []
    for i, val in enumerate(piv_vals):
        if val > 0:
            vec = tuple((v[t][i] << (k - val)) % q for t in range(n))
            gens.append((vec, 1 << val))
    for j in range(r, n):
        gens.append((tuple(v[t][j] % q for t in range(n)), q))
    return gens


def verify_korth_necessity(
    sf: StandardFormCode, theta: DyadicPhaseVector
) -> OrthogonalityReport:
    """Check the orthogonality structure a verified phase gate must induce.

    Requires the gate to pass :func:`logical_phase_action` with an odd
    numerator; extracts the parity subset r' of the phase exponents, checks
    k-orthogonality restricted to it, and re-derives the graded congruences
    sum over t-fold products = 0 mod 2**(k-t+1) along the way.
    """
    k = theta.k
    q = theta.modulus
    action = logical_phase_action(sf, theta)
    if not action.ok:
        raise CongruenceError(
            f"support {action.violation} sums to {action.residue} mod {q}; "
            "the phase vector is not a transversal logical gate",
            witness=action.violation,
            residue=action.residue,
            modulus=q,
        )
    raw_numerator = theta.masked_sum(sf.s.bits) % q
    if raw_numerator % 2 == 0:
        raise CongruenceError(
            f"logical phase numerator {raw_numerator} mod {q} is even; "
            "the orthogonality argument needs an odd numerator at this exponent",
            residue=raw_numerator,
            modulus=q,
        )
    rows = sf.a_x.row_ints()
    for t in range(1, min(k, len(rows)) + 1):
        modulus = 1 << (k - t + 1)
        for subset in combinations(range(len(rows)), t):
            acc = (1 << sf.n) - 1
            for i in subset:
                acc &= rows[i]
            residue = theta.masked_sum(acc) % modulus
            if residue:
                raise CongruenceError(
                    f"graded congruence broke: rows {subset} product sums to "
                    f"{residue} mod {modulus}",
                    witness=BitVec(sf.n, acc),
                    residue=residue,
                    modulus=modulus,
                )
    r_prime = BitVec.from_indices(
        sf.n, [i for i, p in enumerate(theta.p) if p % 2]
    )
    return is_k_orthogonal(sf.a_x, k, r_prime)


def controlled_phase_action(
    sf: StandardFormCode, gate: GateDescriptor
) -> ControlledPhaseReport:
    """Certify a transversal controlled-phase gate with q controls.

    For every t up to the base exponent k, each t-fold product of check rows
    must sum its phase exponents to zero modulo 2**(k - max(q, t-1)).  The
    report carries the parity subset the exponents induce and, for
    non-Clifford gates, whether its size meets the 2**(k+1)-1 floor.
    """
    if not is_css(sf):
        raise UnsupportedCodeError(
            "controlled-phase verification acts across identically labelled "
            "qubits of CSS blocks; reduce to a CSS code first"
        )
    gate.validate(sf.n)
    theta = gate.realized
    k = theta.k
    q_ctrl = gate.controls
    r_induced = BitVec.from_indices(
        sf.n, [i for i, p in enumerate(theta.p) if p % 2]
    )
    nonzero_vals = [p for p in theta.p if p]
    if nonzero_vals:
        min_val = min((p & -p).bit_length() - 1 for p in nonzero_vals)
        non_clifford = k - min_val >= 3
    else:
        non_clifford = False
    rows = sf.a_x.row_ints()
    passed = True
    wit_rows = wit_res = wit_mod = None
    for t in range(1, min(k, len(rows)) + 1):
        modulus = 1 << (k - max(q_ctrl, t - 1))
        for subset in combinations(range(len(rows)), t):
            acc = (1 << sf.n) - 1
            for i in subset:
                acc &= rows[i]
            residue = theta.masked_sum(acc) % modulus
            if residue:
                passed = False
                wit_rows, wit_res, wit_mod = subset, residue, modulus
                break
        if not passed:
            break
    size_bound_ok = None
    if passed and non_clifford:
        size_bound_ok = r_induced.weight >= (1 << (k + 1)) - 1
    logical_numerator = None
    claim_ok = None
    if passed:
        logical_numerator = theta.masked_sum(sf.s.bits) % (1 << (k - q_ctrl))
        if gate.logical_phase is not None:
            claim_ok = gate.logical_phase == DyadicPhase(
                logical_numerator, k - q_ctrl
            )
    return ControlledPhaseReport(
        passed=passed,
        controls=q_ctrl,
        k=k,
        induced_r=r_induced,
        non_clifford=non_clifford,
        size_bound_ok=size_bound_ok,
        logical_numerator=logical_numerator,
        claim_ok=claim_ok,
        witness_rows=wit_rows,
        witness_residue=wit_res,
        witness_modulus=wit_mod,
    )


def transversal_cnot_check(sf: StandardFormCode) -> bool:
    """CSS structure is exactly what a transversal controlled-not needs."""
    return is_css(sf)
