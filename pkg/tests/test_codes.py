import json
import random

import pytest

from korth.codes import (
    PauliOp,
    StabilizerCode,
    code_from_json,
    code_to_json,
    commutes,
    css_standard_form,
    degeneracy_classes,
    is_css,
    logical_zero_support,
    nondegenerate_reduction,
    to_standard_form,
)
from korth.errors import InvalidCodeError
from korth.families import hamming_parity_check, subdual_css
from korth.gf2 import BitMat, BitVec, rank, span_enumerate
from korth.phases import DyadicPhaseVector

from conftest import (
    apply_pauli,
    five_qubit_code,
    groups_equal,
    pauli_group_member,
    scrambled,
    sparse_logical_zero,
    spans_equal,
    states_proportional,
    textbook_steane,
)


class TestPauliOp:
    def test_label_round_trip(self):
        for label in ("+XZZXI", "-YIX", "+iY", "-iZZ", "+IIII", "-XXXX"):
            assert PauliOp.from_label(label).label() == label

    def test_xz_is_minus_i_y(self):
        x = PauliOp.from_label("+X")
        z = PauliOp.from_label("+Z")
        assert (x * z).label() == "-iY"
        assert (z * x).label() == "+iY"

    def test_product_against_matrices(self):
        import numpy as np

        mats = {
            "I": np.eye(2),
            "X": np.array([[0, 1], [1, 0]], dtype=complex),
            "Y": np.array([[0, -1j], [1j, 0]]),
            "Z": np.array([[1, 0], [0, -1]], dtype=complex),
        }
        signs = {"+": 1, "-": -1, "+i": 1j, "-i": -1j}

        def to_matrix(op: PauliOp):
            label = op.label()
            sign = "+i" if label.startswith("+i") else (
                "-i" if label.startswith("-i") else label[0]
            )
            body = label[len(sign):]
            out = np.array([[signs[sign]]])
            for ch in body:
                out = np.kron(out, mats[ch])
            return out

        rng = random.Random(1)
        for _ in range(50):
            n = rng.randint(1, 3)
            a = PauliOp(n, rng.getrandbits(n), rng.getrandbits(n), rng.randrange(4))
            b = PauliOp(n, rng.getrandbits(n), rng.getrandbits(n), rng.randrange(4))
            assert np.allclose(to_matrix(a) @ to_matrix(b), to_matrix(a * b))

    def test_commutes_examples(self):
        x1 = PauliOp.from_label("+XI")
        z2 = PauliOp.from_label("+IZ")
        z1 = PauliOp.from_label("+ZI")
        assert commutes(x1, z2)
        assert not commutes(x1, z1)
        assert commutes(PauliOp.from_label("+XX"), PauliOp.from_label("+ZZ"))

    def test_conjugations(self):
        y = PauliOp.from_label("+Y")
        assert y.conjugated_by_s(1).label() == "-X"
        x = PauliOp.from_label("+X")
        assert x.conjugated_by_s(1).label() == "+Y"
        assert x.conjugated_by_z(1).label() == "-X"
        z = PauliOp.from_label("+Z")
        assert z.conjugated_by_x(1).label() == "-Z"
        assert z.conjugated_by_s(1).label() == "+Z"


class TestValidation:
    def test_anticommuting_generators(self):
        code = StabilizerCode(
            2, (PauliOp.from_label("+XI"), PauliOp.from_label("+ZI"))
        )
        with pytest.raises(InvalidCodeError, match="anticommute"):
            code.validate()

    def test_dependent_generators(self):
        code = StabilizerCode(
            3,
            (
                PauliOp.from_label("+XXI"),
                PauliOp.from_label("+IXX"),
                PauliOp.from_label("+XIX"),
            ),
        )
        with pytest.raises(InvalidCodeError, match="dependent"):
            code.validate()

    def test_multi_logical_rejected_with_guidance(self):
        code = StabilizerCode(3, (PauliOp.from_label("+ZZI"),))
        with pytest.raises(InvalidCodeError, match="promote"):
            to_standard_form(code)

    def test_order_four_generator(self):
        code = StabilizerCode(1, (PauliOp.from_label("+iY"),))
        with pytest.raises(InvalidCodeError, match="square"):
            code.validate()


class TestStandardForm:
    def test_steane_any_order(self, rng):
        base = subdual_css(3)
        code = base.to_stabilizer_code()
        for _ in range(10):
            sf = to_standard_form(scrambled(code, rng, drop_logicals=True))
            assert is_css(sf)
            assert spans_equal(sf.a_x, base.a_x)
            assert spans_equal(sf.a_z, base.a_z)
            assert all(p == 0 for p in sf.x_phases)

    def test_idempotent_on_standard_input(self):
        base = subdual_css(4)
        sf = to_standard_form(base.to_stabilizer_code())
        assert spans_equal(sf.a_x, base.a_x)
        assert spans_equal(sf.a_z, base.a_z)
        assert sf.r == base.r
        assert sf.s == base.s

    def test_five_qubit_not_css(self):
        sf = to_standard_form(five_qubit_code())
        assert not is_css(sf)
        assert any(not row.is_zero() for row in sf.b.rows)
        assert sf.r == BitVec.ones(5)
        assert sf.s == BitVec.ones(5)
        sf.validate()

    def test_textbook_steane(self):
        sf = to_standard_form(textbook_steane())
        assert is_css(sf)
        assert sf.m == 3
        assert sf.r == BitVec.ones(7)
        assert sf.s == BitVec.ones(7)

    def test_group_preserved_exactly(self, rng):
        base = subdual_css(3).to_stabilizer_code()
        code = scrambled(base, rng, sign_flips=False, drop_logicals=True)
        sf = to_standard_form(code)
        out = list(sf.to_stabilizer_code().generators)
        # consistent input signs: no frame change, groups match outright
        assert sf.local_x_mask.is_zero() and sf.local_z_mask.is_zero()
        assert groups_equal(list(code.generators), out)

    def test_group_preserved_through_frame(self, rng):
        base = subdual_css(3).to_stabilizer_code()
        code = scrambled(base, rng, sign_flips=True, drop_logicals=True)
        sf = to_standard_form(code)
        out = list(sf.to_stabilizer_code().generators)
        conj = [sf.frame_conjugate(g) for g in code.generators]
        assert groups_equal(conj, out)

    def test_sign_normalization(self, rng):
        # flip some stabilizer signs; the reduced form must still carry
        # + signs on the pure-Z rows and +1 coefficients on a CSS support
        base = subdual_css(3).to_stabilizer_code()
        gens = [
            PauliOp(g.n, g.x, g.z, g.i_exp + 2 * rng.randint(0, 1))
            for g in base.generators
        ]
        code = StabilizerCode(7, tuple(gens))
        sf = to_standard_form(code)
        support = logical_zero_support(sf)
        assert all(phase == 1 for _, phase in support)

    def test_y_content_code_uses_rotation_mask(self):
        code = StabilizerCode(2, (PauliOp.from_label("+YY"),))
        sf = to_standard_form(code)
        sf.validate()
        assert not sf.local_s_mask.is_zero()
        # conjugating the input by the recorded frame gives the output group
        conj = [sf.frame_conjugate(g) for g in code.generators]
        out = list(sf.to_stabilizer_code().generators)
        assert groups_equal(conj, out)

    def test_mixed_declared_logical_z_is_purified(self):
        # multiply the declared logical Z by an X stabilizer: same coset,
        # but the operator now carries X content that must be cleared
        base = subdual_css(3).to_stabilizer_code()
        mixed = base.logical_z * base.generators[0]
        code = StabilizerCode(7, base.generators, base.logical_x, mixed)
        sf = to_standard_form(code)
        sf.validate()
        assert sf.s == BitVec.ones(7)
        # the purified support stays in the declared logical's coset
        diff = sf.r ^ BitVec(7, mixed.z)
        from korth.gf2 import in_rowspan

        assert in_rowspan(diff, sf.a_z)

    def test_output_state_is_stabilized(self, rng):
        # sparse state-vector oracle: the reconstructed logical zero must be
        # a +1 eigenvector of every generator, including the pure-Z ones
        for base in (subdual_css(3).to_stabilizer_code(), five_qubit_code()):
            code = scrambled(base, rng, sign_flips=False)
            sf = to_standard_form(code)
            state = sparse_logical_zero(sf)
            for i in range(sf.m):
                assert states_proportional(
                    apply_pauli(state, sf.x_row_pauli(i)), state
                ) == pytest.approx(1)
            for j in range(sf.a_z.nrows):
                assert states_proportional(
                    apply_pauli(state, sf.z_row_pauli(j)), state
                ) == pytest.approx(1)
            # and of Z_r with eigenvalue +1, while X_s maps it to |1_L>
            z_r = PauliOp(sf.n, 0, sf.r.bits, 0)
            assert states_proportional(apply_pauli(state, z_r), state) == pytest.approx(1)


class TestLogicalZeroSupport:
    def test_steane_support(self):
        sf = subdual_css(3)
        support = logical_zero_support(sf)
        assert len(support) == 8
        strings = {v.bits for v, _ in support}
        assert strings == {v.bits for v in span_enumerate(sf.a_x)}
        assert all(phase == 1 for _, phase in support)

    def test_trivial_code(self):
        sf = css_standard_form(
            BitMat.zero(0, 1), BitMat.zero(0, 1), BitVec.ones(1), BitVec.ones(1)
        )
        assert logical_zero_support(sf) == [(BitVec.zeros(1), 1)]

    def test_subdual4_weights(self):
        support = logical_zero_support(subdual_css(4))
        assert len(support) == 16
        assert sorted({v.weight for v, _ in support}) == [0, 8]

    def test_five_qubit_phases_fourth_roots(self):
        sf = to_standard_form(five_qubit_code())
        support = logical_zero_support(sf)
        assert len(support) == 2 ** sf.m
        assert all(phase in (1, 1j, -1, -1j) for _, phase in support)

    def test_closed_under_xor(self):
        sf = subdual_css(3)
        strings = {v.bits for v, _ in logical_zero_support(sf)}
        for a in strings:
            for b in strings:
                assert a ^ b in strings


class TestDegeneracy:
    def test_hamming_all_singletons(self):
        part = degeneracy_classes(hamming_parity_check(4))
        assert len(part.classes) == 15
        assert all(len(c.indices) == 1 and not c.undetectable for c in part.classes)

    def test_duplicate_columns_share_class(self):
        M = BitMat.from_strings(["1100", "1100"])
        part = degeneracy_classes(M)
        by_rep = {c.representative: c for c in part.classes}
        assert by_rep[0].indices == (0, 1)
        assert by_rep[2].indices == (2, 3)
        assert by_rep[2].undetectable

    def test_row_operation_invariance(self, rng):
        from conftest import random_full_rank

        M = random_full_rank(rng, 3, 8)
        rows = list(M.rows)
        rows[0] = rows[0] ^ rows[1]
        rows[2] = rows[2] ^ rows[0]
        M2 = BitMat.from_rows(rows)
        part1 = degeneracy_classes(M)
        part2 = degeneracy_classes(M2)
        assert [c.indices for c in part1.classes] == [c.indices for c in part2.classes]


class TestNondegenerateReduction:
    def test_identity_on_nondegenerate(self):
        sf = subdual_css(3)
        theta = DyadicPhaseVector(2, tuple(range(7)))
        view, reduced = nondegenerate_reduction(sf, theta)
        assert reduced == theta
        assert view.representatives == tuple(range(7))

    def test_two_qubit_class_sums(self):
        a_x = BitMat.from_strings(["1100", "0011"])
        a_z = BitMat.from_strings(["1111"])
        sf = css_standard_form(a_x, a_z)
        theta = DyadicPhaseVector(3, (1, 1, 2, 5))
        view, reduced = nondegenerate_reduction(sf, theta)
        assert reduced.p == (2, 0, 7, 0)
        assert len({c for c in view.a_x.column_ints()}) == view.a_x.ncols

    def test_reduced_columns_distinct(self, rng):
        from korth.gf2 import null_space

        from conftest import random_full_rank

        base = random_full_rank(rng, 3, 5)
        cols = base.column_ints() + [base.column_ints()[0]] * 2
        a_x = BitMat.from_ints(
            7, [sum(((c >> i) & 1) << j for j, c in enumerate(cols)) for i in range(3)]
        )
        a_z = BitMat.from_rows(list(null_space(a_x).rows)[:3])
        sf = css_standard_form(a_x, a_z)
        theta = DyadicPhaseVector(2, tuple(rng.randrange(4) for _ in range(7)))
        view, _ = nondegenerate_reduction(sf, theta)
        vals = view.a_x.column_ints()
        assert len(set(vals)) == len(vals)


class TestJson:
    def test_round_trip_bit_exact(self):
        code = subdual_css(4).to_stabilizer_code()
        text = code_to_json(code)
        again = code_from_json(text)
        assert again == code
        assert code_to_json(again) == text

    def test_parse_canonical_dict(self):
        d = {
            "n": 5,
            "stabilizers": ["+XZZXI", "+IXZZX", "+XIXZZ", "+ZXIXZ"],
            "logical_x": "+XXXXX",
            "logical_z": "+ZZZZZ",
        }
        code = code_from_json(json.dumps(d))
        assert code == five_qubit_code()
        assert json.loads(code_to_json(code)) == d

    def test_logicals_optional(self):
        d = {"n": 2, "stabilizers": ["+XX"]}
        code = code_from_json(json.dumps(d))
        assert code.logical_x is None
        sf = to_standard_form(code)
        sf.validate()

    def test_bad_label_rejected(self):
        with pytest.raises(ValueError):
            code_from_json(json.dumps({"n": 2, "stabilizers": ["XX"]}))


class TestCssStandardForm:
    def test_steane_from_checks(self):
        h = hamming_parity_check(3)
        sf = css_standard_form(h, h)
        sf.validate()
        assert is_css(sf)
        assert sf.r.dot_parity(sf.s) == 1

    def test_non_orthogonal_rejected(self):
        with pytest.raises(InvalidCodeError, match="orthogonal"):
            css_standard_form(BitMat.identity(3), BitMat.identity(3))

    def test_wrong_logical_count(self):
        h = hamming_parity_check(3)
        with pytest.raises(InvalidCodeError, match="logical"):
            css_standard_form(h, BitMat.zero(0, 7))


class TestGroupMembershipHelper:
    def test_sign_sensitive(self):
        gens = [PauliOp.from_label("+ZZ")]
        assert pauli_group_member(PauliOp.from_label("+ZZ"), gens)
        assert not pauli_group_member(PauliOp.from_label("-ZZ"), gens)
