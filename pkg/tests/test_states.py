import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entforge.errors import ConfigurationError, NumericalContractError
from entforge.states import (
    Bipartition,
    DensityMatrix,
    StateVector,
    apply_unitary,
    partial_transpose,
    purity,
    reduced_single_qubit,
    to_density,
    trace_norm,
    zero_state,
)

from conftest import (
    embed_operator,
    partial_trace_keep_one,
    random_density,
    random_state,
    random_unitary,
)


class TestStateVector:
    def test_zero_state(self):
        psi = zero_state(3)
        assert psi.num_qubits == 3
        assert psi.amplitudes[0] == 1.0
        assert np.all(psi.amplitudes[1:] == 0.0)

    def test_rejects_wrong_length(self):
        with pytest.raises(ConfigurationError):
            StateVector(2, np.ones(3, dtype=np.complex128))

    def test_rejects_unnormalized(self):
        with pytest.raises(NumericalContractError):
            StateVector(1, np.array([1.0, 1.0], dtype=np.complex128))

    def test_check_false_skips_validation(self):
        sv = StateVector(1, np.array([2.0, 0.0], dtype=np.complex128), check=False)
        assert sv.amplitudes[0] == 2.0

    def test_qubit_zero_is_most_significant_bit(self):
        x = np.array([[0, 1], [1, 0]], dtype=np.complex128)
        psi = apply_unitary(zero_state(3), x, (0,))
        assert psi.amplitudes[0b100] == pytest.approx(1.0)
        psi = apply_unitary(zero_state(3), x, (2,))
        assert psi.amplitudes[0b001] == pytest.approx(1.0)


class TestDensityMatrix:
    def test_to_density_outer_product(self):
        psi = random_state(2, seed=3)
        rho = to_density(psi)
        expected = np.outer(psi.amplitudes, psi.amplitudes.conj())
        np.testing.assert_allclose(rho.entries, expected, atol=1e-14)

    def test_rejects_nonhermitian(self):
        m = np.array([[0.5, 0.3], [0.1, 0.5]], dtype=np.complex128)
        with pytest.raises(NumericalContractError):
            DensityMatrix(1, m)

    def test_rejects_trace_off(self):
        with pytest.raises(NumericalContractError):
            DensityMatrix(1, 0.7 * np.eye(2, dtype=np.complex128))

    def test_rejects_negative_eigenvalue(self):
        m = np.diag([1.5, -0.5]).astype(np.complex128)
        with pytest.raises(NumericalContractError):
            DensityMatrix(1, m)


class TestBipartition:
    def test_sorts_indices(self):
        assert Bipartition((2, 0, 1)).side_b == (0, 1, 2)

    def test_rejects_duplicates(self):
        with pytest.raises(ConfigurationError):
            Bipartition((0, 0, 1))

    def test_rejects_negative(self):
        with pytest.raises(ConfigurationError):
            Bipartition((-1, 2))

    def test_rejects_empty(self):
        with pytest.raises(ConfigurationError):
            Bipartition(())

    def test_labels(self):
        p = Bipartition((0, 1, 2))
        assert p.label() == "[0,1,2]"
        assert p.column_label() == "0_1_2"

    def test_from_text_variants(self):
        assert Bipartition.from_text("[0,1,2]").side_b == (0, 1, 2)
        assert Bipartition.from_text("2,0").side_b == (0, 2)

    def test_complement(self):
        assert Bipartition((0, 2)).complement(4).side_b == (1, 3)

    def test_validate_for_rejects_full_cover(self):
        with pytest.raises(ConfigurationError):
            Bipartition((0, 1)).validate_for(2)
        with pytest.raises(ConfigurationError):
            Bipartition((3,)).validate_for(3)


class TestApplyUnitary:
    @pytest.mark.parametrize("wire", [0, 1, 2])
    def test_single_qubit_matches_embedding_oracle(self, wire):
        u = random_unitary(2, seed=10 + wire)
        psi = random_state(3, seed=20 + wire)
        got = apply_unitary(psi, u, (wire,))
        full = embed_operator(u, (wire,), 3)
        np.testing.assert_allclose(got.amplitudes, full @ psi.amplitudes, atol=1e-12)

    @pytest.mark.parametrize("wires", [(0, 1), (1, 0), (0, 2), (2, 0), (1, 3), (3, 1)])
    def test_two_qubit_matches_embedding_oracle(self, wires):
        u = random_unitary(4, seed=sum(wires) + 7 * wires[0])
        psi = random_state(4, seed=31)
        got = apply_unitary(psi, u, wires)
        full = embed_operator(u, wires, 4)
        np.testing.assert_allclose(got.amplitudes, full @ psi.amplitudes, atol=1e-12)

    def test_density_conjugation_matches_embedding_oracle(self):
        u = random_unitary(4, seed=5)
        rho = random_density(3, seed=6)
        got = apply_unitary(rho, u, (2, 0))
        full = embed_operator(u, (2, 0), 3)
        np.testing.assert_allclose(
            got.entries, full @ rho.entries @ full.conj().T, atol=1e-12
        )

    def test_rejects_nonunitary(self):
        with pytest.raises(NumericalContractError):
            apply_unitary(zero_state(2), np.ones((2, 2), dtype=np.complex128), (0,))

    def test_rejects_repeated_wire(self):
        u = random_unitary(4, seed=2)
        with pytest.raises(ConfigurationError):
            apply_unitary(zero_state(3), u, (1, 1))

    def test_rejects_out_of_range_wire(self):
        u = random_unitary(2, seed=3)
        with pytest.raises(ConfigurationError):
            apply_unitary(zero_state(2), u, (2,))

    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(0, 10_000), wire=st.integers(0, 2))
    def test_preserves_norm(self, seed, wire):
        psi = random_state(3, seed=seed)
        u = random_unitary(2, seed=seed + 1)
        out = apply_unitary(psi, u, (wire,))
        assert np.linalg.norm(out.amplitudes) == pytest.approx(1.0, abs=1e-10)


class TestReductions:
    @pytest.mark.parametrize("keep", [0, 1, 2, 3])
    def test_reduced_single_qubit_matches_loop_oracle(self, keep):
        psi = random_state(4, seed=40 + keep)
        rho_full = np.outer(psi.amplitudes, psi.amplitudes.conj())
        expected = partial_trace_keep_one(rho_full, keep, 4)
        got = reduced_single_qubit(psi, keep)
        np.testing.assert_allclose(got.entries, expected, atol=1e-12)

    def test_reduced_from_density_matches_loop_oracle(self):
        rho = random_density(3, seed=50)
        expected = partial_trace_keep_one(rho.entries, 1, 3)
        got = reduced_single_qubit(rho, 1)
        np.testing.assert_allclose(got.entries, expected, atol=1e-12)

    def test_purity_pure_state(self):
        rho = to_density(random_state(3, seed=60))
        assert purity(rho) == pytest.approx(1.0, abs=1e-12)

    def test_purity_maximally_mixed(self):
        rho = DensityMatrix(2, np.eye(4, dtype=np.complex128) / 4)
        assert purity(rho) == pytest.approx(0.25, abs=1e-12)


class TestPartialTransposeAndTraceNorm:
    def test_partial_transpose_matches_loop_oracle(self):
        rho = random_density(3, seed=70)
        part = Bipartition((0, 2))
        got = partial_transpose(rho, part)
        n = 3
        dim = 8
        expected = np.zeros((dim, dim), dtype=np.complex128)
        moved = {0, 2}
        for i in range(dim):
            for j in range(dim):
                # transpose only the bits belonging to side B
                ib = [(i >> (n - 1 - q)) & 1 for q in range(n)]
                jb = [(j >> (n - 1 - q)) & 1 for q in range(n)]
                for q in moved:
                    ib[q], jb[q] = jb[q], ib[q]
                ni = int("".join(map(str, ib)), 2)
                nj = int("".join(map(str, jb)), 2)
                expected[ni, nj] = rho.entries[i, j]
        np.testing.assert_allclose(got, expected, atol=1e-14)

    def test_partial_transpose_is_involution(self):
        rho = random_density(2, seed=71)
        part = Bipartition((1,))
        once = partial_transpose(rho, part)
        twice = partial_transpose(DensityMatrix(2, once, check=False), part)
        np.testing.assert_allclose(twice, rho.entries, atol=1e-14)

    def test_trace_norm_of_known_matrix(self):
        m = np.diag([0.5, 0.5, 0.5, -0.5]).astype(np.complex128)
        assert trace_norm(m) == pytest.approx(2.0, abs=1e-12)

    def test_trace_norm_rejects_nonhermitian(self):
        m = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=np.complex128)
        with pytest.raises(NumericalContractError):
            trace_norm(m)

    def test_density_purity_equals_trace_rho_squared(self):
        rho = random_density(3, seed=72)
        assert purity(rho) == pytest.approx(
            float(np.trace(rho.entries @ rho.entries).real), abs=1e-12
        )
