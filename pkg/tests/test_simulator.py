import numpy as np
import pytest

import oracles
import quantcut as qc

RT2 = np.sqrt(2.0) / 2.0


def single_edge_ham(weight=7.0):
    w = qc.WeightMatrix(np.array([[0.0, weight], [weight, 0.0]]))
    return qc.qubo_to_ising(qc.maxcut_to_qubo(w))


def random_ham(seed, n):
    rng = np.random.default_rng(seed)
    return qc.qubo_to_ising(qc.maxcut_to_qubo(qc.WeightMatrix(oracles.random_weight_matrix(rng, n))))


def random_state(seed, n):
    rng = np.random.default_rng(seed)
    amps = rng.normal(size=1 << n) + 1j * rng.normal(size=1 << n)
    return qc.Statevector(n, amps / np.linalg.norm(amps))


class TestInit:
    def test_one_qubit(self):
        assert qc.init_zero(1).amplitudes.tolist() == [1.0, 0.0]

    def test_two_qubits(self):
        assert qc.init_zero(2).amplitudes.tolist() == [1.0, 0.0, 0.0, 0.0]

    def test_cap(self):
        with pytest.raises(ValueError):
            qc.init_zero(25)
        with pytest.raises(ValueError):
            qc.init_zero(0)

    def test_norm_enforced(self):
        with pytest.raises(ValueError, match="norm"):
            qc.Statevector(1, np.array([1.0, 1.0]))


class TestSingleQubitGates:
    def test_ry_half_pi(self):
        s = qc.apply_ry(qc.init_zero(1), 0, np.pi / 2)
        assert np.allclose(s.amplitudes, [RT2, RT2], atol=1e-12)

    def test_ry_zero_is_identity(self):
        s = random_state(1, 3)
        assert np.allclose(qc.apply_ry(s, 1, 0.0).amplitudes, s.amplitudes, atol=1e-15)

    def test_ry_inverse(self):
        s = random_state(2, 3)
        back = qc.apply_ry(qc.apply_ry(s, 2, 0.7), 2, -0.7)
        assert np.allclose(back.amplitudes, s.amplitudes, atol=1e-12)

    def test_h_on_zero(self):
        s = qc.apply_h(qc.init_zero(1), 0)
        assert np.allclose(s.amplitudes, [RT2, RT2], atol=1e-12)

    def test_h_squared_is_identity(self):
        s = random_state(3, 2)
        back = qc.apply_h(qc.apply_h(s, 0), 0)
        assert np.allclose(back.amplitudes, s.amplitudes, atol=1e-12)

    def test_rx_pi_on_zero(self):
        s = qc.apply_rx(qc.init_zero(1), 0, np.pi)
        assert np.allclose(s.amplitudes, [0.0, -1j], atol=1e-12)

    def test_rz_additivity(self):
        s = random_state(4, 2)
        one = qc.apply_rz(qc.apply_rz(s, 1, 0.3), 1, 1.1)
        two = qc.apply_rz(s, 1, 1.4)
        assert np.allclose(one.amplitudes, two.amplitudes, atol=1e-12)

    def test_qubit_index_out_of_range(self):
        with pytest.raises(IndexError):
            qc.apply_ry(qc.init_zero(2), 2, 0.1)

    def test_little_endian_targeting(self):
        # flipping qubit 0 populates index 1; flipping qubit 1 populates index 2
        up0 = qc.apply_ry(qc.init_zero(2), 0, np.pi)
        assert abs(up0.amplitudes[1]) == pytest.approx(1.0)
        up1 = qc.apply_ry(qc.init_zero(2), 1, np.pi)
        assert abs(up1.amplitudes[2]) == pytest.approx(1.0)


class TestCz:
    def test_flips_one_one(self):
        s = qc.init_zero(2)
        for q in (0, 1):
            s = qc.apply_ry(s, q, np.pi)  # now |11> up to sign
        flipped = qc.apply_cz(s, 0, 1)
        assert np.allclose(flipped.amplitudes, -s.amplitudes, atol=1e-12)

    def test_symmetric_in_qubits(self):
        s = random_state(5, 3)
        a = qc.apply_cz(s, 0, 2)
        b = qc.apply_cz(s, 2, 0)
        assert np.allclose(a.amplitudes, b.amplitudes, atol=1e-15)

    def test_same_qubit_rejected(self):
        with pytest.raises(ValueError):
            qc.apply_cz(qc.init_zero(2), 1, 1)


class TestCostPhase:
    def test_gamma_zero_identity(self):
        s = random_state(6, 2)
        out = qc.apply_cost_phase(s, single_edge_ham(), 0.0)
        assert np.allclose(out.amplitudes, s.amplitudes, atol=1e-15)

    def test_probabilities_unchanged(self):
        s = random_state(7, 2)
        out = qc.apply_cost_phase(s, single_edge_ham(), 0.83)
        assert np.allclose(out.probabilities(), s.probabilities(), atol=1e-12)

    def test_inverse(self):
        ham = random_ham(11, 3)
        s = random_state(8, 3)
        back = qc.apply_cost_phase(qc.apply_cost_phase(s, ham, 0.6), ham, -0.6)
        assert np.allclose(back.amplitudes, s.amplitudes, atol=1e-12)

    def test_phases_match_energies(self):
        ham = single_edge_ham()
        s = qc.apply_h(qc.apply_h(qc.init_zero(2), 0), 1)
        out = qc.apply_cost_phase(s, ham, 0.31)
        table = ham.energy_table()
        expected = s.amplitudes * np.exp(-1j * 0.31 * table)
        assert np.allclose(out.amplitudes, expected, atol=1e-12)

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            qc.apply_cost_phase(qc.init_zero(3), single_edge_ham(), 0.1)


class TestExpectation:
    def test_basis_state_is_eigenstate(self):
        ham = random_ham(13, 3)
        for b in range(8):
            amps = np.zeros(8, dtype=complex)
            amps[b] = 1.0
            s = qc.Statevector(3, amps)
            assert qc.expectation(s, ham) == pytest.approx(
                ham.energy_of_bits(qc.index_to_bits(b, 3)), abs=1e-12
            )

    def test_uniform_single_edge(self):
        ham = single_edge_ham()
        s = qc.apply_h(qc.apply_h(qc.init_zero(2), 0), 1)
        # mean of (0, -7, -7, 0)
        assert qc.expectation(s, ham) == pytest.approx(-3.5, abs=1e-12)

    def test_variational_bound(self):
        ham = random_ham(17, 4)
        _, emin = qc.brute_force_solve(ham)
        for seed in range(5):
            assert qc.expectation(random_state(seed, 4), ham) >= emin - 1e-9


class TestSample:
    def test_basis_state(self):
        amps = np.zeros(4, dtype=complex)
        amps[2] = 1.0
        counts = qc.sample(qc.Statevector(2, amps), 1000, seed=0)
        assert counts.counts == {"01": 1000}

    def test_uniform_within_five_sigma(self):
        s = qc.apply_h(qc.init_zero(1), 0)
        counts = qc.sample(s, 100_000, seed=42)
        sigma = np.sqrt(100_000 * 0.25)
        assert abs(counts.counts["0"] - 50_000) < 5 * sigma

    def test_deterministic(self):
        s = random_state(9, 3)
        assert qc.sample(s, 500, seed=7).counts == qc.sample(s, 500, seed=7).counts

    def test_counts_sum_to_shots(self):
        s = random_state(10, 4)
        counts = qc.sample(s, 999, seed=3)
        assert sum(counts.counts.values()) == 999

    def test_shots_positive(self):
        with pytest.raises(ValueError):
            qc.sample(qc.init_zero(1), 0, seed=0)


class TestNormPreservation:
    def test_random_gate_sequences(self):
        rng = np.random.default_rng(2024)
        for n in (2, 5, 8):
            state = qc.init_zero(n)
            ham = random_ham(int(rng.integers(1e6)), n)
            for _ in range(1000):
                kind = rng.integers(0, 6)
                q = int(rng.integers(0, n))
                angle = float(rng.uniform(-np.pi, np.pi))
                if kind == 0:
                    state = qc.apply_ry(state, q, angle)
                elif kind == 1:
                    state = qc.apply_rx(state, q, angle)
                elif kind == 2:
                    state = qc.apply_rz(state, q, angle)
                elif kind == 3:
                    state = qc.apply_h(state, q)
                elif kind == 4:
                    other = int(rng.integers(0, n))
                    if other != q:
                        state = qc.apply_cz(state, q, other)
                else:
                    state = qc.apply_cost_phase(state, ham, angle)
            assert abs(state.probabilities().sum() - 1.0) < 1e-9


class TestProbabilityRows:
    def test_format(self):
        s = qc.apply_h(qc.apply_h(qc.init_zero(2), 0), 1)
        rows = qc.probability_rows(s)
        assert [r[0] for r in rows] == ["00", "10", "01", "11"]
        assert all(p == pytest.approx(0.25) for _, p in rows)
