"""Dense statevector simulator for the diagonal-cost circuits used here.

Basis ordering is little endian and fixed: amplitude index b stores the
basis state whose qubit i equals bit i of b.  All bitstring I/O goes through
the helpers in :mod:`quantcut.transform` so the convention exists in exactly
one place.  Gates are the standard 2x2 matrices; global phase follows them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .transform import IsingHamiltonian, bits_to_string, index_to_bits

QUBIT_CAP = 24
_NORM_TOL = 1e-9


@dataclass(frozen=True)
class Statevector:
    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (1 << self.n,):
            raise ValueError(f"expected {1 << self.n} amplitudes, got {amps.shape}")
        norm_sq = float((amps.real**2 + amps.imag**2).sum())
        if abs(norm_sq - 1.0) > _NORM_TOL:
            raise ValueError(f"statevector norm^2 is {norm_sq}, must be 1 within {_NORM_TOL}")
        object.__setattr__(self, "amplitudes", amps)

    def probabilities(self) -> np.ndarray:
        return self.amplitudes.real**2 + self.amplitudes.imag**2


def init_zero(n: int, cap: int = QUBIT_CAP) -> Statevector:
    """The all-zeros basis state on n qubits."""
    if not 1 <= n <= cap:
        raise ValueError(f"qubit count {n} outside the supported range [1, {cap}]")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = 1.0
    return Statevector(n, amps)


def _check_qubit(state: Statevector, qubit: int):
    if not 0 <= qubit < state.n:
        raise IndexError(f"qubit {qubit} out of range for {state.n} qubits")


def _apply_single(state: Statevector, qubit: int, matrix: np.ndarray) -> Statevector:
    # Index layout: b = high * 2^(q+1) + bit * 2^q + low.
    _check_qubit(state, qubit)
    block = state.amplitudes.reshape(1 << (state.n - 1 - qubit), 2, 1 << qubit)
    out = np.empty_like(block)
    out[:, 0, :] = matrix[0, 0] * block[:, 0, :] + matrix[0, 1] * block[:, 1, :]
    out[:, 1, :] = matrix[1, 0] * block[:, 0, :] + matrix[1, 1] * block[:, 1, :]
    return Statevector(state.n, out.reshape(-1))


def apply_ry(state: Statevector, qubit: int, theta: float) -> Statevector:
    """Rotation about Y: [[cos t/2, -sin t/2], [sin t/2, cos t/2]]."""
    c, s = np.cos(theta / 2.0), np.sin(theta / 2.0)
    return _apply_single(state, qubit, np.array([[c, -s], [s, c]], dtype=np.complex128))


def apply_rx(state: Statevector, qubit: int, theta: float) -> Statevector:
    """Rotation about X: [[cos t/2, -i sin t/2], [-i sin t/2, cos t/2]]."""
    c, s = np.cos(theta / 2.0), np.sin(theta / 2.0)
    return _apply_single(state, qubit, np.array([[c, -1j * s], [-1j * s, c]]))


def apply_rz(state: Statevector, qubit: int, phi: float) -> Statevector:
    """Rotation about Z: diag(e^{-i phi/2}, e^{+i phi/2})."""
    phase = np.exp(-1j * phi / 2.0)
    return _apply_single(state, qubit, np.array([[phase, 0.0], [0.0, np.conj(phase)]]))


def apply_h(state: Statevector, qubit: int) -> Statevector:
    """Hadamard gate."""
    r = 1.0 / np.sqrt(2.0)
    return _apply_single(state, qubit, np.array([[r, r], [r, -r]], dtype=np.complex128))


def apply_cz(state: Statevector, control: int, target: int) -> Statevector:
    """Controlled-Z; symmetric in its two (distinct) qubits."""
    _check_qubit(state, control)
    _check_qubit(state, target)
    if control == target:
        raise ValueError("control and target must be distinct qubits")
    idx = np.arange(1 << state.n, dtype=np.int64)
    both = (((idx >> control) & 1) & ((idx >> target) & 1)).astype(bool)
    amps = state.amplitudes.copy()
    amps[both] = -amps[both]
    return Statevector(state.n, amps)


def apply_cost_phase(state: Statevector, ham: IsingHamiltonian, gamma: float) -> Statevector:
    """Diagonal evolution e^{-i gamma H}: phase each basis amplitude by its energy."""
    if ham.n != state.n:
        raise ValueError(f"Hamiltonian on {ham.n} qubits, state on {state.n}")
    phases = np.exp(-1j * gamma * ham.energy_table())
    return Statevector(state.n, state.amplitudes * phases)


def expectation(state: Statevector, ham: IsingHamiltonian) -> float:
    """Exact energy expectation sum_b |amp_b|^2 E(b)."""
    if ham.n != state.n:
        raise ValueError(f"Hamiltonian on {ham.n} qubits, state on {state.n}")
    return float(state.probabilities() @ ham.energy_table())


@dataclass(frozen=True)
class SampleCounts:
    shots: int
    counts: dict

    def __post_init__(self):
        if sum(self.counts.values()) != self.shots:
            raise ValueError("counts must sum to the number of shots")


def sample(state: Statevector, shots: int, seed: int) -> SampleCounts:
    """Multinomial draw from the state's probabilities; deterministic per seed."""
    if shots < 1:
        raise ValueError("shots must be at least 1")
    rng = np.random.default_rng(seed)
    p = state.probabilities()
    counts = rng.multinomial(shots, p / p.sum())
    observed = {
        bits_to_string(index_to_bits(int(b), state.n)): int(counts[b])
        for b in np.flatnonzero(counts)
    }
    return SampleCounts(shots=shots, counts=observed)


def probability_rows(state: Statevector):
    """(bitstring, probability) pairs ordered by basis index; the histogram format."""
    probs = state.probabilities()
    return [
        (bits_to_string(index_to_bits(b, state.n)), float(probs[b]))
        for b in range(probs.size)
    ]
