"""Driving the statevector simulator by hand.

Amplitude index b is little endian: bit i of b is the value of qubit i.
The QAOA cost layer is diagonal, so it only spins phases; the mixers move
probability between basis states.
"""

import numpy as np

import quantcut as qc

# ---------------------------------------------------------------------------
# Single-qubit gates
# ---------------------------------------------------------------------------
s = qc.init_zero(1)
print("|0>:            ", s.amplitudes)
print("H|0>:           ", qc.apply_h(s, 0).amplitudes)
print("RY(pi/2)|0>:    ", qc.apply_ry(s, 0, np.pi / 2).amplitudes)
print("RX(pi)|0>:      ", qc.apply_rx(s, 0, np.pi).amplitudes)

# ---------------------------------------------------------------------------
# Endianness: flipping qubit 1 of |00> populates index 2 (binary 10)
# ---------------------------------------------------------------------------
s2 = qc.apply_ry(qc.init_zero(2), 1, np.pi)
print("\nafter flipping qubit 1:", np.round(s2.probabilities(), 6))

# ---------------------------------------------------------------------------
# Cost phases are diagonal: probabilities never change, phases encode energy
# ---------------------------------------------------------------------------
edge = qc.WeightMatrix(np.array([[0.0, 7.0], [7.0, 0.0]]))
ham = qc.qubo_to_ising(qc.maxcut_to_qubo(edge))
uniform = qc.apply_h(qc.apply_h(qc.init_zero(2), 0), 1)
phased = qc.apply_cost_phase(uniform, ham, gamma=0.3)
print("\nuniform probabilities:", phased.probabilities())
print("phases by basis state:", np.round(np.angle(phased.amplitudes), 3))
print("energies by basis state:", ham.energy_table())
print("expectation (mean of 0,-7,-7,0):", qc.expectation(uniform, ham))

# ---------------------------------------------------------------------------
# Seeded sampling: shot noise shrinks as 1/sqrt(shots)
# ---------------------------------------------------------------------------
for shots in (100, 10_000, 1_000_000):
    counts = qc.sample(uniform, shots, seed=1)
    freq = counts.counts.get("01", 0) / shots
    print(f"shots={shots:>9}: frequency of '01' = {freq:.4f} (exact 0.25)")

print("\nhistogram rows:", qc.probability_rows(uniform))
