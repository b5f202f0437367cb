"""MaxCut instances as QUBO programs and diagonal Ising Hamiltonians.

The three problem forms are tied together by identities that hold for every
bitstring x (spins z_i = 1 - 2 x_i):

    -cut_value(w, x) == maxcut_to_qubo(w).objective(x)
                     == qubo_to_ising(...).energy(z)

Bitstring conventions live here.  A basis index b encodes vertex/qubit i in
bit i of b (little endian), and ties between equally good bitstrings are
broken toward the lexicographically smallest tuple (x_0, x_1, ...), i.e. the
string with the lowest binary value when read left to right.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .datagraph import WeightMatrix

ENUMERATION_CAP = 24


def index_to_bits(index: int, n: int) -> np.ndarray:
    """Bits of a basis index; bit i is the value of vertex/qubit i."""
    return ((np.int64(index) >> np.arange(n, dtype=np.int64)) & 1).astype(np.int64)


def bits_to_index(bits) -> int:
    bits = np.asarray(bits, dtype=np.int64)
    return int((bits << np.arange(bits.size, dtype=np.int64)).sum())


def bits_to_string(bits) -> str:
    """Render a bitstring with vertex 0 leftmost."""
    return "".join(str(int(b)) for b in np.asarray(bits))


def string_to_bits(s: str) -> np.ndarray:
    return np.array([int(ch) for ch in s], dtype=np.int64)


def all_bitstrings(n: int) -> np.ndarray:
    """(2^n, n) matrix whose row b equals index_to_bits(b, n)."""
    idx = np.arange(1 << n, dtype=np.int64)
    return (idx[:, None] >> np.arange(n, dtype=np.int64)) & 1


def lexicographically_smallest(bit_rows: np.ndarray) -> np.ndarray:
    """Row that comes first when the bitstrings are read left to right."""
    order = np.lexsort(bit_rows.T[::-1])
    return bit_rows[order[0]]


@dataclass(frozen=True)
class QuboProgram:
    """Minimisation-form binary quadratic program x'Qx + linear'x + offset.

    Q is kept symmetric; a nonzero diagonal is legal (x_i^2 == x_i on binary
    inputs) but the MaxCut construction always folds vertex terms into
    ``linear``.  ``objective`` also serves as the continuous extension used
    by the relaxation.
    """

    matrix: np.ndarray
    linear: np.ndarray
    offset: float = 0.0

    def __post_init__(self):
        q = np.asarray(self.matrix, dtype=float)
        lin = np.asarray(self.linear, dtype=float)
        if q.ndim != 2 or q.shape[0] != q.shape[1]:
            raise ValueError("quadratic matrix must be square")
        if lin.shape != (q.shape[0],):
            raise ValueError("linear term length must match the matrix size")
        if not np.allclose(q, q.T, rtol=1e-12, atol=1e-12, equal_nan=True):
            raise ValueError("quadratic matrix must be symmetric")
        object.__setattr__(self, "matrix", (q + q.T) / 2.0)
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "offset", float(self.offset))

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def objective(self, x) -> float:
        """Objective at a binary or continuous point."""
        x = np.asarray(x, dtype=float)
        return float(x @ self.matrix @ x + self.linear @ x + self.offset)

    def gradient(self, c) -> np.ndarray:
        """Gradient of the continuous extension at c."""
        c = np.asarray(c, dtype=float)
        return 2.0 * (self.matrix @ c) + self.linear


@dataclass(frozen=True)
class IsingHamiltonian:
    """Diagonal spin Hamiltonian sum_{i<j} J_ij z_i z_j + sum_i h_i z_i + offset."""

    n: int
    couplings: dict
    fields: np.ndarray
    offset: float = 0.0

    def __post_init__(self):
        h = np.asarray(self.fields, dtype=float)
        if h.shape != (self.n,):
            raise ValueError("field vector length must equal the qubit count")
        couplings = {}
        for (i, j), value in self.couplings.items():
            if not (0 <= i < j < self.n):
                raise ValueError(f"coupling key ({i}, {j}) must satisfy 0 <= i < j < n")
            couplings[(i, j)] = float(value)
        object.__setattr__(self, "couplings", couplings)
        object.__setattr__(self, "fields", h)
        object.__setattr__(self, "offset", float(self.offset))

    def energy(self, spins) -> float:
        """Energy of one spin assignment (entries in {-1, +1})."""
        z = np.asarray(spins, dtype=float)
        if z.shape != (self.n,):
            raise ValueError("spin vector length must equal the qubit count")
        e = self.offset + float(self.fields @ z)
        for (i, j), coupling in self.couplings.items():
            e += coupling * z[i] * z[j]
        return e

    def energy_of_bits(self, bits) -> float:
        """Energy of a bitstring under z_i = 1 - 2 x_i."""
        return self.energy(1.0 - 2.0 * np.asarray(bits, dtype=float))

    def energy_table(self) -> np.ndarray:
        """Energies of all 2^n basis states, indexed little endian."""
        idx = np.arange(1 << self.n, dtype=np.int64)
        energies = np.full(idx.size, self.offset, dtype=float)
        for (i, j), coupling in self.couplings.items():
            z_i = 1.0 - 2.0 * ((idx >> i) & 1)
            z_j = 1.0 - 2.0 * ((idx >> j) & 1)
            energies += coupling * z_i * z_j
        for i in np.flatnonzero(self.fields):
            energies += self.fields[i] * (1.0 - 2.0 * ((idx >> i) & 1))
        return energies


def cut_value(w: WeightMatrix, bits) -> float:
    """Total weight of the edges crossing the 0/1 partition."""
    x = np.asarray(bits)
    if x.shape != (w.n,):
        raise ValueError(f"bitstring length {x.shape} does not match {w.n} vertices")
    iu, ju = np.triu_indices(w.n, k=1)
    crossing = x[iu] != x[ju]
    return float(w.w[iu, ju][crossing].sum())


def maxcut_to_qubo(w: WeightMatrix) -> QuboProgram:
    """QUBO whose objective equals -cut_value(w, x) on every bitstring.

    With [x_i != x_j] = x_i + x_j - 2 x_i x_j the off-diagonal pair (i, j)
    contributes 2 w_ij x_i x_j, which the symmetric-matrix convention splits
    as Q_ij = Q_ji = w_ij, and each vertex picks up -sum_j w_ij x_i.
    """
    return QuboProgram(matrix=w.w.copy(), linear=-w.w.sum(axis=1), offset=0.0)


def qubo_to_ising(q: QuboProgram) -> IsingHamiltonian:
    """Spin form of a QUBO under the substitution x_i = (1 - z_i) / 2.

    Exact on binary inputs: energy(z(x)) == objective(x) for every x.  For
    MaxCut-derived QUBOs the field vector cancels to exactly zero.
    """
    quad = q.matrix.copy()
    lin = q.linear + np.diag(quad)
    np.fill_diagonal(quad, 0.0)
    couplings = {}
    for i in range(q.n):
        for j in range(i + 1, q.n):
            if quad[i, j] != 0.0:
                couplings[(i, j)] = quad[i, j] / 2.0
    fields = -(quad.sum(axis=1) + lin) / 2.0
    iu, ju = np.triu_indices(q.n, k=1)
    offset = q.offset + quad[iu, ju].sum() / 2.0 + lin.sum() / 2.0
    return IsingHamiltonian(n=q.n, couplings=couplings, fields=fields, offset=offset)


def brute_force_solve(ham: IsingHamiltonian, cap: int = ENUMERATION_CAP):
    """Exact minimum-energy bitstring by full enumeration.

    Returns ``(bits, energy)``.  Ties are broken toward the lexicographically
    smallest bitstring, which makes the baseline deterministic (a MaxCut
    instance always ties with the complement partition).
    """
    if ham.n > cap:
        raise ValueError(f"{ham.n} qubits exceeds the enumeration cap of {cap}")
    energies = ham.energy_table()
    best = float(energies.min())
    ties = np.flatnonzero(energies == energies.min())
    rows = (ties[:, None] >> np.arange(ham.n, dtype=np.int64)) & 1
    return lexicographically_smallest(rows), best
