"""Variational algorithms (QAOA, warm-start QAOA, VQE) driven by SPSA.

Each algorithm is a parameterised state builder; ``run_algorithm`` minimises
the exact energy expectation of that state with SPSA and extracts the most
probable bitstring from the optimised state.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace

import numpy as np

from .datagraph import WeightMatrix
from .relaxation import RelaxationConfig, RelaxedSolution, relax_qubo
from .seeding import derive_seed
from .simulator import (
    Statevector,
    apply_cost_phase,
    apply_cz,
    apply_h,
    apply_rx,
    apply_ry,
    apply_rz,
    init_zero,
    sample,
)
from .transform import (
    IsingHamiltonian,
    bits_to_index,
    bits_to_string,
    cut_value,
    index_to_bits,
    lexicographically_smallest,
    maxcut_to_qubo,
    string_to_bits,
)

ALGORITHM_KINDS = ("qaoa", "ws_qaoa", "vqe")
ENTANGLERS = ("linear_cz", "full_cz")
DEFAULT_QAOA_LAYERS = 3
DEFAULT_VQE_REPS = 2


@dataclass(frozen=True)
class QaoaParameters:
    """Per-layer cost angles (gammas) and mixer angles (betas).

    The state builders accept zero layers (a bare initial state); the
    optimisation entry point requires at least one.
    """

    gammas: np.ndarray
    betas: np.ndarray

    def __post_init__(self):
        g = np.atleast_1d(np.asarray(self.gammas, dtype=float))
        b = np.atleast_1d(np.asarray(self.betas, dtype=float))
        if g.shape != b.shape:
            raise ValueError("gammas and betas must have the same length")
        object.__setattr__(self, "gammas", g)
        object.__setattr__(self, "betas", b)

    @property
    def p(self) -> int:
        return self.gammas.size

    @classmethod
    def from_vector(cls, v) -> "QaoaParameters":
        """Split a flat vector [gammas..., betas...] into layer angles."""
        v = np.asarray(v, dtype=float)
        if v.size % 2 != 0:
            raise ValueError("flat QAOA parameter vector must have even length")
        half = v.size // 2
        return cls(gammas=v[:half], betas=v[half:])


@dataclass(frozen=True)
class VqeLayout:
    """Hardware-efficient RY + CZ ansatz shape: reps entangling blocks."""

    n: int
    reps: int = DEFAULT_VQE_REPS
    entangler: str = "linear_cz"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one qubit")
        if self.reps < 1:
            raise ValueError("reps must be at least 1")
        if self.entangler not in ENTANGLERS:
            raise ValueError(f"entangler must be one of {ENTANGLERS}")

    @property
    def parameter_count(self) -> int:
        return self.n * (self.reps + 1)

    def entangler_pairs(self):
        if self.entangler == "linear_cz":
            return [(i, i + 1) for i in range(self.n - 1)]
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)]


@dataclass
class SpsaConfig:
    """Gain sequences a_k = a/(k+1+A)^alpha and c_k = c/(k+1)^gamma_exp."""

    max_iters: int = 300
    a: float = 0.2
    c: float = 0.1
    A: float = 10.0
    alpha: float = 0.602
    gamma_exp: float = 0.101
    seed: int = 0

    def __post_init__(self):
        if self.max_iters < 1:
            raise ValueError("max_iters must be at least 1")
        if self.a <= 0.0 or self.c <= 0.0:
            raise ValueError("gain constants a and c must be positive")
        if not 0.5 < self.alpha <= 1.0:
            raise ValueError("alpha must lie in (0.5, 1]")
        if self.gamma_exp <= 0.0:
            raise ValueError("gamma_exp must be positive")


def qaoa_state(ham: IsingHamiltonian, params: QaoaParameters) -> Statevector:
    """Standard QAOA state: uniform superposition, then alternating
    cost-phase(gamma_k) and X-mixer RX(2 beta_k) layers."""
    state = init_zero(ham.n)
    for q in range(ham.n):
        state = apply_h(state, q)
    for gamma, beta in zip(params.gammas, params.betas):
        state = apply_cost_phase(state, ham, gamma)
        for q in range(ham.n):
            state = apply_rx(state, q, 2.0 * beta)
    return state


def ws_qaoa_state(ham: IsingHamiltonian, relaxed, params: QaoaParameters) -> Statevector:
    """Warm-start QAOA state built from a relaxed solution c*.

    Qubit i starts in RY(theta_i)|0> with theta_i = 2 arcsin(sqrt(c*_i)), so
    the zero-layer sampling distribution is the independent Bernoulli(c*)
    product.  The mixer on qubit i is RY(-theta_i), RZ(-2 beta), RY(theta_i)
    in circuit order: a rotation about the axis of the initial qubit state,
    so the warm-start product state is stationary (up to phase) under pure
    mixing.

    ``relaxed`` may be a RelaxedSolution or a plain vector with entries in
    the open interval (0, 1); entries at 0 or 1 indicate a missing epsilon
    regularisation and are rejected.
    """
    c_star = relaxed.c_star if isinstance(relaxed, RelaxedSolution) else relaxed
    c_star = np.asarray(c_star, dtype=float)
    if c_star.shape != (ham.n,):
        raise ValueError("warm-start vector length must equal the qubit count")
    if np.any(c_star <= 0.0) or np.any(c_star >= 1.0):
        raise ValueError(
            "warm-start entries must lie strictly inside (0, 1); "
            "clip the relaxation with epsilon > 0 first"
        )
    thetas = 2.0 * np.arcsin(np.sqrt(c_star))
    state = init_zero(ham.n)
    for q in range(ham.n):
        state = apply_ry(state, q, thetas[q])
    for gamma, beta in zip(params.gammas, params.betas):
        state = apply_cost_phase(state, ham, gamma)
        for q in range(ham.n):
            state = apply_ry(state, q, -thetas[q])
            state = apply_rz(state, q, -2.0 * beta)
            state = apply_ry(state, q, thetas[q])
    return state


def vqe_state(layout: VqeLayout, params) -> Statevector:
    """Hardware-efficient ansatz: RY layer, then reps x (CZ entangler + RY layer)."""
    v = np.asarray(params, dtype=float)
    if v.shape != (layout.parameter_count,):
        raise ValueError(
            f"expected {layout.parameter_count} parameters for {layout}, got {v.shape}"
        )
    state = init_zero(layout.n)
    t = 0
    for q in range(layout.n):
        state = apply_ry(state, q, v[t])
        t += 1
    for _ in range(layout.reps):
        for i, j in layout.entangler_pairs():
            state = apply_cz(state, i, j)
        for q in range(layout.n):
            state = apply_ry(state, q, v[t])
            t += 1
    return state


def spsa_minimize(objective, x0, cfg: SpsaConfig | None = None):
    """Minimise a black-box function by simultaneous perturbation.

    Each iteration estimates the gradient from two evaluations at
    x +- c_k * delta with a Rademacher delta, steps by a_k, then records the
    objective at the new iterate.  Returns ``(x_best, trace)`` where x_best
    is the iterate with the lowest recorded objective (best-so-far, not the
    last) and trace is a list of (iteration, objective) pairs starting at
    iteration 0.

    A non-finite objective value triggers one retry with the step halved;
    a second failure aborts with a diagnostic.
    """
    cfg = cfg if cfg is not None else SpsaConfig()
    x = np.array(x0, dtype=float)
    rng = np.random.default_rng(cfg.seed)
    f = float(objective(x))
    if not np.isfinite(f):
        raise ValueError("objective must be finite at the initial point")
    trace = [(0, f)]
    best_x, best_f = x.copy(), f
    for k in range(cfg.max_iters):
        a_k = cfg.a / (k + 1 + cfg.A) ** cfg.alpha
        c_k = cfg.c / (k + 1) ** cfg.gamma_exp
        delta = rng.integers(0, 2, size=x.size).astype(float) * 2.0 - 1.0
        f_plus = f_minus = np.nan
        c_used = c_k
        for c_try in (c_k, 0.5 * c_k):
            f_plus = float(objective(x + c_try * delta))
            f_minus = float(objective(x - c_try * delta))
            c_used = c_try
            if np.isfinite(f_plus) and np.isfinite(f_minus):
                break
        else:
            raise RuntimeError(
                "SPSA aborted: non-finite objective at the perturbed points "
                "even after halving the perturbation step"
            )
        g_hat = (f_plus - f_minus) / (2.0 * c_used) * delta
        for a_try in (a_k, 0.5 * a_k):
            x_new = x - a_try * g_hat
            f_new = float(objective(x_new))
            if np.isfinite(f_new):
                break
        else:
            raise RuntimeError(
                "SPSA aborted: non-finite objective at the updated point "
                "even after halving the update step"
            )
        x, f = x_new, f_new
        trace.append((k + 1, f))
        if f < best_f:
            best_x, best_f = x.copy(), f
    return best_x, trace


@dataclass
class AlgorithmConfig:
    """Knobs for one variational run.

    ``seed`` is the run's master seed: when set, the SPSA, relaxation,
    initial-point and sampling seeds are all derived from it by name, so a
    single integer pins down the whole run.  When None, the seeds already
    present in the sub-configs are used as-is.
    """

    reps: int | None = None
    shots: int | None = None
    entangler: str = "linear_cz"
    spsa: SpsaConfig = field(default_factory=SpsaConfig)
    relaxation: RelaxationConfig = field(default_factory=RelaxationConfig)
    seed: int | None = None

    def __post_init__(self):
        if self.reps is not None and self.reps < 1:
            raise ValueError("reps must be at least 1")
        if self.shots is not None and self.shots < 1:
            raise ValueError("shots must be at least 1")
        if self.entangler not in ENTANGLERS:
            raise ValueError(f"entangler must be one of {ENTANGLERS}")


@dataclass
class AlgorithmResult:
    """Everything one run reports: solution, energy, cut, distribution, trace."""

    kind: str
    reps: int
    seed: int | None
    best_bitstring: np.ndarray
    energy: float
    cut_value: float
    probability_table: np.ndarray
    optimizer_trace: list
    parameters: np.ndarray
    wall_time: float
    relaxed: RelaxedSolution | None = None

    @property
    def n(self) -> int:
        return self.best_bitstring.size

    @property
    def max_probability(self) -> float:
        return float(self.probability_table.max())

    def to_dict(self) -> dict:
        d = {
            "kind": self.kind,
            "reps": self.reps,
            "seed": self.seed,
            "best_bitstring": bits_to_string(self.best_bitstring),
            "energy": self.energy,
            "cut_value": self.cut_value,
            "max_probability": self.max_probability,
            "probability_table": [float(p) for p in self.probability_table],
            "optimizer_trace": [[int(k), float(v)] for k, v in self.optimizer_trace],
            "parameters": [float(v) for v in self.parameters],
            "wall_time": self.wall_time,
        }
        if self.relaxed is not None:
            d["relaxed"] = self.relaxed.to_dict()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "AlgorithmResult":
        return cls(
            kind=d["kind"],
            reps=int(d["reps"]),
            seed=d.get("seed"),
            best_bitstring=string_to_bits(d["best_bitstring"]),
            energy=float(d["energy"]),
            cut_value=float(d["cut_value"]),
            probability_table=np.asarray(d["probability_table"], dtype=float),
            optimizer_trace=[(int(k), float(v)) for k, v in d["optimizer_trace"]],
            parameters=np.asarray(d["parameters"], dtype=float),
            wall_time=float(d["wall_time"]),
            relaxed=RelaxedSolution.from_dict(d["relaxed"]) if "relaxed" in d else None,
        )


def _argmax_index(probs: np.ndarray, n: int) -> int:
    """Most probable basis index; exact ties go to the lowest binary value."""
    ties = np.flatnonzero(probs == probs.max())
    rows = (ties[:, None] >> np.arange(n, dtype=np.int64)) & 1
    return bits_to_index(lexicographically_smallest(rows))


def _argmax_sampled(counts) -> int:
    top = max(counts.counts.values())
    best = min(s for s, c in counts.counts.items() if c == top)
    return bits_to_index(string_to_bits(best))


def run_algorithm(
    kind: str,
    ham: IsingHamiltonian,
    w: WeightMatrix,
    cfg: AlgorithmConfig | None = None,
    relaxed: RelaxedSolution | None = None,
) -> AlgorithmResult:
    """Optimise one variational algorithm against the Hamiltonian.

    The SPSA objective is the exact expectation of the current state.  The
    gain ``a`` is divided by the instance's energy scale so the default gains
    behave the same no matter how large the edge weights are (equivalent to
    optimising the normalised Hamiltonian).  By default the solution is the
    argmax of the exact final distribution; with ``cfg.shots`` set, a seeded
    multinomial sample decides instead, for parity with hardware-style runs.

    For ``ws_qaoa`` a precomputed ``relaxed`` solution may be supplied;
    otherwise the relaxation is run here from ``cfg.relaxation``.
    """
    if kind not in ALGORITHM_KINDS:
        raise ValueError(f"unknown algorithm {kind!r}, expected one of {ALGORITHM_KINDS}")
    cfg = cfg if cfg is not None else AlgorithmConfig()
    if ham.n != w.n:
        raise ValueError("Hamiltonian and weight matrix disagree on the vertex count")

    spsa_cfg = cfg.spsa
    relax_cfg = cfg.relaxation
    if cfg.seed is not None:
        spsa_cfg = replace(spsa_cfg, seed=derive_seed(cfg.seed, "spsa"))
        relax_cfg = replace(relax_cfg, seed=derive_seed(cfg.seed, "relaxation"))
        init_seed = derive_seed(cfg.seed, "init")
        sample_seed = derive_seed(cfg.seed, "sample")
    else:
        init_seed = derive_seed(spsa_cfg.seed, "init")
        sample_seed = derive_seed(spsa_cfg.seed, "sample")

    start_time = time.perf_counter()
    table = ham.energy_table()
    scale = max(1.0, float(np.abs(table).max()))
    spsa_cfg = replace(spsa_cfg, a=spsa_cfg.a / scale)

    rng = np.random.default_rng(init_seed)
    if kind == "vqe":
        reps = cfg.reps if cfg.reps is not None else DEFAULT_VQE_REPS
        layout = VqeLayout(n=ham.n, reps=reps, entangler=cfg.entangler)
        x0 = rng.uniform(-np.pi, np.pi, layout.parameter_count)

        def build(v):
            return vqe_state(layout, v)

    else:
        reps = cfg.reps if cfg.reps is not None else DEFAULT_QAOA_LAYERS
        # Small initial angles keep the warm start near its product state.
        x0 = rng.uniform(-0.1, 0.1, 2 * reps)
        if kind == "ws_qaoa":
            if relaxed is None:
                relaxed = relax_qubo(maxcut_to_qubo(w), relax_cfg)

            def build(v):
                return ws_qaoa_state(ham, relaxed, QaoaParameters.from_vector(v))

        else:

            def build(v):
                return qaoa_state(ham, QaoaParameters.from_vector(v))

    def objective(v):
        return float(build(v).probabilities() @ table)

    x_best, trace = spsa_minimize(objective, x0, spsa_cfg)
    final_state = build(x_best)
    probs = final_state.probabilities()
    if cfg.shots is not None:
        best_index = _argmax_sampled(sample(final_state, cfg.shots, sample_seed))
    else:
        best_index = _argmax_index(probs, ham.n)
    bits = index_to_bits(best_index, ham.n)
    wall_time = time.perf_counter() - start_time
    return AlgorithmResult(
        kind=kind,
        reps=reps,
        seed=cfg.seed,
        best_bitstring=bits,
        energy=float(probs @ table),
        cut_value=cut_value(w, bits),
        probability_table=probs,
        optimizer_trace=trace,
        parameters=np.asarray(x_best, dtype=float),
        wall_time=wall_time,
        relaxed=relaxed if kind == "ws_qaoa" else None,
    )
