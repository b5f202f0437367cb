"""Binary clustering as weighted MaxCut with variational quantum algorithms.

Data flows through five stages: tabular features -> standardised weighted
graph -> QUBO -> diagonal Ising Hamiltonian -> variational search (QAOA,
warm-start QAOA, VQE) on a dense statevector simulator, benchmarked against
exhaustive enumeration.  The warm start comes from a multi-start projected
gradient descent on the box-constrained continuous relaxation of the QUBO.
"""

from .algorithms import (
    ALGORITHM_KINDS,
    AlgorithmConfig,
    AlgorithmResult,
    QaoaParameters,
    SpsaConfig,
    VqeLayout,
    qaoa_state,
    run_algorithm,
    spsa_minimize,
    vqe_state,
    ws_qaoa_state,
)
from .datagraph import (
    METRICS,
    FeatureTable,
    WeightMatrix,
    build_weights,
    load_csv,
    standardize,
)
from .pipeline import (
    ALGORITHM_CHOICES,
    DEFAULT_MASTER_SEED,
    BenchmarkReport,
    PipelineError,
    ReportRow,
    RunConfig,
    agreement,
    bundled_dataset_path,
    export_histogram,
    prepare_problem,
    run_benchmark,
    strip_timing_fields,
)
from .relaxation import (
    RelaxationConfig,
    RelaxedSolution,
    projected_gradient_descent,
    relax_qubo,
    round_relaxed,
)
from .seeding import derive_seed
from .simulator import (
    QUBIT_CAP,
    SampleCounts,
    Statevector,
    apply_cost_phase,
    apply_cz,
    apply_h,
    apply_rx,
    apply_ry,
    apply_rz,
    expectation,
    init_zero,
    probability_rows,
    sample,
)
from .transform import (
    ENUMERATION_CAP,
    IsingHamiltonian,
    QuboProgram,
    all_bitstrings,
    bits_to_index,
    bits_to_string,
    brute_force_solve,
    cut_value,
    index_to_bits,
    maxcut_to_qubo,
    qubo_to_ising,
    string_to_bits,
)

__version__ = "0.1.0"

__all__ = [
    "ALGORITHM_CHOICES",
    "ALGORITHM_KINDS",
    "AlgorithmConfig",
    "AlgorithmResult",
    "BenchmarkReport",
    "DEFAULT_MASTER_SEED",
    "ENUMERATION_CAP",
    "FeatureTable",
    "IsingHamiltonian",
    "METRICS",
    "PipelineError",
    "QUBIT_CAP",
    "QaoaParameters",
    "QuboProgram",
    "RelaxationConfig",
    "RelaxedSolution",
    "ReportRow",
    "RunConfig",
    "SampleCounts",
    "SpsaConfig",
    "Statevector",
    "VqeLayout",
    "WeightMatrix",
    "agreement",
    "all_bitstrings",
    "apply_cost_phase",
    "apply_cz",
    "apply_h",
    "apply_rx",
    "apply_ry",
    "apply_rz",
    "bits_to_index",
    "bits_to_string",
    "brute_force_solve",
    "build_weights",
    "bundled_dataset_path",
    "cut_value",
    "derive_seed",
    "expectation",
    "export_histogram",
    "index_to_bits",
    "init_zero",
    "load_csv",
    "maxcut_to_qubo",
    "prepare_problem",
    "probability_rows",
    "projected_gradient_descent",
    "qaoa_state",
    "qubo_to_ising",
    "relax_qubo",
    "round_relaxed",
    "run_algorithm",
    "run_benchmark",
    "sample",
    "spsa_minimize",
    "standardize",
    "string_to_bits",
    "strip_timing_fields",
    "vqe_state",
    "ws_qaoa_state",
]
