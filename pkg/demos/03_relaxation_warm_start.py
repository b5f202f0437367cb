"""Relaxing the binary program to seed the warm start.

The QUBO for a MaxCut instance is an indefinite quadratic, so its box
relaxation is non-convex; multi-start projected gradient descent finds the
low corners anyway.  Clipping the winner into [eps, 1-eps] gives the
warm-start vector c*: entry i is the probability that vertex i lands in
cluster 1 before any QAOA layer acts.
"""

import numpy as np

import quantcut as qc

_, w, qubo, ham = qc.prepare_problem(qc.RunConfig(algorithms=("classical",)))

# ---------------------------------------------------------------------------
# Multi-start projected gradient descent on the box [0,1]^5
# ---------------------------------------------------------------------------
cfg = qc.RelaxationConfig(epsilon=0.25, num_starts=32, seed=0)
sol = qc.relax_qubo(qubo, cfg)
print("c* (clipped into [0.25, 0.75]):", sol.c_star)
print(f"objective at c*: {sol.value:.3f}")
print(f"objective before clipping:  {sol.value_unclipped:.3f}")
print(f"starts: {sol.starts_used}, converged: {sol.converged}")

bits, energy = qc.brute_force_solve(ham)
print(f"binary optimum for comparison: {energy:.3f}")
print("rounded relaxation:", qc.round_relaxed(sol), " exact partition:", bits)

# ---------------------------------------------------------------------------
# A single descent run is monotone under backtracking
# ---------------------------------------------------------------------------
rng = np.random.default_rng(5)
_, history, converged = qc.projected_gradient_descent(qubo, rng.uniform(0, 1, qubo.n), cfg)
print(f"\none run: {len(history)} objective values, converged={converged}")
print("first five:", [round(v, 2) for v in history[:5]])
print("last:      ", round(history[-1], 2))

# ---------------------------------------------------------------------------
# Epsilon trades confidence for mobility: near eps=0.5 the warm start
# approaches the uniform superposition
# ---------------------------------------------------------------------------
for eps in (0.05, 0.25, 0.45):
    clipped = qc.relax_qubo(qubo, qc.RelaxationConfig(epsilon=eps, seed=0))
    p_best = np.prod(np.where(qc.round_relaxed(clipped) == 1, clipped.c_star, 1 - clipped.c_star))
    print(f"eps={eps:4.2f}: zero-layer probability of the relaxed corner = {p_best:.3f}")
