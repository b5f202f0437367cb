"""Box-constrained continuous relaxation of a QUBO and the warm-start vector.

The binary variables are relaxed to the box [0, 1]^n and the (generally
non-convex) quadratic is minimised by multi-start projected gradient descent.
The winning iterate is clipped into [eps, 1-eps] so downstream warm-start
angles never freeze a qubit at a pole.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .transform import QuboProgram

BACKTRACK_SHRINK = 0.5
ARMIJO_CONSTANT = 1e-4
_MIN_STEP = 1e-14

STEP_RULES = ("fixed", "backtracking")


@dataclass
class RelaxationConfig:
    epsilon: float = 0.25
    num_starts: int = 32
    max_iters: int = 1000
    step_rule: str = "backtracking"
    tol: float = 1e-6
    seed: int = 0

    def __post_init__(self):
        if not 0.0 < self.epsilon < 0.5:
            raise ValueError("epsilon must lie in (0, 0.5)")
        if self.num_starts < 1:
            raise ValueError("num_starts must be at least 1")
        if self.max_iters < 1:
            raise ValueError("max_iters must be at least 1")
        if self.step_rule not in STEP_RULES:
            raise ValueError(f"step_rule must be one of {STEP_RULES}")
        if self.tol <= 0.0:
            raise ValueError("tol must be positive")


@dataclass
class RelaxedSolution:
    """Best continuous solution found, after clipping into [eps, 1-eps].

    ``value`` is the objective at the clipped ``c_star``; ``value_unclipped``
    is the objective at the raw iterate before clipping, which is the number
    bounded above by the binary optimum.
    """

    c_star: np.ndarray
    value: float
    value_unclipped: float
    starts_used: int
    converged: bool

    def to_dict(self) -> dict:
        return {
            "c_star": [float(v) for v in self.c_star],
            "value": self.value,
            "value_unclipped": self.value_unclipped,
            "starts_used": self.starts_used,
            "converged": self.converged,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RelaxedSolution":
        return cls(
            c_star=np.asarray(d["c_star"], dtype=float),
            value=float(d["value"]),
            value_unclipped=float(d["value_unclipped"]),
            starts_used=int(d["starts_used"]),
            converged=bool(d["converged"]),
        )


def _require_finite(value, what: str):
    if not np.all(np.isfinite(value)):
        raise ValueError(f"non-finite {what} encountered; the QUBO is malformed")


def projected_gradient_descent(q: QuboProgram, c0, cfg: RelaxationConfig):
    """One descent run over the box [0, 1]^n.

    Returns ``(c, history, converged)`` where history is the sequence of
    objective values (non-increasing under the backtracking rule) and
    converged reports whether the projected-gradient norm fell below
    ``cfg.tol`` before the iteration budget ran out.
    """
    c = np.clip(np.asarray(c0, dtype=float), 0.0, 1.0)
    f = q.objective(c)
    _require_finite(f, "objective")
    history = [f]
    fixed_step = 1.0 / (2.0 * np.linalg.norm(q.matrix) + 1.0)
    converged = False
    for _ in range(cfg.max_iters):
        g = q.gradient(c)
        _require_finite(g, "gradient")
        if np.linalg.norm(c - np.clip(c - g, 0.0, 1.0)) <= cfg.tol:
            converged = True
            break
        if cfg.step_rule == "backtracking":
            t = 1.0
            accepted = False
            while t >= _MIN_STEP:
                c_new = np.clip(c - t * g, 0.0, 1.0)
                f_new = q.objective(c_new)
                _require_finite(f_new, "objective")
                if f_new <= f + ARMIJO_CONSTANT * float(g @ (c_new - c)):
                    accepted = True
                    break
                t *= BACKTRACK_SHRINK
            if not accepted:
                break  # no further progress possible at floating precision
        else:
            c_new = np.clip(c - fixed_step * g, 0.0, 1.0)
            f_new = q.objective(c_new)
            _require_finite(f_new, "objective")
        c, f = c_new, f_new
        history.append(f)
    return c, history, converged


def _start_rng(seed: int, start: int) -> np.random.Generator:
    # Counter-based generator keyed by (seed, start index) so the draw for a
    # given start is identical no matter how starts are scheduled.
    key = np.array([seed & 0xFFFFFFFFFFFFFFFF, start], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def relax_qubo(q: QuboProgram, cfg: RelaxationConfig | None = None) -> RelaxedSolution:
    """Best local solution of the box relaxation over ``cfg.num_starts`` runs.

    Starts are drawn uniformly from [0, 1]^n.  The reduction keeps the lowest
    pre-clipping objective, breaking exact ties toward the lowest start index,
    so the result is deterministic for a fixed seed.
    """
    cfg = cfg if cfg is not None else RelaxationConfig()
    best_value = np.inf
    best_c = None
    best_converged = False
    for start in range(cfg.num_starts):
        c0 = _start_rng(cfg.seed, start).uniform(0.0, 1.0, q.n)
        c, history, converged = projected_gradient_descent(q, c0, cfg)
        if history[-1] < best_value:
            best_value = history[-1]
            best_c = c
            best_converged = converged
    c_star = np.clip(best_c, cfg.epsilon, 1.0 - cfg.epsilon)
    return RelaxedSolution(
        c_star=c_star,
        value=q.objective(c_star),
        value_unclipped=float(best_value),
        starts_used=cfg.num_starts,
        converged=best_converged,
    )


def round_relaxed(sol) -> np.ndarray:
    """Diagnostic rounding: bit i is 1 iff c*_i > 0.5 (exact 0.5 rounds to 0)."""
    c = sol.c_star if isinstance(sol, RelaxedSolution) else np.asarray(sol, dtype=float)
    return (np.asarray(c) > 0.5).astype(np.int64)
