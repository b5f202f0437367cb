"""Command-line interface.

Subcommands: ``cluster`` (one algorithm, one dataset), ``benchmark`` (full
comparison table), ``relax`` (relaxation only), ``brute-force`` (baseline
only) and ``histogram`` (re-export the probability table from a saved
result).  A JSON config file mirroring RunConfig can seed any run; explicit
flags override file values.  Exit code is 0 on success, 1 with a
stage-tagged diagnostic on failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from .algorithms import AlgorithmResult
from .datagraph import METRICS
from .pipeline import (
    ALGORITHM_CHOICES,
    PipelineError,
    RunConfig,
    export_histogram,
    prepare_problem,
    run_benchmark,
)
from .relaxation import relax_qubo
from .seeding import derive_seed
from .transform import bits_to_string, brute_force_solve, cut_value


def _add_dataset_flags(p: argparse.ArgumentParser):
    p.add_argument("--config", help="JSON config file mirroring RunConfig")
    p.add_argument("--dataset", help="CSV file (default: bundled 5-car extract)")
    p.add_argument("--label-column", help="column holding row labels (default: model)")
    p.add_argument("--class-column", help="optional ground-truth class column")
    p.add_argument("--metric", choices=METRICS, help="distance metric")
    p.add_argument("--seed", type=int, help="master seed")


def _add_algorithm_flags(p: argparse.ArgumentParser):
    p.add_argument("--reps", type=int, help="QAOA layers / VQE entangling repetitions")
    p.add_argument("--shots", type=int, help="sample instead of exact argmax extraction")
    p.add_argument("--spsa-iters", type=int, help="SPSA iteration budget")
    p.add_argument("--relax-epsilon", type=float, help="warm-start clipping epsilon")
    p.add_argument("--relax-starts", type=int, help="relaxation multi-start count")
    p.add_argument("--relax-iters", type=int, help="relaxation iteration budget")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quantcut",
        description="MaxCut clustering with QAOA, warm-start QAOA and VQE on a statevector simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_cluster = sub.add_parser("cluster", help="run one algorithm on one dataset")
    _add_dataset_flags(p_cluster)
    _add_algorithm_flags(p_cluster)
    p_cluster.add_argument("--algo", choices=ALGORITHM_CHOICES, default="ws_qaoa")
    p_cluster.add_argument("--out", help="write the algorithm result as JSON")

    p_bench = sub.add_parser("benchmark", help="full comparison across algorithms")
    _add_dataset_flags(p_bench)
    _add_algorithm_flags(p_bench)
    p_bench.add_argument(
        "--algo",
        action="append",
        choices=ALGORITHM_CHOICES,
        help="algorithm to include (repeatable; default: all)",
    )
    p_bench.add_argument("--parallel", action="store_true", help="run algorithms concurrently")
    p_bench.add_argument("--out", help="directory for report.json and histogram CSVs")

    p_relax = sub.add_parser("relax", help="solve the continuous relaxation only")
    _add_dataset_flags(p_relax)
    _add_algorithm_flags(p_relax)
    p_relax.add_argument("--out", help="write the relaxed solution as JSON")

    p_brute = sub.add_parser("brute-force", help="exhaustive classical baseline only")
    _add_dataset_flags(p_brute)

    p_hist = sub.add_parser("histogram", help="re-export a histogram from a saved result")
    p_hist.add_argument("--result", required=True, help="saved algorithm-result JSON")
    p_hist.add_argument("--out", required=True, help="output CSV path")

    return parser


def _config_from_args(args, algorithms=None) -> RunConfig:
    base: dict = {}
    if args.config:
        base = json.loads(Path(args.config).read_text(encoding="utf-8"))
        if not isinstance(base, dict):
            raise ValueError(f"{args.config}: config file must hold a JSON object")
    for key, value in (
        ("dataset", args.dataset),
        ("label_column", args.label_column),
        ("class_column", args.class_column),
        ("metric", args.metric),
        ("seed", args.seed),
        ("reps", getattr(args, "reps", None)),
        ("shots", getattr(args, "shots", None)),
    ):
        if value is not None:
            base[key] = value
    relax = dict(base.get("relaxation", {}))
    for key, value in (
        ("epsilon", getattr(args, "relax_epsilon", None)),
        ("num_starts", getattr(args, "relax_starts", None)),
        ("max_iters", getattr(args, "relax_iters", None)),
    ):
        if value is not None:
            relax[key] = value
    if relax:
        base["relaxation"] = relax
    spsa = dict(base.get("spsa", {}))
    if getattr(args, "spsa_iters", None) is not None:
        spsa["max_iters"] = args.spsa_iters
    if spsa:
        base["spsa"] = spsa
    if algorithms is not None:
        base["algorithms"] = algorithms
    if getattr(args, "parallel", False):
        base["parallel"] = True
    return RunConfig.from_dict(base)


def cmd_cluster(args) -> int:
    cfg = _config_from_args(args, algorithms=(args.algo,))
    report = run_benchmark(cfg)
    row = report.row(args.algo)
    print(f"algorithm: {args.algo}   dataset: {report.dataset}")
    for label in report.row_labels:
        print(f"  {label}: cluster {row.assignment[label]}")
    print(f"energy: {row.energy:.6f}")
    print(f"solution objective: {row.solution_objective:.6f}")
    if row.agreement is not None:
        print(f"agreement with ground truth: {row.agreement:.3f}")
    print(f"process time: {row.process_time_s:.3f}s")
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        payload = (
            report.results[args.algo].to_dict()
            if args.algo in report.results
            else row.to_dict()
        )
        out.write_text(json.dumps(payload, indent=2, sort_keys=True), encoding="utf-8")
        print(f"wrote {out}")
    return 0


def cmd_benchmark(args) -> int:
    cfg = _config_from_args(args, algorithms=tuple(args.algo) if args.algo else None)
    report = run_benchmark(cfg)
    print(report.render_table())
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "report.json").write_text(report.to_json(), encoding="utf-8")
        for name, result in report.results.items():
            export_histogram(result, out_dir / f"{name}_histogram.csv")
        print(f"wrote {out_dir}/report.json and {len(report.results)} histogram file(s)")
    return 0


def cmd_relax(args) -> int:
    cfg = _config_from_args(args)
    _, _, qubo, _ = prepare_problem(cfg)
    relax_cfg = replace(cfg.relaxation, seed=derive_seed(cfg.seed, "relaxation"))
    sol = relax_qubo(qubo, relax_cfg)
    print("c* =", " ".join(f"{v:.6f}" for v in sol.c_star))
    print(f"objective at c*: {sol.value:.6f}  (pre-clipping: {sol.value_unclipped:.6f})")
    print(f"starts used: {sol.starts_used}  converged: {sol.converged}")
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(json.dumps(sol.to_dict(), indent=2, sort_keys=True), encoding="utf-8")
        print(f"wrote {out}")
    return 0


def cmd_brute_force(args) -> int:
    cfg = _config_from_args(args)
    table, w, _, ham = prepare_problem(cfg)
    bits, energy = brute_force_solve(ham)
    print(f"dataset: {cfg.resolved_dataset()}")
    for label, bit in zip(table.row_labels, bits):
        print(f"  {label}: cluster {int(bit)}")
    print(f"bitstring: {bits_to_string(bits)}")
    print(f"minimum energy: {energy:.6f}")
    print(f"cut value: {cut_value(w, bits):.6f}")
    return 0


def cmd_histogram(args) -> int:
    payload = json.loads(Path(args.result).read_text(encoding="utf-8"))
    result = AlgorithmResult.from_dict(payload)
    path = export_histogram(result, args.out)
    print(f"wrote {path}")
    return 0


_HANDLERS = {
    "cluster": cmd_cluster,
    "benchmark": cmd_benchmark,
    "relax": cmd_relax,
    "brute-force": cmd_brute_force,
    "histogram": cmd_histogram,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except PipelineError as exc:
        print(f"error {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error [{args.command}] {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
