"""The end-to-end benchmark: one call, one comparison table, files on disk.

Equivalent CLI invocation:

    quantcut benchmark --seed 7 --out demos/out
"""

from pathlib import Path

import quantcut as qc

cfg = qc.RunConfig(seed=qc.DEFAULT_MASTER_SEED)
report = qc.run_benchmark(cfg)

print(report.render_table())

# ---------------------------------------------------------------------------
# Machine-readable outputs: report JSON plus one histogram CSV per algorithm
# ---------------------------------------------------------------------------
out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)
(out_dir / "report.json").write_text(report.to_json(), encoding="utf-8")
for name, result in report.results.items():
    qc.export_histogram(result, out_dir / f"{name}_histogram.csv")
print(f"\nwrote {out_dir}/report.json and {len(report.results)} histograms")

# ---------------------------------------------------------------------------
# The determinism contract: rerunning changes nothing but the timings
# ---------------------------------------------------------------------------
again = qc.run_benchmark(cfg)
same = qc.strip_timing_fields(report.to_dict()) == qc.strip_timing_fields(again.to_dict())
print(f"rerun with the same seed is identical (timings aside): {same}")
