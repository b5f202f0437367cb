import csv
import json

import numpy as np
import pytest

import oracles
import quantcut as qc


def fast_config(**kw):
    defaults = dict(
        algorithms=("classical", "ws_qaoa"),
        spsa=qc.SpsaConfig(max_iters=40),
        relaxation=qc.RelaxationConfig(num_starts=8),
        seed=3,
    )
    defaults.update(kw)
    return qc.RunConfig(**defaults)


def graph_csv(tmp_path, seed=0, n=8):
    """Write a synthetic numeric dataset whose rows become graph vertices."""
    rng = np.random.default_rng(seed)
    values = rng.normal(size=(n, 3))
    path = tmp_path / "points.csv"
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "x", "y", "z"])
        for i in range(n):
            writer.writerow([f"p{i}", *values[i]])
    return path


class TestAgreement:
    def test_exact_match(self):
        assert qc.agreement([0, 0, 1, 1], ["a", "a", "b", "b"]) == 1.0

    def test_complement_match(self):
        assert qc.agreement([1, 1, 0, 0], ["a", "a", "b", "b"]) == 1.0

    def test_partial(self):
        truth = ["e", "e", "s", "s", "s"]
        assert qc.agreement([0, 1, 0, 1, 1], truth) == pytest.approx(0.6)

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="length"):
            qc.agreement([0, 1], ["a"])

    def test_non_binary_truth(self):
        with pytest.raises(ValueError, match="binary"):
            qc.agreement([0, 1, 0], ["a", "b", "c"])


class TestRunConfig:
    def test_requires_algorithms(self):
        with pytest.raises(ValueError, match="at least one"):
            qc.RunConfig(algorithms=())

    def test_rejects_unknown_algorithm(self):
        with pytest.raises(ValueError, match="unknown algorithm"):
            qc.RunConfig(algorithms=("qaoa", "grover"))

    def test_bundled_defaults(self):
        cfg = qc.RunConfig()
        assert cfg.resolved_dataset().exists()
        assert cfg.resolved_class_column() == "type"

    def test_external_dataset_has_no_default_class(self, tmp_path):
        path = graph_csv(tmp_path)
        cfg = qc.RunConfig(dataset=str(path), label_column="id")
        assert cfg.resolved_class_column() is None

    def test_dict_roundtrip(self):
        cfg = fast_config(shots=128)
        again = qc.RunConfig.from_dict(cfg.to_dict())
        assert again.to_dict() == cfg.to_dict()


class TestRunBenchmark:
    def test_classical_only(self):
        report = qc.run_benchmark(qc.RunConfig(algorithms=("classical",)))
        assert [r.name for r in report.rows] == ["classical"]
        assert report.results == {}

    def test_bundled_ws_matches_classical(self):
        report = qc.run_benchmark(fast_config(seed=qc.DEFAULT_MASTER_SEED))
        classical, ws = report.row("classical"), report.row("ws_qaoa")
        assert ws.solution_objective == classical.solution_objective
        assert ws.assignment == classical.assignment  # both canonicalised
        assert ws.agreement == 1.0

    def test_canonical_assignment_fixes_vertex_zero(self):
        report = qc.run_benchmark(fast_config())
        for row in report.rows:
            assert row.assignment[report.row_labels[0]] == 0

    def test_deterministic_reports(self, tmp_path):
        cfg_kwargs = dict(
            dataset=str(graph_csv(tmp_path)),
            label_column="id",
            algorithms=("classical", "qaoa", "ws_qaoa", "vqe"),
            seed=11,
            spsa=qc.SpsaConfig(max_iters=30),
            relaxation=qc.RelaxationConfig(num_starts=6),
        )
        a = qc.run_benchmark(qc.RunConfig(**cfg_kwargs))
        b = qc.run_benchmark(qc.RunConfig(**cfg_kwargs))
        assert qc.strip_timing_fields(a.to_dict()) == qc.strip_timing_fields(b.to_dict())

    def test_variational_bound_in_report(self, tmp_path):
        report = qc.run_benchmark(
            qc.RunConfig(
                dataset=str(graph_csv(tmp_path, seed=5, n=7)),
                label_column="id",
                algorithms=("classical", "qaoa", "vqe"),
                spsa=qc.SpsaConfig(max_iters=40),
                seed=2,
            )
        )
        classical = report.row("classical")
        for row in report.rows:
            assert row.solution_objective <= classical.solution_objective + 1e-9
            assert row.energy >= classical.energy - 1e-9

    def test_parallel_marks_timings(self):
        report = qc.run_benchmark(
            fast_config(algorithms=("classical", "qaoa", "ws_qaoa"), parallel=True)
        )
        assert report.timings_contended
        # parallel execution must not change anything but timings
        sequential = qc.run_benchmark(fast_config(algorithms=("classical", "qaoa", "ws_qaoa")))
        assert qc.strip_timing_fields(report.to_dict()) == qc.strip_timing_fields(sequential.to_dict())

    def test_stage_tagged_errors(self, tmp_path):
        cfg = qc.RunConfig(dataset=str(tmp_path / "missing.csv"), algorithms=("classical",))
        with pytest.raises(qc.PipelineError, match=r"\[load\]"):
            qc.run_benchmark(cfg)

    def test_render_table_mentions_every_row(self):
        report = qc.run_benchmark(fast_config())
        text = report.render_table()
        for label in report.row_labels:
            assert label in text
        assert "solution objective" in text


class TestExportHistogram:
    def read_rows(self, path):
        with open(path, newline="") as fh:
            return list(csv.DictReader(fh))

    def uniform_result(self):
        probs = np.full(4, 0.25)
        return qc.AlgorithmResult(
            kind="qaoa", reps=1, seed=0, best_bitstring=np.array([0, 0]),
            energy=0.0, cut_value=0.0, probability_table=probs,
            optimizer_trace=[(0, 0.0)], parameters=np.zeros(2), wall_time=0.0,
        )

    def test_uniform_rows(self, tmp_path):
        path = tmp_path / "hist.csv"
        qc.export_histogram(self.uniform_result(), path)
        rows = self.read_rows(path)
        assert [r["bitstring"] for r in rows] == ["00", "10", "01", "11"]
        assert all(float(r["probability"]) == 0.25 for r in rows)

    def test_basis_state(self, tmp_path):
        probs = np.zeros(4)
        probs[2] = 1.0
        result = self.uniform_result()
        result.probability_table = probs
        result.best_bitstring = np.array([0, 1])
        path = tmp_path / "basis.csv"
        qc.export_histogram(result, path)
        rows = self.read_rows(path)
        assert float(rows[2]["probability"]) == 1.0
        assert sum(float(r["probability"]) for r in rows) == 1.0

    def test_metadata_companion(self, tmp_path):
        path = tmp_path / "hist.csv"
        qc.export_histogram(self.uniform_result(), path)
        meta = json.loads((tmp_path / "hist.json").read_text())
        assert meta["algorithm"] == "qaoa"
        assert meta["depth"] == 1
        assert meta["qubits"] == 2

    def test_max_probability_row_is_best_bitstring(self):
        report = qc.run_benchmark(fast_config(seed=qc.DEFAULT_MASTER_SEED))
        result = report.results["ws_qaoa"]
        top = int(np.argmax(result.probability_table))
        assert qc.index_to_bits(top, result.n).tolist() == result.best_bitstring.tolist()

    def test_probabilities_roundtrip_exactly(self, tmp_path):
        # repr() serialisation keeps every float bit-exact through the CSV
        report = qc.run_benchmark(fast_config(seed=1))
        result = report.results["ws_qaoa"]
        path = tmp_path / "ws.csv"
        qc.export_histogram(result, path)
        rows = self.read_rows(path)
        parsed = np.array([float(r["probability"]) for r in rows])
        assert np.array_equal(parsed, result.probability_table)
