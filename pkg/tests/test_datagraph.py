import numpy as np
import pytest

import quantcut as qc


def write_csv(path, text):
    path.write_text(text, encoding="utf-8")
    return path


class TestLoadCsv:
    def test_bundled_cars(self):
        table = qc.load_csv(qc.bundled_dataset_path(), "model", "type")
        assert table.n == 5
        assert table.row_labels == [
            "Honda Civic",
            "Toyota Corolla",
            "Camaro Z28",
            "Pontiac Firebird",
            "Maserati Bora",
        ]
        assert table.class_labels == ["economy", "economy", "sport", "sport", "sport"]
        assert table.d == 11
        # spot values straight from the 1974 Motor Trend data
        hp = table.values[:, table.feature_names.index("hp")]
        assert hp.tolist() == [52.0, 65.0, 245.0, 175.0, 335.0]

    def test_minimal_two_rows(self, tmp_path):
        p = write_csv(tmp_path / "t.csv", "id,x\na,1.5\nb,-2\n")
        table = qc.load_csv(p, "id")
        assert (table.n, table.d) == (2, 1)
        assert table.class_labels is None

    def test_text_cell_errors(self, tmp_path):
        p = write_csv(tmp_path / "t.csv", "id,x\na,1\nb,oops\n")
        with pytest.raises(ValueError, match="non-numeric"):
            qc.load_csv(p, "id")

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            qc.load_csv(tmp_path / "nope.csv", "id")

    def test_duplicate_labels(self, tmp_path):
        p = write_csv(tmp_path / "t.csv", "id,x\na,1\na,2\n")
        with pytest.raises(ValueError, match="duplicate"):
            qc.load_csv(p, "id")

    def test_single_row_errors(self, tmp_path):
        p = write_csv(tmp_path / "t.csv", "id,x\na,1\n")
        with pytest.raises(ValueError, match="at least 2"):
            qc.load_csv(p, "id")

    def test_unknown_label_column(self, tmp_path):
        p = write_csv(tmp_path / "t.csv", "id,x\na,1\nb,2\n")
        with pytest.raises(ValueError, match="'name'"):
            qc.load_csv(p, "name")


class TestStandardize:
    def test_linear_column(self):
        table = qc.FeatureTable(["a", "b", "c"], ["x"], np.array([[1.0], [2.0], [3.0]]))
        z = qc.standardize(table)
        # sample (n-1) std of [1,2,3] is exactly 1, so z-scores are -1, 0, 1
        assert np.allclose(z.values[:, 0], [-1.0, 0.0, 1.0], atol=1e-12)

    def test_mean_zero_std_one(self):
        rng = np.random.default_rng(5)
        table = qc.FeatureTable(
            [f"r{i}" for i in range(20)], ["a", "b", "c"], rng.normal(2.0, 7.0, (20, 3))
        )
        z = qc.standardize(table)
        assert np.all(np.abs(z.values.mean(axis=0)) < 1e-9)
        assert np.all(np.abs(z.values.std(axis=0, ddof=1) - 1.0) < 1e-9)

    def test_constant_column_dropped_with_warning(self):
        table = qc.FeatureTable(
            ["a", "b", "c"], ["x", "flat"], np.array([[1.0, 5.0], [2.0, 5.0], [3.0, 5.0]])
        )
        with pytest.warns(UserWarning, match="flat"):
            z = qc.standardize(table)
        assert z.feature_names == ["x"]
        assert z.d == 1

    def test_all_constant_errors(self):
        table = qc.FeatureTable(["a", "b"], ["x"], np.array([[5.0], [5.0]]))
        with pytest.raises(ValueError, match="constant"):
            qc.standardize(table)

    def test_idempotent(self):
        rng = np.random.default_rng(11)
        table = qc.FeatureTable(
            [f"r{i}" for i in range(8)], ["a", "b"], rng.uniform(-4, 9, (8, 2))
        )
        once = qc.standardize(table)
        twice = qc.standardize(once)
        assert np.all(np.abs(once.values - twice.values) < 1e-9)


class TestBuildWeights:
    def three_four_five(self):
        return qc.FeatureTable(["p", "q"], ["x", "y"], np.array([[0.0, 0.0], [3.0, 4.0]]))

    def test_euclidean(self):
        w = qc.build_weights(self.three_four_five(), metric="euclidean")
        assert w.w[0, 1] == pytest.approx(5.0)

    def test_squared_euclidean(self):
        w = qc.build_weights(self.three_four_five(), metric="squared_euclidean")
        assert w.w[0, 1] == pytest.approx(25.0)

    def test_identical_rows(self):
        table = qc.FeatureTable(["p", "q"], ["x"], np.array([[2.0], [2.0]]))
        assert qc.build_weights(table).w[0, 1] == 0.0

    def test_unknown_metric(self):
        with pytest.raises(ValueError, match="metric"):
            qc.build_weights(self.three_four_five(), metric="manhattan")

    @pytest.mark.parametrize("trial", range(10))
    def test_invariants_on_random_tables(self, trial):
        rng = np.random.default_rng(100 + trial)
        n, d = rng.integers(2, 9), rng.integers(1, 6)
        table = qc.FeatureTable(
            [f"r{i}" for i in range(n)], [f"f{j}" for j in range(d)], rng.normal(size=(n, d))
        )
        w = qc.build_weights(table).w
        assert np.array_equal(w, w.T)
        assert np.all(np.diag(w) == 0.0)
        assert np.all(w >= 0.0)

    def test_permutation_consistency(self):
        rng = np.random.default_rng(42)
        n, d = 6, 4
        values = rng.normal(size=(n, d))
        table = qc.FeatureTable([f"r{i}" for i in range(n)], [f"f{j}" for j in range(d)], values)
        perm = rng.permutation(n)
        permuted = qc.FeatureTable(
            [f"r{i}" for i in perm], [f"f{j}" for j in range(d)], values[perm]
        )
        w = qc.build_weights(table).w
        wp = qc.build_weights(permuted).w
        assert np.allclose(wp, w[np.ix_(perm, perm)], atol=1e-12)


class TestWeightMatrixInvariants:
    def test_rejects_asymmetric(self):
        with pytest.raises(ValueError, match="symmetric"):
            qc.WeightMatrix(np.array([[0.0, 1.0], [2.0, 0.0]]))

    def test_rejects_nonzero_diagonal(self):
        with pytest.raises(ValueError, match="diagonal"):
            qc.WeightMatrix(np.array([[1.0, 1.0], [1.0, 0.0]]))

    def test_rejects_negative(self):
        with pytest.raises(ValueError, match="nonnegative"):
            qc.WeightMatrix(np.array([[0.0, -1.0], [-1.0, 0.0]]))
