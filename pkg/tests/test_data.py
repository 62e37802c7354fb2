import numpy as np
import pytest

from mvrvfl.data import (
    DatasetError,
    LabeledDataset,
    PCAView,
    TwoViewDataset,
    decode_scores,
    load_csv_dataset,
    load_two_view,
    make_folds,
    make_pca_view,
    map_binary_labels,
    one_hot,
    train_test_split,
)


def _covariance_oracle(X, fraction):
    # eigendecomposition of the sample covariance, independent of the SVD path
    Xc = X - X.mean(axis=0)
    vals = np.linalg.eigvalsh(Xc.T @ Xc / (X.shape[0] - 1))[::-1]
    ratio = np.cumsum(vals) / vals.sum()
    return int(np.argmax(ratio >= fraction - 1e-12) + 1), vals


def test_pca_component_count_matches_covariance_eigensolve():
    X = np.random.default_rng(3).normal(size=(50, 6)) * np.array([5, 3, 2, 1, 0.5, 0.1])
    pca = PCAView(0.95).fit(X)
    k, vals = _covariance_oracle(X, 0.95)
    assert pca.n_components_ == k
    assert vals[:k].sum() / vals.sum() >= 0.95
    assert vals[: k - 1].sum() / vals.sum() < 0.95
    np.testing.assert_allclose(pca.explained_variance_, vals[:k], rtol=1e-10)


@pytest.mark.parametrize("seed", range(5))
def test_pca_orthonormal_and_reconstruction(seed):
    rng = np.random.default_rng(seed)
    X = rng.normal(size=(40, 7)) @ rng.normal(size=(7, 7))
    pca = PCAView(0.9).fit(X)
    V = pca.components_
    np.testing.assert_allclose(V @ V.T, np.eye(V.shape[0]), atol=1e-10)
    R = pca.inverse_transform(pca.transform(X))
    Xc = X - X.mean(axis=0)
    assert np.sum((X - R) ** 2) <= (1 - 0.9) * np.sum(Xc**2) + 1e-9


def test_pca_sign_convention():
    X = np.random.default_rng(1).normal(size=(30, 4))
    V = PCAView(0.99).fit(X).components_
    for v in V:
        assert v[np.argmax(np.abs(v))] >= 0


def test_pca_full_fraction_keeps_all_nonzero_directions():
    X = np.random.default_rng(2).normal(size=(20, 3))
    assert make_pca_view(X, 1.0).shape == (20, 3)


def test_pca_rejects_constant_matrix():
    with pytest.raises(ValueError):
        PCAView().fit(np.ones((5, 3)))


def test_label_mapping_numeric_order():
    y, classes = map_binary_labels(["+1", "-1", "+1"])
    assert classes == ("-1", "+1")
    assert y.tolist() == [1, -1, 1]


def test_label_mapping_strings_and_degenerate():
    y, classes = map_binary_labels(["dbp", "non", "non"])
    assert classes == ("dbp", "non") and y.tolist() == [-1, 1, 1]
    with pytest.raises(DatasetError, match="degenerate labels"):
        map_binary_labels(["a", "a"])
    with pytest.raises(DatasetError, match="degenerate labels"):
        map_binary_labels(["a", "b", "c"])


def test_one_hot_and_decode_round_trip():
    y = np.array([1, -1, -1, 1])
    Y = one_hot(y)
    assert Y.tolist() == [[0, 1], [1, 0], [1, 0], [0, 1]]
    assert decode_scores(Y).tolist() == y.tolist()
    assert decode_scores(np.array([[0.5, 0.5]])).tolist() == [1]


def test_dataset_validation():
    with pytest.raises(ValueError):
        LabeledDataset(np.zeros((3, 2)), np.array([1, -1]))
    with pytest.raises(ValueError):
        LabeledDataset(np.array([[np.nan, 1.0], [0.0, 1.0]]), np.array([1, -1]))
    with pytest.raises(ValueError):
        TwoViewDataset(np.zeros((3, 2)), np.zeros((4, 2)), np.array([1, -1, 1]))
    ds = LabeledDataset(np.zeros((2, 2)), np.array([1, -1]))
    with pytest.raises(ValueError):
        ds.features[0, 0] = 1.0


def test_csv_loading(tmp_path):
    p = tmp_path / "d.csv"
    p.write_text("id,x1,x2,label\na,1.0,2.0,pos\nb,3.0,4.5,neg\nc,0,1,pos\n", encoding="utf-8")
    ds = load_csv_dataset(p)
    assert ds.features.shape == (3, 2)
    assert ds.ids == ("a", "b", "c")
    assert ds.feature_names == ("x1", "x2")
    assert ds.labels.tolist() == [1, -1, 1]


def test_csv_errors(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_csv_dataset(tmp_path / "missing.csv")
    p = tmp_path / "bad.csv"
    p.write_text("x,label\n1.0,a\noops,b\n", encoding="utf-8")
    with pytest.raises(DatasetError, match="row 2, column 'x'"):
        load_csv_dataset(p)
    p.write_text("x,label\n1.0,a,9\n2.0,b\n", encoding="utf-8")
    with pytest.raises(DatasetError, match="line 2"):
        load_csv_dataset(p)


def test_combined_two_view_file(tmp_path):
    p = tmp_path / "c.csv"
    p.write_text("id,a_1,a_2,b_1,label\nx,1,2,3,1\ny,4,5,6,-1\n", encoding="utf-8")
    ds = load_two_view(combined=p)
    assert ds.view_a.shape == (2, 2) and ds.view_b.shape == (2, 1)
    assert ds.labels.tolist() == [1, -1]


def test_split_sizes_and_determinism():
    ds = LabeledDataset(np.arange(20.0).reshape(10, 2), np.array([1, -1] * 5))
    tr, te = train_test_split(ds, 0.7, seed=4)
    assert (tr.n_samples, te.n_samples) == (7, 3)
    tr2, _ = train_test_split(ds, 0.7, seed=4)
    np.testing.assert_array_equal(tr.features, tr2.features)
    assert set(tr.features[:, 0]) | set(te.features[:, 0]) == set(ds.features[:, 0])


@pytest.mark.parametrize("n,k", [(10, 5), (11, 5), (7, 2), (5, 5)])
def test_folds_partition_rows(n, k):
    plan = make_folds(n, k, seed=1)
    sizes = plan.sizes()
    assert sizes.sum() == n and sizes.max() - sizes.min() <= 1
    seen = np.concatenate([te for _, te in plan.folds()])
    assert sorted(seen.tolist()) == list(range(n))
    with pytest.raises(ValueError):
        make_folds(3, 4)
