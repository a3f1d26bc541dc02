import numpy as np
import pytest

from lindec.dataset_v1 import apply_standardizer, fit_standardizer, invert_standardizer
from lindec.errors import EmptyDataError, ShapeError
from tests.unit_tests._builders import dataset


def test_apply_to_fitting_set_gives_unit_columns(rng):
    d = dataset(rng.normal(loc=5.0, scale=3.0, size=(200, 3)), rng.normal(size=200))
    z = apply_standardizer(fit_standardizer(d), d)
    np.testing.assert_allclose(z.features.mean(axis=0), 0.0, atol=1e-9)
    np.testing.assert_allclose(z.features.std(axis=0), 1.0, atol=1e-9)


def test_constant_column_becomes_zeros():
    d = dataset([[7.0, 1.0], [7.0, 2.0], [7.0, 3.0]], [0.0, 1.0, 2.0])
    s = fit_standardizer(d)
    assert s.stds[0] == 1.0
    np.testing.assert_array_equal(apply_standardizer(s, d).features[:, 0], 0.0)


def test_constant_column_with_rounding_spread():
    d = dataset(np.full((10, 1), 0.1), np.arange(10.0))
    assert fit_standardizer(d).stds[0] == 1.0


def test_statistics_come_from_the_fitting_set_only(rng):
    train = dataset(rng.normal(size=(100, 1)), rng.normal(size=100))
    test = dataset(rng.normal(loc=4.0, size=(100, 1)), rng.normal(size=100))
    shifted = apply_standardizer(fit_standardizer(train), test)
    assert shifted.features.mean() > 2.0


def test_standardization_is_invertible(rng):
    d = dataset(rng.normal(loc=-3.0, scale=50.0, size=(60, 4)), rng.normal(size=60))
    s = fit_standardizer(d)
    restored = invert_standardizer(s, apply_standardizer(s, d))
    np.testing.assert_allclose(restored.features, d.features, rtol=1e-9, atol=1e-9)


def test_target_and_labels_are_untouched(rng):
    d = dataset(rng.normal(size=(10, 2)), rng.normal(size=10), feature_names=("a", "b"), target_name="t")
    z = apply_standardizer(fit_standardizer(d), d)
    np.testing.assert_array_equal(z.target, d.target)
    assert z.feature_names == ("a", "b")
    assert z.target_name == "t"


def test_column_count_mismatch():
    s = fit_standardizer(dataset([[1.0, 2.0], [3.0, 5.0]], [0.0, 1.0]))
    with pytest.raises(ShapeError):
        apply_standardizer(s, dataset([[1.0], [2.0]], [0.0, 1.0]))


def test_fit_on_empty_dataset():
    with pytest.raises(EmptyDataError):
        fit_standardizer(dataset(np.zeros((0, 1)), np.zeros(0)))
