import numpy as np
import pytest
from pydantic import ValidationError

from lindec.dataset_v1 import ColumnSchema, ColumnSpec, Dataset, Standardizer
from lindec.errors import ParameterError, SchemaError, ShapeError
from tests.unit_tests._builders import dataset


@pytest.mark.parametrize(
    "columns",
    [
        pytest.param([ColumnSpec(name="a")], id="no-target"),
        pytest.param([ColumnSpec(name="a", kind="target"), ColumnSpec(name="b", kind="target")], id="two-targets"),
        pytest.param([ColumnSpec(name="a"), ColumnSpec(name="a", kind="target")], id="duplicate-name"),
    ],
)
def test_column_schema_rejects(columns):
    with pytest.raises(ValidationError):
        ColumnSchema(columns=columns)


def test_column_schema_target():
    schema = ColumnSchema(columns=[ColumnSpec(name="a"), ColumnSpec(name="t", kind="target")])
    assert schema.target == "t"
    assert schema.names == ["a", "t"]


@pytest.mark.parametrize(
    "features, target, names",
    [
        pytest.param(np.ones((3, 2)), np.ones(2), ("a", "b"), id="row-mismatch"),
        pytest.param(np.ones((3, 2)), np.ones(3), ("a",), id="name-count"),
        pytest.param(np.ones(3), np.ones(3), ("a",), id="vector-features"),
    ],
)
def test_dataset_rejects_inconsistent_shapes(features, target, names):
    with pytest.raises(ShapeError):
        Dataset(features=features, target=target, feature_names=names)


def test_dataset_column_lookup():
    d = dataset([[1.0, 2.0], [3.0, 4.0]], [0.0, 1.0], feature_names=("a", "b"))
    np.testing.assert_array_equal(d.column("b"), [2.0, 4.0])
    with pytest.raises(SchemaError):
        d.column("missing")


def test_dataset_is_read_only():
    d = dataset([[1.0], [2.0]], [0.0, 1.0])
    with pytest.raises(ValueError):
        d.features[0, 0] = 5.0
    with pytest.raises(ValueError):
        d.target[0] = 5.0


def test_dataset_take_tracks_source_rows():
    d = dataset(np.arange(5.0), np.arange(5.0) * 2)
    part = d.take([4, 1])
    np.testing.assert_array_equal(part.source_rows, [4, 1])
    np.testing.assert_array_equal(part.target, [8.0, 2.0])
    np.testing.assert_array_equal(part.take([1]).source_rows, [1])


def test_standardizer_requires_positive_stds():
    with pytest.raises(ParameterError):
        Standardizer(means=np.zeros(2), stds=np.array([1.0, 0.0]))
    with pytest.raises(ShapeError):
        Standardizer(means=np.zeros(2), stds=np.ones(3))
