from pathlib import Path

import numpy as np
import pytest

from lindec.dataset_v1 import ColumnSchema, ColumnSpec, load_csv, write_csv
from lindec.errors import ParseError, SchemaError

MEDICAL_SCHEMA = ColumnSchema(
    columns=[
        ColumnSpec(name="age", kind="numeric"),
        ColumnSpec(name="sex", kind="categorical"),
        ColumnSpec(name="bmi", kind="numeric"),
        ColumnSpec(name="children", kind="numeric"),
        ColumnSpec(name="smoker", kind="categorical"),
        ColumnSpec(name="region", kind="categorical"),
        ColumnSpec(name="charges", kind="target"),
    ]
)

MEDICAL_ROWS = """age,sex,bmi,children,smoker,region,charges
19,female,27.9,0,yes,southwest,16884.924
18,male,33.77,1,no,southeast,1725.5523
28,male,33,3,no,southeast,4449.462
33,male,22.705,0,no,northwest,21984.47061
32,male,28.88,0,no,northwest,3866.8552
31,female,25.74,0,no,southeast,3756.6216
46,female,33.44,1,no,northeast,8240.5896
"""

SIMPLE_SCHEMA = ColumnSchema(columns=[ColumnSpec(name="x"), ColumnSpec(name="y", kind="target")])


def _write(tmp_path: Path, text: str, name: str = "data.csv") -> Path:
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def test_numeric_pass_through(tmp_path):
    d = load_csv(_write(tmp_path, "x,y\n1,2\n3,4\n5.5,6\n"), SIMPLE_SCHEMA)
    assert d.features.shape == (3, 1)
    np.testing.assert_array_equal(d.features[:, 0], [1.0, 3.0, 5.5])
    np.testing.assert_array_equal(d.target, [2.0, 4.0, 6.0])
    assert d.target_name == "y"


def test_categorical_drops_first_level(tmp_path):
    schema = ColumnSchema(columns=[ColumnSpec(name="c", kind="categorical"), ColumnSpec(name="y", kind="target")])
    d = load_csv(_write(tmp_path, "c,y\nb,1\na,2\nc,3\na,4\n"), schema)
    assert d.feature_names == ("c_b", "c_c")
    np.testing.assert_array_equal(d.features, [[1.0, 0.0], [0.0, 0.0], [0.0, 1.0], [0.0, 0.0]])


def test_medical_layout_expands_to_eight_features(tmp_path):
    d = load_csv(_write(tmp_path, MEDICAL_ROWS), MEDICAL_SCHEMA)
    assert d.n_features == 8
    assert d.feature_names == (
        "age",
        "sex_male",
        "bmi",
        "children",
        "smoker_yes",
        "region_northwest",
        "region_southeast",
        "region_southwest",
    )
    assert d.target_name == "charges"
    assert d.n_rows == 7


def test_drop_columns_are_ignored(tmp_path):
    schema = ColumnSchema(
        columns=[ColumnSpec(name="id", kind="drop"), ColumnSpec(name="x"), ColumnSpec(name="y", kind="target")]
    )
    d = load_csv(_write(tmp_path, "id,x,y\nr1,1,2\nr2,3,4\n"), schema)
    assert d.feature_names == ("x",)


@pytest.mark.parametrize(
    "text, column, row",
    [
        pytest.param("x,y\n1,2\nabc,4\n", "x", 1, id="non-numeric"),
        pytest.param("x,y\n1,2\n3,\n", "y", 1, id="missing-target"),
        pytest.param("x,y\n,2\n3,4\n", "x", 0, id="missing-feature"),
        pytest.param("x,y\n1,2\nnan,4\n", "x", 1, id="nan-literal"),
    ],
)
def test_parse_errors_name_row_and_column(tmp_path, text, column, row):
    with pytest.raises(ParseError) as exc_info:
        load_csv(_write(tmp_path, text), SIMPLE_SCHEMA)
    assert exc_info.value.column == column
    assert exc_info.value.row == row


@pytest.mark.parametrize(
    "raw",
    [
        pytest.param(b"x,y\n1,2\n3,4\n3,4,5\n", id="ragged-row"),
        pytest.param(b"x,y\n\xff\xfe,2\n", id="not-utf8"),
    ],
)
def test_unreadable_files_are_parse_errors(tmp_path, raw):
    path = tmp_path / "bad.csv"
    path.write_bytes(raw)
    with pytest.raises(ParseError, match="bad.csv"):
        load_csv(path, SIMPLE_SCHEMA)


@pytest.mark.parametrize(
    "text",
    [
        pytest.param("x,z\n1,2\n", id="missing-column"),
        pytest.param("x,y,extra\n1,2,3\n", id="unlisted-column"),
    ],
)
def test_schema_errors(tmp_path, text):
    with pytest.raises(SchemaError):
        load_csv(_write(tmp_path, text), SIMPLE_SCHEMA)


def test_missing_file_names_the_path(tmp_path):
    missing = tmp_path / "nope.csv"
    with pytest.raises(FileNotFoundError, match="nope.csv"):
        load_csv(missing, SIMPLE_SCHEMA)


def test_write_then_load_preserves_rows(tmp_path):
    source = load_csv(_write(tmp_path, "x,y\n0.1,0.2\n0.30000000000000004,1e-300\n-7,8\n"), SIMPLE_SCHEMA)
    out = write_csv(source, tmp_path / "out" / "copy.csv")
    reloaded = load_csv(out, SIMPLE_SCHEMA)
    assert reloaded.n_rows == source.n_rows
    np.testing.assert_array_equal(reloaded.features, source.features)
    np.testing.assert_array_equal(reloaded.target, source.target)
