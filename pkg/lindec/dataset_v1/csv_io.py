"""CSV ingestion and serialization.

Input: UTF-8, comma-delimited, one header row, decimal-point reals, no missing values. Categorical columns are one-hot
expanded with the first level (sorted order) dropped; numeric columns pass through; the single `target` column is
extracted; `drop` columns are ignored. Features keep schema order, with each categorical expanded in place.
"""

from __future__ import annotations

import logging
from pathlib import Path

import numpy as np
import pandas as pd

from lindec.dataset_v1.models import ColumnSchema, Dataset
from lindec.errors import ParseError, SchemaError

logger = logging.getLogger(__name__)

# Serialized reals round-trip exactly.
FLOAT_FORMAT = "%.17g"


def _categorical_block(name: str, raw: pd.Series) -> pd.DataFrame:
    values = raw.str.strip()
    _raise_on_missing(name, values)
    return pd.get_dummies(values, prefix=name, prefix_sep="_", drop_first=True, dtype=np.float64)


def _numeric_column(name: str, raw: pd.Series) -> np.ndarray:
    values = raw.str.strip()
    _raise_on_missing(name, values)
    parsed = pd.to_numeric(values, errors="coerce").to_numpy(dtype=np.float64)
    bad = np.flatnonzero(~np.isfinite(parsed))
    if bad.size:
        row = int(bad[0])
        raise ParseError(
            f"non-numeric value {values.iloc[row]!r} in column {name!r} at row {row}",
            column=name,
            row=row,
        )
    return parsed


def _raise_on_missing(name: str, values: pd.Series) -> None:
    empty = np.flatnonzero((values == "").to_numpy())
    if empty.size:
        row = int(empty[0])
        raise ParseError(f"missing value in column {name!r} at row {row}", column=name, row=row)


def load_csv(path: str | Path, schema: ColumnSchema) -> Dataset:
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"CSV file not found: {path}")
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8")
    except (pd.errors.ParserError, UnicodeDecodeError) as exc:
        logger.warning("Unreadable CSV %s: %s", path, exc)
        raise ParseError(f"{path}: not a well-formed UTF-8 CSV file: {exc}") from exc

    header = [str(c).strip() for c in frame.columns]
    frame.columns = header
    missing = [n for n in schema.names if n not in header]
    if missing:
        raise SchemaError(f"{path}: columns {missing} named in the schema are missing from the header {header}")
    unlisted = [h for h in header if h not in schema.names]
    if unlisted:
        raise SchemaError(f"{path}: columns {unlisted} are not in the schema; list them with kind 'drop' to ignore")

    blocks: list[pd.DataFrame] = []
    for spec in schema.columns:
        if spec.kind == "numeric":
            blocks.append(pd.DataFrame({spec.name: _numeric_column(spec.name, frame[spec.name])}))
        elif spec.kind == "categorical":
            blocks.append(_categorical_block(spec.name, frame[spec.name]))
    target = _numeric_column(schema.target, frame[schema.target])

    features = pd.concat(blocks, axis=1) if blocks else pd.DataFrame(index=frame.index)
    logger.info("Loaded %s: %d rows, %d feature columns", path, len(frame), features.shape[1])
    return Dataset(
        features=features.to_numpy(dtype=np.float64).reshape(len(frame), features.shape[1]),
        target=target,
        feature_names=tuple(str(c) for c in features.columns),
        target_name=schema.target,
    )


def write_csv(d: Dataset, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame(np.asarray(d.features), columns=list(d.feature_names))
    frame[d.target_name] = np.asarray(d.target)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
    return path
