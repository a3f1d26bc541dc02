"""Trained-model dumps written by `run --dump-models` and read back by `plotdata`.

Layout, one directory per seed:

    <artifacts>/seed_<s>/network.json       versioned MLP document
    <artifacts>/seed_<s>/baseline.json      linear model document (with feature names)
    <artifacts>/seed_<s>/surrogate.json
    <artifacts>/seed_<s>/standardizer.json  train-fit feature statistics
    <artifacts>/seed_<s>/eval_<domain>.csv  standardized evaluation partition, target in the last column
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

import numpy as np
import pandas as pd
from pydantic import BaseModel, ValidationError

from lindec.cli_v1.plotdata import DOMAIN_SLUGS
from lindec.dataset_v1.csv_io import load_csv, write_csv
from lindec.dataset_v1.models import ColumnSchema, ColumnSpec, Dataset, Standardizer
from lindec.errors import ArtifactError
from lindec.experiment_v1.runner import SeedArtifacts
from lindec.mlp_v1.models import MlpModel
from lindec.mlp_v1.serialization import dump_model, load_model
from lindec.surrogate_v1 import LinearModel, dump_linear_model, load_linear_model

logger = logging.getLogger(__name__)

_SEED_DIR = re.compile(r"^seed_(-?\d+)$")


class StandardizerDocument(BaseModel):
    format: Literal["lindec.standardizer"] = "lindec.standardizer"
    version: Literal[1] = 1
    feature_names: list[str]
    means: list[float]
    stds: list[float]


@dataclass
class LoadedArtifacts:
    baseline: LinearModel
    eval_sets: dict[str, Dataset]
    network: MlpModel
    seed: int
    standardizer: Standardizer
    surrogate: LinearModel


def _read_eval_csv(path: Path) -> Dataset:
    header = list(pd.read_csv(path, nrows=0).columns)
    if not header:
        raise ArtifactError(f"{path} has no header row")
    columns = [ColumnSpec(name=name, kind="numeric") for name in header[:-1]]
    columns.append(ColumnSpec(name=header[-1], kind="target"))
    return load_csv(path, ColumnSchema(columns=columns))


def available_seeds(root: Path) -> list[int]:
    if not root.is_dir():
        return []
    seeds = [int(m.group(1)) for p in root.iterdir() if p.is_dir() and (m := _SEED_DIR.match(p.name))]
    return sorted(seeds)


def dump_seed_artifacts(artifacts: SeedArtifacts, root: Path) -> Path:
    seed_dir = root / f"seed_{artifacts.seed}"
    names = artifacts.train_set.feature_names
    dump_model(artifacts.network, seed_dir / "network.json")
    dump_linear_model(artifacts.baseline, names, seed_dir / "baseline.json")
    dump_linear_model(artifacts.surrogate, names, seed_dir / "surrogate.json")
    doc = StandardizerDocument(
        feature_names=list(names),
        means=artifacts.standardizer.means.tolist(),
        stds=artifacts.standardizer.stds.tolist(),
    )
    (seed_dir / "standardizer.json").write_text(doc.model_dump_json(indent=2))
    for label, d in artifacts.eval_sets.items():
        write_csv(d, seed_dir / f"eval_{DOMAIN_SLUGS[label]}.csv")
    logger.info("Dumped seed %d artifacts to %s", artifacts.seed, seed_dir)
    return seed_dir


def load_seed_artifacts(root: Path, seed: int | None = None) -> LoadedArtifacts:
    """Load one seed's dump; `seed=None` picks the lowest dumped seed. `root` may also be a run output directory
    that holds an `artifacts/` subdirectory."""
    if not available_seeds(root) and (root / "artifacts").is_dir():
        root = root / "artifacts"
    seeds = available_seeds(root)
    if not seeds:
        raise ArtifactError(f"no seed_<n> artifact directories under {root}; rerun with --dump-models")
    if seed is None:
        seed = seeds[0]
    elif seed not in seeds:
        raise ArtifactError(f"no artifacts for seed {seed} under {root}; available seeds: {seeds}")

    seed_dir = root / f"seed_{seed}"
    labels_by_slug = {slug: label for label, slug in DOMAIN_SLUGS.items()}
    eval_sets: dict[str, Dataset] = {}
    for path in sorted(seed_dir.glob("eval_*.csv")):
        slug = path.stem.removeprefix("eval_")
        eval_sets[labels_by_slug.get(slug, slug)] = _read_eval_csv(path)
    if not eval_sets:
        raise ArtifactError(f"no eval_<domain>.csv partitions in {seed_dir}")
    return LoadedArtifacts(
        baseline=load_linear_model(seed_dir / "baseline.json"),
        eval_sets=eval_sets,
        network=load_model(seed_dir / "network.json"),
        seed=seed,
        standardizer=load_standardizer(seed_dir / "standardizer.json"),
        surrogate=load_linear_model(seed_dir / "surrogate.json"),
    )


def load_standardizer(path: Path) -> Standardizer:
    if not path.is_file():
        raise ArtifactError(f"standardizer dump not found: {path}")
    try:
        doc = StandardizerDocument.model_validate_json(path.read_text())
    except ValidationError as exc:
        raise ArtifactError(f"{path} is not a valid standardizer dump: {exc}") from exc
    return Standardizer(means=np.array(doc.means), stds=np.array(doc.stds))
