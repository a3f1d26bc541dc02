"""Plot data for the three-model comparison: true y against baseline and network predictions, and network against
surrogate predictions. Emitted as two-column CSV files named `<domain>_<series>.csv`."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

import pandas as pd

from lindec.dataset_v1.csv_io import FLOAT_FORMAT
from lindec.dataset_v1.models import Dataset
from lindec.errors import ShapeError
from lindec.linalg_v1 import Vector
from lindec.mlp_v1.models import MlpModel
from lindec.mlp_v1.network import forward
from lindec.surrogate_v1 import LinearModel, predict

logger = logging.getLogger(__name__)

DOMAIN_SLUGS: dict[str, str] = {"Test": "test", "IID": "iid", "Tail-L": "tail_l", "Tail-R": "tail_r"}


@dataclass(frozen=True, slots=True)
class PlotSeries:
    name: str
    x: Vector
    x_label: str
    y: Vector
    y_label: str

    def __post_init__(self):
        if self.x.shape != self.y.shape:
            raise ShapeError(f"plot series {self.name!r}: x has shape {self.x.shape}, y has {self.y.shape}")


def build_plot_series(
    baseline: LinearModel,
    eval_set: Dataset,
    net: MlpModel,
    surrogate: LinearModel,
) -> list[PlotSeries]:
    y = eval_set.target
    network_pred = forward(net, eval_set.features)
    return [
        PlotSeries(
            name="true_vs_baseline",
            x=y,
            x_label="y_true",
            y=predict(baseline, eval_set.features),
            y_label="baseline_pred",
        ),
        PlotSeries(name="true_vs_network", x=y, x_label="y_true", y=network_pred, y_label="network_pred"),
        PlotSeries(
            name="network_vs_surrogate",
            x=network_pred,
            x_label="network_pred",
            y=predict(surrogate, eval_set.features),
            y_label="surrogate_pred",
        ),
    ]


def write_plot_series(domain: str, out_dir: Path, series: list[PlotSeries]) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    slug = DOMAIN_SLUGS.get(domain, domain.lower())
    paths = []
    for s in series:
        path = out_dir / f"{slug}_{s.name}.csv"
        pd.DataFrame({s.x_label: s.x, s.y_label: s.y}).to_csv(path, index=False, float_format=FLOAT_FORMAT)
        paths.append(path)
    logger.info("Wrote %d plot series for %s to %s", len(paths), domain, out_dir)
    return paths
