"""Three-model experiment runner: data baseline, network f, and affine surrogate g, across seeds.

Per-seed pipelines run concurrently in worker threads (at most `LINDEC_THREADS`), each owning its RNG streams.
Results are gathered back in seed-list order, so reports are identical for identical configs regardless of
scheduling. `on_seed_complete` receives each seed's trained artifacts after all pipelines finish.
"""

from __future__ import annotations

import asyncio
import logging
import time
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from lindec import __version__
from lindec.dataset_v1 import (
    Dataset,
    Standardizer,
    apply_standardizer,
    fit_standardizer,
    generate_synthetic,
    load_csv,
    quantile_shift_split,
    train_test_split,
)
from lindec.errors import EmptyDataError, ParameterError
from lindec.experiment_v1.models import (
    CsvDatasetConfig,
    DomainLabel,
    DomainResult,
    ExperimentConfig,
    ExperimentReport,
    PlainSplitConfig,
    Provenance,
    SeedSummary,
    ShiftSplitConfig,
)
from lindec.metrics_v1 import METRIC_FIELDS, EvalResult, evaluate_triplet, in_sample_lambda
from lindec.mlp_v1 import MlpModel, train
from lindec.surrogate_v1 import LinearModel, fit_surrogate, ols_fit
from lindec.utils_v1.os_utils import get_platform, get_python_version, get_thread_count
from lindec.utils_v1.text_utils import text_to_md5
from lindec.utils_v1.time_utils import utc_now_iso

logger = logging.getLogger(__name__)

# r_squared needs two rows; anything smaller cannot be trained on or evaluated.
MIN_PARTITION_ROWS = 2


@dataclass
class SeedArtifacts:
    """Everything one seed's pipeline produced. `eval_sets` are standardized with the train-fit statistics."""

    baseline: LinearModel
    eval_sets: dict[DomainLabel, Dataset]
    network: MlpModel
    results: dict[DomainLabel, EvalResult]
    seed: int
    standardizer: Standardizer
    surrogate: LinearModel
    train_set: Dataset
    epoch_losses: list[float] = field(default_factory=list)

    def summary(self) -> SeedSummary:
        names = self.train_set.feature_names
        return SeedSummary(
            baseline_coefficients=self.baseline.coefficients(names),
            baseline_intercept=self.baseline.intercept,
            epoch_losses=list(self.epoch_losses),
            epochs=len(self.epoch_losses),
            final_train_loss=self.epoch_losses[-1] if self.epoch_losses else float("nan"),
            n_train=self.train_set.n_rows,
            seed=self.seed,
            surrogate_coefficients=self.surrogate.coefficients(names),
            surrogate_intercept=self.surrogate.intercept,
        )


OnSeedComplete = Callable[[SeedArtifacts], None]


def _check_partition(label: str, d: Dataset) -> None:
    if d.n_rows < MIN_PARTITION_ROWS:
        raise ParameterError(f"{label} partition has {d.n_rows} rows; at least {MIN_PARTITION_ROWS} are required")


def _report(
    cfg: ExperimentConfig,
    labels: list[DomainLabel],
    artifacts: list[SeedArtifacts],
) -> ExperimentReport:
    domains = []
    for label in labels:
        per_seed = [a.results[label] for a in artifacts]
        means, stds = aggregate(per_seed)
        domains.append(
            DomainResult(label=label, mean=means, per_seed=per_seed, seeds=[a.seed for a in artifacts], std=stds)
        )
    return ExperimentReport(
        config_echo=cfg,
        domains=domains,
        models=[a.summary() for a in artifacts],
        provenance=Provenance(
            config_hash=text_to_md5(cfg.model_dump_json()),
            created_at=utc_now_iso(),
            lindec_version=__version__,
            platform=get_platform(),
            python_version=get_python_version(),
        ),
    )


def _run_pipeline(
    cfg: ExperimentConfig,
    eval_raw: dict[DomainLabel, Dataset],
    seed: int,
    train_raw: Dataset,
) -> SeedArtifacts:
    """Standardize on the train rows, then fit the baseline, train the network, fit the surrogate, and evaluate."""
    standardizer = fit_standardizer(train_raw)
    train_set = apply_standardizer(standardizer, train_raw)
    eval_sets = {label: apply_standardizer(standardizer, d) for label, d in eval_raw.items()}
    arch = cfg.architecture.to_architecture(train_set.n_features)

    baseline = ols_fit(train_set.features, train_set.target)
    epoch_losses: list[float] = []
    network = train(
        arch,
        train_set,
        cfg.training.model_copy(update={"seed": seed}),
        on_epoch=lambda _epoch, loss: epoch_losses.append(loss),
    )
    surrogate = fit_surrogate(network, train_set)
    logger.debug("Seed %d: in-sample lambda %.6f", seed, in_sample_lambda(network, surrogate, train_set))
    results = {label: evaluate_triplet(baseline, network, surrogate, d) for label, d in eval_sets.items()}
    return SeedArtifacts(
        baseline=baseline,
        epoch_losses=epoch_losses,
        eval_sets=eval_sets,
        network=network,
        results=results,
        seed=seed,
        standardizer=standardizer,
        surrogate=surrogate,
        train_set=train_set,
    )


async def _run_seeds(
    cfg: ExperimentConfig,
    pipeline: Callable[[int], SeedArtifacts],
    on_seed_complete: OnSeedComplete | None,
) -> list[SeedArtifacts]:
    limit = asyncio.Semaphore(get_thread_count(len(cfg.seeds)))

    async def run_one(seed: int) -> SeedArtifacts:
        async with limit:
            start = time.monotonic()
            logger.info("Experiment %s: seed %d started", cfg.name, seed)
            try:
                artifacts = await asyncio.to_thread(pipeline, seed)
            except Exception as exc:
                exc.add_note(f"experiment {cfg.name!r}, seed {seed}")
                raise
            logger.info("Experiment %s: seed %d finished (%.1fs)", cfg.name, seed, time.monotonic() - start)
            return artifacts

    artifacts = await asyncio.gather(*(run_one(seed) for seed in cfg.seeds))
    if on_seed_complete is not None:
        for a in artifacts:
            on_seed_complete(a)
    return list(artifacts)


def aggregate(per_seed: list[EvalResult]) -> tuple[dict[str, float], dict[str, float]]:
    """Field-wise mean and population standard deviation over seeds."""
    if not per_seed:
        raise EmptyDataError("cannot aggregate zero per-seed results")
    means: dict[str, float] = {}
    stds: dict[str, float] = {}
    for name in METRIC_FIELDS:
        values = np.array([r.metric(name) for r in per_seed], dtype=np.float64)
        means[name] = float(values.mean())
        stds[name] = float(values.std())
    return means, stds


def load_dataset(cfg: ExperimentConfig) -> Dataset:
    dataset = cfg.dataset
    if isinstance(dataset, CsvDatasetConfig):
        return load_csv(dataset.path, dataset.column_schema)
    return generate_synthetic(
        n=dataset.n,
        noise_std=dataset.noise_std,
        seed=dataset.seed,
        x_max=dataset.x_max,
        x_min=dataset.x_min,
    )


async def run_experiment(cfg: ExperimentConfig, on_seed_complete: OnSeedComplete | None = None) -> ExperimentReport:
    if isinstance(cfg.split, ShiftSplitConfig):
        return await run_shift(cfg, on_seed_complete=on_seed_complete)
    return await run_standard(cfg, on_seed_complete=on_seed_complete)


async def run_shift(cfg: ExperimentConfig, on_seed_complete: OnSeedComplete | None = None) -> ExperimentReport:
    """Train on the middle quantile band of the shift feature; evaluate on its IID test part and on both tails.

    The split is computed once from the data and `split.seed`; pipeline seeds only drive network training.
    """
    if not isinstance(cfg.split, ShiftSplitConfig):
        raise ParameterError(f"run_shift needs a shift split, got {cfg.split.kind!r}")
    split_cfg = cfg.split
    split = quantile_shift_split(
        load_dataset(cfg),
        feature=split_cfg.feature,
        high_q=split_cfg.high_q,
        iid_test_fraction=split_cfg.iid_test_fraction,
        low_q=split_cfg.low_q,
        seed=split_cfg.seed,
    )
    eval_raw: dict[DomainLabel, Dataset] = {"IID": split.iid_test, "Tail-L": split.tail_low, "Tail-R": split.tail_high}
    _check_partition("train", split.train)
    for label, d in eval_raw.items():
        _check_partition(label, d)
    logger.info(
        "Experiment %s: shift split on %r: train=%d IID=%d Tail-L=%d Tail-R=%d",
        cfg.name,
        split_cfg.feature,
        split.train.n_rows,
        split.iid_test.n_rows,
        split.tail_low.n_rows,
        split.tail_high.n_rows,
    )

    def pipeline(seed: int) -> SeedArtifacts:
        return _run_pipeline(cfg, eval_raw, seed, split.train)

    artifacts = await _run_seeds(cfg, pipeline, on_seed_complete)
    return _report(cfg, ["IID", "Tail-L", "Tail-R"], artifacts)


async def run_standard(cfg: ExperimentConfig, on_seed_complete: OnSeedComplete | None = None) -> ExperimentReport:
    """Per seed: shuffle-split, standardize on train, fit baseline / network / surrogate, evaluate on the test rows."""
    if not isinstance(cfg.split, PlainSplitConfig):
        raise ParameterError(f"run_standard needs a plain split, got {cfg.split.kind!r}")
    data = load_dataset(cfg)
    test_fraction = cfg.split.test_fraction

    def pipeline(seed: int) -> SeedArtifacts:
        train_raw, test_raw = train_test_split(data, test_fraction=test_fraction, seed=seed)
        _check_partition("train", train_raw)
        _check_partition("Test", test_raw)
        return _run_pipeline(cfg, {"Test": test_raw}, seed, train_raw)

    artifacts = await _run_seeds(cfg, pipeline, on_seed_complete)
    return _report(cfg, ["Test"], artifacts)
