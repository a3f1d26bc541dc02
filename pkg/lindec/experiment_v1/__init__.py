from lindec.experiment_v1.models import (
    ArchitectureConfig,
    CsvDatasetConfig,
    DomainResult,
    ExperimentConfig,
    ExperimentReport,
    PlainSplitConfig,
    SeedSummary,
    ShiftSplitConfig,
    SyntheticDatasetConfig,
)
from lindec.experiment_v1.presets import PRESETS, load_config, resolve_config_path
from lindec.experiment_v1.runner import (
    SeedArtifacts,
    aggregate,
    load_dataset,
    run_experiment,
    run_shift,
    run_standard,
)

__all__ = [
    "PRESETS",
    "ArchitectureConfig",
    "CsvDatasetConfig",
    "DomainResult",
    "ExperimentConfig",
    "ExperimentReport",
    "PlainSplitConfig",
    "SeedArtifacts",
    "SeedSummary",
    "ShiftSplitConfig",
    "SyntheticDatasetConfig",
    "aggregate",
    "load_config",
    "load_dataset",
    "resolve_config_path",
    "run_experiment",
    "run_shift",
    "run_standard",
]
