"""Command implementations behind `scripts/cli.py`. Each returns a process exit status:

    0  success
    2  config or parameter failure (unparseable JSON, failed validation, bad synth parameters)
    3  data failure (missing files, schema/parse/parameter/degenerate-variance/artifact errors)
    4  invariant violation or any unexpected exception
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path

from pydantic import ValidationError

from lindec.cli_v1.artifacts import dump_seed_artifacts, load_seed_artifacts
from lindec.cli_v1.plotdata import build_plot_series, write_plot_series
from lindec.dataset_v1 import generate_synthetic, write_csv
from lindec.errors import DataError, InvariantViolationError, ParameterError
from lindec.experiment_v1 import PRESETS, SeedArtifacts, load_config, resolve_config_path, run_experiment

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DATA = 3
EXIT_INTERNAL = 4


def _fail(message: str) -> None:
    print(f"error: {message}", file=sys.stderr)


def _print_validation_errors(source: str, exc: ValidationError) -> None:
    _fail(f"invalid config {source}: {exc.error_count()} error(s)")
    for err in exc.errors():
        loc = ".".join(str(part) for part in err["loc"]) or "<document>"
        print(f"  {loc}: {err['msg']}", file=sys.stderr)


def exit_status_for(exc: BaseException) -> int:
    if isinstance(exc, ValidationError):
        return EXIT_CONFIG
    if isinstance(exc, InvariantViolationError):
        return EXIT_INTERNAL
    if isinstance(exc, DataError | FileNotFoundError):
        return EXIT_DATA
    return EXIT_INTERNAL


def _report_failure(exc: Exception) -> int:
    status = exit_status_for(exc)
    if status == EXIT_DATA:
        logger.warning("Data error: %s", exc)
        _fail(str(exc))
    else:
        logger.exception("Internal error")
        _fail(f"internal error: {exc}")
    return status


def cmd_list() -> int:
    for name, path in PRESETS.items():
        print(f"{name:<24}{path}")
    return EXIT_OK


async def cmd_run(config_path: str, out_dir: str | Path, dump_models: bool = False) -> int:
    """Run an experiment, then write report.json, the first seed's plot CSVs and (optionally) every seed's model
    dumps. Nothing is written unless every seed finished."""
    path = resolve_config_path(config_path)
    try:
        cfg = load_config(path)
    except FileNotFoundError:
        _fail(f"config not found: {path}")
        return EXIT_CONFIG
    except ValidationError as exc:
        _print_validation_errors(str(path), exc)
        return EXIT_CONFIG
    except (OSError, UnicodeDecodeError) as exc:
        _fail(f"unreadable config {path}: {exc}")
        return EXIT_CONFIG

    out_dir = Path(out_dir)
    completed: list[SeedArtifacts] = []
    try:
        report = await run_experiment(cfg, on_seed_complete=completed.append)

        out_dir.mkdir(parents=True, exist_ok=True)
        report_path = out_dir / "report.json"
        report_path.write_text(report.model_dump_json(indent=2))
        logger.info("Wrote %s", report_path)

        first = completed[0]
        for label, eval_set in first.eval_sets.items():
            series = build_plot_series(first.baseline, eval_set, first.network, first.surrogate)
            write_plot_series(label, out_dir / "plots", series)
        if dump_models:
            for artifacts in completed:
                dump_seed_artifacts(artifacts, out_dir / "artifacts")
    except Exception as exc:
        return _report_failure(exc)

    print(report.summary())
    return EXIT_OK


def cmd_plotdata(artifacts_dir: str | Path, out_dir: str | Path, seed: int | None = None) -> int:
    try:
        loaded = load_seed_artifacts(Path(artifacts_dir), seed=seed)
        written = 0
        for label, eval_set in loaded.eval_sets.items():
            series = build_plot_series(loaded.baseline, eval_set, loaded.network, loaded.surrogate)
            written += len(write_plot_series(label, Path(out_dir), series))
    except Exception as exc:
        return _report_failure(exc)
    print(f"wrote {written} plot series for seed {loaded.seed} to {out_dir}")
    return EXIT_OK


def cmd_synth(
    n: int,
    noise_std: float,
    seed: int,
    out_path: str | Path,
    *,
    x_max: float = 4.0,
    x_min: float = -4.0,
) -> int:
    try:
        d = generate_synthetic(n=n, noise_std=noise_std, seed=seed, x_max=x_max, x_min=x_min)
    except ParameterError as exc:
        _fail(str(exc))
        return EXIT_CONFIG
    try:
        path = write_csv(d, out_path)
    except OSError as exc:
        return _report_failure(exc)
    logger.info("Wrote %d synthetic rows to %s", d.n_rows, path)
    return EXIT_OK
