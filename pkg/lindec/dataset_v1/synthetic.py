import logging

import numpy as np

from lindec.dataset_v1.models import Dataset
from lindec.errors import ParameterError

logger = logging.getLogger(__name__)


def generate_synthetic(
    *,
    n: int,
    noise_std: float,
    seed: int,
    x_max: float = 4.0,
    x_min: float = -4.0,
) -> Dataset:
    """Sample y = x·sin(x) + noise_std·z with x ~ U[x_min, x_max] and z ~ N(0, 1), deterministic in `seed`."""
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if noise_std < 0:
        raise ParameterError(f"noise_std must be >= 0, got {noise_std}")
    if not x_min < x_max:
        raise ParameterError(f"x_min must be < x_max, got [{x_min}, {x_max}]")

    rng = np.random.default_rng(seed)
    x = rng.uniform(x_min, x_max, size=n)
    z = rng.standard_normal(size=n)
    y = x * np.sin(x)
    if noise_std > 0:
        y = y + noise_std * z
    logger.debug("Generated %d synthetic rows on [%g, %g] with noise_std=%g", n, x_min, x_max, noise_std)
    return Dataset(features=x.reshape(-1, 1), target=y, feature_names=("x",), target_name="y")
