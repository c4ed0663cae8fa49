"""Python bindings for the gam core library."""

from ._gamsonnet import (
    ComputationError,
    InputError,
    feature_names,
    krippendorff_alpha,
    min_sample_size,
    normalize,
    ols,
    one_way_anova,
    run,
    spearman,
    stem,
)

__all__ = [
    "ComputationError",
    "InputError",
    "feature_names",
    "krippendorff_alpha",
    "min_sample_size",
    "normalize",
    "ols",
    "one_way_anova",
    "run",
    "spearman",
    "stem",
]
