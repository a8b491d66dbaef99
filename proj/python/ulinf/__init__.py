"""Inflated unit-Lindley modeling of fractional data on [0, 1].

The heavy lifting lives in the compiled extension; this package just
re-exports it.
"""

from ._ulinf import (
    PartitionedSample,
    UlinfDistribution,
    UnitLindley,
    __version__,
    compare,
    elephants,
    exp_integral_e1,
    fisher_information,
    fit,
    generate_pseudo,
    load,
    loglik,
    mle,
    norm_quantile,
    partition,
    run_simulation,
    wald_intervals,
)

__all__ = [
    "PartitionedSample",
    "UlinfDistribution",
    "UnitLindley",
    "__version__",
    "compare",
    "elephants",
    "exp_integral_e1",
    "fisher_information",
    "fit",
    "generate_pseudo",
    "load",
    "loglik",
    "mle",
    "norm_quantile",
    "partition",
    "run_simulation",
    "wald_intervals",
]
