"""Python access to the distlearn C++ core."""

from ._core import (
    Error,
    Model,
    canonical_model_names,
    cohens_d,
    cross_entropy,
    dead_node_fraction,
    gradcheck,
    paired_t,
    parse_experiment,
    run_cli,
    two_sample_t,
)

__all__ = [
    "Error",
    "Model",
    "canonical_model_names",
    "cohens_d",
    "cross_entropy",
    "dead_node_fraction",
    "gradcheck",
    "paired_t",
    "parse_experiment",
    "run_cli",
    "two_sample_t",
]
