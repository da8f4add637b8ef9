"""Default configuration values for presentations and verification."""


class Defaults:
    """Hard-coded default values of the sampler and the oracles.

    Used when the command line or the caller does not override them.
    """

    # Sampler defaults
    SEED: int = 0
    ENTRY_BOUND: int = 7
    TRIALS: int = 40
    RETRY_LIMIT: int = 10
    IDENTITY_BOUND: int = 1000
    WORKERS: int = 1

    # Oracle defaults
    M_MAX: int = 2
    SPAN_POINTS: int = 12
    SPAN_RANDOM_FUNCTIONS: int = 8
    HOMOGENEOUS_HOM_SAMPLES: int = 2

    # Largest m listed in Presentation.weight_space_dims
    WEIGHT_SPACE_BOUND: int = 4
