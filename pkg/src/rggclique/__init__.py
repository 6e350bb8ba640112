"""Planted-clique generation, recovery, and threshold analysis on random
geometric graphs over the unit torus."""

from .errors import (
    CliqueTooLargeError,
    GraphFormatError,
    ModelDomainError,
    UsageError,
)
from .geometry import (
    LensSpec,
    blocking_region_fraction,
    lens_contact_fraction,
    lens_volume_fraction,
    torus_distance,
    unit_ball_volume,
)
from .recovery import RecoveryResult, cn_recover, evaluate, vd_recover
from .rgg import (
    Graph,
    PlantedInstance,
    common_neighbors,
    graph_from_positions,
    is_clique,
    plant_clique,
    sample_instance,
)
from .thresholds import (
    ClassifierConfig,
    CliqueNumberEstimate,
    ModelParams,
    RegimeVerdict,
    Verdict,
    classify_regime,
    clique_number_estimate,
    entropy_rate,
    inverse_entropy_minus,
    inverse_entropy_plus,
    lambert_w0,
    lambert_wm1,
    max_degree_threshold,
    min_degree_threshold,
    mu_from_radius,
    radius_from_mu,
)

__version__ = "0.1.0"
