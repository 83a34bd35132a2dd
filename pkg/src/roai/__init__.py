"""Robust outlier arm identification: median/MAD thresholds, adaptive samplers and bounds."""

from .algorithms import (
    ElimSampler,
    LucbSampler,
    SubsampledLucbSampler,
    UniformSampler,
    make_sampler,
    recommend,
    select_subset,
)
from .complexity import check_instance_class, gap_profile, lower_bound, subsample_upper_bound, upper_bound
from .confidence import Interval, beta_width, build_snapshot, find_ad, intersect_update, median_interval
from .instance import (
    BanditInstance,
    GeneratorConfig,
    RewardModel,
    generate_contaminated,
    ladder_instance,
    mad_of,
    median_of,
    nonrobust_threshold,
    robust_threshold,
    true_outlier_set,
)
from .simulation import ReplicationPlan, anytime_error, pull, replicate, run

__version__ = "0.1.0"
