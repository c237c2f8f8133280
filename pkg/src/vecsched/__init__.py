"""Online vector scheduling through generalized load balancing."""

from .baselines import OracleResult, brute_force_opt, list_schedule
from .estimators import ExhaustiveScheduler, ListScheduler, OnlineVectorScheduler
from .exceptions import (
    BudgetExceededError,
    IncompatibleAssignmentError,
    InfeasibleJobError,
    InstanceFormatError,
    NonAnchorAssignmentError,
)
from .glb import INF, GlbAssignment, GlbInstance, glb_loads, glb_makespan
from .online import (
    GreedyVectorScheduler,
    SpedUpVectorScheduler,
    Tau,
    fast_pow,
    glb_online,
    lnorm_tau,
    ratio_bound,
    vs_online_alg1,
    vs_online_alg2,
)
from .reduction import MachinePair, ReducedInstance, encode, glb_to_vs, vs_to_glb
from .vs import PartitionLoad, VsAssignment, VsInstance, partition_loads, vs_makespan

__version__ = "0.1.0"
