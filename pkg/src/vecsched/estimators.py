"""scikit-learn style front ends.

Vectors are the rows of ``X`` and the fitted ``labels_`` are partition
indices, so the schedulers behave like clusterers::

    >>> sched = OnlineVectorScheduler(n_partitions=3).fit(X)
    >>> sched.labels_, sched.makespan_
"""

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin

from ._validation import arrival_order, check_vectors
from .baselines import DEFAULT_BUDGET, brute_force_opt, list_schedule
from .online import GreedyVectorScheduler, SpedUpVectorScheduler, Tau
from .vs import partition_loads

_TAU_MODES = {"ln": Tau.real_ln, "ceil": Tau.int_ceil}


class OnlineVectorScheduler(ClusterMixin, BaseEstimator):
    """Online L_tau-norm greedy vector scheduler.

    Parameters
    ----------
    n_partitions : int
        Number of partitions ``m``.
    algorithm : {"sped-up", "greedy"}
        ``"sped-up"`` compares norm increments with cached partition norms and
        needs an integer exponent; ``"greedy"`` evaluates the full objective
        for every candidate partition.
    tau : {"ceil", "ln"} or number
        ``"ceil"`` is ``ceil(ln(m d))``, ``"ln"`` is ``ln(m d)``.
    shuffle : bool
        Present the vectors in a random order instead of row order.
    random_state : int, RandomState or None
        Seed for ``shuffle``.

    Attributes
    ----------
    labels_ : ndarray of shape (n,)
    loads_ : ndarray of shape (n_partitions, d)
    makespan_ : float
    tau_ : int or float
        The exponent actually used.
    n_additions_, n_multiplications_ : int
        Arithmetic operation counts of the run.
    """

    def __init__(self, n_partitions=2, algorithm="sped-up", tau="ceil", shuffle=False, random_state=None):
        self.n_partitions = n_partitions
        self.algorithm = algorithm
        self.tau = tau
        self.shuffle = shuffle
        self.random_state = random_state

    def _make_scheduler(self, d):
        spec = _TAU_MODES[self.tau]() if isinstance(self.tau, str) and self.tau in _TAU_MODES else None
        if spec is None:
            if isinstance(self.tau, str):
                raise ValueError(f"tau must be 'ceil', 'ln' or a number, got {self.tau!r}")
            spec = Tau.explicit(self.tau)
        tau = spec.resolve(self.n_partitions * d)
        if self.algorithm == "sped-up":
            return SpedUpVectorScheduler(self.n_partitions, d, tau)
        if self.algorithm == "greedy":
            return GreedyVectorScheduler(self.n_partitions, d, tau)
        raise ValueError(f"unknown algorithm {self.algorithm!r}")

    def fit(self, X, y=None):
        self._sched = None
        self.labels_ = np.empty(0, dtype=int)
        return self.partial_fit(X)

    def partial_fit(self, X, y=None):
        """Schedule further arriving vectors without revisiting earlier ones."""
        inst = check_vectors(X, self.n_partitions)
        sched = getattr(self, "_sched", None)
        if sched is None:
            sched = self._sched = self._make_scheduler(inst.d)
            self.labels_ = np.empty(0, dtype=int)
        elif sched.d != inst.d:
            raise ValueError(f"expected {sched.d}-dimensional vectors, got {inst.d}")
        labels = np.empty(inst.n, dtype=int)
        tensor = inst.cost_tensor
        for i in arrival_order(inst.n, self.shuffle, self.random_state):
            labels[i] = sched.push(tensor[i])
        self.labels_ = np.concatenate([self.labels_, labels])
        self.loads_ = sched.loads.copy()
        self.makespan_ = sched.makespan
        self.tau_ = sched.tau
        self.n_additions_ = sched.additions
        self.n_multiplications_ = sched.multiplications
        return self


class ListScheduler(ClusterMixin, BaseEstimator):
    """Least-loaded assignment of the vectors' element sums."""

    def __init__(self, n_partitions=2, shuffle=False, random_state=None):
        self.n_partitions = n_partitions
        self.shuffle = shuffle
        self.random_state = random_state

    def fit(self, X, y=None):
        inst = check_vectors(X, self.n_partitions)
        order = arrival_order(inst.n, self.shuffle, self.random_state)
        asg = list_schedule(inst, order)
        self.labels_ = np.asarray(asg.target)
        self.loads_ = np.array(partition_loads(inst, asg).load)
        self.makespan_ = float(self.loads_.max())
        return self


class ExhaustiveScheduler(ClusterMixin, BaseEstimator):
    """Optimal assignment by enumerating all ``n_partitions ** n`` choices."""

    def __init__(self, n_partitions=2, budget=DEFAULT_BUDGET):
        self.n_partitions = n_partitions
        self.budget = budget

    def fit(self, X, y=None):
        inst = check_vectors(X, self.n_partitions)
        res = brute_force_opt(inst, self.budget)
        self.labels_ = np.asarray(res.witness.target)
        self.loads_ = np.array(partition_loads(inst, res.witness).load)
        self.makespan_ = res.optimum
        self.n_explored_ = res.explored
        return self

