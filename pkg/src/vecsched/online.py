"""Online greedy scheduling by minimizing the L_tau norm of the loads.

Each arriving job (or vector) is placed where the tau-th power of the L_tau
norm of the resulting loads is smallest. The outer ``1/tau`` root is never
taken because it does not change the argmin.

Sums of powered loads use :func:`math.fsum`, whose result does not depend on
summation order. Candidates are scanned in index order and a later one only
replaces the running best when it is better by more than ``TIE_RTOL`` times
the objective's magnitude, so candidates that tie in exact arithmetic but
differ by rounding noise resolve to the lowest index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exceptions import InfeasibleJobError
from .glb import GlbAssignment, GlbInstance
from .vs import VsAssignment, VsInstance

REAL_LN = "real_ln"
INT_CEIL = "int_ceil"
EXPLICIT = "explicit"

TIE_RTOL = 1e-12


@dataclass(frozen=True)
class Tau:
    """How the norm exponent is chosen for ``l`` machines.

    ``Tau.real_ln()`` uses ``ln l`` in floating point, ``Tau.int_ceil()`` uses
    the integer ``ceil(ln l)`` and ``Tau.explicit(v)`` fixes the exponent.
    An integer exponent is evaluated by square-and-multiply.
    """

    mode: str
    value: float | int | None = None

    def __post_init__(self):
        if self.mode not in (REAL_LN, INT_CEIL, EXPLICIT):
            raise ValueError(f"unknown tau mode {self.mode!r}")
        if self.mode == EXPLICIT:
            if self.value is None or not self.value > 0:
                raise ValueError("explicit tau must be positive")
            if isinstance(self.value, (int, np.integer)) and self.value < 1:
                raise ValueError("integer tau must be >= 1")

    @classmethod
    def real_ln(cls) -> "Tau":
        return cls(REAL_LN)

    @classmethod
    def int_ceil(cls) -> "Tau":
        return cls(INT_CEIL)

    @classmethod
    def explicit(cls, value: float | int) -> "Tau":
        return cls(EXPLICIT, value)

    def resolve(self, l: int) -> float | int:
        if self.mode == EXPLICIT:
            return int(self.value) if isinstance(self.value, (int, np.integer)) else float(self.value)
        if self.mode == REAL_LN:
            if l < 2:
                raise ValueError("tau = ln(l) needs l >= 2")
            return math.log(l)
        return max(1, math.ceil(math.log(l)))


def fast_pow(a, t: int):
    """Return ``(a**t, multiplications)`` computed by square-and-multiply.

    ``a`` may be a scalar or an array; the count is per element and equals
    ``floor(log2 t) + popcount(t) - 1``.
    """
    t = int(t)
    if t < 1:
        raise ValueError("exponent must be a positive integer")
    result = None
    base = a
    mults = 0
    while True:
        if t & 1:
            if result is None:
                result = base
            else:
                result = result * base
                mults += 1
        t >>= 1
        if not t:
            break
        base = base * base
        mults += 1
    return result, mults


def knuth_count(t: int) -> int:
    return int(t).bit_length() - 1 + bin(int(t)).count("1") - 1


def _powers(x: np.ndarray, tau):
    """Elementwise ``x**tau`` and multiplications per element (None for real tau)."""
    if isinstance(tau, (int, np.integer)):
        return fast_pow(np.asarray(x, dtype=np.float64), tau)
    return np.power(x, float(tau)), None


def _row_fsum(p: np.ndarray):
    if p.ndim == 1:
        return math.fsum(p)
    return np.array([math.fsum(r) for r in p.reshape(-1, p.shape[-1])]).reshape(p.shape[:-1])


def lnorm_tau(v, tau):
    """``sum(v**tau)`` along the last axis, i.e. the tau-th power of the L_tau norm.

    ``tau`` is a resolved exponent (see :meth:`Tau.resolve`); an int selects
    square-and-multiply.
    """
    v = np.asarray(v, dtype=np.float64)
    p, _ = _powers(v, tau)
    return _row_fsum(p)


def _guard(value, source):
    """Loads at desk scale stay far below overflow; fail loudly if not."""
    if np.all(np.isfinite(source)) and not np.all(np.isfinite(value)):
        raise OverflowError("powered loads overflowed double precision; rescale the costs")


def _scan_min(values, tol):
    best = 0
    for j in range(1, len(values)):
        if values[best] - values[j] > tol:
            best = j
    return best


def _check_order(order, n):
    if order is None:
        return list(range(n))
    order = [int(i) for i in order]
    if sorted(order) != list(range(n)):
        raise ValueError(f"order must be a permutation of 0..{n - 1}")
    return order


# -- generalized load balancing ----------------------------------------------


def glb_online(inst: GlbInstance, tau: Tau, order: Sequence[int] | None = None) -> GlbAssignment:
    """Greedy L_tau assignment of the jobs of a GLB instance, one at a time.

    Machines whose resulting norm is infinite are never chosen while a finite
    candidate exists; ties go to the lowest machine index.
    """
    t = tau.resolve(inst.machines)
    order = _check_order(order, inst.jobs)
    loads = np.zeros(inst.machines)
    target = [0] * inst.jobs
    for i in order:
        cand = loads[None, :] + inst.cost[i]
        with np.errstate(over="ignore"):
            powered, _ = _powers(cand, t)
        norms = np.array([math.fsum(r) if np.all(np.isfinite(r)) else math.inf for r in powered])
        finite = np.isfinite(cand).all(axis=1)
        _guard(norms[finite], cand[finite])
        if not finite.any():
            raise InfeasibleJobError(f"job {i} has infinite resulting norm on every machine")
        j = _scan_min(norms, TIE_RTOL * norms[finite].max())
        target[i] = j
        loads = cand[j]
    return GlbAssignment(tuple(target))


# -- vector scheduling -------------------------------------------------------


class _VectorScheduler:
    """Shared state for online vector schedulers over ``m`` partitions."""

    def __init__(self, m: int, d: int, tau):
        if m < 1 or d < 1:
            raise ValueError("need m >= 1 and d >= 1")
        self.m = m
        self.d = d
        self.tau = tau
        self.loads = np.zeros((m, d))
        self.sizes = np.zeros(m, dtype=int)
        self.targets: list[int] = []
        self.additions = 0
        self.multiplications = 0
        # (additions, multiplications) of each arrival
        self.step_ops: list[tuple[int, int]] = []

    def _costs(self, costs) -> np.ndarray:
        costs = np.asarray(costs, dtype=np.float64)
        if costs.shape == (self.d,):
            return np.broadcast_to(costs, (self.m, self.d))
        if costs.shape != (self.m, self.d):
            raise ValueError(f"costs must have shape ({self.d},) or ({self.m}, {self.d})")
        return costs

    def _norms(self, x):
        with np.errstate(over="ignore"):
            p, mults = _powers(x, self.tau)
        out = _row_fsum(p)
        _guard(out, x)
        if mults is not None:
            self.multiplications += mults * x.size
        return out

    def _empty_partition(self):
        empty = np.flatnonzero(self.sizes == 0)
        return int(empty[0]) if empty.size else None

    def push(self, costs) -> int:
        """Place one arriving vector and return its partition."""
        costs = self._costs(costs)
        before = (self.additions, self.multiplications)
        j = self._place(costs)
        self.sizes[j] += 1
        self.targets.append(j)
        self.step_ops.append((self.additions - before[0], self.multiplications - before[1]))
        return j

    def _place(self, costs) -> int:
        raise NotImplementedError

    @property
    def makespan(self) -> float:
        return float(self.loads.max())


class GreedyVectorScheduler(_VectorScheduler):
    """Place each vector to minimize the L_tau norm of all partition loads.

    While some partition is empty the vector goes to the lowest-indexed empty
    one. Otherwise the full objective ``f_j = sum_j' ||A_j'||^tau`` (with
    partition ``j`` holding the new vector) is evaluated for every ``j``.
    """

    def _place(self, costs):
        j = self._empty_partition()
        if j is None:
            current = self._norms(self.loads)
            cand_loads = self.loads + costs
            self.additions += self.m * self.d
            cand = self._norms(cand_loads)
            f = np.empty(self.m)
            for j in range(self.m):
                terms = current.copy()
                terms[j] = cand[j]
                f[j] = math.fsum(terms)
            j = _scan_min(f, TIE_RTOL * f.max())
            self.loads[j] = cand_loads[j]
        else:
            self.loads[j] = costs[j]
        return j


class SpedUpVectorScheduler(_VectorScheduler):
    """Incremental variant with an integer exponent.

    Keeps each partition's load ``mu_j`` and cached ``delta_j = ||mu_j||^tau``
    and compares only the increments ``delta~_j - delta_j``; the running
    minimum is replaced only on strict improvement, so the lowest index wins ties.
    """

    def __init__(self, m: int, d: int, tau: int):
        if not isinstance(tau, (int, np.integer)) or tau < 1:
            raise ValueError("the incremental scheduler needs an integer tau >= 1")
        super().__init__(m, d, int(tau))
        self.delta = np.zeros(m)

    def _place(self, costs):
        j = self._empty_partition()
        if j is not None:
            self.loads[j] = costs[j]
            self.delta[j] = self._norms(costs[j])
            return j
        cand_loads = self.loads + costs
        self.additions += self.m * self.d
        cand = self._norms(cand_loads)
        increase = cand - self.delta
        # same tie scale as the full objective: current total plus the largest increase
        j_min = _scan_min(increase, TIE_RTOL * (math.fsum(self.delta) + increase.max()))
        self.loads[j_min] = cand_loads[j_min]
        self.delta[j_min] = cand[j_min]
        return j_min

    def recomputed_delta(self) -> np.ndarray:
        """``||mu_j||^tau`` from scratch, for checking the cache."""
        p, _ = _powers(self.loads, self.tau)
        return _row_fsum(p)


def run_vector_scheduler(sched: _VectorScheduler, inst: VsInstance, order=None) -> VsAssignment:
    order = _check_order(order, inst.n)
    target = [0] * inst.n
    tensor = inst.cost_tensor
    for i in order:
        target[i] = sched.push(tensor[i])
    return VsAssignment(tuple(target))


def vs_online_alg1(inst: VsInstance, tau: Tau | None = None, order=None) -> VsAssignment:
    tau = Tau.int_ceil() if tau is None else tau
    sched = GreedyVectorScheduler(inst.m, inst.d, tau.resolve(inst.m * inst.d))
    return run_vector_scheduler(sched, inst, order)


def vs_online_alg2(inst: VsInstance, order=None, tau: Tau | None = None) -> VsAssignment:
    tau = Tau.int_ceil() if tau is None else tau
    sched = SpedUpVectorScheduler(inst.m, inst.d, tau.resolve(inst.m * inst.d))
    return run_vector_scheduler(sched, inst, order)


# -- approximation bounds ----------------------------------------------------


def lp_greedy_ratio(l: int, tau: float) -> float:
    """Approximation ratio ``(tau / ln 2) * l**(1/tau)`` of L_tau greedy on ``l`` machines."""
    return tau / math.log(2) * l ** (1.0 / tau)


def ratio_bound(l: int, tau: Tau) -> float:
    if l < 2:
        raise ValueError("bound needs at least two machines")
    if tau.mode == REAL_LN:
        return math.e * math.log2(l)
    if tau.mode == INT_CEIL:
        return math.e * math.log2(l) + math.e * math.log2(math.e) / (math.log(l) + 1)
    return lp_greedy_ratio(l, float(tau.value))
