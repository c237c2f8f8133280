"""Comparison algorithms: scalar list scheduling and exhaustive search."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import BudgetExceededError
from .online import _check_order
from .vs import VsAssignment, VsInstance, vs_makespan

DEFAULT_BUDGET = 10**8
_CHUNK = 1 << 15


def list_schedule(inst: VsInstance, order=None) -> VsAssignment:
    """Greedy list scheduling on the element sums of the vectors.

    Each vector becomes the scalar sum of its costs (on the partition in
    question, for heterogeneous instances) and goes to the partition whose
    scalar load after placement is smallest; the lowest index wins ties.
    In the homogeneous case this is the least-loaded partition.
    """
    order = _check_order(order, inst.n)
    sums = inst.cost_tensor.sum(axis=2)
    load = np.zeros(inst.m)
    target = [0] * inst.n
    for i in order:
        j = int(np.argmin(load + sums[i] if inst.is_hetero else load))
        load[j] += sums[i, j]
        target[i] = j
    return VsAssignment(tuple(target))


@dataclass(frozen=True)
class OracleResult:
    optimum: float
    witness: VsAssignment
    explored: int


def _assignments(start: int, stop: int, n: int, m: int) -> np.ndarray:
    """Rows of the mixed-radix enumeration; vector 0 is the most significant digit."""
    codes = np.arange(start, stop, dtype=np.int64)
    out = np.empty((codes.size, n), dtype=np.int64)
    for i in range(n - 1, -1, -1):
        codes, out[:, i] = np.divmod(codes, m)
    return out


def brute_force_opt(inst: VsInstance, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Exact minimum makespan over all ``m**n`` assignments.

    The witness is the lexicographically first minimizing assignment.
    """
    n, m, d = inst.n, inst.m, inst.d
    total = m**n
    if total > budget:
        raise BudgetExceededError(total, budget)
    tensor = inst.cost_tensor
    best_value = np.inf
    best_code = 0
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        asg = _assignments(start, stop, n, m)
        span = np.zeros(stop - start)
        for j in range(m):
            load = (asg == j).astype(np.float64) @ tensor[:, j, :]
            np.maximum(span, load.max(axis=1), out=span)
        k = int(np.argmin(span))
        if span[k] < best_value:
            best_value = span[k]
            best_code = start + k
    witness = VsAssignment(tuple(_assignments(best_code, best_code + 1, n, m)[0]))
    # report the witness's value as evaluated by the reference evaluator
    return OracleResult(vs_makespan(inst, witness), witness, total)
