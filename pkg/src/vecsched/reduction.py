"""Encoding of vector scheduling as generalized load balancing.

Every (partition, dimension) pair ``(j, k)`` becomes one machine with flat
index ``j * d + k``. The machine ``(j, 0)`` is the anchor of partition ``j``.
A job choosing machine ``s`` costs machine ``t``:

* ``p[i, t.dimension]`` if ``s`` is the anchor of ``t``'s partition,
* ``inf`` if ``s`` is another machine of ``t``'s partition,
* ``0`` if ``s`` belongs to a different partition.

So only anchor choices have finite makespan, and a job on anchor ``(j, 0)``
loads machine ``(j, k)`` by exactly its ``k``-th cost.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .exceptions import NonAnchorAssignmentError
from .glb import INF, GlbAssignment, GlbInstance
from .vs import VsAssignment, VsInstance, as_assignment


class MachinePair(NamedTuple):
    partition: int
    dimension: int

    @property
    def is_anchor(self) -> bool:
        return self.dimension == 0

    def flat(self, d: int) -> int:
        return self.partition * d + self.dimension

    @classmethod
    def from_flat(cls, index: int, d: int) -> "MachinePair":
        return cls(*divmod(int(index), d))


@dataclass(frozen=True, eq=False)
class ReducedInstance:
    glb: GlbInstance
    origin: VsInstance

    @property
    def m(self) -> int:
        return self.origin.m

    @property
    def d(self) -> int:
        return self.origin.d

    def machine(self, index: int) -> MachinePair:
        return MachinePair.from_flat(index, self.d)

    def anchor(self, partition: int) -> int:
        return partition * self.d

    @property
    def anchors(self) -> list[int]:
        return [self.anchor(j) for j in range(self.m)]


def encode(inst: VsInstance) -> ReducedInstance:
    n, m, d = inst.n, inst.m, inst.d
    # axes: job, chosen partition, chosen dimension, loaded partition, loaded dimension
    cost = np.zeros((n, m, d, m, d))
    same = np.arange(m)
    # anchor choice: machine (j, k) receives cost(i, j)[k]
    cost[:, same, 0, same, :] = inst.cost_tensor
    if d > 1:
        cost[:, same, 1:, same, :] = INF
    return ReducedInstance(GlbInstance(cost.reshape(n, m * d, m * d)), inst)


def vs_to_glb(asg: VsAssignment | Sequence[int], red: ReducedInstance) -> GlbAssignment:
    asg = as_assignment(asg)
    asg.check(red.origin)
    return GlbAssignment(tuple(red.anchor(j) for j in asg.target))


def glb_to_vs(asg: GlbAssignment | Sequence[int], red: ReducedInstance) -> VsAssignment:
    """Map anchor choices back to partitions.

    Raises :class:`NonAnchorAssignmentError` for the first job that is not on
    an anchor machine, since such a schedule has infinite makespan.
    """
    asg = asg if isinstance(asg, GlbAssignment) else GlbAssignment(tuple(asg))
    asg.check(red.glb)
    target = []
    for i, s in enumerate(asg.target):
        pair = red.machine(s)
        if not pair.is_anchor:
            raise NonAnchorAssignmentError(i, pair)
        target.append(pair.partition)
    return VsAssignment(tuple(target))
