"""Vector scheduling instances, assignments and makespan evaluation.

A vector scheduling (VS) instance splits ``n`` nonnegative ``d``-dimensional
cost vectors among ``m`` partitions. The makespan of an assignment is the
largest summed load over all partitions and dimensions.

In the heterogeneous generalization vector ``i`` costs ``hetero_costs[i, j]``
when placed on partition ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .exceptions import IncompatibleAssignmentError, InstanceFormatError


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.float64)
    a.setflags(write=False)
    return a


def _check_costs(a: np.ndarray, what: str) -> None:
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{what} must be finite")
    if np.any(a < 0):
        raise ValueError(f"{what} must be nonnegative")


@dataclass(frozen=True, eq=False)
class VsInstance:
    """``n`` cost vectors of dimension ``d`` to be split among ``m`` partitions.

    Pass ``vectors`` with shape ``(n, d)`` for the homogeneous problem, or
    ``hetero_costs`` with shape ``(n, m, d)`` for per-partition costs.
    """

    vectors: np.ndarray | None
    m: int
    hetero_costs: np.ndarray | None = None
    _tensor: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("need at least one partition")
        if self.hetero_costs is None:
            if self.vectors is None:
                raise ValueError("either vectors or hetero_costs is required")
            vectors = _frozen(self.vectors)
            if vectors.ndim != 2:
                raise ValueError("vectors must be a 2-d array of shape (n, d)")
            _check_costs(vectors, "vector costs")
            tensor = np.broadcast_to(vectors[:, None, :], (vectors.shape[0], self.m, vectors.shape[1]))
            hetero = None
        else:
            hetero = _frozen(self.hetero_costs)
            if hetero.ndim != 3 or hetero.shape[1] != self.m:
                raise ValueError(f"hetero_costs must have shape (n, {self.m}, d)")
            _check_costs(hetero, "heterogeneous costs")
            vectors = None if self.vectors is None else _frozen(self.vectors)
            if vectors is not None and vectors.shape != (hetero.shape[0], hetero.shape[2]):
                raise ValueError("vectors and hetero_costs disagree on (n, d)")
            tensor = hetero
        if tensor.shape[0] < 1 or tensor.shape[2] < 1:
            raise ValueError("need n >= 1 and d >= 1")
        object.__setattr__(self, "vectors", vectors)
        object.__setattr__(self, "hetero_costs", hetero)
        object.__setattr__(self, "_tensor", tensor)

    @property
    def n(self) -> int:
        return self._tensor.shape[0]

    @property
    def d(self) -> int:
        return self._tensor.shape[2]

    @property
    def is_hetero(self) -> bool:
        return self.hetero_costs is not None

    @property
    def cost_tensor(self) -> np.ndarray:
        """Read-only ``(n, m, d)`` view: ``cost_tensor[i, j]`` is vector i's cost on partition j."""
        return self._tensor

    def cost(self, i: int, j: int) -> np.ndarray:
        return self._tensor[i, j]

    def with_hetero(self) -> "VsInstance":
        """The same instance written out in heterogeneous form."""
        return VsInstance(None, self.m, hetero_costs=np.array(self._tensor))


@dataclass(frozen=True)
class VsAssignment:
    """``target[i]`` is the partition that vector ``i`` is placed on."""

    target: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "target", tuple(int(t) for t in self.target))

    def __len__(self):
        return len(self.target)

    def __iter__(self):
        return iter(self.target)

    def __getitem__(self, i):
        return self.target[i]

    def check(self, inst: VsInstance) -> None:
        if len(self.target) != inst.n:
            raise IncompatibleAssignmentError(
                f"assignment covers {len(self.target)} vectors, instance has {inst.n}"
            )
        for i, j in enumerate(self.target):
            if not 0 <= j < inst.m:
                raise IncompatibleAssignmentError(
                    f"vector {i} targets partition {j}, instance has {inst.m}"
                )


def as_assignment(asg: VsAssignment | Sequence[int]) -> VsAssignment:
    return asg if isinstance(asg, VsAssignment) else VsAssignment(tuple(asg))


@dataclass(frozen=True, eq=False)
class PartitionLoad:
    """Summed load vector of every partition, shape ``(m, d)``."""

    load: np.ndarray

    @property
    def makespan(self) -> float:
        return float(self.load.max())


def partition_loads(inst: VsInstance, asg: VsAssignment | Sequence[int]) -> PartitionLoad:
    asg = as_assignment(asg)
    asg.check(inst)
    load = np.zeros((inst.m, inst.d))
    tensor = inst.cost_tensor
    for i, j in enumerate(asg.target):
        load[j] += tensor[i, j]
    load.setflags(write=False)
    return PartitionLoad(load)


def vs_makespan(inst: VsInstance, asg: VsAssignment | Sequence[int]) -> float:
    """Largest summed load over all partitions and dimensions."""
    return partition_loads(inst, asg).makespan


# -- text format -------------------------------------------------------------


def _parse_floats(tokens, lineno, expected):
    if len(tokens) != expected:
        raise InstanceFormatError(f"expected {expected} values, got {len(tokens)}", lineno)
    try:
        values = [float(t) for t in tokens]
    except ValueError as exc:
        raise InstanceFormatError(str(exc), lineno) from None
    for v in values:
        if not np.isfinite(v) or v < 0:
            raise InstanceFormatError(f"cost {v} is not a finite nonnegative number", lineno)
    return values


def parse_vs_instance(lines: Iterable[str]) -> VsInstance:
    """Parse the ``n m d [hetero]`` text format.

    Blank lines are skipped; reported line numbers are 1-based physical lines.
    """
    rows = [(no, line.split()) for no, line in enumerate(lines, start=1) if line.strip()]
    if not rows:
        raise InstanceFormatError("empty input", 1)
    lineno, header = rows[0]
    hetero = len(header) == 4 and header[3] == "hetero"
    if len(header) != 3 and not hetero:
        raise InstanceFormatError("header must be 'n m d' or 'n m d hetero'", lineno)
    try:
        n, m, d = (int(t) for t in header[:3])
    except ValueError:
        raise InstanceFormatError("n, m and d must be integers", lineno) from None
    if n < 1 or m < 1 or d < 1:
        raise InstanceFormatError("n, m and d must all be positive", lineno)
    expected = n * m if hetero else n
    body = rows[1:]
    if len(body) != expected:
        last = body[-1][0] if body else lineno
        raise InstanceFormatError(f"expected {expected} cost rows, found {len(body)}", last)
    data = np.array([_parse_floats(toks, no, d) for no, toks in body])
    if hetero:
        return VsInstance(None, m, hetero_costs=data.reshape(n, m, d))
    return VsInstance(data, m)


def read_vs_instance(path: str | Path) -> VsInstance:
    with open(path, encoding="utf-8") as fh:
        return parse_vs_instance(fh)


def format_vs_instance(inst: VsInstance) -> str:
    out = []
    if inst.is_hetero:
        out.append(f"{inst.n} {inst.m} {inst.d} hetero")
        rows = inst.hetero_costs.reshape(-1, inst.d)
    else:
        out.append(f"{inst.n} {inst.m} {inst.d}")
        rows = inst.vectors
    out.extend(" ".join(repr(float(v)) for v in row) for row in rows)
    return "\n".join(out) + "\n"


def write_vs_instance(inst: VsInstance, path: str | Path) -> None:
    Path(path).write_text(format_vs_instance(inst), encoding="utf-8")
