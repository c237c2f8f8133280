"""Generalized load balancing instances.

Job ``i`` placed on machine ``j`` adds ``cost[i, j, k]`` to the load of every
machine ``k``. Costs may be infinite; IEEE ``inf`` is used as the infinite
cost and saturates under addition and ``max`` exactly, so a schedule touching
an infinite entry is detected without any sentinel threshold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .exceptions import IncompatibleAssignmentError, InstanceFormatError

INF = math.inf


@dataclass(frozen=True, eq=False)
class GlbInstance:
    """Dense cost tensor of shape ``(jobs, machines, machines)``."""

    cost: np.ndarray

    def __post_init__(self):
        cost = np.array(self.cost, dtype=np.float64)
        if cost.ndim != 3 or cost.shape[1] != cost.shape[2]:
            raise ValueError("cost must have shape (jobs, machines, machines)")
        if cost.shape[0] < 1 or cost.shape[1] < 1:
            raise ValueError("need at least one job and one machine")
        if np.any(np.isnan(cost)) or np.any(cost < 0):
            raise ValueError("costs must be nonnegative or inf")
        cost.setflags(write=False)
        object.__setattr__(self, "cost", cost)

    @property
    def jobs(self) -> int:
        return self.cost.shape[0]

    @property
    def machines(self) -> int:
        return self.cost.shape[1]


@dataclass(frozen=True)
class GlbAssignment:
    """``target[i]`` is the machine job ``i`` is placed on."""

    target: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "target", tuple(int(t) for t in self.target))

    def __len__(self):
        return len(self.target)

    def __iter__(self):
        return iter(self.target)

    def __getitem__(self, i):
        return self.target[i]

    def check(self, inst: GlbInstance) -> None:
        if len(self.target) != inst.jobs:
            raise IncompatibleAssignmentError(
                f"assignment covers {len(self.target)} jobs, instance has {inst.jobs}"
            )
        for i, j in enumerate(self.target):
            if not 0 <= j < inst.machines:
                raise IncompatibleAssignmentError(
                    f"job {i} targets machine {j}, instance has {inst.machines}"
                )


def _as_glb_assignment(asg) -> GlbAssignment:
    return asg if isinstance(asg, GlbAssignment) else GlbAssignment(tuple(asg))


def glb_loads(inst: GlbInstance, asg: GlbAssignment | Sequence[int]) -> np.ndarray:
    """Load of every machine: the sum over all jobs of the row they selected."""
    asg = _as_glb_assignment(asg)
    asg.check(inst)
    rows = inst.cost[np.arange(inst.jobs), np.asarray(asg.target, dtype=np.intp)]
    return rows.sum(axis=0)


def glb_makespan(inst: GlbInstance, asg: GlbAssignment | Sequence[int]) -> float:
    """Maximum machine load; ``inf`` when some job touches an infinite cost."""
    return float(glb_loads(inst, asg).max())


# -- text format -------------------------------------------------------------


def _parse_cost(token, lineno):
    if token.lower() == "inf":
        return INF
    try:
        v = float(token)
    except ValueError:
        raise InstanceFormatError(f"bad cost {token!r}", lineno) from None
    if not math.isfinite(v) or v < 0:
        raise InstanceFormatError(f"cost {token!r} must be finite and nonnegative or 'inf'", lineno)
    return v


def parse_glb_instance(lines: Iterable[str]) -> GlbInstance:
    rows = [(no, line.split()) for no, line in enumerate(lines, start=1) if line.strip()]
    if not rows:
        raise InstanceFormatError("empty input", 1)
    lineno, header = rows[0]
    if len(header) != 2:
        raise InstanceFormatError("header must be 'jobs machines'", lineno)
    try:
        jobs, machines = int(header[0]), int(header[1])
    except ValueError:
        raise InstanceFormatError("jobs and machines must be integers", lineno) from None
    if jobs < 1 or machines < 1:
        raise InstanceFormatError("jobs and machines must be positive", lineno)
    body = rows[1:]
    if len(body) != jobs * machines:
        last = body[-1][0] if body else lineno
        raise InstanceFormatError(f"expected {jobs * machines} cost rows, found {len(body)}", last)
    data = []
    for no, toks in body:
        if len(toks) != machines:
            raise InstanceFormatError(f"expected {machines} values, got {len(toks)}", no)
        data.append([_parse_cost(t, no) for t in toks])
    return GlbInstance(np.array(data).reshape(jobs, machines, machines))


def read_glb_instance(path: str | Path) -> GlbInstance:
    with open(path, encoding="utf-8") as fh:
        return parse_glb_instance(fh)


def format_glb_instance(inst: GlbInstance) -> str:
    out = [f"{inst.jobs} {inst.machines}"]
    for row in inst.cost.reshape(-1, inst.machines):
        out.append(" ".join("inf" if math.isinf(v) else repr(float(v)) for v in row))
    return "\n".join(out) + "\n"


def write_glb_instance(inst: GlbInstance, path: str | Path) -> None:
    Path(path).write_text(format_glb_instance(inst), encoding="utf-8")


def parse_assignment(lines: Iterable[str]) -> tuple[int, ...]:
    """One machine (or partition) index per non-blank line."""
    out = []
    for no, line in enumerate(lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            out.append(int(line))
        except ValueError:
            raise InstanceFormatError(f"bad index {line!r}", no) from None
    return tuple(out)
