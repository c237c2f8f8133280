"""Seeded instance generation and the two simulation scenarios.

Randomness comes from numpy's PCG64 bit generator seeded through
``SeedSequence(seed, spawn_key=(stream,))``. Each homogeneous instance
consumes ``n * d`` doubles from ``Generator.random`` in row-major order, so
a ``GenSpec`` always yields the same instances on every platform.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .baselines import brute_force_opt, list_schedule
from .online import Tau, ratio_bound, vs_online_alg1, vs_online_alg2
from .vs import VsInstance, vs_makespan

ALGORITHMS = ("alg1-real", "alg2", "list")
MAKESPAN_DIMS = tuple(range(10, 41, 5))


@dataclass(frozen=True)
class GenSpec:
    n: int
    m: int
    d: int
    seed: int
    trials: int
    stream: int = 0

    def rng(self) -> np.random.Generator:
        ss = np.random.SeedSequence(self.seed, spawn_key=(self.stream,))
        return np.random.Generator(np.random.PCG64(ss))


def generate(spec: GenSpec) -> list[VsInstance]:
    """``spec.trials`` instances with i.i.d. uniform [0, 1) costs."""
    rng = spec.rng()
    return [VsInstance(rng.random((spec.n, spec.d)), spec.m) for _ in range(spec.trials)]


def run_algorithm(name: str, inst: VsInstance):
    if name == "alg1-real":
        return vs_online_alg1(inst, Tau.real_ln())
    if name == "alg1-int":
        return vs_online_alg1(inst, Tau.int_ceil())
    if name == "alg2":
        return vs_online_alg2(inst)
    if name == "list":
        return list_schedule(inst)
    raise ValueError(f"unknown algorithm {name!r}")


def worst_case_ratio(name: str, m: int, d: int) -> float:
    if name == "alg1-real":
        return ratio_bound(m * d, Tau.real_ln())
    if name in ("alg2", "alg1-int"):
        return ratio_bound(m * d, Tau.int_ceil())
    if name == "list":
        return float(d + 1)
    raise ValueError(f"unknown algorithm {name!r}")


@dataclass
class TrialRecord:
    scenario: str
    trial: int
    m: int
    d: int
    makespan: dict[str, float] = field(default_factory=dict)
    opt: float | None = None

    @property
    def ratio(self) -> dict[str, float]:
        if self.opt is None:
            return {}
        return {a: v / self.opt for a, v in self.makespan.items()}


def _run_trial(scenario, trial, inst, with_opt):
    rec = TrialRecord(scenario, trial, inst.m, inst.d)
    for name in ALGORITHMS:
        rec.makespan[name] = vs_makespan(inst, run_algorithm(name, inst))
    if with_opt:
        rec.opt = brute_force_opt(inst).optimum
    return rec


def scenario_ratio(seed: int = 0, trials: int = 100, n: int = 10, m: int = 3, d: int = 20) -> list[TrialRecord]:
    """Approximation ratios against the exhaustive optimum on small instances."""
    instances = generate(GenSpec(n, m, d, seed, trials))
    return [_run_trial("ratio", t, inst, True) for t, inst in enumerate(instances)]


def scenario_makespan(seed: int = 0, trials: int = 100, n: int = 100, m: int = 10,
                      dims=MAKESPAN_DIMS) -> list[TrialRecord]:
    """Makespans on larger instances for a sweep of dimensions (no optimum)."""
    records = []
    for d in dims:
        instances = generate(GenSpec(n, m, d, seed, trials, stream=d))
        records.extend(_run_trial("makespan", t, inst, False) for t, inst in enumerate(instances))
    return records


def box_stats(values) -> dict[str, float]:
    q = np.percentile(np.asarray(values, dtype=float), [0, 25, 50, 75, 100])
    return dict(zip(("min", "q1", "median", "q3", "max"), (float(v) for v in q)))


def ratio_summary(records: list[TrialRecord]) -> dict[str, dict[str, float]]:
    out = {}
    for name in ALGORITHMS:
        ratios = [r.ratio[name] for r in records]
        out[name] = box_stats(ratios) | {"mean": float(np.mean(ratios))}
    return out


def makespan_summary(records: list[TrialRecord]) -> list[tuple[int, str, float, int]]:
    """``(d, algo, mean_makespan, trials)`` rows in dimension order."""
    rows = []
    for d in sorted({r.d for r in records}):
        group = [r for r in records if r.d == d]
        for name in ALGORITHMS:
            rows.append((d, name, float(np.mean([r.makespan[name] for r in group])), len(group)))
    return rows


def bound_violations(records: list[TrialRecord], slack: float = 1e-9) -> list[str]:
    """Ratios above their algorithm's worst-case guarantee, or below 1."""
    problems = []
    for r in records:
        for name, ratio in r.ratio.items():
            limit = worst_case_ratio(name, r.m, r.d)
            if ratio > limit + slack or ratio < 1 - slack:
                problems.append(f"trial {r.trial} d={r.d} {name}: ratio {ratio:.6f} outside [1, {limit:.4f}]")
    return problems


def _fmt(v):
    return "" if v is None else repr(float(v))


def ratio_csv(records: list[TrialRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["trial", "algo", "makespan", "opt", "ratio"])
    for r in records:
        for name in ALGORITHMS:
            w.writerow([r.trial, name, _fmt(r.makespan[name]), _fmt(r.opt), _fmt(r.ratio.get(name))])
    return buf.getvalue()


def makespan_csv(records: list[TrialRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["d", "algo", "mean_makespan", "trials"])
    for d, name, mean, count in makespan_summary(records):
        w.writerow([d, name, _fmt(mean), count])
    return buf.getvalue()
