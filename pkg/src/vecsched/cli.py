"""Command line interface: ``vecsched {reduce,lift,solve,bench}``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import bench
from .baselines import brute_force_opt, list_schedule
from .exceptions import BudgetExceededError
from .glb import parse_assignment, write_glb_instance
from .online import GreedyVectorScheduler, SpedUpVectorScheduler, Tau, run_vector_scheduler
from .reduction import encode, glb_to_vs
from .vs import read_vs_instance, vs_makespan

ALGOS = ("alg1-real", "alg1-int", "alg2", "list", "optimal")


def _order(spec: str, n: int):
    if spec == "given":
        return None
    kind, _, seed = spec.partition(":")
    if kind != "shuffled" or not seed:
        raise argparse.ArgumentTypeError("order must be 'given' or 'shuffled:<seed>'")
    return np.random.Generator(np.random.PCG64(int(seed))).permutation(n)


def cmd_reduce(args):
    inst = read_vs_instance(args.vs_file)
    red = encode(inst)
    write_glb_instance(red.glb, args.output)
    print(f"wrote {red.glb.jobs} jobs x {red.glb.machines} machines to {args.output}")
    return 0


def cmd_lift(args):
    inst = read_vs_instance(args.instance)
    with open(args.glb_assignment, encoding="utf-8") as fh:
        target = parse_assignment(fh)
    asg = glb_to_vs(target, encode(inst))
    for j in asg:
        print(j)
    print(f"makespan {vs_makespan(inst, asg)!r}")
    return 0


def cmd_solve(args):
    inst = read_vs_instance(args.vs_file)
    order = _order(args.order, inst.n)
    stats = {}
    if args.algo in ("alg1-real", "alg1-int", "alg2"):
        l = inst.m * inst.d
        if args.tau is not None:
            tau = Tau.explicit(args.tau)
        else:
            tau = Tau.real_ln() if args.algo == "alg1-real" else Tau.int_ceil()
        cls = SpedUpVectorScheduler if args.algo == "alg2" else GreedyVectorScheduler
        sched = cls(inst.m, inst.d, tau.resolve(l))
        asg = run_vector_scheduler(sched, inst, order)
        stats = {"tau": sched.tau, "additions": sched.additions, "multiplications": sched.multiplications}
    elif args.algo == "list":
        asg = list_schedule(inst, order)
    else:
        res = brute_force_opt(inst)
        asg = res.witness
        stats = {"explored": res.explored}
    for j in asg:
        print(j)
    print(f"makespan {vs_makespan(inst, asg)!r}")
    if args.stats:
        for key, value in stats.items():
            print(f"{key} {value}")
    return 0


def cmd_bench(args):
    trials = args.trials
    if args.scenario == "ratio":
        records = bench.scenario_ratio(seed=args.seed, trials=trials)
        text = bench.ratio_csv(records)
        for name, row in bench.ratio_summary(records).items():
            print(name, " ".join(f"{k}={v:.4f}" for k, v in row.items()))
    else:
        records = bench.scenario_makespan(seed=args.seed, trials=trials)
        text = bench.makespan_csv(records)
        for d, name, mean, _ in bench.makespan_summary(records):
            print(f"d={d} {name} mean_makespan={mean:.4f}")
    Path(args.output).write_text(text, encoding="utf-8")
    problems = bench.bound_violations(records)
    for p in problems:
        print("BOUND VIOLATED:", p, file=sys.stderr)
    return 1 if problems else 0


def build_parser():
    parser = argparse.ArgumentParser(prog="vecsched", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="encode a VS instance as a GLB instance")
    p.add_argument("vs_file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("lift", help="map a GLB assignment back to VS partitions")
    p.add_argument("glb_assignment")
    p.add_argument("--instance", required=True)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("solve", help="schedule a VS instance")
    p.add_argument("vs_file")
    p.add_argument("--algo", choices=ALGOS, default="alg2")
    p.add_argument("--order", default="given")
    p.add_argument("--tau", type=int)
    p.add_argument("--stats", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="run a simulation scenario and write CSV")
    p.add_argument("--scenario", choices=("ratio", "makespan"), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, BudgetExceededError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
