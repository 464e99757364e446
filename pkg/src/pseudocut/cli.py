"""Command-line front end.

Subcommands: solve, verify, enumerate, generate, targets, transform-per,
experiment, report.  Exit codes: 0 ok, 2 usage/input error, 3 infeasible
instance, 4 resource budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .approx import fen, gen
from .baseline import min_vertex_cut, per_threshold, transform_per_graph
from .errors import InfeasibleInstanceError, InputError, PseudocutError, ResourceError
from .exact import exact_T2, exact_T3, opt
from .experiment import (
    ExperimentSpec,
    format_records_csv,
    format_summary_csv,
    run_experiment,
    summarize,
)
from .files import (
    format_graph,
    load_graph,
    load_solution_elements,
    load_targets,
    load_vertex_costs,
    save_graph,
    save_targets,
)
from .generators import TargetScheme, gen_er, gen_fig1, gen_hier, gen_targets, gen_tightness, gen_waxman
from .gest import GestConfig, gest
from .graph import PseudocutInstance, solution_cost
from .pathspace import DEFAULT_PATH_BUDGET, enumerate_paths, format_paths
from .validate_util import require_valid


def _add_instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--graph", required=True, help="graph file")
    p.add_argument("--vertex-costs", help="optional vertex-cost file")
    p.add_argument("--targets", required=True, help="target pairs file ('s t' lines)")
    p.add_argument("--T", type=float, required=True, help="separation threshold")
    p.add_argument("--mode", choices=["vertex", "edge"], default="vertex")


def _load_instance(args) -> PseudocutInstance:
    g = load_graph(args.graph)
    if args.vertex_costs:
        load_vertex_costs(args.vertex_costs, g)
    targets = load_targets(args.targets)
    return PseudocutInstance(g, args.T, tuple(targets), mode=args.mode)


def _cmd_solve(args) -> int:
    inst = _load_instance(args)
    deadline = time.monotonic() + args.time_budget if args.time_budget else None
    algo = args.algo
    if algo == "gen":
        sol = gen(inst, budget=args.path_budget, deadline=deadline)
    elif algo == "fen":
        sol = fen(inst, budget=args.path_budget, deadline=deadline)
    elif algo == "opt":
        sol = opt(inst, budget=args.path_budget, deadline=deadline)
    elif algo in ("gest", "gesta"):
        if args.L_override is not None:
            print(
                "warning: overriding the sample count voids the concentration guarantee",
                file=sys.stderr,
            )
        cfg = GestConfig(
            alpha=args.alpha,
            seed=args.seed,
            fallback=(algo == "gesta"),
            sample_count_override=args.L_override,
        )
        sol = gest(inst, cfg, deadline=deadline)
    elif algo == "mc":
        if inst.k != 1:
            raise InputError("the cut baseline needs exactly one target pair")
        s, t = inst.targets[0]
        sol = min_vertex_cut(inst.graph, s, t)
    elif algo == "t2":
        sol = exact_T2(inst)
    elif algo == "t3":
        sol = exact_T3(inst)
    else:
        raise InputError(f"unknown algorithm {algo!r}")
    print(json.dumps(sol.to_dict()))
    return 0


def _cmd_verify(args) -> int:
    inst = _load_instance(args)
    elements = load_solution_elements(args.solution)
    from .graph import is_feasible

    feasible = is_feasible(inst, elements)
    print(json.dumps({
        "feasible": feasible,
        "cost": solution_cost(inst, elements),
        "elements": sorted(elements),
    }))
    return 0


def _cmd_enumerate(args) -> int:
    inst = _load_instance(args)
    require_valid(inst)
    cov = enumerate_paths(inst, budget=args.path_budget)
    text = format_paths(cov)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_generate(args) -> int:
    targets = None
    T = None
    if args.family == "er":
        g = gen_er(args.n, args.m, args.seed, args.unit_lengths, args.integer_weights)
    elif args.family == "waxman":
        g = gen_waxman(args.n, args.m, args.alpha_w, args.beta_w, args.seed,
                       args.unit_lengths, args.integer_weights)
    elif args.family == "hier":
        g = gen_hier(args.num_as, args.routers_per_as, args.seed,
                     args.alpha_w, args.beta_w, args.unit_lengths)
    elif args.family == "tightness":
        g, inst = gen_tightness(args.k)
        targets, T = inst.targets, inst.T
    elif args.family == "fig1":
        g, inst = gen_fig1()
        targets, T = inst.targets, inst.T
    else:
        raise InputError(f"unknown family {args.family!r}")
    if args.out:
        save_graph(g, args.out)
    else:
        sys.stdout.write(format_graph(g))
    if args.targets_out and targets is not None:
        save_targets(targets, args.targets_out)
        print(f"targets written to {args.targets_out} (use --T {T:g})", file=sys.stderr)
    return 0


def _cmd_targets(args) -> int:
    g = load_graph(args.graph)
    scheme = TargetScheme(args.scheme, args.zeta, args.k, args.seed)
    pairs = gen_targets(g, scheme)
    if args.out:
        save_targets(pairs, args.out)
    else:
        for s, t in pairs:
            print(s, t)
    return 0


def _cmd_transform_per(args) -> int:
    if args.threshold is not None:
        print(f"{per_threshold(args.threshold)!r}")
    if args.graph:
        if not args.out:
            raise InputError("--out is required when transforming a graph")
        save_graph(transform_per_graph(load_graph(args.graph)), args.out)
    elif args.threshold is None:
        raise InputError("nothing to do: pass --graph and/or --threshold")
    return 0


def _cmd_experiment(args) -> int:
    g = load_graph(args.graph)
    if args.vertex_costs:
        load_vertex_costs(args.vertex_costs, g)
    spec = ExperimentSpec(
        graph=g,
        algorithms=[a.strip().upper() for a in args.algos.split(",") if a.strip()],
        sweep_var=args.sweep,
        sweep_values=[float(v) for v in args.values.split(",")],
        k=args.k,
        T=args.T,
        zeta=args.zeta,
        scheme=args.scheme,
        N=args.N,
        master_seed=args.seed,
        time_budget_s=args.time_budget,
        path_budget=args.path_budget,
        alpha=args.alpha,
    )
    records = run_experiment(spec)
    csv_text = format_records_csv(spec, records, timing=args.timing)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
    else:
        sys.stdout.write(csv_text)
    if args.summary_out:
        with open(args.summary_out, "w", encoding="utf-8") as fh:
            fh.write(format_summary_csv(summarize(records, spec.sweep_var), spec.sweep_var))
    return 0


def _cmd_report(args) -> int:
    from .report import render_report

    for path in render_report(args.csv, args.outdir, args.sweep):
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pseudocut", description=__doc__)
    parser.add_argument("--version", action="version", version=f"pseudocut {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run one solver, print a JSON solution")
    _add_instance_args(p)
    p.add_argument("--algo", required=True,
                   choices=["gen", "fen", "gest", "gesta", "opt", "mc", "t2", "t3"])
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--L-override", type=int, default=None,
                   help="override the per-pair sample count (voids the guarantee)")
    p.add_argument("--path-budget", type=int, default=DEFAULT_PATH_BUDGET)
    p.add_argument("--time-budget", type=float, default=None, help="seconds of wall clock")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check a solution file against an instance")
    _add_instance_args(p)
    p.add_argument("--solution", required=True,
                   help="JSON from 'solve' or whitespace-separated element ids")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate", help="dump the constrained path family")
    _add_instance_args(p)
    p.add_argument("--path-budget", type=int, default=DEFAULT_PATH_BUDGET)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("generate", help="write a generated topology")
    p.add_argument("family", choices=["er", "waxman", "hier", "tightness", "fig1"])
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--m", type=int, default=200)
    p.add_argument("--k", type=int, default=3, help="tightness family size")
    p.add_argument("--num-as", type=int, default=10)
    p.add_argument("--routers-per-as", type=int, default=10)
    p.add_argument("--alpha-w", type=float, default=0.15)
    p.add_argument("--beta-w", type=float, default=0.4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--unit-lengths", action="store_true")
    p.add_argument("--integer-weights", action="store_true")
    p.add_argument("--out")
    p.add_argument("--targets-out", help="also write the built-in target pairs")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("targets", help="draw target pairs from a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--scheme", choices=["RR", "HH", "HL", "LL"], default="RR")
    p.add_argument("--zeta", type=float, default=0.5)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_targets)

    p = sub.add_parser("transform-per",
                       help="turn per-edge error rates into additive lengths")
    p.add_argument("--graph")
    p.add_argument("--out")
    p.add_argument("--threshold", type=float, default=None,
                   help="print the length threshold for this error-rate threshold")
    p.set_defaults(func=_cmd_transform_per)

    p = sub.add_parser("experiment", help="run a sweep and write a records CSV")
    p.add_argument("--graph", required=True)
    p.add_argument("--vertex-costs")
    p.add_argument("--algos", required=True, help="comma list, e.g. GEN,OPT,MC")
    p.add_argument("--sweep", choices=["k", "T", "zeta"], required=True)
    p.add_argument("--values", required=True, help="comma list of sweep values")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--T", type=float, default=5.0)
    p.add_argument("--zeta", type=float, default=0.5)
    p.add_argument("--scheme", choices=["RR", "HH", "HL", "LL"], default="RR")
    p.add_argument("--N", type=int, default=1, help="target-set draws per sweep point")
    p.add_argument("--seed", type=int, default=0, help="master seed")
    p.add_argument("--time-budget", type=float, default=60.0, help="seconds per run")
    p.add_argument("--path-budget", type=int, default=DEFAULT_PATH_BUDGET)
    p.add_argument("--alpha", type=float, default=0.5)
    p.add_argument("--timing", action="store_true",
                   help="write measured elapsed_ms (breaks byte-reproducibility)")
    p.add_argument("--out")
    p.add_argument("--summary-out")
    p.set_defaults(func=_cmd_experiment)

    p = sub.add_parser("report", help="render summary.csv and figures from a records CSV")
    p.add_argument("--csv", required=True)
    p.add_argument("--outdir", required=True)
    p.add_argument("--sweep", choices=["k", "T", "zeta"], default=None)
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except InfeasibleInstanceError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 3
    except ResourceError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return 4
    except (InputError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PseudocutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
