"""Experiment runner: sweeps, repeated target-set draws, CSV output.

For each sweep point the same N target-set draws are shared by every
algorithm (the draw seed does not involve the algorithm name), so averages
are comparable across algorithms.  Records are emitted in deterministic
(sweep point, draw, algorithm) order; per-run failures are recorded as a
status and never abort the sweep.
"""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass
from . import __version__
from .approx import fen, gen
from .baseline import min_vertex_cut
from .errors import InputError, ResourceError, TimeBudgetExceededError
from .exact import exact_T2, exact_T3, opt
from .generators import TargetScheme, gen_targets
from .gest import GestConfig, gest
from .graph import Graph, PseudocutInstance, Solution, validate
from .pathspace import DEFAULT_PATH_BUDGET
from .seeding import mix64
from .validate_util import require_valid

ALGORITHMS = ("GEN", "FEN", "GEST", "GESTA", "OPT", "MC", "T3-EXACT")

CSV_COLUMNS = "algorithm,k,T,zeta,scheme,draw,cost,size,feasible,elapsed_ms,status"


@dataclass
class ExperimentSpec:
    graph: Graph
    algorithms: list[str]
    sweep_var: str  # k | T | zeta
    sweep_values: list[float]
    k: int = 1
    T: float = 5.0
    zeta: float = 0.5
    scheme: str = "RR"
    N: int = 1
    master_seed: int = 0
    time_budget_s: float = 60.0
    path_budget: int = DEFAULT_PATH_BUDGET
    alpha: float = 0.5

    def __post_init__(self):
        if self.N < 1:
            raise InputError("N must be at least 1")
        if self.sweep_var not in ("k", "T", "zeta"):
            raise InputError(f"unknown sweep variable {self.sweep_var!r}")
        for a in self.algorithms:
            if a not in ALGORITHMS:
                raise InputError(f"unknown algorithm {a!r}")
        ks = self.sweep_values if self.sweep_var == "k" else [self.k]
        if "MC" in self.algorithms and any(k != 1 for k in ks):
            raise InputError("MC baseline requires k = 1")
        if "T3-EXACT" in self.algorithms:
            ts = self.sweep_values if self.sweep_var == "T" else [self.T]
            if any(t > 3 for t in ts) or any(l != 1 for l in self.graph.edge_lengths):
                raise InputError("T3-EXACT requires T <= 3 and uniform lengths")


@dataclass(frozen=True)
class RunRecord:
    algorithm: str
    k: int
    T: float
    zeta: float
    scheme: str
    draw: int
    cost: float
    size: int
    feasible: bool
    elapsed_ms: int
    status: str  # ok | timeout | budget_exceeded


def _fmt(x: float) -> str:
    if isinstance(x, float) and math.isnan(x):
        return "nan"
    return f"{x:.10g}"


def _run_algorithm(name: str, inst: PseudocutInstance, seed: int, spec: ExperimentSpec,
                   deadline: float) -> Solution:
    if name == "GEN":
        return gen(inst, budget=spec.path_budget, deadline=deadline)
    if name == "FEN":
        return fen(inst, budget=spec.path_budget, deadline=deadline)
    if name == "OPT":
        return opt(inst, budget=spec.path_budget, deadline=deadline)
    if name in ("GEST", "GESTA"):
        cfg = GestConfig(alpha=spec.alpha, seed=seed, fallback=(name == "GESTA"))
        return gest(inst, cfg, deadline=deadline)
    if name == "MC":
        s, t = inst.targets[0]
        return min_vertex_cut(inst.graph, s, t)
    if name == "T3-EXACT":
        if inst.T == 3:
            return exact_T3(inst)
        if inst.T == 2:
            return exact_T2(inst)
        # T = 1, uniform lengths: validation already excluded a direct edge,
        # so the empty set is optimal.
        require_valid(inst)
        return Solution(frozenset(), 0.0, True, "T3-EXACT")
    raise InputError(f"unknown algorithm {name!r}")


def _draw_instance(spec: ExperimentSpec, k: int, T: float, zeta: float, draw: int):
    """Target set for one draw, re-drawn (deterministically) if infeasible."""
    for retry in range(100):
        seed = mix64(spec.master_seed, "targets", spec.sweep_var, _fmt(k), _fmt(T),
                     _fmt(zeta), draw, retry)
        scheme = TargetScheme(spec.scheme, zeta, k, seed)
        targets = gen_targets(spec.graph, scheme)
        inst = PseudocutInstance(spec.graph, T, tuple(targets))
        if validate(inst):
            continue
        if "MC" in spec.algorithms:
            s, t = targets[0]
            if any(head == t for head, _ in spec.graph.adj[s]):
                continue  # direct edge: the cut baseline has no finite answer
        return inst
    raise InputError("could not draw a feasible target set after 100 attempts")


def run_experiment(spec: ExperimentSpec) -> list[RunRecord]:
    records: list[RunRecord] = []
    for value in spec.sweep_values:
        k, T, zeta = spec.k, spec.T, spec.zeta
        if spec.sweep_var == "k":
            k = int(value)
        elif spec.sweep_var == "T":
            T = float(value)
        else:
            zeta = float(value)
        for draw in range(spec.N):
            inst = _draw_instance(spec, k, T, zeta, draw)
            for algo in spec.algorithms:
                seed = mix64(spec.master_seed, algo, spec.sweep_var, _fmt(k), _fmt(T),
                             _fmt(zeta), draw)
                deadline = time.monotonic() + spec.time_budget_s
                status = "ok"
                try:
                    sol = _run_algorithm(algo, inst, seed, spec, deadline)
                    cost, size, feasible = sol.cost, len(sol.elements), sol.feasible
                    elapsed = sol.elapsed_ms
                except TimeBudgetExceededError:
                    status, cost, size, feasible = "timeout", math.nan, 0, False
                    elapsed = int(spec.time_budget_s * 1000)
                except ResourceError:
                    status, cost, size, feasible = "budget_exceeded", math.nan, 0, False
                    elapsed = 0
                records.append(RunRecord(algo, k, T, zeta, spec.scheme, draw,
                                         cost, size, feasible, elapsed, status))
    return records


def summarize(records: list[RunRecord], sweep_var: str) -> list[dict]:
    """Mean and sample standard deviation of cost per (algorithm, sweep point)."""
    sweep_of = {"k": lambda r: r.k, "T": lambda r: r.T, "zeta": lambda r: r.zeta}[sweep_var]
    groups: dict[tuple, list[RunRecord]] = {}
    for r in records:
        groups.setdefault((r.algorithm, sweep_of(r)), []).append(r)
    out = []
    for (algo, value), rs in sorted(groups.items(), key=lambda kv: (str(kv[0][0]), kv[0][1])):
        ok = [r for r in rs if r.status == "ok"]
        costs = [r.cost for r in ok]
        out.append({
            "algorithm": algo,
            sweep_var: value,
            "runs": len(rs),
            "ok": len(ok),
            "mean_cost": statistics.fmean(costs) if costs else math.nan,
            "std_cost": statistics.stdev(costs) if len(costs) > 1 else 0.0,
            "mean_size": statistics.fmean([r.size for r in ok]) if ok else math.nan,
        })
    return out


def format_records_csv(spec: ExperimentSpec, records: list[RunRecord], timing: bool = False) -> str:
    """The experiment CSV.  Timing is zeroed by default so that reruns with one
    master seed are byte-identical; pass ``timing=True`` for measured times."""
    lines = [
        f"# pseudocut {__version__} experiment",
        f"# master_seed={spec.master_seed} sweep={spec.sweep_var} "
        f"values={','.join(_fmt(v) for v in spec.sweep_values)} "
        f"scheme={spec.scheme} N={spec.N} k={spec.k} T={_fmt(spec.T)} "
        f"zeta={_fmt(spec.zeta)} algorithms={','.join(spec.algorithms)}",
        CSV_COLUMNS,
    ]
    for r in records:
        elapsed = r.elapsed_ms if timing else 0
        lines.append(
            f"{r.algorithm},{r.k},{_fmt(r.T)},{_fmt(r.zeta)},{r.scheme},{r.draw},"
            f"{_fmt(r.cost)},{r.size},{r.feasible},{elapsed},{r.status}"
        )
    return "\n".join(lines) + "\n"


def format_summary_csv(summary: list[dict], sweep_var: str) -> str:
    lines = [f"algorithm,{sweep_var},runs,ok,mean_cost,std_cost,mean_size"]
    for row in summary:
        lines.append(
            f"{row['algorithm']},{_fmt(row[sweep_var])},{row['runs']},{row['ok']},"
            f"{_fmt(row['mean_cost'])},{_fmt(row['std_cost'])},{_fmt(row['mean_size'])}"
        )
    return "\n".join(lines) + "\n"
