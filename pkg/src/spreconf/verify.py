"""Solver-versus-oracle sweeps over generated instances.

Each sweep draws representations (seeded, or every one for the classes
small enough to enumerate), takes every s-t pair at the class's minimum
distance, and compares the solver's verdict with the component structure
of the oracle's reconfiguration graph on every pair of shortest paths.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Iterable, Iterator

from .errors import CapExceeded
from .generators import (
    random_arc_rep,
    random_chord_rep,
    random_interval_graph,
    random_permutation_rep,
    ring_arc_rep,
    st_pairs,
)
from .graph import Graph, StInstance, count_shortest_paths
from .oracle import ReconfigGraph, build_reconfig_graph
from .solvers.arcs import circular_arc_solve
from .solvers.circle import circle_solve
from .solvers.hypercube import hypercube_solve, kendall_tau, path_to_permutation
from .solvers.permutation import permutation_solve
from .solvers.reps import ArcRep, HypercubeRep, PermutationRep
from .solvers.weakly_modular import weakly_modular_solve

CLASSES = ("permutation", "circle", "arc", "interval", "hypercube")
PAIR_CAP = 200


@dataclass
class VerifyReport:
    cls: str
    instances: int = 0
    pairs: int = 0
    agree: int = 0
    skipped: int = 0  # instances over the path cap
    fallbacks: int = 0  # sequences built by the oracle after a merge stall
    failures: list[str] = field(default_factory=list)

    @property
    def agreement(self) -> float:
        return 1.0 if self.pairs == 0 else self.agree / self.pairs

    @property
    def ok(self) -> bool:
        return not self.failures and self.agree == self.pairs

    def summary(self) -> str:
        return (
            f"class {self.cls} instances {self.instances} pairs {self.pairs} "
            f"skipped {self.skipped} fallbacks {self.fallbacks} agreement {100 * self.agreement:.2f}%"
        )

    def as_dict(self) -> dict:
        return {
            "class": self.cls,
            "instances": self.instances,
            "pairs": self.pairs,
            "agree": self.agree,
            "skipped": self.skipped,
            "fallbacks": self.fallbacks,
            "agreement": self.agreement,
            "failures": self.failures[:20],
        }


Case = tuple[object, Graph]


def _random_cases(make: Callable[[random.Random], Case], trials: int, seed: int) -> Iterator[Case]:
    for i in range(trials):
        yield make(random.Random(f"{seed}:{i}"))


def cases(cls: str, n: int, trials: int | None, seed: int = 0) -> Iterator[Case]:
    """Representations for a sweep; ``trials=None`` enumerates them all where supported."""
    if cls == "permutation":
        if trials is None:
            return ((rep, rep.graph()) for rep in map(PermutationRep, permutations(range(n))))
        return _random_cases(lambda r: _with_graph(random_permutation_rep(r, n)), trials, seed)
    if cls == "circle":
        return _random_cases(lambda r: _with_graph(random_chord_rep(r, n)), _need(cls, trials), seed)
    if cls == "arc":
        return _random_cases(lambda r: _with_graph(_arc_rep(r, n)), _need(cls, trials), seed)
    if cls == "interval":
        return _random_cases(lambda r: (None, random_interval_graph(r, n)), _need(cls, trials), seed)
    if cls == "hypercube":
        if trials is not None:
            raise ValueError("hypercube sweeps are always exhaustive over s and t")
        rep = HypercubeRep(n)
        return iter([(rep, rep.graph())])
    raise ValueError(f"unknown class {cls!r}; expected one of {', '.join(CLASSES)}")


def _arc_rep(rng: random.Random, n: int) -> ArcRep:
    # half the draws are chained rings, which reach d(s,t) >= 6 once n >= 12
    if n >= 3 and rng.random() < 0.5:
        return ring_arc_rep(rng, n, rng.randint(0, n // 4))
    return random_arc_rep(rng, n, max(2, n // 2))


def _with_graph(rep) -> Case:
    return rep, rep.graph()


def _need(cls: str, trials: int | None) -> int:
    if trials is None:
        raise ValueError(f"exhaustive enumeration is not available for class {cls}; give a trial count")
    return trials


def _oracle(inst: StInstance, cap: int) -> ReconfigGraph | None:
    if count_shortest_paths(inst) > cap:
        return None
    return build_reconfig_graph(inst, 1, cap)


VERDICT_SOLVERS = {"permutation": permutation_solve, "circle": circle_solve, "arc": circular_arc_solve}


def _check_verdicts(report: VerifyReport, inst: StInstance, rg: ReconfigGraph, rep, solve) -> None:
    comp = rg.component
    for i, j in combinations(range(len(rg.paths)), 2):
        p, q = rg.paths[i], rg.paths[j]
        want = comp[i] == comp[j]
        got, seq = solve(rep, inst, p, q)
        report.pairs += 1
        where = f"s={inst.s} t={inst.t} p={p} q={q}"
        if got != want:
            report.failures.append(f"verdict {got} but oracle {want}: {where}")
            continue
        if seq is not None:
            if seq.via_oracle:
                report.fallbacks += 1
            if not seq.is_valid(inst, 1) or seq.start != p or seq.end != q:
                report.failures.append(f"invalid sequence: {where}")
                continue
        report.agree += 1


def _weakly_modular(inst: StInstance, rg: ReconfigGraph, report: VerifyReport) -> None:
    comp = rg.component
    bound = inst.n**2
    for i, j in combinations(range(len(rg.paths)), 2):
        p, q = rg.paths[i], rg.paths[j]
        report.pairs += 1
        where = f"s={inst.s} t={inst.t} p={p} q={q}"
        if comp[i] != comp[j]:
            report.failures.append(f"oracle says disconnected in a chordal graph: {where}")
            continue
        stats: dict = {}
        seq = weakly_modular_solve(inst, p, q, stats=stats)
        if not seq.is_valid(inst, 1) or seq.end != q:
            report.failures.append(f"invalid sequence: {where}")
        elif stats["subproblems"] > bound:
            report.failures.append(f"{stats['subproblems']} subproblems > n^2 = {bound}: {where}")
        else:
            report.agree += 1


def _hypercube(rep: HypercubeRep, inst: StInstance, rg: ReconfigGraph, report: VerifyReport) -> None:
    for i, p in enumerate(rg.paths):
        dist = rg.distances_from(i)
        for j in range(i + 1, len(rg.paths)):
            q = rg.paths[j]
            report.pairs += 1
            seq = hypercube_solve(rep, inst.s, inst.t, p, q)
            tau = kendall_tau(path_to_permutation(rep, inst.s, inst.t, p), path_to_permutation(rep, inst.s, inst.t, q))
            if len(seq) == tau == dist[j] and seq.is_valid(inst, 1) and seq.end == q:
                report.agree += 1
            else:
                report.failures.append(f"length {len(seq)}, tau {tau}, oracle {dist[j]}: s={inst.s} t={inst.t} p={p} q={q}")


MIN_DISTANCE = {"permutation": 3, "circle": 3, "arc": 2, "interval": 2, "hypercube": 1}


def sweep(
    cls: str,
    source: Iterable[Case],
    pair_cap: int = PAIR_CAP,
    max_failures: int | None = None,
) -> VerifyReport:
    report = VerifyReport(cls)
    for rep, graph in source:
        for inst in st_pairs(graph, MIN_DISTANCE[cls]):
            try:
                rg = _oracle(inst, pair_cap)
            except CapExceeded:
                rg = None
            if rg is None:
                report.skipped += 1
                continue
            report.instances += 1
            if cls == "interval":
                _weakly_modular(inst, rg, report)
            elif cls == "hypercube":
                _hypercube(rep, inst, rg, report)  # type: ignore[arg-type]
            else:
                _check_verdicts(report, inst, rg, rep, VERDICT_SOLVERS[cls])
            if max_failures is not None and len(report.failures) >= max_failures:
                return report
    return report


def verify(cls: str, n: int, trials: int | None, seed: int = 0, pair_cap: int = PAIR_CAP) -> VerifyReport:
    return sweep(cls, cases(cls, n, trials, seed), pair_cap)

