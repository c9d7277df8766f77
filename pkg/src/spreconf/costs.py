"""Cost-optimising reconfiguration: MinSum, MinMax and MinTop-l.

A step may replace any number of contiguous interior vertices; changing a
block of ``m`` vertices costs ``p[m]``.  A step is charged for its
narrowest description, the span from the first to the last changed
position.  Every pair of distinct shortest paths is one step apart, so
the searches run over the complete graph on the enumerated paths.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .errors import InvalidPath
from .graph import Path, StInstance, enumerate_shortest_paths, path_defect
from .oracle import ReconfigSequence, default_path_cap, diff_span, shortest_reconfig_sequence

Cost = Union[int, Fraction]


class _Unbounded:
    def __repr__(self) -> str:
        return "Unbounded"


Unbounded = _Unbounded()


@dataclass(frozen=True)
class CostModel:
    """``p[0]`` prices a one-vertex change, ``p[i-1]`` an ``i``-vertex block."""

    p: tuple[Cost, ...]

    def __post_init__(self) -> None:
        if not self.p:
            raise ValueError("cost table is empty")
        if any(x < 0 for x in self.p):
            raise ValueError("costs must be nonnegative")
        if any(a > b for a, b in zip(self.p, self.p[1:])):
            raise ValueError("costs must be non-decreasing in block size")

    def price(self, m: int) -> Cost:
        if m < 1:
            raise ValueError("block size must be >= 1")
        return self.p[min(m, len(self.p)) - 1]

    def step_cost(self, a: Sequence[int], b: Sequence[int]) -> Cost:
        return self.price(diff_span(a, b))


def _top(costs: Sequence[Cost], l: int | None) -> tuple[Cost, ...]:
    ranked = sorted(costs, reverse=True)
    return tuple(ranked if l is None else ranked[:l])


@dataclass(frozen=True)
class CostedSequence:
    sequence: ReconfigSequence
    step_costs: tuple[Cost, ...]
    l: int | None = None  # objective width; None means all steps

    @property
    def total(self) -> Cost:
        return sum(self.step_costs, 0)

    @property
    def max(self) -> Cost:
        return max(self.step_costs, default=0)

    @property
    def top_l_sum(self) -> Cost:
        return sum(_top(self.step_costs, self.l), 0)

    def check(self, instance: StInstance, costs: CostModel) -> None:
        """Replay the sequence and recompute every step cost."""
        self.sequence.validate(instance)
        paths = self.sequence.paths()
        again = tuple(costs.step_cost(a, b) for a, b in zip(paths, paths[1:]))
        if again != self.step_costs:
            raise AssertionError(f"stored step costs {self.step_costs} != recomputed {again}")


def _setup(instance: StInstance, p: Sequence[int], q: Sequence[int], path_cap: int | None):
    for path in (p, q):
        reason = path_defect(instance, path)
        if reason is not None:
            raise InvalidPath(f"not an s-t shortest path ({reason}): {tuple(path)}")
    cap = default_path_cap() if path_cap is None else path_cap
    paths = enumerate_shortest_paths(instance, cap)
    index = {x: i for i, x in enumerate(paths)}
    return paths, index[tuple(p)], index[tuple(q)]


def _costed(paths: list[Path], route: Sequence[int], costs: CostModel, l: int | None) -> CostedSequence:
    stages = [paths[i] for i in route]
    step_costs = tuple(costs.step_cost(a, b) for a, b in zip(stages, stages[1:]))
    return CostedSequence(ReconfigSequence.from_paths(stages), step_costs, l)


def min_sum(
    instance: StInstance, p: Sequence[int], q: Sequence[int], costs: CostModel, path_cap: int | None = None
) -> CostedSequence | None:
    """Least total cost, by Dijkstra over all shortest paths."""
    paths, a, b = _setup(instance, p, q, path_cap)
    best: dict[int, Cost] = {a: 0}
    prev: dict[int, int] = {}
    done: set[int] = set()
    heap: list[tuple[Cost, int]] = [(0, a)]
    while heap:
        c, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        if u == b:
            break
        for v in range(len(paths)):
            if v in done:
                continue
            nc = c + costs.step_cost(paths[u], paths[v])
            if v not in best or nc < best[v]:
                best[v] = nc
                prev[v] = u
                heapq.heappush(heap, (nc, v))
    route = [b]
    while route[-1] != a:
        route.append(prev[route[-1]])
    return _costed(paths, route[::-1], costs, None)


def min_max(
    instance: StInstance, p: Sequence[int], q: Sequence[int], costs: CostModel, path_cap: int | None = None
) -> CostedSequence | None:
    """Least largest step cost: ``p[k*]`` for the least ``k*`` joining ``p`` and ``q``."""
    paths, a, b = _setup(instance, p, q, path_cap)
    if a == b:
        return _costed(paths, [a], costs, 1)
    for k in range(1, max(instance.distance - 1, 1) + 1):
        seq = shortest_reconfig_sequence(instance, p, q, k, path_cap)
        if seq is not None:
            stages = seq.paths()
            step_costs = tuple(costs.step_cost(x, y) for x, y in zip(stages, stages[1:]))
            return CostedSequence(seq, step_costs, 1)
    raise AssertionError("distinct shortest paths are always one block step apart")


def min_top_l(
    instance: StInstance,
    p: Sequence[int],
    q: Sequence[int],
    costs: CostModel,
    l: int | _Unbounded,
    path_cap: int | None = None,
) -> CostedSequence | None:
    """Least sum of the ``l`` largest step costs.

    Best-first search over (path, top-l costs so far).  A state is dropped
    when an already settled state at the same path has a componentwise
    smaller or equal top-l vector.  Removing a cycle from a sequence never
    raises its top-l sum, so ``l`` beyond the path count changes nothing
    and Unbounded runs as ``len(paths) - 1``.
    """
    if l is not Unbounded and (not isinstance(l, int) or l < 1):
        raise ValueError("l must be a positive integer or Unbounded")
    paths, a, b = _setup(instance, p, q, path_cap)
    width = max(len(paths) - 1, 1)
    if l is not Unbounded:
        width = min(width, l)  # type: ignore[type-var]
    zero = (0,) * width
    settled: dict[int, list[tuple[Cost, ...]]] = {}
    heap: list[tuple[Cost, tuple[int, ...], tuple[Cost, ...]]] = [(0, (a,), zero)]
    while heap:
        value, route, top = heapq.heappop(heap)
        u = route[-1]
        seen = settled.setdefault(u, [])
        if any(all(x <= y for x, y in zip(old, top)) for old in seen):
            continue
        seen.append(top)
        if u == b:
            return _costed(paths, route, costs, None if l is Unbounded else l)  # type: ignore[arg-type]
        for v in range(len(paths)):
            if v in route:
                continue
            ntop = _top((*top, costs.step_cost(paths[u], paths[v])), width)
            heapq.heappush(heap, (sum(ntop, 0), route + (v,), ntop))
    return None


def exhaustive_profiles(
    instance: StInstance, p: Sequence[int], q: Sequence[int], costs: CostModel, path_cap: int | None = None
) -> set[tuple[Cost, ...]]:
    """Every step-cost multiset (sorted descending) of a cycle-free sequence from ``p`` to ``q``.

    Exponential in the number of paths; meant as a cross-check on small instances.
    """
    paths, a, b = _setup(instance, p, q, path_cap)
    n = len(paths)
    step = [[costs.step_cost(x, y) if x != y else 0 for y in paths] for x in paths]

    @lru_cache(maxsize=None)
    def tails(u: int, visited: int) -> frozenset[tuple[Cost, ...]]:
        if u == b:
            return frozenset({()})
        out = set()
        for v in range(n):
            if visited >> v & 1:
                continue
            for rest in tails(v, visited | 1 << v):
                out.add(tuple(sorted((step[u][v], *rest), reverse=True)))
        return frozenset(out)

    return set(tails(a, 1 << a))


def reduc_costs(n: int, l: int) -> CostModel:
    """One for single-vertex steps, ``l * 2**(n*n + 1)`` for anything wider."""
    if n < 1 or l < 1:
        raise ValueError("n and l must be >= 1")
    big = l * 2 ** (n * n + 1)
    return CostModel((1,) + (big,) * (n - 1))


def reduc_decide(instance: StInstance, p: Sequence[int], q: Sequence[int], l: int, path_cap: int | None = None) -> bool:
    """SPR verdict read off the MinTop-l optimum under the two-tier costs.

    A sequence of single-vertex steps costs at most ``l``; any wider step
    costs the whole threshold on its own, hence the strict comparison.
    """
    costs = reduc_costs(instance.n, l)
    best = min_top_l(instance, p, q, costs, l, path_cap)
    return best is not None and best.top_l_sum < l * 2 ** (instance.n**2 + 1)
