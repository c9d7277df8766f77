"""Ground-truth engine: explicit reconfiguration graphs over all s-t shortest paths.

A k-step keeps two anchor vertices of the path fixed and replaces the
``m <= k`` interior vertices between them by another block of the same
length, so that the result is again an s-t shortest path.  Geometrically
the old and new blocks close a cycle of length ``2m + 2``.
"""
from __future__ import annotations

import math
import os
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

from .errors import CapExceeded, InvalidPath, PreconditionViolated
from .graph import Path, StInstance, count_shortest_paths, enumerate_shortest_paths, path_defect

DEFAULT_PATH_CAP = 100_000
INFINITE = math.inf


def default_path_cap() -> int:
    raw = os.environ.get("RECONFIG_PATH_CAP")
    return int(raw) if raw else DEFAULT_PATH_CAP


@dataclass(frozen=True)
class KStep:
    """Replace ``path[anchor_lo+1:anchor_hi]`` (``old_block``) by ``new_block``."""

    anchor_lo: int
    anchor_hi: int
    old_block: tuple[int, ...]
    new_block: tuple[int, ...]

    def __post_init__(self) -> None:
        m = self.anchor_hi - self.anchor_lo - 1
        if m < 1 or len(self.old_block) != m or len(self.new_block) != m:
            raise ValueError("block length must equal anchor gap and be >= 1")
        if self.old_block == self.new_block:
            raise ValueError("step does not change the path")

    @property
    def size(self) -> int:
        return len(self.new_block)

    def apply(self, path: Sequence[int]) -> Path:
        lo, hi = self.anchor_lo, self.anchor_hi
        if tuple(path[lo + 1 : hi]) != self.old_block:
            raise InvalidPath(f"step expects block {self.old_block} at {lo + 1}..{hi - 1}")
        return tuple(path[: lo + 1]) + self.new_block + tuple(path[hi:])

    def inverse(self) -> KStep:
        return KStep(self.anchor_lo, self.anchor_hi, self.new_block, self.old_block)


def diff_window(p: Sequence[int], q: Sequence[int]) -> tuple[int, int] | None:
    """First and last index where two equal-length paths differ."""
    diffs = [i for i, (a, b) in enumerate(zip(p, q)) if a != b]
    if not diffs:
        return None
    return diffs[0], diffs[-1]


def step_between(p: Sequence[int], q: Sequence[int]) -> KStep:
    """The narrowest single step turning ``p`` into ``q``."""
    if len(p) != len(q):
        raise InvalidPath("paths of different length")
    window = diff_window(p, q)
    if window is None:
        raise ValueError("paths are identical")
    a, b = window
    return KStep(a - 1, b + 1, tuple(p[a : b + 1]), tuple(q[a : b + 1]))


def diff_span(p: Sequence[int], q: Sequence[int]) -> int:
    """Width of the smallest contiguous block covering every difference (0 if equal)."""
    window = diff_window(p, q)
    return 0 if window is None else window[1] - window[0] + 1


@dataclass
class ReconfigSequence:
    start: Path
    steps: list[KStep] = field(default_factory=list)
    # set when a solver had to hand part of the work to the oracle
    via_oracle: bool = False

    @classmethod
    def from_paths(cls, paths: Sequence[Sequence[int]], via_oracle: bool = False) -> ReconfigSequence:
        paths = [tuple(p) for p in paths]
        steps = [step_between(a, b) for a, b in zip(paths, paths[1:])]
        return cls(paths[0], steps, via_oracle)

    def paths(self) -> list[Path]:
        out = [tuple(self.start)]
        for step in self.steps:
            out.append(step.apply(out[-1]))
        return out

    @property
    def end(self) -> Path:
        return self.paths()[-1]

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def max_block(self) -> int:
        return max((st.size for st in self.steps), default=0)

    def validate(self, instance: StInstance, k: int | None = None) -> None:
        """Raise ``InvalidPath`` unless every stage is an s-t shortest path."""
        for i, p in enumerate(self.paths()):
            reason = path_defect(instance, p)
            if reason is not None:
                raise InvalidPath(f"stage {i} is not a shortest path: {reason}")
        if k is not None and self.max_block > k:
            raise InvalidPath(f"a step replaces {self.max_block} > {k} vertices")

    def is_valid(self, instance: StInstance, k: int | None = None) -> bool:
        try:
            self.validate(instance, k)
        except InvalidPath:
            return False
        return True


def _require_path(instance: StInstance, path: Sequence[int]) -> Path:
    reason = path_defect(instance, path)
    if reason is not None:
        raise InvalidPath(f"not an s-t shortest path ({reason}): {tuple(path)}")
    return tuple(path)


def _replacement_blocks(instance: StInstance, a: int, b: int, m: int) -> Iterator[tuple[int, ...]]:
    """Blocks ``w_1..w_m`` with ``a, w_1, ..., w_m, b`` a path of the shortest-path DAG.

    Meet in the middle: forward half-blocks grown from ``a``, backward
    half-blocks grown from ``b``, joined across one DAG arc.
    """
    succ, pred = instance.successors, instance.predecessors
    h = (m + 1) // 2
    fwd: list[tuple[int, ...]] = [()]
    for _ in range(h):
        fwd = [f + (v,) for f in fwd for v in succ[f[-1] if f else a]]
    rest = m - h
    if rest == 0:
        for f in fwd:
            if b in succ[f[-1]]:
                yield f
        return
    bwd: list[tuple[int, ...]] = [()]
    for _ in range(rest):
        bwd = [(v,) + g for g in bwd for v in pred[g[0] if g else b]]
    by_first: dict[int, list[tuple[int, ...]]] = {}
    for g in bwd:
        by_first.setdefault(g[0], []).append(g)
    for f in fwd:
        for y in succ[f[-1]]:
            for g in by_first.get(y, ()):
                yield f + g


def k_step_neighbors(instance: StInstance, path: Sequence[int], k: int) -> list[Path]:
    """Every shortest path one k-step away from ``path``, lexicographically sorted."""
    if k < 1:
        raise ValueError("k must be positive")
    p = _require_path(instance, path)
    length = len(p) - 1
    found: set[Path] = set()
    for lo in range(length - 1):
        for m in range(1, min(k, length - 1 - lo) + 1):
            hi = lo + m + 1
            old = p[lo + 1 : hi]
            for block in _replacement_blocks(instance, p[lo], p[hi], m):
                if block != old:
                    found.add(p[: lo + 1] + block + p[hi:])
    return sorted(found)


@dataclass(frozen=True)
class ReconfigGraph:
    paths: tuple[Path, ...]
    adjacency: tuple[tuple[int, ...], ...]
    k: int

    @cached_property
    def index(self) -> dict[Path, int]:
        return {p: i for i, p in enumerate(self.paths)}

    def __len__(self) -> int:
        return len(self.paths)

    def edge_set(self) -> set[tuple[int, int]]:
        return {(i, j) for i, nb in enumerate(self.adjacency) for j in nb if i < j}

    @property
    def edge_count(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def distances_from(self, src: int) -> list[int | None]:
        dist: list[int | None] = [None] * len(self.paths)
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for v in self.adjacency[u]:
                if dist[v] is None:
                    dist[v] = dist[u] + 1  # type: ignore[operator]
                    queue.append(v)
        return dist

    @cached_property
    def component(self) -> tuple[int, ...]:
        """Component id per path (ids assigned in index order)."""
        comp = [-1] * len(self.paths)
        label = 0
        for root in range(len(self.paths)):
            if comp[root] >= 0:
                continue
            comp[root] = label
            stack = [root]
            while stack:
                u = stack.pop()
                for v in self.adjacency[u]:
                    if comp[v] < 0:
                        comp[v] = label
                        stack.append(v)
            label += 1
        return tuple(comp)

    def connected(self, p: Sequence[int], q: Sequence[int]) -> bool:
        return self.component[self.index[tuple(p)]] == self.component[self.index[tuple(q)]]


def _check_path_bound(instance: StInstance, count: int) -> None:
    # distinct shortest paths have distinct vertex sets, so at most 2^n of them
    if count > 2**instance.n:
        raise AssertionError(f"{count} shortest paths exceed 2^{instance.n}")


def build_reconfig_graph(instance: StInstance, k: int, path_cap: int | None = None) -> ReconfigGraph:
    cap = default_path_cap() if path_cap is None else path_cap
    paths = enumerate_shortest_paths(instance, cap)
    _check_path_bound(instance, len(paths))
    index = {p: i for i, p in enumerate(paths)}
    adjacency = tuple(
        tuple(index[q] for q in k_step_neighbors(instance, p, k)) for p in paths
    )
    graph = ReconfigGraph(tuple(paths), adjacency, k)
    graph.__dict__["index"] = index
    return graph


def shortest_reconfig_sequence(
    instance: StInstance,
    p: Sequence[int],
    q: Sequence[int],
    k: int = 1,
    path_cap: int | None = None,
) -> ReconfigSequence | None:
    """Minimum-step k-sequence from ``p`` to ``q`` by breadth-first search."""
    cap = default_path_cap() if path_cap is None else path_cap
    start, goal = _require_path(instance, p), _require_path(instance, q)
    total = count_shortest_paths(instance)
    if total > cap:
        raise CapExceeded(cap, total)
    _check_path_bound(instance, total)
    if start == goal:
        return ReconfigSequence(start)
    parent: dict[Path, Path | None] = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in k_step_neighbors(instance, cur, k):
            if nxt in parent:
                continue
            parent[nxt] = cur
            if nxt == goal:
                chain = [nxt]
                while parent[chain[-1]] is not None:
                    chain.append(parent[chain[-1]])  # type: ignore[arg-type]
                return ReconfigSequence.from_paths(chain[::-1])
            queue.append(nxt)
    return None


def reconfig_diameter(instance: StInstance, k: int, path_cap: int | None = None) -> int | float:
    """Largest BFS distance between two paths; ``INFINITE`` if disconnected."""
    graph = build_reconfig_graph(instance, k, path_cap)
    best = 0
    for src in range(len(graph)):
        dist = graph.distances_from(src)
        if any(d is None for d in dist):
            return INFINITE
        best = max(best, max(dist))  # type: ignore[type-var]
    return best


def large_k_shortcut(instance: StInstance, p: Sequence[int], q: Sequence[int], k: int) -> ReconfigSequence:
    """At most two k-steps from ``p`` to ``q`` when ``k >= n/2``.

    If the differing stretch fits in ``k`` vertices (always so when
    ``d(s,t) < n/2``) one step suffices.  Otherwise the path is long, few
    vertices are left off it, and a vertex shared by both paths splits the
    stretch into two blocks of at most ``k``.
    """
    if 2 * k < instance.n:
        raise PreconditionViolated(f"k={k} is below n/2 for n={instance.n}")
    start, goal = _require_path(instance, p), _require_path(instance, q)
    window = diff_window(start, goal)
    if window is None:
        return ReconfigSequence(start)
    a, b = window
    if b - a + 1 <= k:
        return ReconfigSequence(start, [step_between(start, goal)])
    # shared vertex c with both halves [a, c-1] and [c+1, b] no wider than k
    for c in range(min(a + k, b - 1), max(b - k, a + 1) - 1, -1):
        if start[c] == goal[c]:
            mid = goal[: c + 1] + start[c + 1 :]
            return ReconfigSequence.from_paths([start, mid, goal])
    raise PreconditionViolated("no split vertex found; instance violates the k >= n/2 argument")
