"""Instance transformers: line graphs, graph powers, subdivisions.

Each transform that carries paths across returns a ``forward_path_map``
so the two sides can be checked against the oracle independently.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Sequence

from .errors import EmptyGraph, InvalidPath
from .graph import Graph, Path, StInstance, path_defect

Edge = tuple[int, int]


@dataclass(frozen=True)
class LabeledLineGraph:
    """Line graph whose vertex ``i`` stands for edge ``origin[i]`` (with ``x < y``)."""

    graph: Graph
    origin: tuple[Edge, ...]

    def vertex(self, x: int, y: int) -> int:
        return self._index[(x, y) if x < y else (y, x)]

    @cached_property
    def _index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.origin)}


@dataclass(frozen=True)
class ReducedInstance:
    instance: StInstance
    forward_path_map: Callable[[Sequence[int]], Path]
    p: Path
    q: Path


def line_graph(g: Graph) -> LabeledLineGraph:
    origin = tuple(g.edges())
    if not origin:
        raise EmptyGraph("line graph of an edgeless graph")
    index = {e: i for i, e in enumerate(origin)}
    adj: list[set[int]] = [set() for _ in origin]
    for v in range(g.n):
        inc = [index[(v, w) if v < w else (w, v)] for w in g.adjacency[v]]
        for i, a in enumerate(inc):
            for b in inc[i + 1 :]:
                adj[a].add(b)
                adj[b].add(a)
    graph = Graph(len(origin), tuple(tuple(sorted(a)) for a in adj))
    return LabeledLineGraph(graph, origin)


def _expand(g: Graph, stretch: dict[Edge, int]) -> tuple[Graph, dict[Edge, tuple[int, ...]]]:
    """Replace edge ``e`` by a path with ``stretch[e]`` new interior vertices.

    Returns the new graph and, per original edge ``(u, v)`` with ``u < v``,
    the full vertex chain from ``u`` to ``v``.  New ids follow edge order.
    """
    n = g.n
    edges: list[Edge] = []
    chains: dict[Edge, tuple[int, ...]] = {}
    for u, v in g.edges():
        extra = stretch.get((u, v), 0)
        chain = (u, *range(n, n + extra), v)
        n += extra
        chains[(u, v)] = chain
        edges.extend(zip(chain, chain[1:]))
    return Graph.from_edges(n, edges), chains


def subdivide_uniform(g: Graph, l: int) -> Graph:
    """Subdivide every edge ``l`` times; original ids kept, new ids appended."""
    if l < 0:
        raise ValueError("l must be >= 0")
    return _expand(g, {e: l for e in g.edges()})[0]


def _even_odd(instance: StInstance, k: int) -> tuple[Graph, dict[Edge, tuple[int, ...]]]:
    if k < 2:
        raise ValueError("k must be >= 2")
    layer = instance.dist_s
    stretch = {}
    for u, v in instance.graph.edges():
        lu, lv = layer[u], layer[v]
        if lu is None or lv is None or abs(lu - lv) != 1:
            continue
        if min(lu, lv) % 2 == 0:
            stretch[(u, v)] = k - 2
    return _expand(instance.graph, stretch)


def even_odd_subdivide(instance: StInstance, k: int) -> Graph:
    """Turn each edge from an even layer ``i`` to layer ``i+1`` into a path on ``k`` vertices."""
    return _even_odd(instance, k)[0]


def _walk(chains: dict[Edge, tuple[int, ...]], path: Sequence[int]) -> list[int]:
    out = [path[0]]
    for a, b in zip(path, path[1:]):
        chain = chains[(a, b)] if a < b else chains[(b, a)][::-1]
        out.extend(chain[1:])
    return out


def kspr_line_instance(src: StInstance, p: Sequence[int], q: Sequence[int], k: int) -> ReducedInstance:
    """SPR instance on ``src`` to an equivalent k-SPR instance on a line graph.

    Stretch even-odd edges, hang ``s*`` off ``s`` and ``t*`` off ``t``, then
    take the line graph; ``s' = s*s`` and ``t' = tt*``.
    """
    for path in (p, q):
        reason = path_defect(src, path)
        if reason is not None:
            raise InvalidPath(f"not an s-t shortest path ({reason}): {tuple(path)}")
    gk, chains = _even_odd(src, k)
    s_star, t_star = gk.n, gk.n + 1
    star = Graph.from_edges(gk.n + 2, [*gk.edges(), (src.s, s_star), (src.t, t_star)])
    lg = line_graph(star)
    inst = StInstance(lg.graph, lg.vertex(s_star, src.s), lg.vertex(src.t, t_star))

    def forward(path: Sequence[int]) -> Path:
        walk = [s_star, *_walk(chains, path), t_star]
        return tuple(lg.vertex(a, b) for a, b in zip(walk, walk[1:]))

    return ReducedInstance(inst, forward, forward(p), forward(q))


def graph_power(g: Graph, k: int) -> Graph:
    """Join every pair of vertices at distance at most ``k``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    adj = []
    for src in range(g.n):
        seen = {src: 0}
        queue = deque([src])
        while queue:
            u = queue.popleft()
            if seen[u] == k:
                continue
            for w in g.adjacency[u]:
                if w not in seen:
                    seen[w] = seen[u] + 1
                    queue.append(w)
        del seen[src]
        adj.append(tuple(sorted(seen)))
    return Graph(g.n, tuple(adj))


def power_path(path: Sequence[int], k: int) -> Path:
    """Every ``k``-th vertex of ``path`` plus its end; the last hop takes the remainder."""
    out = list(path[::k])
    if out[-1] != path[-1]:
        out.append(path[-1])
    return tuple(out)


def power_instance(src: StInstance, p: Sequence[int], q: Sequence[int], k: int) -> ReducedInstance:
    inst = StInstance(graph_power(src.graph, k), src.s, src.t)

    def forward(path: Sequence[int]) -> Path:
        reason = path_defect(src, path)
        if reason is not None:
            raise InvalidPath(f"not an s-t shortest path ({reason}): {tuple(path)}")
        return power_path(path, k)

    return ReducedInstance(inst, forward, forward(p), forward(q))
