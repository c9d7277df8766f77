"""Undirected simple graphs, s-t instances and shortest-path machinery.

Every other module builds on the types here.  Vertex ids are dense
integers ``0..n-1`` and every ordering produced by this module is
lexicographic by id, so outputs are reproducible byte for byte.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import CapExceeded, DisconnectedPair, InstanceFormatError, UnreachableTarget

Path = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with sorted neighbour lists."""

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in nbrs[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @cached_property
    def _nbr_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adjacency)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
        """Subgraph on ``vertices`` relabelled densely; also returns new-to-old ids."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(keep), edges), keep


def bfs_distances(graph: Graph, source: int) -> list[int | None]:
    """Distance from ``source`` to every vertex, ``None`` when unreachable."""
    dist: list[int | None] = [None] * graph.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1  # type: ignore[operator]
        for v in graph.adjacency[u]:
            if dist[v] is None:
                dist[v] = du
                queue.append(v)
    return dist


@dataclass(frozen=True)
class StInstance:
    """A graph with designated source and target; ``t`` must be reachable."""

    graph: Graph
    s: int
    t: int

    def __post_init__(self) -> None:
        n = self.graph.n
        if not (0 <= self.s < n):
            raise ValueError(f"source {self.s} out of range")
        if not (0 <= self.t < n):
            raise ValueError(f"target {self.t} out of range")
        if self.s == self.t:
            raise ValueError("source and target coincide")
        if self.dist_s[self.t] is None:
            raise UnreachableTarget(f"target {self.t} unreachable from source {self.s}")

    @cached_property
    def dist_s(self) -> list[int | None]:
        return bfs_distances(self.graph, self.s)

    @cached_property
    def dist_t(self) -> list[int | None]:
        return bfs_distances(self.graph, self.t)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def distance(self) -> int:
        """d(s, t)."""
        return self.dist_s[self.t]  # type: ignore[return-value]

    def on_shortest(self, v: int) -> bool:
        ds, dt = self.dist_s[v], self.dist_t[v]
        return ds is not None and dt is not None and ds + dt == self.distance

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        """Forward arcs of the shortest-path DAG (empty for vertices off it)."""
        out: list[tuple[int, ...]] = []
        for u in range(self.n):
            if not self.on_shortest(u):
                out.append(())
                continue
            du = self.dist_s[u]
            out.append(
                tuple(
                    v
                    for v in self.graph.adjacency[u]
                    if self.dist_s[v] == du + 1 and self.on_shortest(v)
                )
            )
        return tuple(out)

    @cached_property
    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        preds: list[list[int]] = [[] for _ in range(self.n)]
        for u, succ in enumerate(self.successors):
            for v in succ:
                preds[v].append(u)
        return tuple(tuple(p) for p in preds)

    @cached_property
    def layers(self) -> tuple[tuple[int, ...], ...]:
        """Vertices on some s-t shortest path, grouped by distance from s."""
        out: list[list[int]] = [[] for _ in range(self.distance + 1)]
        for v in range(self.n):
            if self.on_shortest(v):
                out[self.dist_s[v]].append(v)  # type: ignore[index]
        return tuple(tuple(layer) for layer in out)


@dataclass(frozen=True)
class BfsLayering:
    source: int
    layer: dict[int, int] = field(default_factory=dict)

    def layer_sizes(self) -> list[int]:
        sizes = [0] * (max(self.layer.values()) + 1)
        for d in self.layer.values():
            sizes[d] += 1
        return sizes

    def vertices_at(self, d: int) -> list[int]:
        return sorted(v for v, dv in self.layer.items() if dv == d)


def bfs_layering(instance: StInstance | Graph, source: int) -> BfsLayering:
    graph = instance.graph if isinstance(instance, StInstance) else instance
    if not (0 <= source < graph.n):
        raise ValueError(f"source {source} out of range")
    dist = bfs_distances(graph, source)
    return BfsLayering(source, {v: d for v, d in enumerate(dist) if d is not None})


def path_defect(instance: StInstance, path: Sequence[int]) -> str | None:
    """Reason code why ``path`` is not an s-t shortest path, or ``None``."""
    try:
        verts = list(map(int, path))
    except (TypeError, ValueError):
        return "malformed"
    if not verts:
        return "empty"
    if min(verts) < 0 or max(verts) >= instance.graph.n:
        return "vertex-out-of-range"
    if verts[0] != instance.s:
        return "wrong-start"
    if verts[-1] != instance.t:
        return "wrong-end"
    if len(set(verts)) != len(verts):
        return "not-simple"
    nbrs = instance.graph._nbr_sets
    for a, b in zip(verts, verts[1:]):
        if b not in nbrs[a]:
            return "non-adjacent"
    if len(verts) - 1 != instance.distance:
        return "too-long"
    return None


def is_st_shortest_path(instance: StInstance, path: Sequence[int]) -> bool:
    return path_defect(instance, path) is None


def prune_to_shortest_dag(instance: StInstance) -> Graph:
    """Keep only edges lying on at least one s-t shortest path.

    No intra-layer edge survives, so the result is bipartite by layer parity.
    """
    edges = [(u, v) for u, succ in enumerate(instance.successors) for v in succ]
    return Graph.from_edges(instance.n, edges)


def count_shortest_paths(instance: StInstance) -> int:
    ways = [0] * instance.n
    ways[instance.s] = 1
    for layer in instance.layers[1:]:
        for v in layer:
            ways[v] = sum(ways[u] for u in instance.predecessors[v])
    return ways[instance.t]


def iter_shortest_paths(instance: StInstance) -> Iterator[Path]:
    """All s-t shortest paths in lexicographic order."""
    succ = instance.successors
    t = instance.t
    path = [instance.s]
    # choice[i] = index into succ[path[i]] of the branch currently taken
    choice = [0]
    while choice:
        u = path[-1]
        if u == t:
            yield tuple(path)
            path.pop()
            choice.pop()
            if choice:
                choice[-1] += 1
            continue
        i = choice[-1]
        if i < len(succ[u]):
            path.append(succ[u][i])
            choice.append(0)
        else:
            path.pop()
            choice.pop()
            if choice:
                choice[-1] += 1


def enumerate_shortest_paths(instance: StInstance, cap: int) -> list[Path]:
    if cap <= 0:
        raise ValueError("cap must be positive")
    total = count_shortest_paths(instance)
    if total > cap:
        raise CapExceeded(cap, total)
    return list(iter_shortest_paths(instance))


def interval(graph: Graph | StInstance, u: int, v: int) -> set[int]:
    """Vertices on at least one shortest u-v path."""
    g = graph.graph if isinstance(graph, StInstance) else graph
    du = bfs_distances(g, u)
    if du[v] is None:
        raise DisconnectedPair(f"{u} and {v} are in different components")
    dv = bfs_distances(g, v)
    total = du[v]
    return {
        w
        for w in range(g.n)
        if du[w] is not None and dv[w] is not None and du[w] + dv[w] == total
    }


def load_graph(text: str) -> StInstance:
    """Parse an instance file; representation blocks are ignored here."""
    from .formats import parse_instance

    return parse_instance(text).instance


__all__ = [
    "BfsLayering",
    "Graph",
    "InstanceFormatError",
    "Path",
    "StInstance",
    "bfs_distances",
    "bfs_layering",
    "count_shortest_paths",
    "enumerate_shortest_paths",
    "interval",
    "is_st_shortest_path",
    "iter_shortest_paths",
    "load_graph",
    "path_defect",
    "prune_to_shortest_dag",
]
