"""Random and structured instance generators.

Class-specific generators draw the representation first, so class
membership is guaranteed without any recognition step.
"""
from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .graph import Graph, StInstance, bfs_distances
from .solvers.reps import ArcRep, ChordRep, HypercubeRep, PermutationRep


def random_permutation_rep(rng: random.Random, n: int) -> PermutationRep:
    sigma = list(range(n))
    rng.shuffle(sigma)
    return PermutationRep(tuple(sigma))


def random_chord_rep(rng: random.Random, n: int) -> ChordRep:
    pts = list(range(2 * n))
    rng.shuffle(pts)
    return ChordRep(tuple((pts[2 * i], pts[2 * i + 1]) for i in range(n)))


def random_arc_rep(rng: random.Random, n: int, max_len: int | None = None) -> ArcRep:
    """Arcs with random starts; lengths capped at ``max_len`` points (default ``n``)."""
    size = 2 * n
    cap = n if max_len is None else max_len
    arcs = []
    for _ in range(n):
        a = rng.randrange(size)
        arcs.append((a, (a + rng.randint(0, cap)) % size))
    return ArcRep(tuple(arcs))


def ring_arc_rep(rng: random.Random, n: int, extra: int = 0) -> ArcRep:
    """``n - extra`` arcs chained around the circle plus ``extra`` short random arcs.

    The chained arcs form a long cycle, so s-t distances reach past 5 and
    both sides of the circle carry shortest paths.
    """
    size = 2 * n
    m = n - extra
    base = [round(i * size / m) for i in range(m)]
    arcs = [(base[i], base[(i + 1) % m]) for i in range(m)]
    for _ in range(extra):
        a = rng.randrange(size)
        arcs.append((a, (a + rng.randint(1, 4)) % size))
    return ArcRep(tuple(arcs))


def random_interval_graph(rng: random.Random, n: int, span: int | None = None) -> Graph:
    """Intersection graph of ``n`` random closed integer intervals (chordal)."""
    span = 3 * n if span is None else span
    ivs = []
    for _ in range(n):
        a = rng.randrange(span)
        ivs.append((a, a + rng.randint(0, max(1, span // n + 1))))
    return Graph.from_edges(
        n,
        [(u, v) for u, v in combinations(range(n), 2)
         if ivs[u][0] <= ivs[v][1] and ivs[v][0] <= ivs[u][1]],
    )


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def st_pairs(graph: Graph, min_distance: int = 1) -> Iterator[StInstance]:
    """Every instance ``(graph, s, t)`` with ``s < t`` reachable at distance >= ``min_distance``.

    The graph is undirected, so ``(t, s)`` would only mirror ``(s, t)``.
    """
    for s in range(graph.n):
        dist = bfs_distances(graph, s)
        for t in range(s + 1, graph.n):
            if dist[t] is not None and dist[t] >= min_distance:
                yield StInstance(graph, s, t)


def gadget_chain(g: int, l: int) -> StInstance:
    """``g`` gadgets in series, each joining two points through ``l`` middle vertices.

    Ids: 0 is ``s``; gadget ``j`` adds its ``l`` middles and then its end point.
    """
    if g < 1 or l < 1:
        raise ValueError("need g >= 1 and l >= 1")
    edges = []
    start = 0
    nxt = 1
    for _ in range(g):
        middles = list(range(nxt, nxt + l))
        end = nxt + l
        for x in middles:
            edges += [(start, x), (x, end)]
        start, nxt = end, end + 1
    return StInstance(Graph.from_edges(nxt, edges), 0, start)


def hypercube_instance(d: int, s_bits: str, t_bits: str) -> tuple[StInstance, HypercubeRep]:
    rep = HypercubeRep(d)
    return StInstance(rep.graph(), rep.vertex(s_bits), rep.vertex(t_bits)), rep


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
