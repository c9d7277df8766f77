"""SPR on weakly modular (hence bridged, hence chordal) graphs.

Two same-layer vertices with a common next-layer neighbour have a common
previous-layer neighbour (triangle / quadrangle condition).  Swapping
``a`` for ``b`` at layer ``i`` therefore reduces to two smaller swaps at
layer ``i-1``, through that common neighbour ``w``.  Paths "through w" are
canonical: each vertex's least-id BFS parent, repeated back to ``s``.  A
subproblem is then fixed by the pair ``(a, b)``, so memoising on it leaves
at most ``n**2`` distinct subproblems.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from ..errors import InvalidPath, TriangleConditionViolated
from ..graph import Path, StInstance, path_defect
from ..oracle import ReconfigSequence

Swap = tuple[int, int, int]  # (position, old vertex, new vertex)


@dataclass(frozen=True)
class LookTable:
    """Least-id common previous-layer neighbour for same-layer pairs."""

    layer: tuple[int | None, ...]
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def look(self, u: int, v: int) -> int | None:
        return self.entries.get((u, v) if u < v else (v, u))


def build_look_table(instance: StInstance) -> LookTable:
    g = instance.graph
    layer = instance.dist_s
    by_layer: dict[int, list[int]] = {}
    for v, d in enumerate(layer):
        if d is not None:
            by_layer.setdefault(d, []).append(v)
    entries: dict[tuple[int, int], int] = {}
    for d, verts in by_layer.items():
        if d == 0:
            continue
        parents = {v: {w for w in g.adjacency[v] if layer[w] == d - 1} for v in verts}
        for u, v in combinations(verts, 2):
            common = parents[u] & parents[v]
            if common:
                entries[(u, v)] = min(common)
    return LookTable(tuple(layer), entries)


class _Solver:
    def __init__(self, instance: StInstance, look: LookTable) -> None:
        self.instance = instance
        self.look = look
        g, layer = instance.graph, instance.dist_s
        self.parent = [
            min((w for w in g.adjacency[v] if layer[w] == layer[v] - 1), default=None)  # type: ignore[operator]
            if layer[v] else None
            for v in range(instance.n)
        ]
        self.memo: dict[tuple[int, int], list[Swap]] = {}

    def swap(self, a: int, b: int) -> list[Swap]:
        """Swaps turning the canonical path to ``a`` into the canonical path to ``b``.

        ``a`` and ``b`` share a layer and a neighbour one layer further on,
        which stays fixed throughout.
        """
        if a == b:
            return []
        key = (a, b)
        if key in self.memo:
            return self.memo[key]
        i = self.look.layer[a]
        w = self.look.look(a, b)
        if w is None:
            raise TriangleConditionViolated(f"vertices {a} and {b} in layer {i} have no common parent")
        pa, pb = self.parent[a], self.parent[b]
        if w == pa:
            out = [(i, a, b)] + self.swap(w, pb)
        elif w == pb:
            out = self.swap(pa, w) + [(i, a, b)]
        else:
            out = self.swap(pa, w) + [(i, a, b)] + self.swap(w, pb)
        self.memo[key] = out
        return out

    def to_canonical(self, path: Path) -> list[Path]:
        """Stages taking ``path`` to the canonical path to ``t``."""
        stages = [path]
        cur = list(path)
        for j in range(len(path) - 1):
            for pos, old, new in self.swap(path[j], self.parent[path[j + 1]]):  # type: ignore[arg-type]
                if cur[pos] != old:
                    raise AssertionError("swap applied to the wrong vertex")
                cur[pos] = new
                stages.append(tuple(cur))
        return stages


def _drop_cycles(stages: list[Path]) -> list[Path]:
    out: list[Path] = []
    where: dict[Path, int] = {}
    for p in stages:
        if p in where:
            cut = where[p]
            for q in out[cut + 1 :]:
                del where[q]
            del out[cut + 1 :]
        else:
            where[p] = len(out)
            out.append(p)
    return out


def check_triangle_condition(instance: StInstance, look: LookTable) -> None:
    """Adjacent same-layer vertices up to layer d(s,t) need a common parent."""
    layer = instance.dist_s
    for u, v in instance.graph.edges():
        d = layer[u]
        if d is not None and d == layer[v] and 0 < d <= instance.distance and look.look(u, v) is None:
            raise TriangleConditionViolated(f"adjacent vertices {u}, {v} in layer {d} have no common parent")


def weakly_modular_solve(
    instance: StInstance,
    p: Sequence[int],
    q: Sequence[int],
    look: LookTable | None = None,
    stats: dict | None = None,
) -> ReconfigSequence:
    look = build_look_table(instance) if look is None else look
    check_triangle_condition(instance, look)
    for path in (p, q):
        reason = path_defect(instance, path)
        if reason is not None:
            raise InvalidPath(f"not an s-t shortest path ({reason}): {tuple(path)}")
    solver = _Solver(instance, look)
    if tuple(p) == tuple(q):
        seq = ReconfigSequence(tuple(p))
    else:
        fwd = solver.to_canonical(tuple(p))
        back = solver.to_canonical(tuple(q))
        seq = ReconfigSequence.from_paths(_drop_cycles(fwd + back[-2::-1]))
    if stats is not None:
        stats["subproblems"] = len(solver.memo)
    return seq
