"""SPR on permutation graphs via L/R edge types.

Along any s-t shortest path the edge types alternate, and a single
reconfiguration step never changes the type of the first edge.  Two paths
are therefore reconfigurable exactly when their first edges agree in type.
"""
from __future__ import annotations

from enum import Enum
from typing import Sequence

from ..errors import EdgeNotOnShortestPath, InvalidPath
from ..graph import StInstance, path_defect
from ..oracle import ReconfigSequence
from .bounded import Verdict, bounded_diameter_solve
from .merge import prefix_merge
from .reps import PermutationRep


class EdgeType(str, Enum):
    L = "L"
    R = "R"


def lr_edge_type(rep: PermutationRep, instance: StInstance, edge: tuple[int, int]) -> EdgeType:
    """Type of an s-side-first edge ``(u, v)`` of some s-t shortest path."""
    u, v = edge
    if v not in instance.successors[u]:
        raise EdgeNotOnShortestPath(f"({u}, {v}) is not an s-to-t edge of a shortest path")
    return EdgeType.L if v < u else EdgeType.R


def path_edge_types(rep: PermutationRep, instance: StInstance, path: Sequence[int]) -> list[EdgeType]:
    types = [lr_edge_type(rep, instance, (a, b)) for a, b in zip(path, path[1:])]
    for x, y in zip(types, types[1:]):
        if x == y:
            raise AssertionError(f"edge types fail to alternate along {tuple(path)}")
    return types


def _t_is_left(rep: PermutationRep, instance: StInstance) -> bool:
    # t and s do not cross once d(s,t) >= 2, so t is wholly left or right of s
    return instance.t < instance.s


def permutation_solve(
    rep: PermutationRep,
    instance: StInstance,
    p: Sequence[int],
    q: Sequence[int],
    path_cap: int | None = None,
) -> Verdict:
    rep.check(instance)
    for path in (p, q):
        reason = path_defect(instance, path)
        if reason is not None:
            raise InvalidPath(f"not an s-t shortest path ({reason}): {tuple(path)}")
    if tuple(p) == tuple(q):
        return True, ReconfigSequence(tuple(p))
    if instance.distance <= 2:
        return bounded_diameter_solve(instance, p, q, path_cap=path_cap)
    if path_edge_types(rep, instance, p)[0] != path_edge_types(rep, instance, q)[0]:
        return False, None

    # The merge argument is stated with t to the left of s; mirroring the
    # diagram when t lies right reverses vertex order, so compare ids that way.
    n = rep.n
    left = _t_is_left(rep, instance)

    def prefer(a: int, b: int) -> int:
        ka, kb = (a, b) if left else (n - 1 - a, n - 1 - b)
        return a if ka < kb else b

    seq = prefix_merge(instance, p, q, prefer, path_cap)
    return seq is not None, seq
