"""SPR on circular-arc graphs.

Short instances (``d(s,t) <= 5``) go to the bounded-diameter solver.  For
longer ones, the arcs of ``s`` and ``t`` split the rest of the circle into
two sides, and a path's middle arc sits wholly on one of them.  Middles on
different sides can never be exchanged.  Middles on the same side behave
like an interval model, which the weakly modular solver handles.
"""
from __future__ import annotations

import logging
from typing import Sequence

from ..errors import InvalidPath, InvalidRepresentation, TriangleConditionViolated
from ..graph import StInstance, interval, path_defect
from ..oracle import ReconfigSequence, shortest_reconfig_sequence
from .bounded import Verdict, bounded_diameter_solve
from .reps import ArcRep
from .weakly_modular import weakly_modular_solve

log = logging.getLogger(__name__)

SHORT_LIMIT = 5


def _side(rep: ArcRep, instance: StInstance, v: int) -> int:
    s_end = rep.arcs[instance.s][1]
    t_start = rep.arcs[instance.t][0]
    return 0 if (rep.arcs[v][0] - s_end) % rep.size < (t_start - s_end) % rep.size else 1


def middle_side(rep: ArcRep, instance: StInstance, v: int) -> int:
    """0 for the side running clockwise from ``s`` to ``t``, 1 for the other side."""
    if rep.intersects(v, instance.s) or rep.intersects(v, instance.t):
        raise InvalidRepresentation(f"middle arc {v} meets the arc of s or t")
    return _side(rep, instance, v)


def interval_part(rep: ArcRep, instance: StInstance, side: int) -> tuple[StInstance, list[int]]:
    """Sub-instance on the vertices of s-t shortest paths, minus arcs wholly on the far side.

    Arcs reaching past ``s`` and past ``t`` into the far side cannot meet
    there (that would put ``s`` and ``t`` within distance 3), so the
    remaining arcs have a point of the circle uncovered: an interval model.
    """
    s, t = instance.s, instance.t
    keep = [
        v
        for v in sorted(interval(instance.graph, s, t))
        if v in (s, t)
        or rep.intersects(v, s)
        or rep.intersects(v, t)
        or _side(rep, instance, v) == side
    ]
    sub, old_ids = instance.graph.induced_subgraph(keep)
    new_id = {v: i for i, v in enumerate(old_ids)}
    return StInstance(sub, new_id[s], new_id[t]), old_ids


def circular_arc_solve(
    rep: ArcRep,
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
    d = instance.distance
    if d <= SHORT_LIMIT:
        return bounded_diameter_solve(instance, p, q, path_cap=path_cap)
    mid = d // 2
    if middle_side(rep, instance, p[mid]) != middle_side(rep, instance, q[mid]):
        return False, None
    sub, old_ids = interval_part(rep, instance, middle_side(rep, instance, p[mid]))
    new_id = {v: i for i, v in enumerate(old_ids)}
    try:
        inner = weakly_modular_solve(sub, [new_id[v] for v in p], [new_id[v] for v in q])
        stages = [tuple(old_ids[v] for v in stage) for stage in inner.paths()]
        return True, ReconfigSequence.from_paths(stages)
    except TriangleConditionViolated as exc:
        # arcs wrapping past s or t can break the interval picture locally
        log.warning("interval view failed (%s); using oracle", exc)
        seq = shortest_reconfig_sequence(instance, p, q, 1, path_cap)
        if seq is not None:
            seq.via_oracle = True
        return seq is not None, seq
