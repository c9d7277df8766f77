"""Prefix merge shared by the permutation and circle solvers.

Both proofs build the sequence the same way: walk the two paths from
``s``; at the first position where they differ, one of the two vertices
can replace the other because it is adjacent to the other path's next
vertex.  Steps taken on the second path are reversed and appended.
"""
from __future__ import annotations

import logging
from typing import Callable, Sequence

from ..graph import Path, StInstance
from ..oracle import ReconfigSequence, shortest_reconfig_sequence

log = logging.getLogger(__name__)

# given (a, b) at the same position, return the vertex to try keeping first
Preference = Callable[[int, int], int]


def prefix_merge(
    instance: StInstance,
    p: Sequence[int],
    q: Sequence[int],
    prefer: Preference,
    path_cap: int | None = None,
) -> ReconfigSequence | None:
    """Merge ``p`` and ``q`` front to back; ``None`` only if the oracle fallback finds no route.

    If neither vertex can take the other's place the merge has stalled;
    the remaining gap is closed by the oracle and the result is flagged.
    """
    g = instance.graph
    fwd: list[Path] = [tuple(p)]
    back: list[Path] = [tuple(q)]
    a_path, b_path = list(p), list(q)
    i = 1
    while i < len(a_path) - 1:
        a, b = a_path[i], b_path[i]
        if a == b:
            i += 1
            continue
        first = prefer(a, b)
        moved = False
        for keep in (first, b if first == a else a):
            if keep == a and g.has_edge(a, b_path[i + 1]):
                b_path[i] = a
                back.append(tuple(b_path))
                moved = True
            elif keep == b and g.has_edge(b, a_path[i + 1]):
                a_path[i] = b
                fwd.append(tuple(a_path))
                moved = True
            if moved:
                break
        if not moved:
            log.warning("prefix merge stalled at position %d (%d vs %d); using oracle", i, a, b)
            rest = shortest_reconfig_sequence(instance, a_path, b_path, 1, path_cap)
            if rest is None:
                return None
            stages = fwd + rest.paths()[1:] + back[-2::-1]
            return ReconfigSequence.from_paths(stages, via_oracle=True)
        i += 1
    return ReconfigSequence.from_paths(fwd + back[-2::-1])
