"""Exact SPR for instances with small d(s, t) by explicit enumeration."""
from __future__ import annotations

from typing import Sequence

from ..errors import CapExceeded
from ..graph import StInstance
from ..oracle import ReconfigSequence, shortest_reconfig_sequence

DEFAULT_C_MAX = 6

Verdict = tuple[bool, "ReconfigSequence | None"]


def bounded_diameter_solve(
    instance: StInstance,
    p: Sequence[int],
    q: Sequence[int],
    c_max: int = DEFAULT_C_MAX,
    path_cap: int | None = None,
) -> Verdict:
    """Decide SPR when ``d(s,t) <= c_max``; at most ``n**c`` paths exist then."""
    if instance.distance > c_max:
        raise CapExceeded(c_max, instance.distance, what="s-t distance")
    seq = shortest_reconfig_sequence(instance, p, q, 1, path_cap)
    return seq is not None, seq
