"""SPR on circle graphs via chord orientations and equator-side labels.

Each chord on an s-t shortest path is oriented from the end facing its
previous-layer neighbours to the end facing its next-layer neighbours.
Labelling both ends top/bottom relative to an equator gives every path a
label word; reconfiguration preserves it, and equal words are mergeable.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence

from ..errors import InvalidPath, OrientationConflict
from ..graph import StInstance, path_defect
from ..oracle import ReconfigSequence
from .bounded import Verdict, bounded_diameter_solve
from .merge import prefix_merge
from .reps import ChordRep

Orientation = dict[int, tuple[int, int]]


def _end_inside(rep: ChordRep, other: int, a: int, b: int) -> int:
    x, y = rep.ends[other]
    return x if a < x < b else y


def chord_orientations(rep: ChordRep, instance: StInstance) -> Orientation:
    """(first end, second end) for every interior chord on an s-t shortest path.

    A previous-layer chord ``u`` and a next-layer chord ``w`` both cross
    ``v`` without crossing each other, so whichever meets the open arc
    between ``v``'s ends first is the nearer one to that end.
    """
    out: Orientation = {}
    for layer in instance.layers[1:-1]:
        for v in layer:
            a, b = rep.ends[v]
            seen: set[tuple[int, int]] = set()
            for u in instance.predecessors[v]:
                ua = _end_inside(rep, u, a, b)
                for w in instance.successors[v]:
                    seen.add((a, b) if ua < _end_inside(rep, w, a, b) else (b, a))
            if len(seen) != 1:
                raise OrientationConflict(f"chord {v} is oriented both ways")
            out[v] = seen.pop()
    return out


def equator_side(rep: ChordRep, instance: StInstance) -> Callable[[int], str]:
    """Map a circle position to ``"T"`` or ``"B"``.

    Uses the diagram's own equator if it has one.  Otherwise a synthetic
    chord is cut from just inside the arc beyond ``s`` to just inside the
    arc beyond ``t``; it crosses ``s``, ``t`` and exactly the chords with
    one end on each side of the s-t corridor.
    """
    size, n = rep.size, rep.n
    cut = rep.equator_cut
    if cut is not None:
        return lambda x: "T" if (x - cut) % size < n else "B"
    s1, s2 = rep.ends[instance.s]
    t1, t2 = rep.ends[instance.t]
    c1 = s2 + 0.5 if s1 < t1 < s2 else s1 + 0.5
    c2 = t2 + 0.5 if t1 < s1 < t2 else t1 + 0.5
    top = (c2 - c1) % size
    return lambda x: "T" if (x - c1) % size < top else "B"


@dataclass(frozen=True)
class PathLabel:
    """Label word of a path: ``S?``, one two-letter label per interior chord, ``?T``."""

    tokens: tuple[str, ...]

    def __str__(self) -> str:
        return " ".join(self.tokens)

    def chains(self) -> bool:
        return all(x[1] == y[0] for x, y in zip(self.tokens, self.tokens[1:]))


class _Labeller:
    def __init__(self, rep: ChordRep, instance: StInstance) -> None:
        self.rep = rep
        self.instance = instance
        self.orient = chord_orientations(rep, instance)
        self.side = equator_side(rep, instance)

    def chord(self, v: int) -> str:
        first, second = self.orient[v]
        return self.side(first) + self.side(second)

    def label(self, path: Sequence[int]) -> PathLabel:
        inner = [self.chord(v) for v in path[1:-1]]
        if not inner:
            return PathLabel(("S", "T"))
        return PathLabel(("S" + inner[0][0], *inner, inner[-1][1] + "T"))


@lru_cache(maxsize=64)
def _labeller(rep: ChordRep, instance: StInstance) -> _Labeller:
    return _Labeller(rep, instance)


def chord_label(rep: ChordRep, instance: StInstance, path: Sequence[int]) -> PathLabel:
    reason = path_defect(instance, path)
    if reason is not None:
        raise InvalidPath(f"not an s-t shortest path ({reason}): {tuple(path)}")
    return _labeller(rep, instance).label(path)


def circle_solve(
    rep: ChordRep,
    instance: StInstance,
    p: Sequence[int],
    q: Sequence[int],
    path_cap: int | None = None,
) -> Verdict:
    rep.check(instance)
    lab = _labeller(rep, instance)
    lp, lq = chord_label(rep, instance, p), chord_label(rep, instance, q)
    if tuple(p) == tuple(q):
        return True, ReconfigSequence(tuple(p))
    if instance.distance <= 2:
        return bounded_diameter_solve(instance, p, q, path_cap=path_cap)
    if lp != lq:
        return False, None

    # keep the chord whose second end lies further along from the equator cut
    def prefer(a: int, b: int) -> int:
        return a if lab.orient[a][1] >= lab.orient[b][1] else b

    seq = prefix_merge(instance, p, q, prefer, path_cap)
    return seq is not None, seq
