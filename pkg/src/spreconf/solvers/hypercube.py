"""SPR on Boolean hypercubes.

An s-t shortest path flips each bit of ``ones(s xor t)`` exactly once, so
it is a permutation of those positions.  One reconfiguration step swaps
two adjacent entries; bubble sort toward the target order is optimal and
its length is the Kendall tau distance.
"""
from __future__ import annotations

from typing import Sequence

from ..errors import DomainMismatch, NotShortestPath
from ..graph import Path
from ..oracle import KStep, ReconfigSequence
from .reps import HypercubeRep


def kendall_tau(p: Sequence, q: Sequence) -> int:
    """Number of pairs ordered differently by ``p`` and ``q``.

    >>> kendall_tau((1, 3, 4), (4, 3, 1))
    3
    >>> kendall_tau("abcd", "abcd")
    0
    """
    if len(set(p)) != len(p) or len(set(q)) != len(q) or set(p) != set(q):
        raise DomainMismatch("arguments are not permutations of the same set")
    pos = {x: i for i, x in enumerate(q)}
    seq = [pos[x] for x in p]
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])


def path_to_permutation(rep: HypercubeRep, s: int, t: int, path: Sequence[int]) -> tuple[int, ...]:
    """Positions (1-based from the left) flipped along ``path``, in order."""
    todo = s ^ t
    if not path or path[0] != s or path[-1] != t or len(path) != todo.bit_count() + 1:
        raise NotShortestPath(f"{tuple(path)} is not an s-t shortest path")
    perm = []
    for a, b in zip(path, path[1:]):
        bit = a ^ b
        # one bit, still to be flipped
        if bit & (bit - 1) or not bit & todo:
            raise NotShortestPath(f"{tuple(path)} is not an s-t shortest path")
        todo ^= bit
        perm.append(rep.position(bit))
    return tuple(perm)


def permutation_to_path(rep: HypercubeRep, s: int, perm: Sequence[int]) -> Path:
    out = [s]
    for pos in perm:
        out.append(rep.flip(out[-1], pos))
    return tuple(out)


def hypercube_solve(
    rep: HypercubeRep, s: int, t: int, p: Sequence[int], q: Sequence[int]
) -> ReconfigSequence:
    """Adjacent-transposition sequence from ``p`` to ``q`` of minimum length."""
    cur = list(path_to_permutation(rep, s, t, p))
    target = path_to_permutation(rep, s, t, q)
    rank = {x: i for i, x in enumerate(target)}
    path = permutation_to_path(rep, s, cur)
    steps: list[KStep] = []
    i = 0
    while i < len(cur) - 1:
        if rank[cur[i]] > rank[cur[i + 1]]:
            cur[i], cur[i + 1] = cur[i + 1], cur[i]
            # swapping flips i and i+1 changes only the vertex after i flips
            new_vertex = rep.flip(path[i], cur[i])
            steps.append(KStep(i, i + 2, (path[i + 1],), (new_vertex,)))
            path = path[: i + 1] + (new_vertex,) + path[i + 2 :]
            i = max(i - 1, 0)
        else:
            i += 1
    return ReconfigSequence(tuple(p), steps)
