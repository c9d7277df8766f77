"""Geometric representations for the intersection-graph classes.

Representations are inputs: nothing here recognises a class, it only
builds the graph a representation describes and checks that an instance
matches it.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from ..errors import InvalidRepresentation
from ..graph import Graph, StInstance


def _check_matches(rep_graph: Graph, instance: StInstance, what: str) -> None:
    if rep_graph.n != instance.n or rep_graph.adjacency != instance.graph.adjacency:
        raise InvalidRepresentation(f"{what} does not describe the instance graph")


@dataclass(frozen=True)
class PermutationRep:
    """Vertex ``i`` is the segment from top position ``i`` to bottom position ``sigma[i]``."""

    sigma: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.sigma) != list(range(len(self.sigma))):
            raise InvalidRepresentation("sigma is not a permutation of 0..n-1")

    @property
    def n(self) -> int:
        return len(self.sigma)

    def graph(self) -> Graph:
        sg = self.sigma
        return Graph.from_edges(
            self.n,
            [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if sg[i] > sg[j]],
        )

    def check(self, instance: StInstance) -> None:
        _check_matches(self.graph(), instance, "permutation")

    def mirrored(self) -> PermutationRep:
        """Reflect both lines; vertex ``i`` becomes ``n-1-i``."""
        n = self.n
        return PermutationRep(tuple(n - 1 - self.sigma[n - 1 - i] for i in range(n)))


@dataclass(frozen=True)
class ChordRep:
    """Chord ``v`` joins circle positions ``ends[v]``; positions are ``0..2n-1``, all distinct."""

    ends: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pts = [x for pair in self.ends for x in pair]
        if sorted(pts) != list(range(2 * len(self.ends))):
            raise InvalidRepresentation("chord endpoints must be the distinct positions 0..2n-1")
        object.__setattr__(self, "ends", tuple((min(a, b), max(a, b)) for a, b in self.ends))

    @property
    def n(self) -> int:
        return len(self.ends)

    @property
    def size(self) -> int:
        return 2 * self.n

    def crosses(self, u: int, v: int) -> bool:
        a, b = self.ends[u]
        c, d = self.ends[v]
        return (a < c < b) != (a < d < b)

    def graph(self) -> Graph:
        return Graph.from_edges(
            self.n,
            [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if self.crosses(u, v)],
        )

    def check(self, instance: StInstance) -> None:
        _check_matches(self.graph(), instance, "chord diagram")

    @cached_property
    def equator_cut(self) -> int | None:
        """A cut ``c`` such that arcs ``[c, c+n)`` and its complement hold one end of every chord.

        Positions are integers; the cut lies just before position ``c``.
        Returns ``None`` when the diagram admits no equator.
        """
        n, size = self.n, self.size
        owner = [0] * size
        for v, (a, b) in enumerate(self.ends):
            owner[a] = owner[b] = v
        for c in range(n):
            half = {owner[(c + i) % size] for i in range(n)}
            if len(half) == n:
                return c
        return None


@dataclass(frozen=True)
class ArcRep:
    """Arc ``v`` runs clockwise from ``arcs[v][0]`` to ``arcs[v][1]`` on ``2n`` circle points."""

    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        size = 2 * len(self.arcs)
        if any(not (0 <= a < size and 0 <= b < size) for a, b in self.arcs):
            raise InvalidRepresentation("arc endpoints must lie in 0..2n-1")

    @property
    def n(self) -> int:
        return len(self.arcs)

    @property
    def size(self) -> int:
        return 2 * self.n

    def contains(self, v: int, point: float) -> bool:
        a, b = self.arcs[v]
        return (point - a) % self.size <= (b - a) % self.size

    def intersects(self, u: int, v: int) -> bool:
        return self.contains(u, self.arcs[v][0]) or self.contains(v, self.arcs[u][0])

    def graph(self) -> Graph:
        return Graph.from_edges(
            self.n,
            [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if self.intersects(u, v)],
        )

    def check(self, instance: StInstance) -> None:
        _check_matches(self.graph(), instance, "arc diagram")


@dataclass(frozen=True)
class HypercubeRep:
    """The d-cube; vertex id is the bit string read as a binary number, bit 1 leftmost."""

    d: int

    @property
    def n(self) -> int:
        return 1 << self.d

    def vertex(self, bits: str) -> int:
        if len(bits) != self.d or set(bits) - {"0", "1"}:
            raise InvalidRepresentation(f"{bits!r} is not a {self.d}-bit string")
        return int(bits, 2)

    def bits(self, v: int) -> str:
        return format(v, f"0{self.d}b")

    def flip(self, v: int, position: int) -> int:
        """Flip 1-based ``position`` counted from the left."""
        return v ^ (1 << (self.d - position))

    def ones(self, v: int) -> list[int]:
        d = self.d
        return [pos for pos in range(1, d + 1) if v >> (d - pos) & 1]

    def position(self, bit: int) -> int:
        """1-based position of the single set bit of ``bit``."""
        return self.d - bit.bit_length() + 1

    def graph(self) -> Graph:
        return Graph.from_edges(
            self.n, [(v, v ^ (1 << j)) for v in range(self.n) for j in range(self.d) if not v >> j & 1]
        )

    def check(self, instance: StInstance) -> None:
        _check_matches(self.graph(), instance, "hypercube")


def perm_rep_from(values: Sequence[int]) -> PermutationRep:
    return PermutationRep(tuple(values))
