"""Text formats: instance files with optional representation blocks, path
files, sequence listings and cost tables.

Instance file, one record per line, ``#`` starts a comment::

    n m
    e u v        (m times)
    s <id>
    t <id>
    perm <sigma_0 ... sigma_{n-1}>        optional
    chords                                 optional, followed by n lines "v a b"
    arcs                                   optional, followed by n lines "v a b"
    hypercube <d> <s_bits> <t_bits>        optional

The ``perm`` values may be given 0-based or 1-based (a permutation of
``1..n`` is shifted down).  Reps are validated against the graph by the
solver that uses them, not here.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

from .errors import InstanceFormatError
from .graph import Graph, StInstance

if TYPE_CHECKING:
    from .oracle import ReconfigSequence


@dataclass(frozen=True)
class InstanceFile:
    instance: StInstance
    perm: tuple[int, ...] | None = None
    chords: tuple[tuple[int, int], ...] | None = None
    arcs: tuple[tuple[int, int], ...] | None = None
    hypercube: tuple[int, str, str] | None = None


def _records(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line.split()))
    return out


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise InstanceFormatError(f"expected integer, got {tok!r}", lineno) from None


def _endpoint_block(records, pos, n, name, header_line):
    pairs: dict[int, tuple[int, int]] = {}
    for _ in range(n):
        if pos >= len(records):
            raise InstanceFormatError(f"{name} block truncated", header_line)
        lineno, toks = records[pos]
        if len(toks) != 3:
            raise InstanceFormatError(f"{name} line must be 'v a b'", lineno)
        v, a, b = (_int(x, lineno) for x in toks)
        if not 0 <= v < n or v in pairs:
            raise InstanceFormatError(f"bad or repeated vertex {v} in {name} block", lineno)
        pairs[v] = (a, b)
        pos += 1
    return tuple(pairs[v] for v in range(n)), pos


def parse_instance(text: str) -> InstanceFile:
    records = _records(text)
    if not records:
        raise InstanceFormatError("empty instance file", 1)
    lineno, toks = records[0]
    if len(toks) != 2:
        raise InstanceFormatError("header must be 'n m'", lineno)
    n, m = (_int(x, lineno) for x in toks)
    if n < 2 or m < 0:
        raise InstanceFormatError("need n >= 2 and m >= 0", lineno)
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    pos = 1
    for _ in range(m):
        if pos >= len(records):
            raise InstanceFormatError(f"expected {m} edge lines, found {len(edges)}", lineno)
        lineno, toks = records[pos]
        if len(toks) != 3 or toks[0] != "e":
            raise InstanceFormatError("edge line must be 'e u v'", lineno)
        u, v = _int(toks[1], lineno), _int(toks[2], lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise InstanceFormatError(f"edge ({u}, {v}) out of range", lineno)
        if u == v:
            raise InstanceFormatError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise InstanceFormatError(f"duplicate edge ({u}, {v})", lineno)
        seen.add(key)
        edges.append((u, v))
        pos += 1
    ends: dict[str, int] = {}
    for tag in ("s", "t"):
        if pos >= len(records):
            raise InstanceFormatError(f"missing '{tag}' line", lineno)
        lineno, toks = records[pos]
        if len(toks) != 2 or toks[0] != tag:
            raise InstanceFormatError(f"expected '{tag} <id>'", lineno)
        ends[tag] = _int(toks[1], lineno)
        if not 0 <= ends[tag] < n:
            raise InstanceFormatError(f"{tag} out of range", lineno)
        pos += 1
    if ends["s"] == ends["t"]:
        raise InstanceFormatError("s and t coincide", lineno)
    graph = Graph.from_edges(n, edges)
    instance = StInstance(graph, ends["s"], ends["t"])

    perm = chords = arcs = cube = None
    while pos < len(records):
        lineno, toks = records[pos]
        head = toks[0]
        if head == "perm":
            vals = [_int(x, lineno) for x in toks[1:]]
            if len(vals) != n:
                raise InstanceFormatError(f"perm needs {n} values", lineno)
            if sorted(vals) == list(range(1, n + 1)):
                vals = [x - 1 for x in vals]
            elif sorted(vals) != list(range(n)):
                raise InstanceFormatError("perm is not a permutation", lineno)
            perm = tuple(vals)
            pos += 1
        elif head in ("chords", "arcs"):
            block, pos = _endpoint_block(records, pos + 1, n, head, lineno)
            if head == "chords":
                chords = block
            else:
                arcs = block
        elif head == "hypercube":
            if len(toks) != 4:
                raise InstanceFormatError("expected 'hypercube d s_bits t_bits'", lineno)
            cube = (_int(toks[1], lineno), toks[2], toks[3])
            pos += 1
        else:
            raise InstanceFormatError(f"unknown record {head!r}", lineno)
    return InstanceFile(instance, perm, chords, arcs, cube)


def format_instance(
    instance: StInstance,
    *,
    perm: Sequence[int] | None = None,
    chords: Sequence[tuple[int, int]] | None = None,
    arcs: Sequence[tuple[int, int]] | None = None,
    hypercube: tuple[int, str, str] | None = None,
    comments: Sequence[str] = (),
) -> str:
    g = instance.graph
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    lines.append(f"s {instance.s}")
    lines.append(f"t {instance.t}")
    if perm is not None:
        lines.append("perm " + " ".join(map(str, perm)))
    for name, block in (("chords", chords), ("arcs", arcs)):
        if block is not None:
            lines.append(name)
            lines.extend(f"{v} {a} {b}" for v, (a, b) in enumerate(block))
    if hypercube is not None:
        lines.append("hypercube {} {} {}".format(*hypercube))
    return "\n".join(lines) + "\n"


def parse_path(text: str) -> tuple[int, ...]:
    toks = " ".join(line.split("#", 1)[0] for line in text.splitlines()).split()
    if not toks:
        raise InstanceFormatError("empty path file", 1)
    return tuple(_int(t, 1) for t in toks)


def format_path(path: Sequence[int]) -> str:
    return " ".join(map(str, path))


def format_sequence(seq: ReconfigSequence, k: int) -> str:
    stages = seq.paths()
    lines = [f"steps {len(seq.steps)} k {k}"]
    lines.extend(format_path(p) for p in stages)
    return "\n".join(lines) + "\n"


def parse_costs(text: str) -> tuple[Fraction, ...]:
    vals = []
    for lineno, toks in _records(text):
        for tok in toks:
            try:
                vals.append(Fraction(tok))
            except ValueError:
                raise InstanceFormatError(f"bad cost {tok!r}", lineno) from None
    if not vals:
        raise InstanceFormatError("empty cost file", 1)
    return tuple(vals)
