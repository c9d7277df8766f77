from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spreconf.errors import CapExceeded, InvalidRepresentation
from spreconf.generators import random_arc_rep, ring_arc_rep
from spreconf.graph import StInstance
from spreconf.oracle import build_reconfig_graph
from spreconf.solvers.arcs import circular_arc_solve, interval_part, middle_side
from spreconf.solvers.bounded import bounded_diameter_solve
from spreconf.solvers.reps import ArcRep
from spreconf.verify import sweep


def ring(m: int) -> ArcRep:
    return ring_arc_rep(random.Random(0), m)


def test_arc_geometry():
    rep = ArcRep(((0, 2), (2, 4), (5, 7), (6, 1)))
    assert rep.intersects(0, 1) and not rep.intersects(1, 2)
    assert rep.intersects(3, 0)  # wraps past zero
    with pytest.raises(InvalidRepresentation):
        ArcRep(((0, 9),))


def test_opposite_sides_never_reconfigure():
    rep = ring(12)
    inst = StInstance(rep.graph(), 0, 6)
    assert inst.distance == 6
    p, q = tuple(range(7)), (0, 11, 10, 9, 8, 7, 6)
    assert middle_side(rep, inst, p[3]) != middle_side(rep, inst, q[3])
    assert circular_arc_solve(rep, inst, p, q) == (False, None)
    assert not build_reconfig_graph(inst, 1).connected(p, q)


def test_same_side_uses_interval_part():
    # twelve chained arcs on 26 points, plus arc 12 doubling arc 2
    arcs = [(2 * i, 2 * i + 2) for i in range(11)] + [(22, 0), (4, 6)]
    rep = ArcRep(tuple(arcs))
    inst = StInstance(rep.graph(), 0, 6)
    paths = build_reconfig_graph(inst, 1).paths
    same = [p for p in paths if middle_side(rep, inst, p[3]) == 0]
    assert (0, 1, 2, 3, 4, 5, 6) in same and (0, 1, 12, 3, 4, 5, 6) in same
    sub, old_ids = interval_part(rep, inst, 0)
    assert 9 not in old_ids  # wholly on the far side
    ok, seq = circular_arc_solve(rep, inst, same[0], same[-1])
    assert ok and not seq.via_oracle and seq.is_valid(inst, 1) and seq.end == same[-1]


def test_short_distance_goes_to_bounded_solver():
    rep = ring(8)
    inst = StInstance(rep.graph(), 0, 4)
    assert inst.distance == 4
    p, q = (0, 1, 2, 3, 4), (0, 7, 6, 5, 4)
    assert circular_arc_solve(rep, inst, p, q) == bounded_diameter_solve(inst, p, q)


def test_bounded_solver_limit():
    rep = ring(16)
    inst = StInstance(rep.graph(), 0, 8)
    p = tuple(range(9))
    with pytest.raises(CapExceeded):
        bounded_diameter_solve(inst, p, p, c_max=6)
    ok, seq = bounded_diameter_solve(inst, p, p, c_max=8)
    assert ok and len(seq) == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9), st.integers(12, 15))
def test_rings_agree_with_oracle(seed, n):
    rng = random.Random(seed)
    rep = ring_arc_rep(rng, n, rng.randint(0, 4))
    report = sweep("arc", [(rep, rep.graph())])
    assert report.ok and report.fallbacks == 0, report.failures[:3]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9), st.integers(4, 9))
def test_random_arcs_agree_with_oracle(seed, n):
    rep = random_arc_rep(random.Random(seed), n, max(2, n // 2))
    report = sweep("arc", [(rep, rep.graph())])
    assert report.ok, report.failures[:3]
