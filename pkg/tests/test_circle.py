from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spreconf.generators import random_chord_rep, st_pairs
from spreconf.graph import StInstance
from spreconf.oracle import build_reconfig_graph
from spreconf.solvers.circle import PathLabel, chord_label, chord_orientations, circle_solve, equator_side
from spreconf.solvers.reps import ChordRep, PermutationRep
from spreconf.errors import InvalidRepresentation
from spreconf.verify import sweep

# a diagram with no equator; found by random search
ENDS = ((2, 12), (10, 13), (6, 9), (3, 7), (0, 5), (8, 11), (1, 4))
P1, P2, P3 = (0, 4, 3, 2), (0, 6, 3, 2), (0, 1, 5, 2)


@pytest.fixture
def diagram():
    rep = ChordRep(ENDS)
    return rep, StInstance(rep.graph(), 0, 2)


def test_chord_rep_checks():
    with pytest.raises(InvalidRepresentation):
        ChordRep(((0, 1), (1, 2)))
    rep = ChordRep(((0, 2), (1, 3)))
    assert rep.crosses(0, 1) and rep.graph().m == 1


def test_equator_detection(diagram):
    rep, _ = diagram
    assert rep.equator_cut is None
    # every chord crosses the horizontal line through positions 0.5 and 4.5
    with_equator = ChordRep(((0, 5), (1, 7), (2, 6), (3, 4)))
    assert with_equator.equator_cut is not None


def test_labels(diagram):
    rep, inst = diagram
    l1, l2, l3 = (chord_label(rep, inst, p) for p in (P1, P2, P3))
    assert l1 == l2 != l3
    assert str(l1) == "ST TT TB BT"
    assert all(lab.chains() for lab in (l1, l2, l3))


def test_tt_means_both_ends_above(diagram):
    rep, inst = diagram
    side = equator_side(rep, inst)
    first, second = chord_orientations(rep, inst)[4]
    assert side(first) == side(second) == "T"
    assert chord_label(rep, inst, P1).tokens[1] == "TT"


def test_solve(diagram):
    rep, inst = diagram
    ok, seq = circle_solve(rep, inst, P1, P2)
    assert ok and seq.is_valid(inst, 1) and seq.end == P2
    assert circle_solve(rep, inst, P1, P3) == (False, None)
    ok, seq = circle_solve(rep, inst, P3, P3)
    assert ok and len(seq) == 0


def test_label_requires_shortest_path(diagram):
    rep, inst = diagram
    from spreconf.errors import InvalidPath

    with pytest.raises(InvalidPath):
        chord_label(rep, inst, (0, 2))


def test_path_label_chaining():
    assert PathLabel(("ST", "TB", "BT")).chains()
    assert not PathLabel(("ST", "BB", "BT")).chains()


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.integers(5, 9))
def test_agrees_with_oracle(seed, n):
    rep = random_chord_rep(random.Random(seed), n)
    report = sweep("circle", [(rep, rep.graph())])
    assert report.ok, report.failures[:3]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.integers(5, 9))
def test_oracle_steps_preserve_labels(seed, n):
    rep = random_chord_rep(random.Random(seed), n)
    for inst in st_pairs(rep.graph(), 3):
        g = build_reconfig_graph(inst, 1, 500)
        labels = [chord_label(rep, inst, p) for p in g.paths]
        for i, j in g.edge_set():
            assert labels[i] == labels[j]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9), st.integers(5, 9))
def test_orientation_is_path_independent(seed, n):
    # read each chord's orientation off every path through it separately
    rep = random_chord_rep(random.Random(seed), n)
    for inst in st_pairs(rep.graph(), 3):
        orient = chord_orientations(rep, inst)
        for p in build_reconfig_graph(inst, 1, 500).paths:
            for prev, v, nxt in zip(p, p[1:], p[2:]):
                a, b = rep.ends[v]
                inside = [x if a < x < b else y for x, y in (rep.ends[prev], rep.ends[nxt])]
                assert orient[v] == ((a, b) if inside[0] < inside[1] else (b, a))


def test_permutation_diagrams_agree_with_oracle():
    # a permutation drawn as chords has an equator; the real one is used
    rng = random.Random(7)
    for _ in range(40):
        sigma = list(range(7))
        rng.shuffle(sigma)
        perm = PermutationRep(tuple(sigma))
        n = perm.n
        # top points 0..n-1 left to right, bottom points clockwise from the right
        rep = ChordRep(tuple((i, 2 * n - 1 - sigma[i]) for i in range(n)))
        assert rep.graph() == perm.graph()
        assert rep.equator_cut is not None
        report = sweep("circle", [(rep, rep.graph())])
        assert report.ok, report.failures[:3]
