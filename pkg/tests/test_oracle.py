from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings

from spreconf.errors import CapExceeded, InvalidPath, PreconditionViolated
from spreconf.generators import gadget_chain, hypercube_instance
from spreconf.graph import is_st_shortest_path
from spreconf.oracle import (
    INFINITE,
    KStep,
    ReconfigSequence,
    build_reconfig_graph,
    diff_span,
    k_step_neighbors,
    large_k_shortcut,
    reconfig_diameter,
    shortest_reconfig_sequence,
)
from spreconf.solvers.hypercube import permutation_to_path

from .strategies import small_instances


def test_kstep_apply_and_inverse():
    step = KStep(0, 2, (1,), (3,))
    assert step.apply((0, 1, 2)) == (0, 3, 2)
    assert step.inverse().apply((0, 3, 2)) == (0, 1, 2)
    with pytest.raises(InvalidPath):
        step.apply((0, 3, 2))
    with pytest.raises(ValueError):
        KStep(0, 2, (1,), (1,))


def test_neighbors_examples(c4, c6):
    assert k_step_neighbors(c4, (0, 1, 2), 1) == [(0, 3, 2)]
    assert k_step_neighbors(c6, (0, 1, 2, 3), 1) == []
    assert k_step_neighbors(c6, (0, 1, 2, 3), 2) == [(0, 5, 4, 3)]
    with pytest.raises(InvalidPath):
        k_step_neighbors(c4, (0, 1), 1)


def test_reconfig_graph_examples(c4, c6):
    g = build_reconfig_graph(c4, 1)
    assert (len(g), g.edge_count) == (2, 1)
    g = build_reconfig_graph(c6, 1)
    assert (len(g), g.edge_count) == (2, 0)


def test_hypercube_graph_is_adjacent_transpositions():
    inst, rep = hypercube_instance(3, "000", "111")
    g = build_reconfig_graph(inst, 1)
    assert len(g) == 6
    perms = list(itertools.permutations((1, 2, 3)))
    want = set()
    for a, b in itertools.combinations(perms, 2):
        diff = [i for i in range(3) if a[i] != b[i]]
        if len(diff) == 2 and diff[1] == diff[0] + 1:
            pa, pb = permutation_to_path(rep, inst.s, a), permutation_to_path(rep, inst.s, b)
            want.add(frozenset((g.index[pa], g.index[pb])))
    assert {frozenset(e) for e in g.edge_set()} == want


def test_shortest_sequence_examples(c4, c6):
    assert len(shortest_reconfig_sequence(c4, (0, 1, 2), (0, 1, 2), 1)) == 0
    assert shortest_reconfig_sequence(c6, (0, 1, 2, 3), (0, 5, 4, 3), 1) is None
    inst, rep = hypercube_instance(3, "000", "111")
    p = permutation_to_path(rep, inst.s, (1, 2, 3))
    q = permutation_to_path(rep, inst.s, (3, 2, 1))
    seq = shortest_reconfig_sequence(inst, p, q, 1)
    assert len(seq) == 3 and seq.is_valid(inst, 1) and seq.end == q


def test_cap_is_enforced():
    inst = gadget_chain(4, 4)
    with pytest.raises(CapExceeded):
        build_reconfig_graph(inst, 1, path_cap=100)
    with pytest.raises(CapExceeded):
        shortest_reconfig_sequence(inst, *_two_paths(inst), 1, path_cap=100)


def _two_paths(inst):
    g = build_reconfig_graph(inst, 1)
    return g.paths[0], g.paths[-1]


def test_cap_from_environment(monkeypatch, c6):
    monkeypatch.setenv("RECONFIG_PATH_CAP", "1")
    with pytest.raises(CapExceeded):
        build_reconfig_graph(c6, 1)


def test_diameter_examples(c4, c6):
    assert reconfig_diameter(c4, 1) == 1
    assert reconfig_diameter(gadget_chain(1, 3), 1) == 1
    assert reconfig_diameter(c6, 1) == INFINITE
    assert reconfig_diameter(c6, 2) == 1


def test_large_k_examples(c4, c6):
    assert len(large_k_shortcut(c4, (0, 1, 2), (0, 1, 2), 2)) == 0
    assert len(large_k_shortcut(c4, (0, 1, 2), (0, 3, 2), 2)) == 1
    seq = large_k_shortcut(c6, (0, 1, 2, 3), (0, 5, 4, 3), 3)
    assert len(seq) == 1 and all(is_st_shortest_path(c6, p) for p in seq.paths())
    with pytest.raises(PreconditionViolated):
        large_k_shortcut(c6, (0, 1, 2, 3), (0, 5, 4, 3), 2)


def test_sequence_validation_catches_bad_stage(c4):
    seq = ReconfigSequence((0, 1, 2), [KStep(0, 2, (1,), (2,))])
    with pytest.raises(InvalidPath):
        seq.validate(c4)
    assert not seq.is_valid(c4)


@settings(max_examples=120, deadline=None)
@given(small_instances(min_distance=2))
def test_neighbor_relation_properties(inst):
    for k in (1, 2, 3):
        g = build_reconfig_graph(inst, k)
        assert len(g) <= 2**inst.n
        for i, p in enumerate(g.paths):
            for q in k_step_neighbors(inst, p, k):
                assert p in k_step_neighbors(inst, q, k)
                assert 1 <= diff_span(p, q) <= k
                if k == 1:
                    (j,) = [x for x in range(len(p)) if p[x] != q[x]]
                    a, u, v, b = p[j - 1], p[j], q[j], p[j + 1]
                    assert inst.graph.has_edge(a, v) and inst.graph.has_edge(v, b)
                    assert u != v


@settings(max_examples=120, deadline=None)
@given(small_instances(min_distance=2))
def test_brute_force_neighbors(inst):
    # every pair of shortest paths with a narrow enough diff is a neighbour
    g = build_reconfig_graph(inst, 1)
    for k in (1, 2):
        for p in g.paths:
            want = sorted(q for q in g.paths if q != p and diff_span(p, q) <= k)
            assert k_step_neighbors(inst, p, k) == want


@settings(max_examples=120, deadline=None)
@given(small_instances(min_distance=2))
def test_sequences_replay(inst):
    g = build_reconfig_graph(inst, 1)
    p = g.paths[0]
    for q in g.paths:
        seq = shortest_reconfig_sequence(inst, p, q, 1)
        if seq is None:
            assert not g.connected(p, q)
        else:
            assert seq.is_valid(inst, 1) and seq.end == q
            assert len(seq) == g.distances_from(0)[g.index[q]]
