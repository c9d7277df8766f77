from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spreconf.errors import DomainMismatch, NotShortestPath
from spreconf.generators import hypercube_instance
from spreconf.graph import count_shortest_paths
from spreconf.oracle import shortest_reconfig_sequence
from spreconf.solvers.hypercube import hypercube_solve, kendall_tau, path_to_permutation, permutation_to_path


def test_kendall_tau_examples():
    assert kendall_tau((1, 3, 4), (1, 3, 4)) == 0
    assert kendall_tau((1, 3, 4), (4, 3, 1)) == 3
    for r in range(1, 7):
        assert kendall_tau(range(r), tuple(reversed(range(r)))) == r * (r - 1) // 2
    with pytest.raises(DomainMismatch):
        kendall_tau((1, 2), (1, 3))
    with pytest.raises(DomainMismatch):
        kendall_tau((1, 1), (1, 1))


@given(st.permutations(range(6)), st.permutations(range(6)))
def test_kendall_tau_is_inversion_count(p, q):
    pos = {x: i for i, x in enumerate(q)}
    brute = sum(1 for a, b in itertools.combinations(p, 2) if pos[a] > pos[b])
    assert kendall_tau(p, q) == brute == kendall_tau(q, p)


def test_worked_example():
    inst, rep = hypercube_instance(5, "00101", "10011")
    assert rep.ones(inst.s ^ inst.t) == [1, 3, 4]
    assert count_shortest_paths(inst) == 6
    p = permutation_to_path(rep, inst.s, (1, 3, 4))
    q = permutation_to_path(rep, inst.s, (4, 3, 1))
    assert path_to_permutation(rep, inst.s, inst.t, p) == (1, 3, 4)
    seq = hypercube_solve(rep, inst.s, inst.t, p, q)
    assert len(seq) == 3 and seq.is_valid(inst, 1) and seq.end == q
    assert len(shortest_reconfig_sequence(inst, p, q, 1)) == 3
    assert len(hypercube_solve(rep, inst.s, inst.t, p, p)) == 0


def test_rejects_non_shortest():
    inst, rep = hypercube_instance(3, "000", "011")
    with pytest.raises(NotShortestPath):
        path_to_permutation(rep, inst.s, inst.t, (0, 4, 5, 1, 3))


def test_bits_round_trip():
    _, rep = hypercube_instance(4, "0000", "1111")
    assert rep.vertex("1010") == 10 and rep.bits(10) == "1010"
    assert rep.flip(0, 1) == rep.vertex("1000")


@given(st.permutations((1, 2, 4, 5)), st.permutations((1, 2, 4, 5)))
def test_solve_length_is_kendall_tau(a, b):
    inst, rep = hypercube_instance(5, "00100", "11111")
    p, q = permutation_to_path(rep, inst.s, a), permutation_to_path(rep, inst.s, b)
    seq = hypercube_solve(rep, inst.s, inst.t, p, q)
    assert len(seq) == kendall_tau(a, b)
    assert seq.is_valid(inst, 1) and seq.end == q
