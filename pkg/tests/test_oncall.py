import random

import pytest

from multicolor import (
    Instance,
    brute_oncall,
    is_valid_coloring,
    oncall_solutions,
    weight_of,
)
from multicolor.vectors import leq, norm
from util import K2, K2_LISTS, P3, P3_LISTS, random_graph, random_lists


def test_edge_demand_split():
    sols = oncall_solutions(Instance(K2, K2_LISTS, (1, 1)))
    assert [v for v, _ in sols] == [(0, 1), (1, 0)]
    assert all(norm((1, 1)) - norm(v) == 1 for v, _ in sols)


def test_path_overload():
    sols = oncall_solutions(Instance(P3, P3_LISTS, (1, 2, 1)))
    assert {v for v, _ in sols} == {(1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1)}
    assert {norm(v) for v, _ in sols} == {2}


def test_permissible_demand_is_returned_as_is():
    sols = oncall_solutions(Instance(P3, P3_LISTS, (1, 0, 1)))
    assert [v for v, _ in sols] == [(1, 0, 1)]


def test_witnesses_meet_their_vectors():
    inst = Instance(P3, P3_LISTS, (1, 2, 1))
    for vec, witness in oncall_solutions(inst):
        assert weight_of(witness) == vec
        assert is_valid_coloring(inst.with_weights(vec), witness).ok
        assert leq(vec, (1, 2, 1))


def test_rejects_colorless_assignment():
    with pytest.raises(ValueError):
        oncall_solutions(Instance(K2, (frozenset(), frozenset()), (1, 1)))


def test_matches_brute_force():
    rng = random.Random(23)
    for _ in range(20):
        graph = random_graph(rng, rng.randint(1, 5), rng.random())
        lists = random_lists(rng, graph.n, colors=3)
        w = tuple(rng.randint(0, 2) for _ in range(graph.n))
        inst = Instance(graph, lists, w)
        got = {v for v, _ in oncall_solutions(inst)}
        assert got == brute_oncall(inst)
