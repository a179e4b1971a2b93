import pytest

from multicolor import (
    Instance,
    ResourceLimitExceeded,
    brute_all_colorings,
    brute_chromatic,
    brute_colorable,
    brute_oncall,
    uniform_lists,
)
from multicolor.oracle import brute_is_permissible, brute_permissible_set
from util import C5, K2, K2_LISTS, K3, P3, P3_LISTS, SV, SV_LISTS, coloring, complete_graph


def test_first_witness_on_path():
    inst = Instance(P3, P3_LISTS, (1, 1, 0))
    assert brute_colorable(inst) == coloring({1}, {2}, set())


def test_conflicting_edge_has_no_witness():
    assert brute_colorable(Instance(K2, K2_LISTS, (1, 1))) is None


def test_zero_weight_witness_is_all_empty():
    inst = Instance(K3, uniform_lists(3, 2), (0, 0, 0))
    assert brute_colorable(inst) == coloring(set(), set(), set())


def test_all_colorings_single_vertex():
    inst = Instance(SV, SV_LISTS, (1,))
    assert brute_all_colorings(inst) == {coloring({1}), coloring({2})}


def test_all_colorings_path():
    inst = Instance(P3, P3_LISTS, (1, 1, 0))
    assert brute_all_colorings(inst) == {coloring({1}, {2}, set())}


def test_all_colorings_infeasible_is_empty():
    assert brute_all_colorings(Instance(K2, K2_LISTS, (1, 1))) == set()


def test_chromatic_cycle_unit_weights():
    assert brute_chromatic(C5, (1,) * 5) == 3


def test_chromatic_cycle_double_weights():
    assert brute_chromatic(C5, (2,) * 5) == 5


def test_chromatic_zero_weight():
    assert brute_chromatic(K3, (0, 0, 0)) == 0


def test_chromatic_accepts_instance():
    inst = Instance(C5, uniform_lists(5, 9), (1,) * 5)
    assert brute_chromatic(inst) == 3


def test_oncall_edge():
    sols = brute_oncall(Instance(K2, K2_LISTS, (1, 1)))
    assert sols == {(1, 0), (0, 1)}


def test_oncall_permissible_weight_is_returned_unchanged():
    sols = brute_oncall(Instance(P3, P3_LISTS, (1, 0, 1)))
    assert sols == {(1, 0, 1)}


def test_oncall_path():
    sols = brute_oncall(Instance(P3, P3_LISTS, (1, 2, 1)))
    assert sols == {(1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1)}


def test_guard_trips_on_large_search():
    big = complete_graph(8)
    inst = Instance(big, uniform_lists(8, 8), (4,) * 8)
    with pytest.raises(ResourceLimitExceeded):
        brute_colorable(inst, max_branches=1000)


def test_permissible_set_matches_membership():
    inst = Instance(P3, P3_LISTS, (1, 1, 1))
    vectors = brute_permissible_set(inst, cap=(2, 2, 2))
    assert (1, 0, 1) in vectors
    assert (1, 2, 1) not in vectors
    for w in [(0, 0, 0), (0, 2, 0), (1, 1, 0)]:
        assert w in vectors
        assert brute_is_permissible(inst, w)
