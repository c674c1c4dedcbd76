from itertools import combinations, product

import pytest
from oracles import naive_l_colorable

from choosecheck.choosability import l_colorable
from choosecheck.gadgets import (
    cycle_gadget,
    five_vertex_gadget,
    run_gadget,
    six_vertex_gadget,
    standard_gadgets,
    verify_gadget_lemmas,
    wheel_gadget,
)


def naive_always(spec, universe, distinct=False):
    """Every assignment over ``range(universe)`` with the required sizes is
    colourable; checked one assignment at a time."""
    vs = sorted(spec.graph)
    choices = [list(combinations(range(universe), spec.sizes[v])) for v in vs]
    adj = {v: set(spec.graph[v]) for v in vs}
    for lists in product(*choices):
        if distinct and len(set(lists)) < 2:
            continue
        if not naive_l_colorable(adj, dict(zip(vs, map(set, lists)))):
            return False
    return True


def test_w5_sizes_follow_host_degrees():
    g = wheel_gadget("adjacent")
    assert g.spec.sizes == {"x1": 2, "x2": 2, "x3": 3, "x4": 3, "x5": 4}
    assert "x2" in g.spec.graph["x1"]
    h = wheel_gadget("opposite")
    assert "x2" not in h.spec.graph["x1"]
    assert wheel_gadget("adjacent", hub_size=3).spec.sizes["x5"] == 3


def test_six_vertex_sizes():
    closed = six_vertex_gadget(True).spec.sizes
    assert closed["v"] == 4
    assert {closed[f"w{i}"] for i in range(1, 7)} == {3}
    assert {closed[f"z{i}"] for i in range(1, 7)} == {2}
    opened = six_vertex_gadget(False).spec.sizes
    assert opened["w1"] == opened["w6"] == 2
    assert "z6" not in opened


def test_five_vertex_gadget_is_data_only():
    assert five_vertex_gadget().expected is None


@pytest.mark.parametrize("n", range(3, 9))
def test_cycles_with_two_different_lists(n):
    rep = run_gadget(cycle_gadget(n))
    assert rep.always and rep.agrees


@pytest.mark.parametrize("n", range(3, 6))
def test_cycles_against_product_search(n):
    assert naive_always(cycle_gadget(n).spec, 4, distinct=True)


def test_equal_lists_block_odd_cycles():
    g = cycle_gadget(5)
    assert l_colorable(g.spec.graph, {v: {0, 1} for v in g.spec.graph}) is None


@pytest.mark.parametrize("pattern, hub", [("adjacent", None), ("opposite", None), ("adjacent", 3)])
def test_wheels(pattern, hub):
    g = wheel_gadget(pattern, hub)
    rep = run_gadget(g)
    assert rep.always
    assert rep.agrees is (True if g.expected is not None else None)


@pytest.mark.slow
def test_w5_against_product_search():
    assert naive_always(wheel_gadget("adjacent").spec, 5)


def test_shrinking_a_list_below_need_finds_a_counterexample():
    # x1 and x2 adjacent with singleton lists can clash
    g = wheel_gadget("adjacent")
    spec = type(g.spec)(g.spec.graph, {**g.spec.sizes, "x1": 1, "x2": 1}, "shrunk")
    rep = run_gadget(type(g)("shrunk", "", spec))
    assert not rep.always
    assert l_colorable(spec.graph, rep.counterexample) is None


@pytest.mark.slow
def test_full_suite_parallel_matches_serial():
    small = [g for g in standard_gadgets() if len(g.spec.graph) <= 8]
    assert verify_gadget_lemmas(1, small) == verify_gadget_lemmas(2, small)
