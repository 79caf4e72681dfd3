import pytest

from gso.graphs import Graph, complete_graph, path_graph, star_graph
from gso.simulate import (
    HostCtx,
    Move,
    is_complete,
    is_connected_trace,
    is_monotone,
    p,
    r,
    s,
    simulate,
    width,
)

from conftest import random_connected


def test_move_constructors():
    assert p(3) == Move("p", 3)
    assert r(1) == Move("r", 1)
    assert s(0, 2) == Move("s", 0, 2)
    with pytest.raises(ValueError):
        Move("x", 0)


def test_path_swept_by_one_searcher():
    g = path_graph(4)
    t = simulate(g, [p(0), s(0, 1), s(1, 2), s(2, 3)])
    assert is_complete(t) and is_monotone(t) and is_connected_trace(t)
    assert width(t) == 1


def test_both_occupied_edge_becomes_clean():
    g = path_graph(2)
    t = simulate(g, [p(0), p(1)])
    assert t.final_clean == frozenset({(0, 1)})
    assert width(t) == 2


def test_slide_wedge_cleans_adjacent_edge():
    # sliding into the center of a cherry also cleans the edge back to
    # the other occupied endpoint
    g = Graph.from_edges(3, [(0, 2), (1, 2)])
    t = simulate(g, [p(0), p(1), s(1, 2)])
    assert t.final_clean == frozenset({(0, 2), (1, 2)})
    assert width(t) == 2


def test_recontamination_through_unguarded_vertex():
    g = star_graph(3)
    t = simulate(g, [p(1), p(0), s(0, 2)])
    # leaving the center exposes the freshly clean edge to the dirty legs
    assert t.steps[-1].recontaminated
    assert not is_monotone(t)


def test_removal_triggers_recontamination():
    g = path_graph(3)
    t = simulate(g, [p(0), s(0, 1), r(1)])
    assert (0, 1) not in t.final_clean
    assert not is_monotone(t)


def test_multiset_occupancy_allows_stacking():
    g = path_graph(2)
    t = simulate(g, [p(0), p(0), s(0, 1)])
    # one searcher stays on 0 while the copy slides, so the edge stays clean
    assert t.final_clean == frozenset({(0, 1)})
    assert is_monotone(t)
    assert width(t) == 2


def test_invalid_slide_rejected():
    g = path_graph(3)
    with pytest.raises(ValueError):
        simulate(g, [p(0), s(0, 2)])  # not an edge
    with pytest.raises(ValueError):
        simulate(g, [s(1, 2)])  # no searcher on 1


def test_clique_cleaning():
    g = complete_graph(3)
    t = simulate(g, [p(0), p(1), s(0, 2)])
    assert is_complete(t) and is_monotone(t)
    assert width(t) == 2


def test_connected_trace_flag():
    g = path_graph(5)
    t = simulate(g, [p(4), s(4, 3), p(0), s(0, 1)])
    assert not is_connected_trace(t)


def brute_closure(g: Graph, ctx: HostCtx, q: int, guard: int) -> int:
    contaminated = set()
    for i in range(ctx.m):
        if not q >> i & 1:
            for v in ctx.edges[i]:
                if not guard >> v & 1:
                    contaminated.add(v)
    changed = True
    while changed:
        changed = False
        for u, v in g.edges:
            for a, b in ((u, v), (v, u)):
                if a in contaminated and not guard >> b & 1 and b not in contaminated:
                    contaminated.add(b)
                    changed = True
    out = q
    for i in range(ctx.m):
        if q >> i & 1 and set(ctx.edges[i]) & contaminated:
            out &= ~(1 << i)
    return out


def test_closure_matches_brute_force(rng):
    for _ in range(300):
        g = random_connected(rng, 6)
        ctx = HostCtx(g)
        q = rng.getrandbits(ctx.m) if ctx.m else 0
        guard = rng.getrandbits(g.n)
        assert ctx.closure(q, guard) == brute_closure(g, ctx, q, guard)
