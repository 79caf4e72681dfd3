from math import comb

import pytest

from gso.canon import certificate, is_isomorphic
from gso.gio import graph6_encode
from gso.graphs import (
    RootedGraph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    doubly_rooted,
    k23_plus,
    path_graph,
    star_graph,
)
from gso.obstructions import (
    Branch,
    base_branches,
    branch_count,
    branch_count_lower_bound_holds,
    branch_set,
    fan_check_solver,
    fan_check_structural,
    glue_family_at_root,
    is_obstruction,
    mine_branch_base,
    mine_fan_base,
    mine_obstructions,
    obr_count,
    obr_count_lower_bound_holds,
    obr_set,
)


# --- minimal obstructions -------------------------------------------------


def test_mine_cmp_1_obstructions():
    got = mine_obstructions(5, "cmp", 1)
    assert len(got) == 2
    assert any(is_isomorphic(g, complete_graph(3)) for g in got)
    assert any(is_isomorphic(g, star_graph(3)) for g in got)


def test_mine_mp_1_minor_obstructions():
    got = mine_obstructions(5, "mp", 1, relation="minor")
    assert len(got) == 2


def test_level_two_obstruction_values():
    for g in (complete_graph(4), complete_bipartite(2, 3), k23_plus()):
        assert is_obstruction(g, "cmp", 2)


def test_cycle_is_not_an_obstruction():
    # contracting a cycle keeps the parameter at 2
    assert not is_obstruction(cycle_graph(5), "cmp", 2)


def test_is_obstruction_rejects_disconnected():
    from gso.graphs import Graph

    with pytest.raises(ValueError):
        is_obstruction(Graph.from_edges(4, [(0, 1), (2, 3)]), "cmp", 1)


# --- gluing ---------------------------------------------------------------


def rooted_paths(sizes):
    return [doubly_rooted(path_graph(n), 0) for n in sizes]


def rooted_cycles(sizes):
    return [doubly_rooted(cycle_graph(n), 0) for n in sizes]


@pytest.mark.parametrize("fam_size,m", [(3, 2), (4, 3), (5, 3)])
def test_glue_counts_follow_multiset_formula(fam_size, m):
    # flowers of cycles: the cycle-length multiset is recoverable, so
    # distinct multisets never collide
    fam = rooted_cycles(range(3, 3 + fam_size))
    got = glue_family_at_root(fam, m)
    assert len(got) == comb(fam_size + m - 1, m)


def test_glue_counts_can_collide():
    # end-rooted paths of lengths 2..4 glued in pairs: {2,4} and {3,3}
    # both give P_5, so the multiset formula overcounts
    fam = rooted_paths([2, 3, 4])
    assert len(glue_family_at_root(fam, 2)) == comb(4, 2) - 1


def test_glue_two_edges_makes_a_path():
    fam = rooted_paths([2])
    (g,) = glue_family_at_root(fam, 2)
    assert is_isomorphic(g, path_graph(3))


def test_glue_rejects_bad_m():
    with pytest.raises(ValueError):
        glue_family_at_root(rooted_paths([2]), 0)


# --- fan checks and base mining -------------------------------------------


def test_fan_checks_on_small_graphs():
    assert fan_check_structural(path_graph(4), 0)
    assert fan_check_structural(star_graph(3), 0)
    assert not fan_check_structural(star_graph(3), 1)
    assert not fan_check_structural(complete_graph(4), 0)


def test_structural_fans_pass_the_solver_test():
    from gso.gen import connected_graphs

    for n in range(1, 6):
        for g in connected_graphs(n):
            for v in range(g.n):
                if fan_check_structural(g, v):
                    assert fan_check_solver(g, v)


def test_fan_base_is_frozen():
    base = mine_fan_base(7)
    got = sorted(
        (graph6_encode(b.graph), min(b.s_in)) for b in base
    )
    assert got == [
        ("CF", 0),
        ("CN", 0),
        ("C^", 0),
        ("DB{", 3),
        ("DIk", 1),
    ]


def test_branch_base_is_frozen():
    base = mine_branch_base(7)
    assert sorted(b.graph.n for b in base) == [4, 4, 5, 5, 5, 5, 5, 6]
    certs = {certificate(b.graph) for b in base}
    assert len(certs) == len(base)
    # every member fails the solver fan test at its root but all of its
    # rooted contractions pass it
    for b in base:
        assert not fan_check_solver(b.graph, min(b.s_in))


# --- branches -------------------------------------------------------------


def test_branch_validation():
    g = path_graph(3)
    Branch(g, 0, (0, 1), 1)
    Branch(g, 1, (1, 2), 1)  # level 1 allows any root degree
    with pytest.raises(ValueError):
        Branch(g, 1, (1, 2), 2)  # higher levels need a degree-1 root


def test_base_branch_trunks():
    base = [doubly_rooted(path_graph(3), 1)]
    (b,) = base_branches(base)
    assert b.level == 1
    assert b.trunk == (0, 1)  # smallest root-incident edge


def test_branch_counts():
    assert branch_count(1) == 5
    assert branch_count(2) == 15
    assert branch_count(3) == 120
    assert obr_count(1) == 35


def test_branch_set_sizes():
    base = mine_fan_base(7)
    br1 = branch_set(1, base)
    assert len(br1) == branch_count(1, len(base))
    br2 = branch_set(2, base)
    assert len(br2) == branch_count(2, len(base))
    assert all(b.level == 2 and b.graph.degree(b.root) == 1 for b in br2)


def test_obr_level_one_size():
    base = mine_fan_base(7)
    fam = obr_set(1, base)
    assert len(fam) == obr_count(1, len(base))
    assert all(g.is_connected() for g in fam)


def test_lower_bounds_hold():
    for k in range(1, 7):
        assert branch_count_lower_bound_holds(k)
        assert obr_count_lower_bound_holds(k)
