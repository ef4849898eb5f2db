import random

import pytest
from hypothesis import given

from conftest import graphs
from protrusion_lab.ds import (PreconditionError, build_ds_family, ds_glue_optimum,
                               ds_separation, indicator_witnesses, verify_vc_equals_ds)
from protrusion_lab.graph import (Graph, boundary_isomorphic, complete_graph, glue,
                                  indicator_graph, path_graph, triangle_transform)
from protrusion_lab.metrics import is_planar, pathwidth_exact
from protrusion_lab.oracle import min_dominating_set, min_vertex_cover
from protrusion_lab.planar import planar_family_members


def test_vc_equals_ds_examples():
    assert verify_vc_equals_ds(path_graph(2), "brute")
    assert min_dominating_set(triangle_transform(complete_graph(3)), "brute") == 2
    assert verify_vc_equals_ds(complete_graph(3), "brute")


def test_isolated_vertex_rejected():
    with pytest.raises(PreconditionError):
        verify_vc_equals_ds(Graph(3, [(0, 1)]))


@given(graphs(min_n=2, max_n=8))
def test_vc_equals_ds_random(g):
    if g.isolated_vertices():
        return
    assert verify_vc_equals_ds(g, "bnb")
    if g.n + len(g.edges) <= 20:
        assert verify_vc_equals_ds(g, "brute")


def test_ds_family_t2():
    fam = build_ds_family(2)
    assert len(fam) == 4
    assert all(is_planar(g) for g in fam)


def test_transform_commutes_with_indicator_glue():
    for m in planar_family_members(2):
        for s in range(4):
            i = indicator_graph(2, s)
            a = triangle_transform(glue(m.graph, i))
            b = glue(triangle_transform(m.graph), triangle_transform(i))
            assert a.n == b.n and len(a.edges) == len(b.edges)
    # exact isomorphism on the smallest member
    small = min(planar_family_members(2), key=lambda m: m.graph.n)
    for s in range(4):
        i = indicator_graph(2, s)
        assert boundary_isomorphic(triangle_transform(glue(small.graph, i)),
                                   glue(triangle_transform(small.graph), triangle_transform(i)))


def test_separation_for_every_pair_t2():
    members = planar_family_members(2)
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            sep = ds_separation(members, i, j)
            assert sep.separated
            # second route: the DS optimum equals the vertex cover of the untransformed glue
            for s, d in ((sep.s1, sep.diff1), (sep.s2, sep.diff2)):
                gi = glue(members[i].graph, indicator_graph(2, s))
                gj = glue(members[j].graph, indicator_graph(2, s))
                assert d == min_vertex_cover(gi) - min_vertex_cover(gj)


def test_indicator_witnesses():
    members = planar_family_members(2)
    s1, s2 = indicator_witnesses(members[0], members[3])
    assert s2 == 3 and members[0].function(s1) != members[3].function(s1)
    with pytest.raises(ValueError):
        indicator_witnesses(members[0], members[0])


def test_ds_glue_optimum_matches_cover():
    m = planar_family_members(1)[0]
    g_ds = triangle_transform(m.graph)
    for s in range(2):
        assert ds_glue_optimum(g_ds, s) == min_vertex_cover(glue(m.graph, indicator_graph(1, s)))


def test_transform_raises_pathwidth_by_at_most_one():
    for m in planar_family_members(1):
        g = m.graph
        h = triangle_transform(g)
        if h.n <= 20:
            assert pathwidth_exact(h) <= pathwidth_exact(g) + 1
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(3, 8)
        g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3])
        h = triangle_transform(g)
        if h.n <= 18:
            assert pathwidth_exact(h) <= pathwidth_exact(g) + 1
