import pytest

from primtree.errors import AdjacentEndpoints, NoPath, NotUnique
from primtree.generator import Builder, GenConfig, generate
from primtree.simplicial import (Corridor, LabeledComplex, Vertex, corridor, dual_tree, is_bridge,
                                 strip_triangles, tri_edges, validate)


def complex_from(triangles, edges=(), primitive=None):
    verts = {v for t in triangles for v in t} | {v for e in edges for v in e}
    prim = verts if primitive is None else set(primitive)
    E = {tuple(sorted(e)): "plain" for t in triangles for e in tri_edges(tuple(sorted(t)))}
    E.update({tuple(sorted(e)): "plain" for e in edges})
    return LabeledComplex([Vertex(v, v in prim) for v in sorted(verts)], E, triangles)


def six_triangle_corridor():
    """A 6-triangle corridor from D=0 to E=7 with extra triangles hung on
    its side edges, as in a portion of the disk complex."""
    path = list(range(8))
    tris = list(strip_triangles(path))
    nxt = 100
    for t in list(tris):
        for e in tri_edges(t):
            if sum(e[0] in s and e[1] in s for s in tris) == 1:
                tris.append((e[0], e[1], nxt))
                nxt += 1
    return complex_from(tris), strip_triangles(path)


def test_validate_empty_complex():
    assert validate(LabeledComplex()) == []


def test_validate_missing_triangle_edge():
    C = LabeledComplex([Vertex(v) for v in "abc"], {("a", "c"): "plain", ("b", "c"): "plain"},
                       [("a", "b", "c")])
    report = validate(C)
    assert len(report) == 1 and "edge ('a', 'b') missing" in report[0]


def test_validate_missing_endpoint_and_label():
    C = LabeledComplex([Vertex(0)], {(0, 1): "weird"})
    report = validate(C)
    assert any("endpoint 1 missing" in m for m in report)
    assert any("unknown label" in m for m in report)


def test_generator_output_is_valid():
    assert validate(generate((7, 3), GenConfig(radius=3, branching=2, seed=1))) == []


def test_dual_tree_single_triangle_is_a_star():
    D = dual_tree(complex_from([(0, 1, 2)]))
    assert len([n for n in D.nodes if n[0] == "tri"]) == 1
    assert len([n for n in D.nodes if n[0] == "edge"]) == 3
    assert len(D.links) == 3
    assert sorted(len(D.adjacency[n]) for n in D.nodes) == [1, 1, 1, 3]


def test_dual_tree_two_triangles():
    D = dual_tree(complex_from([(0, 1, 2), (1, 2, 3)]))
    assert D.is_tree()
    # the spine between two outer edges runs through both triangles and the shared edge
    spine = D.path(("edge", (0, 1)), ("edge", (2, 3)))
    assert [n[0] for n in spine] == ["edge", "tri", "edge", "tri", "edge"]
    assert spine[2] == ("edge", (1, 2))


def test_dual_tree_of_six_triangle_corridor():
    C, tris = six_triangle_corridor()
    D = dual_tree(C)
    assert D.is_tree()
    spine = D.path(("tri", tris[0]), ("tri", tris[-1]))
    assert len(spine) == 11
    assert [n[0] for n in spine] == ["tri", "edge"] * 5 + ["tri"]
    assert [n[1] for n in spine[::2]] == list(tris)


def test_corridor_six_triangle_corridor():
    C, tris = six_triangle_corridor()
    c = corridor(C, 0, 7)
    assert c.triangles == tris
    assert 0 in c.triangles[0] and 0 not in set(c.triangles[0]) & set(c.triangles[1])
    assert 7 in c.triangles[-1] and 7 not in set(c.triangles[-2]) & set(c.triangles[-1])
    assert corridor(C, 7, 0) == c.reversed()


def test_corridor_smallest():
    C = complex_from([(0, 1, 2), (1, 2, 3)])
    assert corridor(C, 0, 3).triangles == ((0, 1, 2), (1, 2, 3))


def test_corridor_errors():
    C = complex_from([(0, 1, 2), (1, 2, 3)], edges=[(3, 4)])
    with pytest.raises(AdjacentEndpoints):
        corridor(C, 0, 1)
    with pytest.raises(AdjacentEndpoints):
        corridor(C, 0, 0)
    with pytest.raises(NoPath):
        corridor(C, 0, 4)
    apart = complex_from([(0, 1, 2), (5, 6, 7)])
    with pytest.raises(NoPath):
        corridor(apart, 0, 7)
    # four triangles around vertex 0 close a cycle in the dual graph
    wheel = complex_from([(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 1, 4), (1, 2, 9)])
    with pytest.raises(NotUnique):
        corridor(wheel, 3, 9)


def test_is_bridge():
    C = complex_from([(0, 1, 2), (1, 2, 3)], primitive=[0, 3])
    c = corridor(C, 0, 3)
    assert is_bridge(C, c)
    C2 = complex_from([(0, 1, 2), (1, 2, 3)], primitive=[0, 2, 3])
    assert not is_bridge(C2, corridor(C2, 0, 3))


def test_corridor_symmetric_on_generated_bridges():
    C = generate((13, 5), GenConfig(radius=2, branching=3, bridge_length=3, seed=4))
    assert dual_tree(C).is_forest()
    for path in C.bridges:
        c = corridor(C, path[0], path[-1])
        assert c.triangles == strip_triangles(path)
        assert corridor(C, path[-1], path[0]) == c.reversed()
        assert is_bridge(C, c)


@pytest.mark.parametrize("pq", [(2, 1), (4, 1), (11, 4), (3, 1), (5, 2), (7, 2), (13, 5)])
def test_generated_dual_graphs_are_forests(pq):
    D = dual_tree(generate(pq, GenConfig(radius=3, branching=3, seed=2)))
    assert D.is_forest()


def test_builder_rejects_relabel():
    b = Builder()
    u, v = b.vertex(), b.vertex()
    b.edge(u, v, "type0")
    with pytest.raises(ValueError):
        b.edge(v, u, "type1")


def test_corridor_interior_vertices():
    c = Corridor(((0, 1, 2), (1, 2, 3)), 0, 3)
    assert c.interior_vertices == {1, 2} and len(c) == 2
