"""Unit tests for plane graphs, duals, and the overlay matching identity."""

import networkx as nx
import pytest

from uberhom import (
    CapExceeded,
    Colouring,
    ComplexError,
    ParseError,
    PlaneGraph,
    SimpleGraph,
    dual_graph,
    format_plane_graph,
    matching_complex_of_edges,
    parse_plane_graph,
    simplicial_homology,
    tait_colouring,
    tait_graph,
    tait_matching_complex,
    theorem42_verify,
    vertices_of,
)

from conftest import rotations_from_coordinates

SMALL = ["triangle", "square", "path2", "star3", "diamond"]
SIMPLE_DUALS = ["prism", "cube", "octahedron"] + [f"wheel{k}" for k in range(3, 10)]


def to_networkx(G: SimpleGraph) -> "nx.Graph":
    H = nx.Graph()
    H.add_nodes_from(range(G.vertex_count))
    H.add_edges_from(G.edges)
    return H


def test_face_counts_satisfy_euler(planes):
    expected_faces = {"triangle": 2, "square": 2, "path2": 1, "star3": 1,
                      "diamond": 3, "prism": 5, "cube": 6, "octahedron": 8}
    expected_faces.update({f"wheel{k}": k + 1 for k in range(3, 10)})
    for name, P in planes.items():
        V = P.graph.vertex_count
        E = P.graph.edge_count
        F = P.face_count
        assert V - E + F == 2, name
        assert F == expected_faces[name], name
        # every dart lies in exactly one face
        darts = [d for face in P.faces for d in face]
        assert len(darts) == 2 * E, name
        assert len(set(darts)) == 2 * E, name
        for idx, face in enumerate(P.faces):
            for d in face:
                assert P.face_of_dart[d] == idx, name


def test_nonplanar_rotation_system_rejected():
    # K5 admits no sphere embedding, so every rotation system fails Euler
    edges = [(u, v) for u in range(5) for v in range(u + 1, 5)]
    import math
    coords = [(math.cos(2 * math.pi * t / 5), math.sin(2 * math.pi * t / 5))
              for t in range(5)]
    with pytest.raises(ComplexError):
        rotations_from_coordinates(edges, coords)


def test_plane_graph_validation():
    G = SimpleGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(ComplexError):
        PlaneGraph(G, ((1, 2), (0,), (0, 1)))  # rotation misses a neighbour
    with pytest.raises(ComplexError):
        PlaneGraph(G, ((1, 2), (0, 2), (0, 1, 2)))  # stray neighbour
    disconnected = SimpleGraph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(ComplexError):
        PlaneGraph(disconnected, ((1,), (0,), (3,), (2,)))


def test_edge_sides_and_bridges(planes):
    tri = planes["triangle"]
    for u, v in tri.graph.edges:
        s1, s2 = tri.edge_sides(u, v)
        assert s1 != s2  # no bridges in a cycle
    star = planes["star3"]
    for u, v in star.graph.edges:
        s1, s2 = star.edge_sides(u, v)
        assert s1 == s2  # every star edge is a bridge


def test_parse_format_roundtrip(planes):
    for name in SMALL + ["prism", "cube"]:
        P = planes[name]
        text = format_plane_graph(P)
        Q = parse_plane_graph(text)
        assert Q == P, name
    explicit = "# triangle\nv 0: 1 2\nv 1: 2 0\nv 2: 0 1\n"
    P = parse_plane_graph(explicit)
    assert P.face_count == 2


def test_parse_plane_graph_errors():
    for bad in [
        "",
        "v 0: 1\n",                      # dangling neighbour
        "v 0: 1\nv 2: 0\n",              # ids not 0..n-1
        "v 0: 1\nv 1: 0\nv 1: 0\n",      # duplicate id
        "w 0: 1\nv 1: 0\n",              # bad prefix
        "v 0: 1 1\nv 1: 0\n",            # repeated neighbour
        "v 0: 0\n",                      # loop
    ]:
        with pytest.raises(ParseError):
            parse_plane_graph(bad)


def test_dual_graph_of_simple_duals(planes):
    for name in SIMPLE_DUALS:
        P = planes[name]
        D = dual_graph(P)
        assert D.graph.vertex_count == P.face_count, name
        assert D.graph.edge_count == P.graph.edge_count, name
        # dual of the dual is isomorphic to the primal
        DD = dual_graph(D)
        assert nx.is_isomorphic(to_networkx(DD.graph), to_networkx(P.graph)), name


def test_dual_graph_rejections(planes):
    # bridges give dual loops
    with pytest.raises(ComplexError):
        dual_graph(planes["star3"])
    with pytest.raises(ComplexError):
        dual_graph(planes["path2"])
    # two faces sharing two edges give dual parallels
    for name in ("triangle", "square", "diamond"):
        with pytest.raises(ComplexError):
            dual_graph(planes[name])


def test_tait_graph_structure(planes):
    for name in SMALL:
        P = planes[name]
        T = tait_graph(P)
        V, E = P.graph.vertex_count, P.graph.edge_count
        F = P.face_count
        assert T.partition_sizes == (V, F, E), name
        assert T.primal_count == V and T.face_count == F
        assert T.crossing_count == E
        assert len(T.overlay_edges) == 4 * E, name
        assert len(T.edge_colours) == 4 * E
        # per crossing: two black overlay edges to the endpoints, two white
        # ones to the side faces
        for e, (u, v, f1, f2) in enumerate(T.crossings):
            x = T.crossing_node(e)
            quad = T.overlay_edges[4 * e:4 * e + 4]
            assert quad == ((x, u), (x, v),
                            (x, T.face_node(f1)), (x, T.face_node(f2))), name
            assert T.edge_colours[4 * e:4 * e + 4] == (1, 1, 0, 0)
            assert {f1, f2} == set(P.edge_sides(u, v)), name
        blacks = [oe for oe, c in zip(T.overlay_edges, T.edge_colours) if c]
        whites = [oe for oe, c in zip(T.overlay_edges, T.edge_colours) if not c]
        assert list(T.black_edges()) == blacks
        assert list(T.white_edges()) == whites


def test_bridge_gives_parallel_white_edges(planes):
    T = tait_graph(planes["star3"])
    for e, (u, v, f1, f2) in enumerate(T.crossings):
        assert f1 == f2  # single face on a tree
        x = T.crossing_node(e)
        assert T.overlay_edges[4 * e + 2] == T.overlay_edges[4 * e + 3]
    # the doubled white edge shows up as two mutually exclusive vertices in
    # the matching complex
    M, eps = tait_matching_complex(T)
    assert M.vertex_count == 4 * T.crossing_count


def test_tait_colouring(planes):
    for name in SMALL:
        T = tait_graph(planes[name])
        eps = tait_colouring(T)
        E = T.crossing_count
        assert eps.length == 4 * E
        assert eps.weight_norm == 2 * E
        assert all(eps.is_black(4 * e) and eps.is_black(4 * e + 1)
                   and not eps.is_black(4 * e + 2) and not eps.is_black(4 * e + 3)
                   for e in range(E))


def test_tait_matching_complex(planes):
    T = tait_graph(planes["triangle"])
    M, eps = tait_matching_complex(T)
    assert M.vertex_count == 12
    assert eps == tait_colouring(T)
    # it really is the matching complex of the overlay edge list
    direct = matching_complex_of_edges(list(T.overlay_edges))
    assert M == direct


def test_theorem42_small_graphs(planes):
    for name in SMALL:
        report = theorem42_verify(planes[name])
        assert report["all_equal"], name
        assert report["level0_matches_subdivision"], name
        for k, level in report["levels"].items():
            assert level["equal"], (name, k)


def test_theorem42_frozen_triangle(planes):
    report = theorem42_verify(planes["triangle"])
    assert report["partition"] == (3, 2, 3)
    assert report["levels"][0]["lhs"] == {0: 1, 1: 2}
    assert report["levels"][2]["lhs"] == {2: 6}


def test_theorem42_cap(planes):
    with pytest.raises(CapExceeded):
        theorem42_verify(planes["wheel9"])  # 18 primal edges
