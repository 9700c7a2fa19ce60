"""Unit tests for the colour-cube homology."""

import random

import pytest

from uberhom import (
    CapExceeded,
    Colouring,
    ComplexError,
    ParseError,
    cone_suspension_checks,
    cube_cap,
    cycle_graph,
    from_facets,
    graph_as_complex,
    h0_graph,
    horizontal_homology,
    path_graph,
    complete_graph,
    complete_bipartite_graph,
    standard_complex,
    uber_degree0_fast,
    uber_homology,
    uber_top_level,
    uber_topdegree_check,
    star_intersection,
    vertices_of,
    SimpleGraph,
)
from uberhom.uber import d_eta_chain, horizontal_boundary, level_masks

from oracles import naive_graph_h0


def small(suite, limit=5):
    return [(name, X) for name, X in suite if X.vertex_count <= limit]


def test_cube_cap_resolution(monkeypatch):
    monkeypatch.delenv("UBERHOM_CAP", raising=False)
    assert cube_cap() == 20
    assert cube_cap(7) == 7
    monkeypatch.setenv("UBERHOM_CAP", "9")
    assert cube_cap() == 9
    assert cube_cap(4) == 4  # explicit override wins
    monkeypatch.setenv("UBERHOM_CAP", "many")
    with pytest.raises(ParseError):
        cube_cap()


def test_cap_enforced(monkeypatch):
    X = standard_complex("simplex", 4)
    with pytest.raises(CapExceeded):
        uber_homology(X, cap=3)
    monkeypatch.setenv("UBERHOM_CAP", "3")
    with pytest.raises(CapExceeded):
        uber_homology(X)
    assert uber_homology(X, cap=10)  # override unblocks


def test_d_eta_chain():
    chain = {0b011, 0b100, 0b110}
    assert d_eta_chain(chain, 1) == frozenset({0b100})
    assert d_eta_chain(chain, 0) == frozenset({0b100, 0b110})
    assert d_eta_chain(frozenset(), 3) == frozenset()


def test_horizontal_boundary_squares_to_zero():
    rng = random.Random(47)
    for _ in range(80):
        m = rng.randrange(2, 7)
        black = rng.randrange(1 << m)
        chain = {rng.randrange(1, 1 << m) for _ in range(rng.randrange(1, 6))}
        once = horizontal_boundary(chain, black)
        assert horizontal_boundary(once, black) == frozenset()


def test_level_masks():
    assert level_masks(3, 0) == [0]
    assert level_masks(3, 1) == [0b001, 0b010, 0b100]
    assert level_masks(3, 2) == [0b011, 0b101, 0b110]
    assert level_masks(3, 4) == []


def tower_dimensions(X):
    """Level dimensions of every (i, k) tower, computed without the cube
    differential: just per-colouring horizontal homology ranks."""
    m = X.vertex_count
    dims: dict = {}
    for bits in range(1 << m):
        j = bits.bit_count()
        for bg, r in horizontal_homology(X, Colouring(bits, m)).items():
            key = dims.setdefault(bg, {})
            key[j] = key.get(j, 0) + r
    return dims


def test_tower_euler_identity(suite):
    """Each tower is a finite complex, so its Euler characteristic matches
    the alternating sum of cube homology ranks level by level."""
    for name, X in small(suite):
        uber = uber_homology(X)
        dims = tower_dimensions(X)
        towers = set(dims) | {(i, k) for (_, i, k) in uber}
        for (i, k) in towers:
            lhs = sum((-1) ** j * d for j, d in dims.get((i, k), {}).items())
            rhs = sum((-1) ** j * r for (j, i2, k2), r in uber.items()
                      if (i2, k2) == (i, k))
            assert lhs == rhs, (name, i, k)


def test_degree0_fast_path_equals_cube_slice(suite):
    for name, X in small(suite):
        full = uber_homology(X)
        slice0 = {(i, k): r for (j, i, k), r in full.items() if j == 0}
        assert slice0 == uber_degree0_fast(X), name


def test_top_level_equals_cube_slice(suite):
    for name, X in small(suite):
        m = X.vertex_count
        full = uber_homology(X)
        top = {(i, k): r for (j, i, k), r in full.items() if j == m}
        assert top == uber_top_level(X), name


def test_degree0_fast_path_reads_star_intersection():
    X = standard_complex("simplex", 2)
    assert star_intersection(X) == tuple(sorted(X.simplices))
    assert uber_degree0_fast(X) == {(0, 1): 3, (1, 2): 3, (2, 3): 1}
    Y = standard_complex("cycle", 4)
    assert star_intersection(Y) == ()
    assert uber_degree0_fast(Y) == {}


def test_bidegree_restriction_is_exact(suite):
    rng = random.Random(53)
    for name, X in small(suite)[:8]:
        full = uber_homology(X)
        towers = sorted({(i, k) for (_, i, k) in full})
        if not towers:
            continue
        pick = rng.choice(towers)
        restricted = uber_homology(X, bidegrees=[pick])
        assert restricted == {key: r for key, r in full.items()
                              if (key[1], key[2]) == pick}, name


def test_relabeling_invariance(suite):
    rng = random.Random(59)
    for name, X in small(suite)[:10]:
        perm = list(range(X.vertex_count))
        rng.shuffle(perm)
        assert uber_homology(X.permuted(perm)) == uber_homology(X), name


def test_graph_degree0_tower_three_routes():
    """Engine cube slice, the graph-side fast implementation, and the naive
    component-cube oracle must agree on the (0, 0) tower."""
    graphs = [
        path_graph(3),
        cycle_graph(4),
        cycle_graph(5),
        complete_graph(4),
        complete_bipartite_graph(2, 3),
        # bull: triangle with two horns
        SimpleGraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]),
    ]
    for G in graphs:
        X = graph_as_complex(G)
        cube = uber_homology(X, bidegrees=[(0, 0)])
        slice00 = {j: r for (j, i, k), r in cube.items()}
        assert slice00 == h0_graph(G)
        assert slice00 == naive_graph_h0(G.vertex_count, G.edges)


def test_void_complex_has_empty_cube():
    X = standard_complex("simplex", 1)
    void = X.link(0).link(1)  # link of a vertex inside the link: void
    assert void.is_void
    assert uber_homology(void) == {}
    assert uber_top_level(void) == {}


def test_topdegree_check_on_spheres():
    for X in (standard_complex("boundary", 2), standard_complex("boundary", 3)):
        report = uber_topdegree_check(X)
        assert report["links_spherical"]
        assert report["one_white_blocks_match"]
        assert report["top_is_single_class"]
        assert report["top_level"] == {(X.dim, 0): 1}


def test_topdegree_check_rejects_nonmanifolds():
    with pytest.raises(ComplexError):
        uber_topdegree_check(standard_complex("simplex", 2))  # links contractible
    two_circles = from_facets(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    with pytest.raises(ComplexError):
        uber_topdegree_check(two_circles)  # disconnected
    isolated = from_facets(1, [])
    with pytest.raises(ComplexError):
        uber_topdegree_check(isolated)  # dimension 0


def test_cone_suspension_checks_flags(suite):
    for name, X in [("boundary2", standard_complex("boundary", 2)),
                    ("path2", standard_complex("path", 2)),
                    ("simplex2", standard_complex("simplex", 2))]:
        report = cone_suspension_checks(X)
        assert report["cone_top_vanishes"], name
        assert report["cone_core_is_coned"], name
        assert report["suspension_degree0_matches"], name
        assert report["suspension_top_shifts"], name


def test_frozen_small_closed_forms():
    # interval: one class at every level of the cube
    assert uber_homology(standard_complex("simplex", 1)) == {
        (0, 0, 1): 2, (0, 1, 2): 1, (1, 0, 0): 1}
    # hollow triangle
    assert uber_homology(standard_complex("boundary", 2)) == {
        (0, 0, 1): 3, (1, 0, 0): 1, (2, 1, 1): 3, (3, 1, 0): 1}
