"""Plane graphs, their duals, and the overlaid Tait construction.

A plane graph is a simple connected graph plus a rotation system (the cyclic
order of neighbours at each vertex); faces come from dart tracing and the
embedding must satisfy V - E + F = 2.  Overlaying the graph with its dual
puts one crossing vertex on every edge; the matching complex of the overlay,
with half-edges coloured by which side they touch, decomposes level by level
into matching complexes of edge-deleted subgraphs, and theorem42_verify
checks that decomposition rank by rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .coloured import Colouring, horizontal_homology, simplicial_homology
from .complexes import SimplicialComplex
from .errors import CapExceeded, ComplexError, ParseError
from .graphs import SimpleGraph, matching_complex_of_edges

Dart = tuple[int, int]


@dataclass(frozen=True)
class PlaneGraph:
    """Simple connected graph embedded in the sphere via a rotation system."""

    graph: SimpleGraph
    rotations: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        G = self.graph
        if not G.is_connected:
            raise ComplexError("plane graphs must be connected")
        if len(self.rotations) != G.vertex_count:
            raise ComplexError("one rotation per vertex required")
        for v, rot in enumerate(self.rotations):
            if len(rot) != len(set(rot)):
                raise ComplexError(f"rotation at vertex {v} repeats a neighbour")
            if set(rot) != set(G.neighbours(v)):
                raise ComplexError(f"rotation at vertex {v} does not match its "
                                   f"neighbours")
        if self.graph.vertex_count - self.graph.edge_count + self.face_count != 2:
            raise ComplexError("rotation system is not a sphere embedding "
                               "(Euler check failed)")

    @cached_property
    def faces(self) -> tuple[tuple[Dart, ...], ...]:
        """Faces as dart cycles: the dart after (u, v) leaves v towards the
        neighbour following u in the rotation at v."""
        succ: dict[Dart, Dart] = {}
        for v, rot in enumerate(self.rotations):
            deg = len(rot)
            for pos, u in enumerate(rot):
                succ[(u, v)] = (v, rot[(pos + 1) % deg])
        remaining = dict.fromkeys(sorted(succ))
        out = []
        while remaining:
            start = next(iter(remaining))
            cycle = []
            dart = start
            while True:
                cycle.append(dart)
                del remaining[dart]
                dart = succ[dart]
                if dart == start:
                    break
            out.append(tuple(cycle))
        return tuple(out)

    @property
    def face_count(self) -> int:
        return len(self.faces)

    @cached_property
    def face_of_dart(self) -> dict[Dart, int]:
        return {dart: f for f, cycle in enumerate(self.faces) for dart in cycle}

    def edge_sides(self, u: int, v: int) -> tuple[int, int]:
        """Faces on the two sides of edge (u, v): the face of dart (u, v) and
        of dart (v, u).  Equal faces mean the edge is a bridge."""
        return self.face_of_dart[(u, v)], self.face_of_dart[(v, u)]


def parse_plane_graph(text: str) -> PlaneGraph:
    """Parse the 'v <id>: <cyclic neighbour list>' line format."""
    rotations: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not line.startswith("v"):
            raise ParseError(f"line {lineno}: expected 'v <id>: <neighbours>'")
        head, _, tail = line[1:].partition(":")
        if not _:
            raise ParseError(f"line {lineno}: missing ':'")
        try:
            v = int(head.strip())
            nbrs = tuple(int(t) for t in tail.split())
        except ValueError:
            raise ParseError(f"line {lineno}: vertex ids must be integers") from None
        if v in rotations:
            raise ParseError(f"line {lineno}: duplicate vertex {v}")
        rotations[v] = nbrs
    if not rotations:
        raise ParseError("empty plane-graph description")
    n = len(rotations)
    if sorted(rotations) != list(range(n)):
        raise ParseError("vertex ids must be exactly 0..n-1")
    edges = {(min(v, w), max(v, w)) for v, rot in rotations.items() for w in rot}
    try:
        graph = SimpleGraph.from_edges(n, edges)
        return PlaneGraph(graph, tuple(rotations[v] for v in range(n)))
    except ComplexError as exc:
        raise ParseError(str(exc)) from None


def format_plane_graph(P: PlaneGraph) -> str:
    lines = [f"v {v}: " + " ".join(str(w) for w in rot)
             for v, rot in enumerate(P.rotations)]
    return "\n".join(lines) + "\n"


def dual_graph(P: PlaneGraph) -> PlaneGraph:
    """Plane dual: one vertex per face, one edge per primal edge.

    Raises when the dual is not simple (a bridge makes a loop, two edges
    bounding the same pair of faces make a parallel edge); the Tait overlay
    does not need this restriction, only dual_graph itself.
    """
    dual_edges = {}
    for u, v in P.graph.edges:
        f1, f2 = P.edge_sides(u, v)
        if f1 == f2:
            raise ComplexError(f"edge ({u},{v}) is a bridge; the dual has a loop")
        pair = (min(f1, f2), max(f1, f2))
        if pair in dual_edges:
            raise ComplexError(f"faces {pair} share two edges; the dual has a "
                               f"parallel edge")
        dual_edges[pair] = (u, v)
    rotations = []
    for cycle in P.faces:
        rotations.append(tuple(P.face_of_dart[(v, u)] for u, v in cycle))
    graph = SimpleGraph.from_edges(P.face_count, dual_edges)
    return PlaneGraph(graph, tuple(rotations))


@dataclass(frozen=True)
class TaitGraph:
    """Overlay of a plane graph with its dual.

    Vertices are tri-partite: primal vertices, then faces, then one crossing
    per primal edge.  Each crossing carries four overlay edges in a fixed
    order: to the two primal endpoints, then to the two side faces (repeated
    when the edge is a bridge, giving parallel overlay edges).  The first two
    are black, the last two white.
    """

    plane: PlaneGraph
    crossings: tuple[tuple[int, int, int, int], ...]

    @property
    def primal_count(self) -> int:
        return self.plane.graph.vertex_count

    @property
    def face_count(self) -> int:
        return self.plane.face_count

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def partition_sizes(self) -> tuple[int, int, int]:
        return (self.primal_count, self.face_count, self.crossing_count)

    def crossing_node(self, e: int) -> int:
        return self.primal_count + self.face_count + e

    def face_node(self, f: int) -> int:
        return self.primal_count + f

    @cached_property
    def overlay_edges(self) -> tuple[tuple[int, int], ...]:
        """All overlay edges, four per crossing, in the canonical order."""
        out = []
        for e, (u, v, f1, f2) in enumerate(self.crossings):
            x = self.crossing_node(e)
            out.extend(((x, u), (x, v),
                        (x, self.face_node(f1)), (x, self.face_node(f2))))
        return tuple(out)

    @cached_property
    def edge_colours(self) -> tuple[int, ...]:
        """1 for overlay edges touching a primal vertex, 0 for face side."""
        return tuple(1 if slot < 2 else 0
                     for _ in self.crossings for slot in range(4))

    def black_edges(self) -> list[tuple[int, int]]:
        return [e for e, c in zip(self.overlay_edges, self.edge_colours) if c]

    def white_edges(self) -> list[tuple[int, int]]:
        return [e for e, c in zip(self.overlay_edges, self.edge_colours) if not c]


def tait_graph(P: PlaneGraph) -> TaitGraph:
    crossings = []
    for u, v in P.graph.edges:
        f1, f2 = P.edge_sides(u, v)
        crossings.append((u, v, f1, f2))
    return TaitGraph(P, tuple(crossings))


def tait_colouring(T: TaitGraph) -> Colouring:
    """Colouring of the overlay matching complex: vertex 4e+slot is the
    slot-th overlay edge of crossing e, black for the primal half-edges."""
    bits = 0
    for pos, colour in enumerate(T.edge_colours):
        bits |= colour << pos
    return Colouring(bits, 4 * T.crossing_count)


def tait_matching_complex(T: TaitGraph) -> tuple[SimplicialComplex, Colouring]:
    """Matching complex of the overlay together with its half-edge colouring."""
    M = matching_complex_of_edges(list(T.overlay_edges))
    return M, tait_colouring(T)


def _reduced_matching_homology(edge_list) -> dict[int, int]:
    """Reduced homology of the matching complex of an edge list; the empty
    list gives the void complex, rank one in degree -1."""
    return simplicial_homology(matching_complex_of_edges(edge_list), reduced=True)


def theorem42_verify(P: PlaneGraph) -> dict:
    """Check the level-by-level decomposition of the overlay homology.

    Left side: horizontal homology of the coloured overlay matching complex,
    grouped by filtration level k.  Right side: level 0 is the unreduced
    homology of the matching complex of the primal half-edges; level k > 0
    sums, over every matching of k dual half-edges, the reduced homology
    (shifted up by k) of the matching complex of the primal half-edges that
    survive deleting the crossed-out edges.
    """
    if P.graph.edge_count > 12:
        raise CapExceeded("overlay verification is limited to 12 edges")
    T = tait_graph(P)
    M, eps = tait_matching_complex(T)
    lhs_flat = horizontal_homology(M, eps)
    lhs: dict[int, dict[int, int]] = {}
    for (d, k), r in lhs_flat.items():
        lhs.setdefault(k, {})[d] = r

    black = T.black_edges()
    white = T.white_edges()

    rhs: dict[int, dict[int, int]] = {}
    base = simplicial_homology(matching_complex_of_edges(black))
    if base:
        rhs[0] = dict(base)
    white_matchings = matching_complex_of_edges(white).simplices
    for mask in white_matchings:
        k = mask.bit_count()
        removed = set()
        rest = mask
        while rest:
            idx = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            removed.add(white[idx][0])
        survivors = [be for be in black if be[0] not in removed]
        for dim, r in _reduced_matching_homology(survivors).items():
            level = rhs.setdefault(k, {})
            level[dim + k] = level.get(dim + k, 0) + r
    rhs = {k: v for k, v in rhs.items() if v}

    levels = {}
    all_equal = True
    for k in sorted(set(lhs) | set(rhs)):
        left = lhs.get(k, {})
        right = rhs.get(k, {})
        equal = left == right
        all_equal = all_equal and equal
        levels[k] = {"lhs": left, "rhs": right, "equal": equal}
    return {
        "partition": T.partition_sizes,
        "levels": levels,
        "all_equal": all_equal,
        "level0_matches_subdivision": lhs.get(0, {}) == dict(base),
    }
