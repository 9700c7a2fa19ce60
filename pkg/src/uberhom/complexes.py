"""Finite simplicial complexes on a fixed ordered vertex universe.

A simplex is a nonempty bitmask over vertex indices; the universe is capped
at 64 vertices so every simplex fits in one machine word.  Complexes are
immutable and face-closed; links may be void (zero simplices) while keeping
the ambient universe.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import ComplexError, ParseError

MAX_VERTICES = 64


def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        out.append(v)
    return tuple(out)


def dim_of(mask: int) -> int:
    return mask.bit_count() - 1


@dataclass(frozen=True)
class SimplicialComplex:
    """Face-closed set of simplices over vertices 0..vertex_count-1."""

    vertex_count: int
    simplices: frozenset[int]

    def __post_init__(self):
        if not 1 <= self.vertex_count <= MAX_VERTICES:
            raise ComplexError(
                f"vertex count must be in 1..{MAX_VERTICES}, got {self.vertex_count}")
        universe = (1 << self.vertex_count) - 1
        for s in self.simplices:
            if s == 0:
                raise ComplexError("the empty simplex is not stored")
            if s & ~universe:
                raise ComplexError("simplex uses a vertex outside the universe")
            # face closure need only be checked one codimension down
            m = s
            while m:
                v = m & -m
                m &= m - 1
                face = s ^ v
                if face and face not in self.simplices:
                    raise ComplexError("simplex set is not face-closed")

    @property
    def is_void(self) -> bool:
        return not self.simplices

    @cached_property
    def by_dim(self) -> dict[int, tuple[int, ...]]:
        """Simplices grouped by dimension, masks ascending within a group."""
        groups: dict[int, list[int]] = {}
        for s in self.simplices:
            groups.setdefault(dim_of(s), []).append(s)
        return {d: tuple(sorted(groups[d])) for d in sorted(groups)}

    @property
    def dim(self) -> int:
        return max(self.by_dim, default=-1)

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(self.by_dim.get(d, ())) for d in range(self.dim + 1))

    @property
    def euler_characteristic(self) -> int:
        return sum(n if d % 2 == 0 else -n for d, n in enumerate(self.f_vector))

    def _check_vertex(self, v: int):
        if not 0 <= v < self.vertex_count:
            raise ComplexError(f"vertex {v} outside universe of size {self.vertex_count}")

    def star(self, v: int) -> frozenset[int]:
        """Simplices containing v (not a subcomplex)."""
        self._check_vertex(v)
        bit = 1 << v
        return frozenset(s for s in self.simplices if s & bit)

    def closed_star(self, v: int) -> "SimplicialComplex":
        """Face closure of star(v): all s with s ∪ {v} in the complex."""
        self._check_vertex(v)
        bit = 1 << v
        return SimplicialComplex(
            self.vertex_count,
            frozenset(s for s in self.simplices if (s | bit) in self.simplices))

    def link(self, v: int) -> "SimplicialComplex":
        """May be void; keeps the ambient universe."""
        self._check_vertex(v)
        bit = 1 << v
        return SimplicialComplex(
            self.vertex_count,
            frozenset(s for s in self.simplices
                      if not s & bit and (s | bit) in self.simplices))

    def delete_star(self, v: int) -> "SimplicialComplex":
        """All simplices avoiding v, with vertices above v shifted down."""
        self._check_vertex(v)
        if self.vertex_count < 2:
            raise ComplexError("cannot delete the only vertex")
        bit = 1 << v
        low = bit - 1
        kept = frozenset((s & low) | ((s >> (v + 1)) << v)
                         for s in self.simplices if not s & bit)
        if not kept:
            raise ComplexError("deleting the star leaves nothing")
        return SimplicialComplex(self.vertex_count - 1, kept)

    def is_connected(self) -> bool:
        verts = [v for v in range(self.vertex_count) if (1 << v) in self.simplices]
        if len(verts) <= 1:
            return True
        adj = {v: 0 for v in verts}
        for s in self.by_dim.get(1, ()):
            a, b = vertices_of(s)
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        seen = 1 << verts[0]
        frontier = [verts[0]]
        while frontier:
            nxt = adj[frontier.pop()] & ~seen
            seen |= nxt
            frontier.extend(vertices_of(nxt))
        return all(seen >> v & 1 for v in verts)

    def diameter(self) -> int:
        """Max geodesic distance in the 1-skeleton; needs connectivity."""
        if not self.is_connected():
            raise ComplexError("diameter requires a connected complex")
        verts = [v for v in range(self.vertex_count) if (1 << v) in self.simplices]
        adj = {v: 0 for v in verts}
        for s in self.by_dim.get(1, ()):
            a, b = vertices_of(s)
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        best = 0
        for start in verts:
            seen = 1 << start
            frontier = 1 << start
            dist = 0
            while True:
                nxt = 0
                for v in vertices_of(frontier):
                    nxt |= adj[v]
                nxt &= ~seen
                if not nxt:
                    break
                dist += 1
                seen |= nxt
                frontier = nxt
            best = max(best, dist)
        return best

    def facets(self) -> list[int]:
        """Maximal simplices in (dimension, mask) order."""
        out = []
        for s in self.simplices:
            if not any((s | (1 << v)) in self.simplices
                       for v in range(self.vertex_count) if not s >> v & 1):
                out.append(s)
        return sorted(out, key=lambda s: (dim_of(s), s))

    def permuted(self, perm) -> "SimplicialComplex":
        """Relabel vertices: old index v becomes perm[v]."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise ComplexError("not a permutation of the vertex universe")
        return SimplicialComplex(
            self.vertex_count,
            frozenset(mask_of(perm[v] for v in vertices_of(s)) for s in self.simplices))

    def cone(self) -> "SimplicialComplex":
        """Join with one new apex, the highest index."""
        if self.vertex_count + 1 > MAX_VERTICES:
            raise ComplexError("cone exceeds the vertex cap")
        apex = 1 << self.vertex_count
        out = set(self.simplices)
        out.add(apex)
        out.update(s | apex for s in self.simplices)
        return SimplicialComplex(self.vertex_count + 1, frozenset(out))

    def suspension(self) -> "SimplicialComplex":
        """Join with two new apexes that never share a simplex."""
        if self.vertex_count + 2 > MAX_VERTICES:
            raise ComplexError("suspension exceeds the vertex cap")
        a1 = 1 << self.vertex_count
        a2 = a1 << 1
        out = set(self.simplices)
        out.update((a1, a2))
        out.update(s | a1 for s in self.simplices)
        out.update(s | a2 for s in self.simplices)
        return SimplicialComplex(self.vertex_count + 2, frozenset(out))

    def barycentric_subdivision(self) -> "SimplicialComplex":
        """New vertices are old simplices, ordered by (dimension, vertex list);
        new simplices are inclusion chains."""
        order = sorted(self.simplices, key=lambda s: (dim_of(s), vertices_of(s)))
        if len(order) > MAX_VERTICES:
            raise ComplexError("subdivision exceeds the vertex cap")
        index = {s: i for i, s in enumerate(order)}
        # chains_into[s]: all chains of proper faces ending strictly below s
        chains_ending: dict[int, list[int]] = {}
        for s in order:
            own = 1 << index[s]
            chains = [own]
            t = (s - 1) & s
            while t:
                if t in self.simplices:
                    chains.extend(c | own for c in chains_ending[t])
                t = (t - 1) & s
            chains_ending[s] = chains
        out = set()
        for chains in chains_ending.values():
            out.update(chains)
        return SimplicialComplex(len(order), frozenset(out))


def from_facets(m: int, facets) -> SimplicialComplex:
    """Face closure of the given facets, plus every singleton in [0, m)."""
    if not 1 <= m <= MAX_VERTICES:
        raise ComplexError(f"vertex count must be in 1..{MAX_VERTICES}, got {m}")
    simplices = {1 << v for v in range(m)}
    for facet in facets:
        f = mask_of(facet)
        if f == 0:
            raise ComplexError("empty facet")
        if f >= 1 << m:
            raise ComplexError("facet vertex out of range")
        stack = [f]
        while stack:
            s = stack.pop()
            if s in simplices:
                continue
            simplices.add(s)
            m2 = s
            while m2:
                v = m2 & -m2
                m2 &= m2 - 1
                face = s ^ v
                if face and face not in simplices:
                    stack.append(face)
    return SimplicialComplex(m, frozenset(simplices))


def standard_complex(name: str, *params: int) -> SimplicialComplex:
    """Builders for the named families with canonical vertex orderings."""
    try:
        builder = _STANDARD[name]
    except KeyError:
        raise ComplexError(f"unknown standard complex {name!r}") from None
    return builder(*params)


def _simplex(n: int) -> SimplicialComplex:
    if n < 0:
        raise ComplexError("simplex dimension must be nonnegative")
    return from_facets(n + 1, [range(n + 1)])


def _boundary(n: int) -> SimplicialComplex:
    if n < 1:
        raise ComplexError("boundary needs dimension at least 1")
    return from_facets(n + 1, combinations(range(n + 1), n))


def _cycle(m: int) -> SimplicialComplex:
    if m < 3:
        raise ComplexError("cycle needs at least 3 vertices")
    return from_facets(m, [(i, (i + 1) % m) for i in range(m)])


def _path(n: int) -> SimplicialComplex:
    if n < 1:
        raise ComplexError("path needs at least 1 edge")
    return from_facets(n + 1, [(i, i + 1) for i in range(n)])


def _grid(rows: int, cols: int) -> SimplicialComplex:
    if rows < 1 or cols < 1 or rows * cols < 2:
        raise ComplexError("grid needs at least 2 vertices")
    edges = []
    for i in range(rows):
        for j in range(cols):
            if j + 1 < cols:
                edges.append((i * cols + j, i * cols + j + 1))
            if i + 1 < rows:
                edges.append((i * cols + j, (i + 1) * cols + j))
    return from_facets(rows * cols, edges)


def _cube(n: int) -> SimplicialComplex:
    if n < 1:
        raise ComplexError("cube needs dimension at least 1")
    edges = [(x, x | (1 << b)) for x in range(1 << n)
             for b in range(n) if not x >> b & 1]
    return from_facets(1 << n, edges)


def _complete(m: int) -> SimplicialComplex:
    if m < 2:
        raise ComplexError("complete graph needs at least 2 vertices")
    return from_facets(m, combinations(range(m), 2))


def _complete_bipartite(a: int, b: int) -> SimplicialComplex:
    if a < 1 or b < 1:
        raise ComplexError("bipartite parts must be nonempty")
    return from_facets(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _torus_min() -> SimplicialComplex:
    facets = [((i) % 7, (i + 1) % 7, (i + 3) % 7) for i in range(7)]
    facets += [((i) % 7, (i + 2) % 7, (i + 3) % 7) for i in range(7)]
    return from_facets(7, facets)


def _rp2_min() -> SimplicialComplex:
    facets = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
              (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]
    return from_facets(6, facets)


_STANDARD = {
    "simplex": _simplex,
    "boundary": _boundary,
    "cycle": _cycle,
    "path": _path,
    "grid": _grid,
    "cube": _cube,
    "complete": _complete,
    "complete_bipartite": _complete_bipartite,
    "torus_min": _torus_min,
    "rp2_min": _rp2_min,
}


def read_complex(text: str) -> SimplicialComplex:
    """Facet-list format: first line the vertex count, then one facet per
    line as space-separated 0-based indices; '#' starts a comment."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ParseError("empty complex description")
    try:
        m = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the vertex count, got {lines[0]!r}") from None
    facets = []
    for line in lines[1:]:
        try:
            facet = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"bad facet line {line!r}") from None
        if any(v < 0 for v in facet):
            raise ParseError(f"negative vertex in facet line {line!r}")
        facets.append(facet)
    try:
        return from_facets(m, facets)
    except ComplexError as exc:
        raise ParseError(str(exc)) from None


def format_complex(X: SimplicialComplex) -> str:
    lines = [str(X.vertex_count)]
    lines += [" ".join(map(str, vertices_of(f))) for f in X.facets()]
    return "\n".join(lines) + "\n"
