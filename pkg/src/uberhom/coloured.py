"""Vertex bi-colourings, the weight bigrading, and the split boundary.

The simplicial boundary of a coloured complex splits as the part removing a
black vertex (weight-preserving, the horizontal differential) plus the part
removing a white vertex (weight-dropping, the diagonal differential).  All
homology here is over GF(2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import f2
from .complexes import SimplicialComplex, dim_of, vertices_of
from .errors import ColouringMismatch, InvalidColouring, ParseError


@dataclass(frozen=True)
class Colouring:
    """Black(1)/white(0) assignment to vertices; bit i is vertex i."""

    bits: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise InvalidColouring("colouring must have positive length")
        if self.bits < 0 or self.bits >> self.length:
            raise InvalidColouring("colouring bits exceed the stated length")

    @classmethod
    def from_string(cls, text: str) -> "Colouring":
        if not text or any(c not in "01" for c in text):
            raise ParseError(f"colouring must be a nonempty 0/1 string, got {text!r}")
        bits = 0
        for i, c in enumerate(text):
            if c == "1":
                bits |= 1 << i
        return cls(bits, len(text))

    @classmethod
    def all_black(cls, m: int) -> "Colouring":
        return cls((1 << m) - 1, m)

    @classmethod
    def all_white(cls, m: int) -> "Colouring":
        return cls(0, m)

    @classmethod
    def elementary(cls, m: int, v: int) -> "Colouring":
        if not 0 <= v < m:
            raise InvalidColouring(f"vertex {v} outside colouring of length {m}")
        return cls(1 << v, m)

    @classmethod
    def from_black_set(cls, m: int, black) -> "Colouring":
        bits = 0
        for v in black:
            if not 0 <= v < m:
                raise InvalidColouring(f"vertex {v} outside colouring of length {m}")
            bits |= 1 << v
        return cls(bits, m)

    @property
    def weight_norm(self) -> int:
        """Number of black vertices."""
        return self.bits.bit_count()

    def is_black(self, v: int) -> bool:
        return bool(self.bits >> v & 1)

    def black_vertices(self) -> tuple[int, ...]:
        return vertices_of(self.bits)

    def complement(self) -> "Colouring":
        return Colouring(self.bits ^ ((1 << self.length) - 1), self.length)

    def check_length(self, m: int):
        if self.length != m:
            raise ColouringMismatch(
                f"colouring length {self.length} does not match vertex count {m}")

    def __str__(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.length))


def weight(sigma: int, colouring: Colouring) -> int:
    """White-vertex count of the simplex: its filtration degree."""
    if sigma >> colouring.length:
        raise ColouringMismatch("simplex uses vertices beyond the colouring")
    return (sigma & ~colouring.bits).bit_count()


def _blocks(X: SimplicialComplex, eps: Colouring):
    """(dimension, weight) -> ascending simplex masks, plus index maps."""
    eps.check_length(X.vertex_count)
    blocks: dict[tuple[int, int], list[int]] = {}
    for d, masks in X.by_dim.items():
        for s in masks:
            blocks.setdefault((d, (s & ~eps.bits).bit_count()), []).append(s)
    index = {bk: {s: p for p, s in enumerate(masks)} for bk, masks in blocks.items()}
    return blocks, index


class ColouredComplex:
    """The bigraded chain complex of (X, ε) with both differentials."""

    def __init__(self, X: SimplicialComplex, eps: Colouring, validate: bool = True):
        self.complex = X
        self.colouring = eps
        raw, self._index = _blocks(X, eps)
        self.blocks: dict[tuple[int, int], tuple[int, ...]] = {
            bk: tuple(masks) for bk, masks in raw.items()}
        if validate:
            self._validate()

    def block(self, i: int, k: int) -> tuple[int, ...]:
        return self.blocks.get((i, k), ())

    def _matrix(self, i: int, k: int, drop_black: bool) -> f2.BitMatrix:
        src = self.block(i, k)
        tk = k if drop_black else k - 1
        tgt_index = self._index.get((i - 1, tk), {})
        keep = self.colouring.bits if drop_black else ~self.colouring.bits
        cols = []
        for s in src:
            col = 0
            for v in vertices_of(s & keep):
                face = s ^ (1 << v)
                if face:
                    col |= 1 << tgt_index[face]
            cols.append(col)
        return f2.BitMatrix.from_columns(len(tgt_index), len(src), cols)

    def horizontal_matrix(self, i: int, k: int) -> f2.BitMatrix:
        """Boundary component removing a black vertex: (i,k) -> (i-1,k)."""
        return self._matrix(i, k, drop_black=True)

    def diagonal_matrix(self, i: int, k: int) -> f2.BitMatrix:
        """Boundary component removing a white vertex: (i,k) -> (i-1,k-1)."""
        return self._matrix(i, k, drop_black=False)

    def _validate(self):
        for (i, k) in self.blocks:
            if i < 2:
                continue
            h1 = self.horizontal_matrix(i, k)
            if not self.horizontal_matrix(i - 1, k).matmul(h1).is_zero():
                raise AssertionError("horizontal differential does not square to zero")
            d1 = self.diagonal_matrix(i, k)
            if not self.diagonal_matrix(i - 1, k - 1).matmul(d1).is_zero():
                raise AssertionError("diagonal differential does not square to zero")
            mixed = self.diagonal_matrix(i - 1, k).matmul(h1)
            mixed2 = self.horizontal_matrix(i - 1, k - 1).matmul(d1)
            if mixed.data != mixed2.data:
                raise AssertionError("differentials do not anticommute")


def build_coloured_complex(X: SimplicialComplex, eps: Colouring,
                           validate: bool = True) -> ColouredComplex:
    return ColouredComplex(X, eps, validate=validate)


def _rank_accumulate(pivots: dict[int, int], v: int) -> int:
    """Insert into a forward-elimination basis; returns the rank gain."""
    while v:
        p = (v & -v).bit_length() - 1
        row = pivots.get(p)
        if row is None:
            pivots[p] = v
            return 1
        v ^= row
    return 0


def _split_ranks(X: SimplicialComplex, eps: Colouring, drop_black: bool) -> dict:
    """Nonzero homology ranks of one half of the boundary, by (i, k)."""
    blocks, index = _blocks(X, eps)
    keep = eps.bits if drop_black else ~eps.bits
    out_rank: dict[tuple[int, int], int] = {}
    for (i, k), masks in blocks.items():
        if i == 0:
            continue
        tgt_index = index.get((i - 1, k if drop_black else k - 1), {})
        pivots: dict[int, int] = {}
        r = 0
        for s in masks:
            col = 0
            for v in vertices_of(s & keep):
                face = s ^ (1 << v)
                if face:
                    col |= 1 << tgt_index[face]
            r += _rank_accumulate(pivots, col)
        out_rank[(i, k)] = r
    result = {}
    for (i, k), masks in blocks.items():
        up = (i + 1, k + (0 if drop_black else 1))
        h = len(masks) - out_rank.get((i, k), 0) - out_rank.get(up, 0)
        if h:
            result[(i, k)] = h
    return result


def horizontal_homology(X: SimplicialComplex, eps: Colouring) -> dict:
    """Nonzero ranks of the horizontal homology, keyed by (i, k)."""
    return _split_ranks(X, eps, drop_black=True)


def diagonal_homology(X: SimplicialComplex, eps: Colouring) -> dict:
    """Nonzero ranks of the diagonal homology, keyed by (i, k)."""
    return _split_ranks(X, eps, drop_black=False)


@dataclass(frozen=True)
class BlockHomology:
    """Homology of one (i, k) block with its simplex basis."""

    basis: tuple[int, ...]
    hom: f2.HomologyWithBasis


def horizontal_homology_with_bases(X: SimplicialComplex,
                                   eps: Colouring) -> dict[tuple[int, int], BlockHomology]:
    """Per-bigrading homology with representative cycles (all blocks kept,
    including rank 0, so cube assembly can look up any bigrading)."""
    cc = ColouredComplex(X, eps, validate=False)
    out = {}
    for (i, k), masks in cc.blocks.items():
        b_out = cc.horizontal_matrix(i, k) if i > 0 else None
        b_in = cc.horizontal_matrix(i + 1, k) if (i + 1, k) in cc.blocks else None
        hom = f2.homology_at(b_in, b_out, len(masks))
        out[(i, k)] = BlockHomology(masks, hom)
    return out


def filtered_homology(X: SimplicialComplex, eps: Colouring, k: int) -> dict[int, int]:
    """Homology of the weight-at-most-k truncation under the full boundary;
    singly graded by dimension."""
    eps.check_length(X.vertex_count)
    if k < 0:
        return {}
    by_dim: dict[int, list[int]] = {}
    for d, masks in X.by_dim.items():
        kept = [s for s in masks if (s & ~eps.bits).bit_count() <= k]
        if kept:
            by_dim[d] = kept
    index = {d: {s: p for p, s in enumerate(masks)} for d, masks in by_dim.items()}
    out_rank: dict[int, int] = {}
    for d, masks in by_dim.items():
        if d == 0:
            continue
        tgt = index.get(d - 1, {})
        pivots: dict[int, int] = {}
        r = 0
        for s in masks:
            col = 0
            for v in vertices_of(s):
                face = s ^ (1 << v)
                if face in tgt:
                    col |= 1 << tgt[face]
            r += _rank_accumulate(pivots, col)
        out_rank[d] = r
    result = {}
    for d, masks in by_dim.items():
        h = len(masks) - out_rank.get(d, 0) - out_rank.get(d + 1, 0)
        if h:
            result[d] = h
    return result


def simplicial_homology(X: SimplicialComplex, reduced: bool = False) -> dict[int, int]:
    """Plain simplicial homology ranks over GF(2), keyed by dimension.

    With reduced=True the augmentation to a degree -1 generator is included;
    the void complex then has rank 1 in degree -1.
    """
    by_dim = X.by_dim
    index = {d: {s: p for p, s in enumerate(masks)} for d, masks in by_dim.items()}
    out_rank: dict[int, int] = {}
    for d, masks in by_dim.items():
        if d == 0:
            if reduced:
                out_rank[0] = 1  # augmentation has rank 1 once any vertex exists
            continue
        tgt = index[d - 1]
        pivots: dict[int, int] = {}
        r = 0
        for s in masks:
            col = 0
            for v in vertices_of(s):
                col |= 1 << tgt[s ^ (1 << v)]
            r += _rank_accumulate(pivots, col)
        out_rank[d] = r
    result = {}
    if reduced:
        h = 1 - out_rank.get(0, 0)
        if h:
            result[-1] = h
    for d, masks in by_dim.items():
        h = len(masks) - out_rank.get(d, 0) - out_rank.get(d + 1, 0)
        if h:
            result[d] = h
    return result


def black_subcomplex(X: SimplicialComplex, eps: Colouring):
    """Simplices whose vertices are all black, over the same universe.
    Returns None when there are none (the void black subcomplex)."""
    eps.check_length(X.vertex_count)
    kept = frozenset(s for s in X.simplices if not s & ~eps.bits)
    if not kept:
        return None
    return SimplicialComplex(X.vertex_count, kept)


@dataclass(frozen=True)
class GradedEulerPoly:
    """Alternating-sum polynomial of horizontal ranks in the weight variable."""

    coefficients: tuple[tuple[int, int], ...]  # (power, coefficient), ascending

    @cached_property
    def _map(self) -> dict[int, int]:
        return dict(self.coefficients)

    def coefficient(self, k: int) -> int:
        return self._map.get(k, 0)

    def __call__(self, t: int) -> int:
        return sum(c * t ** k for k, c in self.coefficients)


def graded_euler(X: SimplicialComplex, eps: Colouring) -> GradedEulerPoly:
    coeffs: dict[int, int] = {}
    for (i, k), r in horizontal_homology(X, eps).items():
        coeffs[k] = coeffs.get(k, 0) + (r if i % 2 == 0 else -r)
    return GradedEulerPoly(tuple(sorted((k, c) for k, c in coeffs.items() if c)))


def flatten(ranks: dict) -> dict[int, int]:
    """Forget the weight grading: sum ranks over k at each dimension."""
    out: dict[int, int] = {}
    for (i, _k), r in ranks.items():
        out[i] = out.get(i, 0) + r
    return {i: r for i, r in sorted(out.items()) if r}
