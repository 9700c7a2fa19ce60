"""Dense linear algebra over GF(2) on Python int bitsets.

A vector in F_2^n is an int whose bit i is coordinate i.  Echelon forms use
lowest-set-bit pivoting throughout, which makes the reduced basis of a
subspace canonical: two generating sets span the same subspace iff they
echelon to the same row list.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


def _low_bit(v: int) -> int:
    """Position of the lowest set bit of a nonzero int."""
    return (v & -v).bit_length() - 1


def echelon(vectors) -> list[int]:
    """Reduced echelon basis of the span, sorted by pivot position.

    Rows satisfy the RREF invariant: a pivot bit is set in its own row only.
    That makes single-pass reduction against the rows order-independent.
    """
    pivots: dict[int, int] = {}
    for v in vectors:
        for p, row in pivots.items():
            if v >> p & 1:
                v ^= row
        if v == 0:
            continue
        p = _low_bit(v)
        for q, row in pivots.items():
            if row >> p & 1:
                pivots[q] = row ^ v
        pivots[p] = v
    return [pivots[p] for p in sorted(pivots)]


def rank_of(vectors) -> int:
    return len(echelon(vectors))


def kernel_and_image(columns) -> tuple[list[int], list[int]]:
    """Kernel and image bases of the linear map sending e_j to columns[j].

    Kernel vectors are bitsets over column indices, image vectors live in
    the codomain.  Both come back in reduced echelon form.
    """
    pivots: dict[int, tuple[int, int]] = {}
    kernel: list[int] = []
    for j, v in enumerate(columns):
        combo = 1 << j
        for p, (row, c) in pivots.items():
            if v >> p & 1:
                v ^= row
                combo ^= c
        if v == 0:
            kernel.append(combo)
            continue
        p = _low_bit(v)
        for q, (row, c) in pivots.items():
            if row >> p & 1:
                pivots[q] = (row ^ v, c ^ combo)
        pivots[p] = (v, combo)
    image = [pivots[p][0] for p in sorted(pivots)]
    return echelon(kernel), image


@dataclass(frozen=True)
class BitMatrix:
    """Row-major GF(2) matrix; data[i] is the bitset of row i."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError("row count does not match data length")
        mask = (1 << self.cols) - 1
        if any(row & ~mask for row in self.data):
            raise ValueError("row has bits beyond the column count")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_columns(cls, rows: int, cols: int, columns) -> "BitMatrix":
        data = [0] * rows
        for j, col in enumerate(columns):
            while col:
                i = _low_bit(col)
                col &= col - 1
                data[i] |= 1 << j
        return cls(rows, cols, tuple(data))

    @cached_property
    def _columns(self) -> tuple[int, ...]:
        cols = [0] * self.cols
        for i, row in enumerate(self.data):
            while row:
                j = _low_bit(row)
                row &= row - 1
                cols[j] |= 1 << i
        return tuple(cols)

    def columns(self) -> tuple[int, ...]:
        return self._columns

    def mul_vec(self, v: int) -> int:
        """Matrix-vector product; v is a bitset over column positions."""
        out = 0
        for i, row in enumerate(self.data):
            if (row & v).bit_count() & 1:
                out |= 1 << i
        return out

    def matmul(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions differ")
        data = []
        for row in self.data:
            acc = 0
            while row:
                k = _low_bit(row)
                row &= row - 1
                acc ^= other.data[k]
            data.append(acc)
        return BitMatrix(self.rows, other.cols, tuple(data))

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.cols, self.rows, self._columns)

    def is_zero(self) -> bool:
        return all(row == 0 for row in self.data)


def rank(matrix: BitMatrix) -> int:
    return rank_of(matrix.data)


def kernel_basis(matrix: BitMatrix) -> list[int]:
    return kernel_and_image(matrix.columns())[0]


def image_basis(matrix: BitMatrix) -> list[int]:
    return kernel_and_image(matrix.columns())[1]


def augmentation_matrix(n: int) -> BitMatrix:
    """The map C_0 -> F sending every generator to 1 (for reduced homology)."""
    return BitMatrix(1, n, ((1 << n) - 1,))


class SubspaceBasis:
    """Incrementally built echelon basis with membership queries."""

    def __init__(self, ambient_dim: int, vectors=()):
        self.ambient_dim = ambient_dim
        self._pivots: dict[int, int] = {}
        for v in vectors:
            self.add(v)

    def __len__(self) -> int:
        return len(self._pivots)

    def reduce(self, v: int) -> int:
        for p, row in self._pivots.items():
            if v >> p & 1:
                v ^= row
        return v

    def add(self, v: int) -> bool:
        """Insert v; returns True when it enlarged the span."""
        v = self.reduce(v)
        if v == 0:
            return False
        p = _low_bit(v)
        for q, row in self._pivots.items():
            if row >> p & 1:
                self._pivots[q] = row ^ v
        self._pivots[p] = v
        return True

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def vectors(self) -> list[int]:
        return [self._pivots[p] for p in sorted(self._pivots)]


class HomologyWithBasis:
    """Homology of a chain group with chosen cycle representatives.

    Representatives are the cycle-echelon rows whose pivots are not pivots of
    the boundary subspace; together with the boundary echelon rows they form
    a basis of the cycle space, so their classes are a basis of homology.
    """

    def __init__(self, dim: int, cycle_rows: list[int], boundary_rows: list[int]):
        self.dim = dim
        self._boundary = {_low_bit(r): r for r in boundary_rows}
        reps = [r for r in cycle_rows if _low_bit(r) not in self._boundary]
        self._reps = {_low_bit(r): (r, i) for i, r in enumerate(reps)}
        self.representatives: tuple[int, ...] = tuple(reps)
        self.rank = len(reps)
        if len(cycle_rows) != len(boundary_rows) + self.rank:
            raise ValueError("boundary subspace not contained in cycle space")

    def coordinates(self, z: int) -> int:
        """Coordinates of the class [z] over the representatives.

        Returns a bitset over representative indices; raises ValueError when
        z is not a cycle.
        """
        out = 0
        while z:
            p = _low_bit(z)
            if p in self._boundary:
                z ^= self._boundary[p]
            elif p in self._reps:
                row, i = self._reps[p]
                z ^= row
                out ^= 1 << i
            else:
                raise ValueError("vector is not a cycle")
        return out


def homology_at(boundary_in: BitMatrix | None, boundary_out: BitMatrix | None,
                dim: int) -> HomologyWithBasis:
    """Homology with bases at a chain group of the given dimension.

    boundary_out maps this group outward, boundary_in maps into it; None
    stands for the zero map.
    """
    if boundary_out is not None and boundary_out.cols != dim:
        raise ValueError("outgoing boundary has wrong source dimension")
    if boundary_in is not None and boundary_in.rows != dim:
        raise ValueError("incoming boundary has wrong target dimension")
    if boundary_in is not None and boundary_out is not None:
        if not boundary_out.matmul(boundary_in).is_zero():
            raise ValueError("boundary maps do not compose to zero")
    if boundary_out is None:
        cycles = [1 << i for i in range(dim)]
    else:
        cycles = kernel_basis(boundary_out)
    boundaries = [] if boundary_in is None else image_basis(boundary_in)
    return HomologyWithBasis(dim, cycles, boundaries)
