# LGPL-3.0 License
# Copyright (c) 2023 KIT-IAI-ESA

"""
Dense matrices over a Galois ring.

Everything here is division free except :meth:`RingMatrix.inverse`, which only
divides by units. The characteristic polynomial uses Berkowitz' algorithm, so
it is exact over Z/p^m even though p is a zero divisor there.
"""

import itertools
from typing import Callable, Iterable, Iterator, Sequence

from crystalline.shared import NonUnit, ParamMismatch

from .finite_field_element import FiniteFieldElement
from .galois_ring import GaloisRing, GaloisRingElement, galois_ring

Vector = tuple[GaloisRingElement, ...]


def _dot(
    ring: GaloisRing, row: Sequence[GaloisRingElement], col: Sequence[GaloisRingElement]
) -> GaloisRingElement:
    acc = ring.zero
    for a, b in zip(row, col):
        acc = acc + a * b
    return acc


class RingMatrix:
    """
    An immutable matrix with entries in one :class:`GaloisRing`.

    :param ring: The coefficient ring.
    :type ring: GaloisRing
    :param rows: Entries row by row; integers are read as constants.
    :type rows: Iterable[Iterable[GaloisRingElement | int]]
    """

    __slots__ = ("ring", "rows")

    def __init__(self, ring: GaloisRing, rows: Iterable[Iterable[GaloisRingElement | int]]) -> None:
        built = []
        for row in rows:
            entries = []
            for entry in row:
                if isinstance(entry, int):
                    entry = ring.element(entry)
                elif entry.ring is not ring and (
                    entry.params != ring.params or entry.precision != ring.precision
                ):
                    raise ParamMismatch(f"Entry {entry!r} does not live in {ring}")
                entries.append(entry)
            built.append(tuple(entries))
        if len({len(row) for row in built}) > 1:
            raise ValueError("Rows of a matrix must have equal length")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "rows", tuple(built))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("RingMatrix is immutable")

    @classmethod
    def identity(cls, ring: GaloisRing, size: int) -> "RingMatrix":
        return cls(ring, ([1 if i == j else 0 for j in range(size)] for i in range(size)))

    @classmethod
    def zero(cls, ring: GaloisRing, nrows: int, ncols: int | None = None) -> "RingMatrix":
        ncols = nrows if ncols is None else ncols
        return cls(ring, ([0] * ncols for _ in range(nrows)))

    @classmethod
    def diagonal(cls, ring: GaloisRing, entries: Sequence[GaloisRingElement | int]) -> "RingMatrix":
        size = len(entries)
        return cls(ring, ([entries[i] if i == j else 0 for j in range(size)] for i in range(size)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, index: tuple[int, int]) -> GaloisRingElement:
        i, j = index
        return self.rows[i][j]

    def __iter__(self) -> Iterator[tuple[GaloisRingElement, ...]]:
        return iter(self.rows)

    def entries(self) -> Iterator[GaloisRingElement]:
        for row in self.rows:
            yield from row

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"RingMatrix({self.ring}, {[list(row) for row in self.rows]})"

    def map(
        self,
        function: Callable[[GaloisRingElement], GaloisRingElement],
        ring: GaloisRing | None = None,
    ) -> "RingMatrix":
        """Applies function entrywise; the result lives in ring (default: same ring)."""
        target = self.ring if ring is None else ring
        return RingMatrix(target, ([function(x) for x in row] for row in self.rows))

    def _check_shape(self, other: "RingMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"Shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        self._check_shape(other)
        pairs = zip(self.rows, other.rows)
        return RingMatrix(self.ring, ([a + b for a, b in zip(r, s)] for r, s in pairs))

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        self._check_shape(other)
        pairs = zip(self.rows, other.rows)
        return RingMatrix(self.ring, ([a - b for a, b in zip(r, s)] for r, s in pairs))

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"Cannot multiply {self.shape} by {other.shape}")
        columns = [other.column(j) for j in range(other.ncols)]
        return RingMatrix(
            self.ring, ([_dot(self.ring, row, col) for col in columns] for row in self.rows)
        )

    def scale(self, factor: GaloisRingElement | int) -> "RingMatrix":
        return self.map(lambda x: x * factor)

    def apply(self, vector: Sequence[GaloisRingElement]) -> Vector:
        """Matrix times column vector."""
        return tuple(_dot(self.ring, row, vector) for row in self.rows)

    def frobenius(self, k: int = 1) -> "RingMatrix":
        """Entrywise sigma^k."""
        if k % self.ring.d == 0:
            return self
        return self.map(lambda x: x.frobenius(k))

    def transpose(self) -> "RingMatrix":
        return RingMatrix(self.ring, (self.column(j) for j in range(self.ncols)))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RingMatrix":
        return RingMatrix(self.ring, ([self.rows[i][j] for j in cols] for i in rows))

    def block_diagonal(self, other: "RingMatrix") -> "RingMatrix":
        zero = self.ring.zero
        top = [list(row) + [zero] * other.ncols for row in self.rows]
        bottom = [[zero] * self.ncols + list(row) for row in other.rows]
        return RingMatrix(self.ring, top + bottom)

    def kron(self, other: "RingMatrix") -> "RingMatrix":
        """Kronecker product, row index i1 * n2 + i2."""
        return RingMatrix(
            self.ring,
            (
                [a * b for a in row_a for b in row_b]
                for row_a in self.rows
                for row_b in other.rows
            ),
        )

    def charpoly(self) -> list[GaloisRingElement]:
        """
        Coefficients of det(X*I - A), highest degree first, by Berkowitz'
        division-free recursion over the leading principal submatrices.

        :return: [1, c_{n-1}, ..., c_0].
        :rtype: list[GaloisRingElement]
        """
        if not self.is_square():
            raise ValueError("Characteristic polynomial of a non-square matrix")
        ring = self.ring
        coeffs = [ring.one]
        for r in range(1, self.nrows + 1):
            corner = self.rows[r - 1][r - 1]
            row = self.rows[r - 1][: r - 1]
            block = [self.rows[i][: r - 1] for i in range(r - 1)]
            vec = [self.rows[i][r - 1] for i in range(r - 1)]
            toeplitz = [ring.one, -corner]
            for _ in range(r - 1):
                toeplitz.append(-_dot(ring, row, vec))
                vec = [_dot(ring, block_row, vec) for block_row in block]
            new_coeffs = []
            for i in range(r + 1):
                acc = ring.zero
                for j in range(min(i, r - 1) + 1):
                    acc = acc + toeplitz[i - j] * coeffs[j]
                new_coeffs.append(acc)
            coeffs = new_coeffs
        return coeffs

    def det(self) -> GaloisRingElement:
        coeffs = self.charpoly()
        return coeffs[-1] if self.nrows % 2 == 0 else -coeffs[-1]

    def compound(self, order: int) -> "RingMatrix":
        """
        The matrix of order x order minors, index subsets in lexicographic order.
        Order 0 gives [[1]].
        """
        subsets = list(itertools.combinations(range(self.nrows), order))
        if order == 0:
            return RingMatrix(self.ring, [[1]])
        col_subsets = list(itertools.combinations(range(self.ncols), order))
        return RingMatrix(
            self.ring,
            ([self.submatrix(rows, cols).det() for cols in col_subsets] for rows in subsets),
        )

    def valuation(self) -> int:
        """Smallest entry valuation, m for the zero matrix."""
        return min((x.valuation() for x in self.entries()), default=self.ring.precision)

    def residue(self) -> list[list[FiniteFieldElement]]:
        return [[x.residue() for x in row] for row in self.rows]

    def inverse(self) -> "RingMatrix":
        """
        Gauss-Jordan inverse with unit pivots.

        :raises NonUnit: If the matrix is not invertible over the ring.
        """
        if not self.is_square():
            raise NonUnit("Only square matrices are invertible")
        size = self.nrows
        ring = self.ring
        work = [
            list(row) + [ring.one if i == j else ring.zero for j in range(size)]
            for i, row in enumerate(self.rows)
        ]
        for col in range(size):
            pivot = next((i for i in range(col, size) if work[i][col].is_unit()), None)
            if pivot is None:
                raise NonUnit(f"Matrix is singular modulo {ring.p}")
            work[col], work[pivot] = work[pivot], work[col]
            factor = work[col][col].inverse()
            work[col] = [x * factor for x in work[col]]
            for i in range(size):
                if i != col and not work[i][col].is_zero():
                    scale = work[i][col]
                    work[i] = [x - scale * y for x, y in zip(work[i], work[col])]
        return RingMatrix(ring, (row[size:] for row in work))

    def change_precision(self, precision: int) -> "RingMatrix":
        target = galois_ring(self.ring.params, precision)
        return self.map(lambda x: x.change_precision(precision), target)

    def lift(self, precision: int) -> "RingMatrix":
        target = galois_ring(self.ring.params, precision)
        return self.map(lambda x: x.lift(precision), target)

    def to_coords(self) -> list[list[list[int]]]:
        return [[list(x.coords) for x in row] for row in self.rows]

    def elementary_divisor_valuations(self) -> list[int]:
        """
        Exponents of the elementary divisors over the local ring GR(p^m, d).

        Smith normal form reduction: the pivot is an entry of minimal valuation,
        the first one in row-major order; rows are cleared below and above it,
        after which its row and column carry nothing else and are dropped. An
        exponent equal to m means the divisor is zero modulo p^m, that is,
        undetermined at this precision.

        :return: Ascending exponents, min(nrows, ncols) of them.
        :rtype: list[int]
        """
        m = self.ring.precision
        work = [list(row) for row in self.rows]
        rows_left = list(range(self.nrows))
        cols_left = list(range(self.ncols))
        exponents = []
        while rows_left and cols_left:
            best = None
            for i in rows_left:
                for j in cols_left:
                    v = work[i][j].valuation()
                    if best is None or v < best[0]:
                        best = (v, i, j)
            v, i0, j0 = best
            if v >= m:
                exponents.extend([m] * min(len(rows_left), len(cols_left)))
                break
            inverse = work[i0][j0].divide_by_p_power(v).inverse()
            for i in rows_left:
                if i != i0 and not work[i][j0].is_zero():
                    factor = work[i][j0].divide_by_p_power(v) * inverse
                    work[i] = [x - factor * y for x, y in zip(work[i], work[i0])]
            exponents.append(v)
            rows_left.remove(i0)
            cols_left.remove(j0)
        return sorted(exponents)

    def det_valuation(self) -> int:
        """Valuation of the determinant, capped at m, from the elementary divisors."""
        return min(sum(self.elementary_divisor_valuations()), self.ring.precision)
