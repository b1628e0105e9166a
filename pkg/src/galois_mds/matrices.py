"""Square matrices over a Galois ring and MDS verification.

Determinants are division-free (cofactor expansion memoized on row/column
subsets) because Galois rings have zero divisors.  A matrix is MDS when every
square submatrix has a unit determinant.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator, Sequence

from .errors import ContextMismatchError, InvalidInputError
from .finite_field import FFElement, ff_first_singular_minor
from .galois_ring import GaloisRing, GRElement

EXHAUSTIVE = "exhaustive"
FAST = "fast"
FAST_FALLBACK = "fast->exhaustive"


class GRMatrix:
    """Immutable k x k matrix of elements of one Galois ring, row-major."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring: GaloisRing, rows: Sequence[Sequence[GRElement | int | Sequence[int]]]):
        k = len(rows)
        if k < 1:
            raise InvalidInputError("matrix order must be at least 1")
        if any(len(r) != k for r in rows):
            raise InvalidInputError(f"matrix is not square ({k} rows of lengths {[len(r) for r in rows]})")
        self.ring = ring
        self.rows = tuple(tuple(ring(e) for e in r) for r in rows)

    @classmethod
    def identity(cls, ring: GaloisRing, k: int) -> GRMatrix:
        return cls(ring, [[int(i == j) for j in range(k)] for i in range(k)])

    @classmethod
    def from_function(cls, ring: GaloisRing, k: int, fn: Callable[[int, int], GRElement]) -> GRMatrix:
        return cls(ring, [[fn(i, j) for j in range(k)] for i in range(k)])

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> GRElement:
        i, j = ij
        return self.rows[i][j]

    def __iter__(self) -> Iterator[tuple[GRElement, ...]]:
        return iter(self.rows)

    def entries(self) -> Iterator[GRElement]:
        for r in self.rows:
            yield from r

    def __eq__(self, other):
        if not isinstance(other, GRMatrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self):
        return hash(tuple(e.coeffs for e in self.entries()))

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in r) for r in self.rows)
        return f"GRMatrix[{self.order}]({body})"

    def __matmul__(self, other: GRMatrix) -> GRMatrix:
        return mat_mul(self, other)

    def det(self) -> GRElement:
        return mat_det(self)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> GRMatrix:
        return GRMatrix(self.ring, [[self.rows[i][j] for j in cols] for i in rows])

    def transpose(self) -> GRMatrix:
        return GRMatrix(self.ring, list(zip(*self.rows)))

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def map(self, fn: Callable[[GRElement], GRElement], ring: GaloisRing | None = None) -> GRMatrix:
        """Entry-wise image; ``ring`` is the codomain when it differs."""
        return GRMatrix(ring or self.ring, [[fn(e) for e in r] for r in self.rows])

    def reduce(self) -> list[list[FFElement]]:
        return [[e.reduce() for e in r] for r in self.rows]

    def all_units(self) -> bool:
        return all(e.is_unit() for e in self.entries())

    def distinct_entries(self) -> set[GRElement]:
        return set(self.entries())


def _check_compatible(a: GRMatrix, b: GRMatrix) -> None:
    if a.ring != b.ring:
        raise ContextMismatchError(f"{a.ring} vs {b.ring}")
    if a.order != b.order:
        raise InvalidInputError(f"order mismatch: {a.order} vs {b.order}")


def mat_mul(a: GRMatrix, b: GRMatrix) -> GRMatrix:
    _check_compatible(a, b)
    ring = a.ring
    cols = list(zip(*b.rows))
    out = []
    for row in a.rows:
        new_row = []
        for col in cols:
            acc = ring.zero
            for x, y in zip(row, col):
                acc = acc + x * y
            new_row.append(acc)
        out.append(new_row)
    return GRMatrix(ring, out)


class _MinorTable:
    """Memoized division-free determinants of square submatrices.

    ``det(rows, colmask)`` expands along the first listed row; results are
    cached per (row tuple, column bitmask), so every minor shared between
    larger determinants is computed once.
    """

    def __init__(self, matrix: GRMatrix):
        self.a = matrix.rows
        self.ring = matrix.ring
        self.cache: dict[tuple[tuple[int, ...], int], GRElement] = {}

    def det(self, rows: tuple[int, ...], colmask: int) -> GRElement:
        key = (rows, colmask)
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        r0 = rows[0]
        if len(rows) == 1:
            val = self.a[r0][colmask.bit_length() - 1]
        else:
            rest = rows[1:]
            val = self.ring.zero
            sign = 1
            c, m = 0, colmask
            while m:
                if m & 1:
                    term = self.a[r0][c] * self.det(rest, colmask & ~(1 << c))
                    val = val + term if sign > 0 else val - term
                    sign = -sign
                m >>= 1
                c += 1
        self.cache[key] = val
        return val


def _mask(cols: Sequence[int]) -> int:
    out = 0
    for c in cols:
        out |= 1 << c
    return out


def mat_det(a: GRMatrix) -> GRElement:
    k = a.order
    return _MinorTable(a).det(tuple(range(k)), (1 << k) - 1)


def iter_minors(k: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(rows, cols) index sets: sizes ascending, then rows, then columns, lexicographically."""
    for size in range(1, k + 1):
        for rs in combinations(range(k), size):
            for cs in combinations(range(k), size):
                yield rs, cs


def minor_count(k: int) -> int:
    return sum(1 for _ in iter_minors(k))


@dataclass(frozen=True)
class MDSVerdict:
    """Outcome of an MDS check; truthy iff the matrix is MDS."""

    is_mds: bool
    method: str
    singular_minor: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def __bool__(self):
        return self.is_mds


def first_singular_minor(a: GRMatrix) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    table = _MinorTable(a)
    for rs, cs in iter_minors(a.order):
        if not table.det(rs, _mask(cs)).is_unit():
            return rs, cs
    return None


def mat_is_mds_exhaustive(a: GRMatrix) -> MDSVerdict:
    bad = first_singular_minor(a)
    return MDSVerdict(bad is None, EXHAUSTIVE, bad)


def mat_is_mds_fast(a: GRMatrix) -> MDSVerdict:
    """Decide MDS over the residue field; only valid when every entry is a unit.

    Falls back to the exhaustive ring check otherwise, tagging the verdict.
    """
    if not a.all_units():
        verdict = mat_is_mds_exhaustive(a)
        return MDSVerdict(verdict.is_mds, FAST_FALLBACK, verdict.singular_minor)
    bad = ff_first_singular_minor(a.reduce())
    return MDSVerdict(bad is None, FAST, bad)


def mat_is_involutory(a: GRMatrix) -> bool:
    return mat_mul(a, a) == GRMatrix.identity(a.ring, a.order)
