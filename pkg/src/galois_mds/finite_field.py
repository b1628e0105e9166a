"""The residue field F_{p^m} = Z_p[x]/(g) and irreducibility / primitivity tests."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence

from .errors import ContextMismatchError, InvalidInputError, NotAUnitError
from .zmod_poly import ZMod, ZPoly, mul_reduced, poly_gcd, poly_xgcd, prime_factors, reduction_table, format_poly


def _check_prime_field_poly(g: ZPoly) -> None:
    if g.ring.s != 1:
        raise InvalidInputError(f"expected a polynomial over Z_p, got one over Z_{g.ring.q}")
    if g.degree < 1:
        raise InvalidInputError(f"{g} is constant")


def is_irreducible(g: ZPoly) -> bool:
    """Rabin-style test: g is irreducible iff gcd(g, x^(p^d) - x) = 1 for d <= deg/2."""
    _check_prime_field_poly(g)
    g = g.monic()
    p, n = g.ring.p, g.degree
    x = ZPoly((0, 1), g.ring)
    power = x
    for _ in range(n // 2):
        power = power.powmod(p, g)
        if poly_gcd(g, power - x).degree > 0:
            return False
    return True


def is_primitive(g: ZPoly) -> bool:
    """True iff x has multiplicative order p^m - 1 modulo the irreducible g."""
    _check_prime_field_poly(g)
    if not is_irreducible(g):
        raise InvalidInputError(f"{g} is reducible, primitivity is undefined")
    g = g.monic()
    order = g.ring.p**g.degree - 1
    x = ZPoly((0, 1), g.ring)
    one = ZPoly((1,), g.ring) % g
    if x.powmod(order, g) != one:
        return False
    return all(x.powmod(order // r, g) != one for r in prime_factors(order))


# fields up to this order memoize products (at most order^2 entries)
_PRODUCT_CACHE_LIMIT = 1024


class FiniteField:
    """F_{p^m} presented as Z_p[x]/(g) with g irreducible (normalized monic)."""

    def __init__(self, p: int, modulus: Sequence[int] | ZPoly):
        ring = ZMod(p, 1)
        g = modulus if isinstance(modulus, ZPoly) else ZPoly(modulus, ring)
        if g.ring != ring:
            g = ZPoly(g.coeffs, ring)
        if g.degree < 1:
            raise InvalidInputError("field modulus must have degree >= 1")
        if not is_irreducible(g):
            raise InvalidInputError(f"{g} is reducible over Z_{p}")
        self.p = p
        self.modulus = g.monic()
        self.m = self.modulus.degree
        self.order = p**self.m
        self._table = reduction_table(self.modulus.coeffs, p)
        self._inverses: dict[tuple[int, ...], tuple[int, ...]] = {}
        self._products: dict[tuple[tuple[int, ...], tuple[int, ...]], tuple[int, ...]] = {}
        self.zero = FFElement(self, (0,) * self.m)
        self.one = FFElement(self, (1,) + (0,) * (self.m - 1))

    def __eq__(self, other):
        if not isinstance(other, FiniteField):
            return NotImplemented
        return self.p == other.p and self.modulus == other.modulus

    def __hash__(self):
        return hash(("FF", self.p, self.modulus.coeffs))

    def __repr__(self):
        return f"FiniteField({self.p}^{self.m}, {format_poly(self.modulus.coeffs)})"

    def __call__(self, coeffs: Sequence[int] | int) -> FFElement:
        if isinstance(coeffs, int):
            coeffs = [coeffs]
        poly = ZPoly(coeffs, ZMod(self.p, 1)) % self.modulus
        return FFElement(self, poly.coeffs + (0,) * (self.m - len(poly.coeffs)))

    @property
    def gen(self) -> FFElement:
        """The class of x."""
        return self((0, 1))

    def elements(self) -> Iterator[FFElement]:
        for n in range(self.order):
            digits = []
            for _ in range(self.m):
                n, r = divmod(n, self.p)
                digits.append(r)
            yield FFElement(self, tuple(digits))

    def _mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        if self.order > _PRODUCT_CACHE_LIMIT:
            return mul_reduced(a, b, self._table, self.p)
        key = (a, b)
        hit = self._products.get(key)
        if hit is None:
            hit = self._products[key] = mul_reduced(a, b, self._table, self.p)
        return hit


class FFElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other) -> FFElement:
        if isinstance(other, int):
            return self.field(other)
        if not isinstance(other, FFElement):
            raise TypeError(f"cannot combine FFElement with {type(other).__name__}")
        if other.field is not self.field and other.field != self.field:
            raise ContextMismatchError(f"{self.field} vs {other.field}")
        return other

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field(other)
        if not isinstance(other, FFElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"FFElement({format_poly(self.coeffs)})"

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other) -> FFElement:
        other = self._coerce(other)
        p = self.field.p
        return FFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other) -> FFElement:
        other = self._coerce(other)
        p = self.field.p
        return FFElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other) -> FFElement:
        return self._coerce(other) - self

    def __neg__(self) -> FFElement:
        p = self.field.p
        return FFElement(self.field, tuple(-a % p for a in self.coeffs))

    def __mul__(self, other) -> FFElement:
        other = self._coerce(other)
        return FFElement(self.field, self.field._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> FFElement:
        if not self:
            raise NotAUnitError("0 has no inverse in a field")
        cache = self.field._inverses
        hit = cache.get(self.coeffs)
        if hit is None:
            ring = ZMod(self.field.p, 1)
            d, u, _ = poly_xgcd(ZPoly(self.coeffs, ring), self.field.modulus)
            assert d.coeffs == (1,)
            hit = cache[self.coeffs] = self.field(u.coeffs).coeffs
        return FFElement(self.field, hit)

    def __truediv__(self, other) -> FFElement:
        return self * self._coerce(other).inverse()

    def __pow__(self, e: int) -> FFElement:
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        result = self.field.one
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


def ff_det(rows: Sequence[Sequence[FFElement]]) -> FFElement:
    """Determinant over the field by Gaussian elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        raise InvalidInputError("empty matrix")
    field = a[0][0].field
    det = field.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return field.zero
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det = det * a[col][col]
        inv = a[col][col].inverse()
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def ff_first_singular_minor(
    rows: Sequence[Sequence[FFElement]],
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Row/column index sets of the first singular square submatrix, or None.

    Sizes ascend; row subsets then column subsets in lexicographic order.
    """
    k = len(rows)
    if any(len(r) != k for r in rows):
        raise InvalidInputError("matrix is not square")
    for size in range(1, k + 1):
        for rs in combinations(range(k), size):
            for cs in combinations(range(k), size):
                if not ff_det([[rows[i][j] for j in cs] for i in rs]):
                    return rs, cs
    return None


def ff_matrix_all_minors_nonzero(rows: Sequence[Sequence[FFElement]]) -> bool:
    return ff_first_singular_minor(rows) is None
