"""Exact arithmetic in Z_{p^s} and Z_{p^s}[x].

Residues are canonical least nonnegative representatives.  Polynomials are
immutable tuples of residues in ascending degree with trailing zeros trimmed,
so the zero polynomial is the empty tuple and equality is structural.

Python integers are unbounded, so moduli of any size are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ContextMismatchError, InvalidDivisorError, InvalidInputError, NotAUnitError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order, by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class ZMod:
    """The residue ring Z_{p^s}."""

    p: int
    s: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidInputError(f"p = {self.p} is not prime")
        if self.s < 1:
            raise InvalidInputError(f"s = {self.s} must be positive")

    @property
    def q(self) -> int:
        return self.p**self.s

    def __call__(self, value: int) -> Residue:
        return Residue(value % self.q, self)

    def __repr__(self):
        return f"ZMod({self.p}^{self.s})"

    @property
    def residue_ring(self) -> ZMod:
        """Z_p, the target of the canonical projection."""
        return ZMod(self.p, 1)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return -a % self.q

    def is_unit(self, a: int) -> bool:
        return a % self.p != 0

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise NotAUnitError(f"{a % self.q} is not a unit modulo {self.q}")
        return pow(a, -1, self.q)

    def project(self, a: int) -> int:
        return a % self.p


@dataclass(frozen=True)
class Residue:
    """A single element of Z_{p^s}; operands must share the ring."""

    value: int
    ring: ZMod

    def __post_init__(self):
        if not 0 <= self.value < self.ring.q:
            raise InvalidInputError(f"{self.value} is not canonical modulo {self.ring.q}")

    def _check(self, other: Residue) -> None:
        if not isinstance(other, Residue):
            raise TypeError(f"expected Residue, got {type(other).__name__}")
        if other.ring != self.ring:
            raise ContextMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other: Residue) -> Residue:
        self._check(other)
        return Residue(self.ring.add(self.value, other.value), self.ring)

    def __sub__(self, other: Residue) -> Residue:
        self._check(other)
        return Residue(self.ring.sub(self.value, other.value), self.ring)

    def __mul__(self, other: Residue) -> Residue:
        self._check(other)
        return Residue(self.ring.mul(self.value, other.value), self.ring)

    def __neg__(self) -> Residue:
        return Residue(self.ring.neg(self.value), self.ring)

    def inverse(self) -> Residue:
        return Residue(self.ring.inv(self.value), self.ring)

    def project(self) -> Residue:
        return Residue(self.value % self.ring.p, self.ring.residue_ring)

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.value)


def _trim(coeffs: Iterable[int], q: int) -> tuple[int, ...]:
    out = [c % q for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class ZPoly:
    """Polynomial over Z_{p^s}, coefficients in ascending degree."""

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs: Iterable[int], ring: ZMod):
        self.ring = ring
        self.coeffs = _trim(coeffs, ring.q)

    @classmethod
    def monomial(cls, degree: int, ring: ZMod, coeff: int = 1) -> ZPoly:
        return cls([0] * degree + [coeff], ring)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def __eq__(self, other):
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        return f"ZPoly({format_poly(self.coeffs)} mod {self.ring.q})"

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def _check(self, other: ZPoly) -> None:
        if not isinstance(other, ZPoly):
            raise TypeError(f"expected ZPoly, got {type(other).__name__}")
        if other.ring != self.ring:
            raise ContextMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other: ZPoly) -> ZPoly:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ZPoly((self[i] + other[i] for i in range(n)), self.ring)

    def __sub__(self, other: ZPoly) -> ZPoly:
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return ZPoly((self[i] - other[i] for i in range(n)), self.ring)

    def __neg__(self) -> ZPoly:
        return ZPoly((-c for c in self.coeffs), self.ring)

    def __mul__(self, other: ZPoly) -> ZPoly:
        self._check(other)
        if self.is_zero() or other.is_zero():
            return ZPoly((), self.ring)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ZPoly(out, self.ring)

    def scale(self, c: int) -> ZPoly:
        return ZPoly((c * a for a in self.coeffs), self.ring)

    def monic(self) -> ZPoly:
        """Divide through by the leading coefficient, which must be a unit."""
        if self.is_zero() or not self.ring.is_unit(self.lead):
            raise InvalidDivisorError(f"leading coefficient of {self} is not a unit")
        return self.scale(self.ring.inv(self.lead))

    def __divmod__(self, divisor: ZPoly) -> tuple[ZPoly, ZPoly]:
        self._check(divisor)
        if divisor.is_zero() or not self.ring.is_unit(divisor.lead):
            raise InvalidDivisorError(f"cannot divide by {divisor}: leading coefficient is not a unit")
        q = self.ring.q
        lead_inv = self.ring.inv(divisor.lead)
        d = divisor.degree
        rem = list(self.coeffs)
        quot = [0] * max(len(rem) - d, 0)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k] * lead_inv % q
            if c:
                quot[k - d] = c
                for i, g in enumerate(divisor.coeffs):
                    rem[k - d + i] -= c * g
        return ZPoly(quot, self.ring), ZPoly(rem[:d], self.ring)

    def __floordiv__(self, divisor: ZPoly) -> ZPoly:
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: ZPoly) -> ZPoly:
        return divmod(self, divisor)[1]

    def project(self) -> ZPoly:
        """Coefficient-wise reduction modulo p."""
        return ZPoly(self.coeffs, self.ring.residue_ring)

    def powmod(self, e: int, modulus: ZPoly) -> ZPoly:
        result = ZPoly((1,), self.ring) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.ring.q
        return acc


def poly_gcd(f: ZPoly, g: ZPoly) -> ZPoly:
    """Monic gcd over a prime field (s = 1)."""
    if f.ring.s != 1:
        raise InvalidInputError("gcd is only defined here over Z_p")
    while not g.is_zero():
        f, g = g, f % g
    return f.monic() if not f.is_zero() else f


def poly_xgcd(f: ZPoly, g: ZPoly) -> tuple[ZPoly, ZPoly, ZPoly]:
    """Return (d, u, v) with u*f + v*g = d, d monic, over a prime field."""
    if f.ring.s != 1:
        raise InvalidInputError("extended gcd is only defined here over Z_p")
    zero, one = ZPoly((), f.ring), ZPoly((1,), f.ring)
    r0, r1, u0, u1, v0, v1 = f, g, one, zero, zero, one
    while not r1.is_zero():
        quot, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, u0 - quot * u1
        v0, v1 = v1, v0 - quot * v1
    if r0.is_zero():
        return r0, u0, v0
    c = f.ring.inv(r0.lead)
    return r0.scale(c), u0.scale(c), v0.scale(c)


# Dense quotient-ring kernels shared by the field and Galois ring layers.
# Elements are tuples of length m; the modulus must be monic of degree m.


def reduction_table(monic_modulus: Sequence[int], q: int) -> tuple[tuple[int, ...], ...]:
    """Rows r_k with x^(m+k) = sum_i r_k[i] x^i, for k = 0 .. m-2."""
    m = len(monic_modulus) - 1
    row = [-c % q for c in monic_modulus[:m]]
    rows = []
    for _ in range(max(m - 1, 0)):
        rows.append(tuple(row))
        top = row[-1]
        row = [0] + row[:-1]
        for i in range(m):
            row[i] = (row[i] - top * monic_modulus[i]) % q
    return tuple(rows)


def mul_reduced(
    a: Sequence[int], b: Sequence[int], table: Sequence[Sequence[int]], q: int
) -> tuple[int, ...]:
    m = len(a)
    prod = [0] * (2 * m - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
    res = prod[:m]
    for k in range(m - 1):
        c = prod[m + k] % q
        if c:
            row = table[k]
            for i in range(m):
                res[i] += c * row[i]
    return tuple(v % q for v in res)


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) if terms else "0"


def mat_inverse_mod(rows: Sequence[Sequence[int]], p: int, q: int) -> list[list[int]]:
    """Inverse of a square matrix over Z_q (q = p^s) by Gauss-Jordan with unit pivots.

    Over a local ring some entry of every column is a unit whenever the
    matrix is invertible, so pivoting on units never gets stuck.
    """
    n = len(rows)
    a = [[c % q for c in r] + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] % p), None)
        if pivot is None:
            raise NotAUnitError("matrix is singular modulo p")
        a[col], a[pivot] = a[pivot], a[col]
        inv = pow(a[col][col], -1, q)
        a[col] = [v * inv % q for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [(v - f * w) % q for v, w in zip(a[r], a[col])]
    return [r[n:] for r in a]
