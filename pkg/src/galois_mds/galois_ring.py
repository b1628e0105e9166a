"""Galois rings GR(p^s, p^{sm}) = Z_{p^s}[x]/(f) with f basic irreducible.

Every element is stored as its m coefficients on the power basis of the class
of x.  A ring context is immutable once built: the Teichmüller generator xi,
the Teichmüller set and the residue-to-digit map are all computed eagerly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    ContextMismatchError,
    GaloisMDSError,
    InvalidInputError,
    NoGeneratorError,
    NotAUnitError,
    NotBasicIrreducibleError,
)
from .finite_field import FFElement, FiniteField, is_irreducible, is_primitive
from .zmod_poly import (
    ZMod,
    ZPoly,
    format_poly,
    mat_inverse_mod,
    mul_reduced,
    prime_factors,
    reduction_table,
)

UNIT = "unit"
NILPOTENT = "nilpotent"


class GaloisRing:
    """The ring Z_{p^s}[x]/(f).

    ``modulus`` may be non-monic as long as its leading coefficient is a unit;
    it is normalized to monic.  The coefficients as supplied are kept for
    serialization.
    """

    def __init__(self, p: int, s: int, modulus: Sequence[int] | ZPoly):
        base = ZMod(p, s)
        raw = modulus.coeffs if isinstance(modulus, ZPoly) else tuple(int(c) for c in modulus)
        f = ZPoly(raw, base)
        if f.degree < 1:
            raise InvalidInputError("modulus must have degree >= 1")
        if not base.is_unit(f.lead):
            raise InvalidInputError(f"leading coefficient {f.lead} of the modulus is not a unit mod {base.q}")
        self.p, self.s, self.q = p, s, base.q
        self.base = base
        self.raw_modulus = tuple(c % base.q for c in f.coeffs)
        self.modulus = f.monic()
        self.m = self.modulus.degree
        reduced = self.modulus.project()
        if not is_irreducible(reduced):
            raise NotBasicIrreducibleError(
                f"{format_poly(self.modulus.coeffs)} is not basic irreducible: "
                f"its reduction {format_poly(reduced.coeffs)} factors over Z_{p}"
            )
        self.residue_field = FiniteField(p, reduced)
        self.is_basic_primitive = is_primitive(reduced)
        self._table = reduction_table(self.modulus.coeffs, self.q)
        self._key = (p, s, self.modulus.coeffs)

        self.teichmuller_order = p**self.m - 1
        self.xi = self._find_xi()
        self._teich = self._build_teichmuller()
        self._digit_index = {self.reduce(t).coeffs: i for i, t in enumerate(self._teich)}
        self._xi_basis_inv = self._build_xi_basis()

    # -- construction helpers -------------------------------------------------

    def _find_xi(self) -> GRElement:
        if self.is_basic_primitive:
            return teichmuller_generator(self)
        # any basic irreducible modulus: lift a primitive element of the residue field
        n = self.teichmuller_order
        factors = prime_factors(n) if n > 1 else []
        for e in self.residue_field.elements():
            if e and all(e ** (n // r) != 1 for r in factors):
                xi = self.teichmuller_lift(self.lift(e))
                if self.order(xi) == n:
                    return xi
        raise NoGeneratorError(f"no element of order {n} in {self}")

    def _build_teichmuller(self) -> tuple[GRElement, ...]:
        out = [self.zero, self.one]
        t = self.one
        for _ in range(self.teichmuller_order - 1):
            t = t * self.xi
            out.append(t)
        return tuple(out)

    def _build_xi_basis(self) -> list[list[int]]:
        # column i holds the x-basis coordinates of xi^i
        cols = [self.xi_power(i).coeffs for i in range(self.m)]
        rows = [[cols[j][i] for j in range(self.m)] for i in range(self.m)]
        return mat_inverse_mod(rows, self.p, self.q)

    # -- identity ---------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, GaloisRing):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"GaloisRing({self.p}^{self.s}, {self.p}^{self.s * self.m}; {format_poly(self.modulus.coeffs)})"

    def descriptor(self) -> dict:
        return {"p": self.p, "s": self.s, "modulus": list(self.raw_modulus)}

    @classmethod
    def from_descriptor(cls, desc: dict) -> GaloisRing:
        return cls(desc["p"], desc["s"], desc["modulus"])

    # -- element factories ----------------------------------------------------

    def __call__(self, value: Sequence[int] | int) -> GRElement:
        if isinstance(value, GRElement):
            if value.ring != self:
                raise ContextMismatchError(f"{value.ring} vs {self}")
            return value
        if isinstance(value, int):
            value = (value,)
        coeffs = tuple(value)
        if len(coeffs) > self.m:
            poly = ZPoly(coeffs, self.base) % self.modulus
            coeffs = poly.coeffs
        q = self.q
        return GRElement(self, tuple(c % q for c in coeffs) + (0,) * (self.m - len(coeffs)))

    @property
    def zero(self) -> GRElement:
        return GRElement(self, (0,) * self.m)

    @property
    def one(self) -> GRElement:
        return self(1)

    @property
    def x(self) -> GRElement:
        """The class of x (equal to xi only when x is already Teichmüller)."""
        return self((0, 1))

    def xi_power(self, k: int) -> GRElement:
        return self.xi ** (k % self.teichmuller_order)

    @property
    def cardinality(self) -> int:
        return self.q**self.m

    @property
    def unit_count(self) -> int:
        return self.p ** ((self.s - 1) * self.m) * self.teichmuller_order

    @property
    def nilpotent_count(self) -> int:
        return self.p ** ((self.s - 1) * self.m)

    def elements(self) -> Iterator[GRElement]:
        q, m = self.q, self.m
        for n in range(q**m):
            digits = []
            for _ in range(m):
                n, r = divmod(n, q)
                digits.append(r)
            yield GRElement(self, tuple(digits))

    def units(self) -> Iterator[GRElement]:
        return (a for a in self.elements() if a.is_unit())

    def random_element(self, rng: random.Random) -> GRElement:
        return GRElement(self, tuple(rng.randrange(self.q) for _ in range(self.m)))

    def random_unit(self, rng: random.Random) -> GRElement:
        while True:
            a = self.random_element(rng)
            if a.is_unit():
                return a

    def random_nilpotent(self, rng: random.Random) -> GRElement:
        return self(tuple(self.p * rng.randrange(self.q // self.p) for _ in range(self.m)))

    # -- structure maps ---------------------------------------------------------

    def reduce(self, a: GRElement) -> FFElement:
        """The residue map onto F_{p^m}."""
        p = self.p
        return FFElement(self.residue_field, tuple(c % p for c in a.coeffs))

    def lift(self, e: FFElement) -> GRElement:
        """Coefficient-wise lift of a residue-field element (not Teichmüller)."""
        return self(e.coeffs)

    def teichmuller_lift(self, a: GRElement) -> GRElement:
        """The member of the Teichmüller set congruent to ``a`` modulo p."""
        t = a
        for _ in range(self.s):
            nxt = t ** (self.teichmuller_order + 1)
            if nxt == t:
                return t
            t = nxt
        return t

    def teichmuller_set(self) -> tuple[GRElement, ...]:
        """[0, 1, xi, xi^2, ..., xi^(p^m - 2)]."""
        return self._teich

    def teichmuller_index(self, a: GRElement) -> int | None:
        """Position of ``a`` in :meth:`teichmuller_set`, or None if not a member."""
        i = self._digit_index[self.reduce(a).coeffs]
        return i if self._teich[i] == a else None

    def teichmuller_exponent(self, a: GRElement) -> int | None:
        """k with a = xi^k for a nonzero Teichmüller element, else None."""
        i = self.teichmuller_index(a)
        return None if i is None or i == 0 else i - 1

    def padic_digits(self, a: GRElement) -> tuple[int, ...]:
        """Teichmüller-set indices of the digits t_0..t_{s-1} with a = sum p^i t_i."""
        out = []
        cur = a.coeffs
        p = self.p
        for _ in range(self.s):
            idx = self._digit_index[tuple(c % p for c in cur)]
            digit = self._teich[idx].coeffs
            diff = [c - d for c, d in zip(cur, digit)]
            if any(c % p for c in diff):
                raise GaloisMDSError("p-adic decomposition: remainder not divisible by p")
            cur = tuple((c % self.q) // p for c in diff)
            out.append(idx)
        return tuple(out)

    def padic_decompose(self, a: GRElement) -> PAdicDigits:
        return PAdicDigits(self, self.padic_digits(a))

    def frobenius(self, a: GRElement, times: int = 1) -> GRElement:
        """sigma^times(a), raising every p-adic digit to the p-th power."""
        times %= self.m
        if times == 0:
            return a
        n = self.teichmuller_order
        shift = self.p**times
        acc = [0] * self.m
        weight = 1
        for idx in self.padic_digits(a):
            if idx:
                image = self._teich[(idx - 1) * shift % n + 1].coeffs
                for i, c in enumerate(image):
                    acc[i] += weight * c
            weight *= self.p
        return self(acc)

    def order(self, a: GRElement) -> int:
        """Multiplicative order of a unit."""
        if not a.is_unit():
            raise NotAUnitError(f"{a} is nilpotent and has no multiplicative order")
        n = self.unit_count
        for r in prime_factors(n):
            while n % r == 0 and a ** (n // r) == self.one:
                n //= r
        return n

    def to_xi_basis(self, a: GRElement) -> tuple[int, ...]:
        """Coordinates c with a = sum c_i xi^i."""
        q = self.q
        return tuple(sum(r[j] * a.coeffs[j] for j in range(self.m)) % q for r in self._xi_basis_inv)

    def from_xi_basis(self, coords: Sequence[int], xi_image: GRElement | None = None) -> GRElement:
        """sum c_i g^i where g defaults to xi; g may live in another ring."""
        g = self.xi if xi_image is None else xi_image
        acc = g.ring.zero
        power = g.ring.one
        for c in coords:
            acc = acc + power * c
            power = power * g
        return acc

    def xi_minimal_polynomial(self) -> ZPoly:
        """Monic degree-m polynomial over Z_{p^s} with xi as a root."""
        c = self.to_xi_basis(self.xi**self.m)
        return ZPoly([-v for v in c] + [1], self.base)

    def evaluate(self, poly: ZPoly, a: GRElement) -> GRElement:
        acc = self.zero
        for c in reversed(poly.coeffs):
            acc = acc * a + c
        return acc

    def _mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return mul_reduced(a, b, self._table, self.q)


def teichmuller_generator(ring: GaloisRing) -> GRElement:
    """Teichmüller lift of the class of x, of order p^m - 1.

    Requires a basic primitive modulus.
    """
    if not ring.is_basic_primitive:
        raise NoGeneratorError(f"{ring} modulus is not basic primitive; x does not reduce to a generator")
    xi = ring.teichmuller_lift(ring.x)
    n = ring.teichmuller_order
    if xi ** n != ring.one or any(xi ** (n // r) == ring.one for r in prime_factors(n) if n > 1):
        raise NoGeneratorError(f"Teichmüller lift of x has the wrong order in {ring}")
    return xi


class GRElement:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: GaloisRing, coeffs: tuple[int, ...]):
        self.ring = ring
        self.coeffs = coeffs

    def _coerce(self, other) -> GRElement:
        if isinstance(other, int):
            return self.ring(other)
        if not isinstance(other, GRElement):
            raise TypeError(f"cannot combine GRElement with {type(other).__name__}")
        if other.ring is not self.ring and other.ring != self.ring:
            raise ContextMismatchError(f"{self.ring} vs {other.ring}")
        return other

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring(other)
        if not isinstance(other, GRElement):
            return NotImplemented
        return self.coeffs == other.coeffs and (self.ring is other.ring or self.ring == other.ring)

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"GRElement({format_poly(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other) -> GRElement:
        other = self._coerce(other)
        q = self.ring.q
        return GRElement(self.ring, tuple((a + b) % q for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other) -> GRElement:
        other = self._coerce(other)
        q = self.ring.q
        return GRElement(self.ring, tuple((a - b) % q for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other) -> GRElement:
        return self._coerce(other) - self

    def __neg__(self) -> GRElement:
        q = self.ring.q
        return GRElement(self.ring, tuple(-a % q for a in self.coeffs))

    def __mul__(self, other) -> GRElement:
        if isinstance(other, int):
            q = self.ring.q
            return GRElement(self.ring, tuple(a * other % q for a in self.coeffs))
        other = self._coerce(other)
        return GRElement(self.ring, self.ring._mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> GRElement:
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        result = self.ring.one
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other) -> GRElement:
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> GRElement:
        return self._coerce(other) * self.inverse()

    def is_unit(self) -> bool:
        p = self.ring.p
        return any(c % p for c in self.coeffs)

    def is_nilpotent(self) -> bool:
        return not self.is_unit()

    def classify(self) -> str:
        return UNIT if self.is_unit() else NILPOTENT

    def reduce(self) -> FFElement:
        return self.ring.reduce(self)

    def inverse(self) -> GRElement:
        """Invert in the residue field, lift, then Newton-refine b <- b(2 - ab)."""
        if not self.is_unit():
            raise NotAUnitError(f"{self} is nilpotent in {self.ring}")
        ring = self.ring
        b = ring.lift(self.reduce().inverse())
        for _ in range(ring.s.bit_length() + 1):
            ab = self * b
            if ab == ring.one:
                return b
            b = b * (2 - ab)
        raise GaloisMDSError(f"Newton inversion did not converge for {self}")

    def frobenius(self, times: int = 1) -> GRElement:
        return self.ring.frobenius(self, times)

    def order(self) -> int:
        return self.ring.order(self)


@dataclass(frozen=True)
class PAdicDigits:
    """Digits t_0..t_{s-1} in the Teichmüller set, stored as set indices."""

    ring: GaloisRing
    indices: tuple[int, ...]

    @property
    def digits(self) -> tuple[GRElement, ...]:
        teich = self.ring.teichmuller_set()
        return tuple(teich[i] for i in self.indices)

    def recompose(self) -> GRElement:
        acc = self.ring.zero
        for i, t in enumerate(self.digits):
            acc = acc + t * self.ring.p**i
        return acc
