"""MDS-preserving element-wise maps between Galois rings.

* ``frobenius_power``: sigma^(d*t), where d is the degree of a base subring
  (d = 1 for plain powers of sigma).
* ``scaled_automorphism``: f_{i,c}(a) = sigma^i(a) * c for a unit c.
* ``presentation_isomorphism``: transport between two presentations of the
  same Galois ring, xi_source -> xi_target^s_u, optionally scaled by c.

Each of these maps a matrix's determinant to a unit times an automorphic image
of it, so applying one entry-wise keeps an MDS matrix MDS.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Iterable

from .errors import ContextMismatchError, InvalidInputError, NoIsomorphismError
from .galois_ring import GaloisRing, GRElement
from .matrices import GRMatrix, mat_is_involutory


class MorphismKind(str, Enum):
    FROBENIUS_POWER = "frobenius_power"
    SCALED_AUTOMORPHISM = "scaled_automorphism"
    PRESENTATION_ISOMORPHISM = "presentation_isomorphism"


@dataclass(frozen=True)
class MorphismSpec:
    kind: MorphismKind
    source: GaloisRing
    target: GaloisRing
    index: int = 0
    scale: GRElement | None = None
    conjugate_exponent: int | None = None
    base_degree: int = 1

    def __post_init__(self):
        object.__setattr__(self, "kind", MorphismKind(self.kind))
        if self.scale is not None:
            if self.scale.ring != self.target:
                raise ContextMismatchError("scale must live in the target ring")
            if not self.scale.is_unit():
                raise InvalidInputError(f"scale c = {self.scale} is not a unit")
        if self.kind is MorphismKind.PRESENTATION_ISOMORPHISM:
            if self.conjugate_exponent is None:
                raise InvalidInputError("presentation isomorphism needs a conjugate exponent s_u")
            _check_same_parameters(self.source, self.target)
            if not _is_conjugate_exponent(self.source, self.target, self.conjugate_exponent):
                raise InvalidInputError(
                    f"s_u = {self.conjugate_exponent}: xi^s_u is not a root of the source's xi minimal polynomial"
                )
        else:
            if self.source != self.target:
                raise InvalidInputError(f"{self.kind.value} maps a ring to itself")
            if self.index < 0:
                raise InvalidInputError(f"index {self.index} must be nonnegative")
            if self.kind is MorphismKind.SCALED_AUTOMORPHISM and self.index >= self.source.m:
                raise InvalidInputError(f"Frobenius index {self.index} outside 0..{self.source.m - 1}")

    @property
    def is_pure(self) -> bool:
        """True when no (non-trivial) unit scaling is applied."""
        return self.scale is None or self.scale == self.target.one

    def __call__(self, a: GRElement) -> GRElement:
        if a.ring != self.source:
            raise ContextMismatchError(f"{a.ring} vs {self.source}")
        if self.kind is MorphismKind.PRESENTATION_ISOMORPHISM:
            image = self.source.from_xi_basis(
                self.source.to_xi_basis(a), xi_image=self.target.xi_power(self.conjugate_exponent)
            )
        elif self.kind is MorphismKind.SCALED_AUTOMORPHISM:
            image = self.source.frobenius(a, self.index)
        else:
            image = self.source.frobenius(a, self.base_degree * self.index)
        return image if self.scale is None else image * self.scale

    def signature(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Images of 1 and xi; the map is determined by these two values."""
        return self(self.source.one).coeffs, self(self.source.xi).coeffs


def _check_same_parameters(source: GaloisRing, target: GaloisRing) -> None:
    if (source.p, source.s, source.m) != (target.p, target.s, target.m):
        raise InvalidInputError(
            f"rings differ: (p, s, m) = {(source.p, source.s, source.m)} vs {(target.p, target.s, target.m)}"
        )


def _is_conjugate_exponent(source: GaloisRing, target: GaloisRing, s_u: int) -> bool:
    h = source.xi_minimal_polynomial()
    h_target = target.base  # same Z_{p^s}
    assert h.ring == h_target
    return not target.evaluate(h, target.xi_power(s_u))


def frobenius_power(ring: GaloisRing, t: int, base_degree: int = 1) -> MorphismSpec:
    return MorphismSpec(MorphismKind.FROBENIUS_POWER, ring, ring, index=t, base_degree=base_degree)


def scaled_automorphism(ring: GaloisRing, i: int, c: GRElement | None = None) -> MorphismSpec:
    return MorphismSpec(MorphismKind.SCALED_AUTOMORPHISM, ring, ring, index=i, scale=c)


def presentation_isomorphism(
    source: GaloisRing, target: GaloisRing, s_u: int, c: GRElement | None = None
) -> MorphismSpec:
    return MorphismSpec(
        MorphismKind.PRESENTATION_ISOMORPHISM, source, target, scale=c, conjugate_exponent=s_u
    )


def find_conjugate_exponents(source: GaloisRing, target: GaloisRing) -> list[int]:
    """Every s_u in [1, p^m - 2] with h(xi_target^s_u) = 0, h the minimal polynomial of xi_source.

    When the class of x is already Teichmüller (as for Conway-style moduli)
    h is the normalized source modulus itself.
    """
    _check_same_parameters(source, target)
    n = source.teichmuller_order
    found = [e for e in range(1, max(n, 2)) if _is_conjugate_exponent(source, target, e)]
    if not found:
        raise NoIsomorphismError(f"no conjugate root of the source generator in {target}")
    for e in found:
        # e = e' * p^i with gcd(e', p^m - 1) = 1
        assert gcd(e, n) == 1, e
    return found


def apply_morphism_to_matrix(f: MorphismSpec, a: GRMatrix) -> GRMatrix:
    if a.ring != f.source:
        raise ContextMismatchError(f"matrix lives in {a.ring}, morphism starts at {f.source}")
    return a.map(f, ring=f.target)


def inverse(f: MorphismSpec) -> MorphismSpec:
    src = f.source
    if f.kind is MorphismKind.SCALED_AUTOMORPHISM:
        back = (src.m - f.index) % src.m
        c = None if f.scale is None else src.frobenius(f.scale.inverse(), back)
        return scaled_automorphism(src, back, c)
    if f.kind is MorphismKind.FROBENIUS_POWER:
        return frobenius_power(src, (-f.base_degree * f.index) % src.m)
    n = src.teichmuller_order
    back_exp = pow(f.conjugate_exponent, -1, n) if n > 1 else 1
    unscaled = presentation_isomorphism(f.target, src, back_exp)
    c = None if f.scale is None else unscaled(f.scale.inverse())
    return presentation_isomorphism(f.target, src, back_exp, c)


def compose_scaled(f: MorphismSpec, g: MorphismSpec) -> MorphismSpec:
    """f o g for two scaled automorphisms: f_{i,c} o f_{j,d} = f_{i+j, sigma^i(d) c}."""
    for h in (f, g):
        if h.kind is not MorphismKind.SCALED_AUTOMORPHISM:
            raise InvalidInputError("compose_scaled takes scaled automorphisms")
    ring = f.source
    c = f.scale or ring.one
    d = g.scale or ring.one
    return scaled_automorphism(ring, (f.index + g.index) % ring.m, ring.frobenius(d, f.index) * c)


@dataclass(frozen=True)
class MorphismFamily:
    """A deduplicated family of maps together with its raw index-set size."""

    morphisms: tuple[MorphismSpec, ...]
    raw_count: int
    unit_count: int

    @property
    def unique_count(self) -> int:
        return len(self.morphisms)

    def __len__(self):
        return len(self.morphisms)

    def __iter__(self):
        return iter(self.morphisms)


def _dedup(specs: Iterable[MorphismSpec]) -> tuple[tuple[MorphismSpec, ...], int]:
    seen = set()
    out = []
    raw = 0
    for f in specs:
        raw += 1
        sig = f.signature()
        if sig not in seen:
            seen.add(sig)
            out.append(f)
    return tuple(out), raw


def enumerate_scaled_automorphisms(ring: GaloisRing) -> MorphismFamily:
    """f_{i,c} for i in 0..m-1 and every unit c, in (i, c) order."""
    units = list(ring.units())
    specs, raw = _dedup(scaled_automorphism(ring, i, c) for i in range(ring.m) for c in units)
    return MorphismFamily(specs, raw, len(units))


def enumerate_scaled_isomorphisms(source: GaloisRing, target: GaloisRing) -> MorphismFamily:
    """xi_source -> xi_target^s_u scaled by every unit c of the target."""
    exps = find_conjugate_exponents(source, target)
    units = list(target.units())
    specs, raw = _dedup(presentation_isomorphism(source, target, e, c) for e in exps for c in units)
    return MorphismFamily(specs, raw, len(units))


def check_involutory_preserved(a: GRMatrix, f: MorphismSpec) -> bool:
    """mat_is_involutory(a) implies mat_is_involutory(f(a)), for unscaled maps."""
    if not f.is_pure:
        raise InvalidInputError("involution is only preserved by ring automorphisms; drop the scale")
    return not mat_is_involutory(a) or mat_is_involutory(apply_morphism_to_matrix(f, a))


class ExtensionContext:
    """GR(p^s, p^{sml}) viewed as an extension of degree l over GR(p^s, p^{sm}).

    The base embeds by sending xi_base to the conjugate of
    xi_ext^((p^{ml} - 1)/(p^m - 1)) that is a root of xi_base's minimal
    polynomial, extended Z_{p^s}-linearly on the xi_base power basis.
    """

    def __init__(self, base: GaloisRing, ext: GaloisRing):
        if (base.p, base.s) != (ext.p, ext.s):
            raise InvalidInputError("base and extension must share p and s")
        if ext.m % base.m or ext.m == base.m:
            raise InvalidInputError(f"extension degree {ext.m} is not a proper multiple of {base.m}")
        self.base = base
        self.ext = ext
        self.ext_degree = ext.m // base.m
        n_base = base.teichmuller_order
        g = ext.xi_power(ext.teichmuller_order // n_base)
        h = base.xi_minimal_polynomial()
        for e in range(1, max(n_base, 2)):
            if gcd(e, n_base) == 1 and not ext.evaluate(h, g**e):
                self.xi_image = g**e
                break
        else:  # pragma: no cover - unreachable for valid Galois rings
            raise NoIsomorphismError("base generator has no conjugate in the extension")

    def embed(self, a: GRElement) -> GRElement:
        if a.ring != self.base:
            raise ContextMismatchError(f"{a.ring} vs {self.base}")
        return self.base.from_xi_basis(self.base.to_xi_basis(a), xi_image=self.xi_image)

    def automorphism(self, t: int) -> MorphismSpec:
        """phi^t, the automorphism of the extension fixing the base."""
        if not 1 <= t <= self.ext_degree - 1:
            raise InvalidInputError(f"t = {t} outside 1..{self.ext_degree - 1}")
        return frobenius_power(self.ext, t, base_degree=self.base.m)


def frobenius_ext_auto(ctx: ExtensionContext, a: GRElement, t: int) -> GRElement:
    """phi^t(a): xi^j -> xi^(j p^(m t)) on the extension, base coefficients fixed."""
    return ctx.automorphism(t)(a)
