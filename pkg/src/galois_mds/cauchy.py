"""Cauchy-style MDS constructions over Galois rings.

Six kinds are supported:

``type1_sub``
    1/(x_i - y_j) with distinct x, y in the nonzero Teichmüller set (TYPE-I).
``second_kind``
    1/(x_i + y_j), odd p, distinct x, y in the half Teichmüller set tau'.
``type2_nilshift``
    1/(x_i + x_j + l), odd p, distinct x in tau', l nilpotent (TYPE-II).
``char2_second_kind``
    1/(x_i + y_j) over characteristic 2^s with s >= 2, x, y in the Teichmüller set.
``exponent_constrained``
    1/(xi^sigma_i + xi^eta_j), odd p, with sigma_i - eta_j != (p^m - 1)/2.
``generalized``
    w_i v_j / (x_i - y_j) with TYPE-I nodes and unit scalings.

Hypotheses are validated eagerly: every violated condition is collected and
reported together before any inversion happens.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .errors import ConstructionRejected, InvalidInputError
from .galois_ring import GaloisRing, GRElement
from .matrices import GRMatrix


class CauchyKind(str, Enum):
    TYPE1_SUB = "type1_sub"
    SECOND_KIND = "second_kind"
    TYPE2_NILSHIFT = "type2_nilshift"
    CHAR2_SECOND_KIND = "char2_second_kind"
    EXPONENT_CONSTRAINED = "exponent_constrained"
    GENERALIZED = "generalized"


LABELS = {
    CauchyKind.TYPE1_SUB: "TYPE-I Cauchy 1/(x_i - y_j) over the nonzero Teichmuller set",
    CauchyKind.SECOND_KIND: "second-kind Cauchy 1/(x_i + y_j) over the half Teichmuller set tau' (p odd)",
    CauchyKind.TYPE2_NILSHIFT: "TYPE-II Cauchy 1/(x_i + x_j + l) over tau' with l nilpotent (p odd)",
    CauchyKind.CHAR2_SECOND_KIND: "second-kind Cauchy 1/(x_i + y_j) in characteristic 2^s, s >= 2",
    CauchyKind.EXPONENT_CONSTRAINED: "second-kind Cauchy with exponent gaps sigma_i - eta_j != (p^m - 1)/2 (p odd)",
    CauchyKind.GENERALIZED: "generalized Cauchy w_i v_j / (x_i - y_j) with unit scalings",
}


@dataclass(frozen=True)
class CauchySpec:
    kind: CauchyKind
    xs: tuple[GRElement, ...] = ()
    ys: tuple[GRElement, ...] | None = None
    nilpotent_shift: GRElement | None = None
    row_units: tuple[GRElement, ...] | None = None
    col_units: tuple[GRElement, ...] | None = None
    sigma: tuple[int, ...] | None = None
    eta: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", CauchyKind(self.kind))
        for name in ("xs", "ys", "row_units", "col_units", "sigma", "eta"):
            val = getattr(self, name)
            if val is not None:
                object.__setattr__(self, name, tuple(val))

    @property
    def order(self) -> int:
        if self.kind is CauchyKind.EXPONENT_CONSTRAINED and not self.xs and self.sigma is not None:
            return len(self.sigma)
        return len(self.xs)

    def subspec(self, rows: Sequence[int], cols: Sequence[int]) -> CauchySpec:
        """Spec of the submatrix on the given rows and columns."""
        if self.kind is CauchyKind.TYPE2_NILSHIFT:
            if list(rows) != list(cols):
                raise InvalidInputError("a TYPE-II sub-spec needs identical row and column sets")
            return CauchySpec(self.kind, tuple(self.xs[i] for i in rows), nilpotent_shift=self.nilpotent_shift)

        def pick(seq, idx):
            return None if seq is None else tuple(seq[i] for i in idx)

        return CauchySpec(
            self.kind,
            pick(self.xs, rows) if self.xs else (),
            pick(self.ys, cols),
            self.nilpotent_shift,
            pick(self.row_units, rows),
            pick(self.col_units, cols),
            pick(self.sigma, rows),
            pick(self.eta, cols),
        )


def tau_prime(ring: GaloisRing) -> tuple[GRElement, ...]:
    """[0, 1, xi, ..., xi^B] with B = floor((p^m - 2)/2) = (p^m - 3)/2, odd p only.

    1 + xi^d is a non-unit exactly when d = (p^m - 1)/2, so B stops one short.
    """
    if ring.p == 2:
        raise InvalidInputError("tau' is only defined for odd characteristic")
    bound = (ring.teichmuller_order - 2) // 2
    return ring.teichmuller_set()[: bound + 2]


def xi_powers(ring: GaloisRing, exponents: Sequence[int]) -> tuple[GRElement, ...]:
    return tuple(ring.xi_power(e) for e in exponents)


def consecutive_nodes(ring: GaloisRing, k: int, start: int = 0) -> tuple[tuple[GRElement, ...], tuple[GRElement, ...]]:
    """x_i = xi^(start+i), y_j = xi^(start+k+j) for i, j < k."""
    return xi_powers(ring, range(start, start + k)), xi_powers(ring, range(start + k, start + 2 * k))


@dataclass
class _Nodes:
    xs: tuple[GRElement, ...]
    ys: tuple[GRElement, ...]
    errors: list[str] = field(default_factory=list)


def _resolve_nodes(spec: CauchySpec, ring: GaloisRing) -> _Nodes:
    errors: list[str] = []
    xs, ys = spec.xs, spec.ys
    if spec.kind is CauchyKind.EXPONENT_CONSTRAINED:
        if spec.sigma is None or spec.eta is None:
            raise InvalidInputError("exponent_constrained needs sigma and eta exponent lists")
        derived_x, derived_y = xi_powers(ring, spec.sigma), xi_powers(ring, spec.eta)
        if xs and tuple(xs) != derived_x:
            errors.append("xs disagree with xi^sigma")
        if ys and tuple(ys) != derived_y:
            errors.append("ys disagree with xi^eta")
        xs, ys = derived_x, derived_y
    elif spec.kind is CauchyKind.TYPE2_NILSHIFT:
        if spec.nilpotent_shift is None:
            raise InvalidInputError("type2_nilshift needs a nilpotent shift l")
        ys = tuple(x + spec.nilpotent_shift for x in xs)
    elif ys is None:
        raise InvalidInputError(f"{spec.kind.value} needs ys")
    for e in tuple(xs) + tuple(ys) + (spec.nilpotent_shift,) * (spec.nilpotent_shift is not None):
        if e.ring != ring:
            raise InvalidInputError(f"node {e} does not belong to {ring}")
    if not xs:
        raise InvalidInputError("at least one node is required")
    if len(xs) != len(ys):
        raise InvalidInputError(f"{len(xs)} xs but {len(ys)} ys")
    return _Nodes(tuple(xs), tuple(ys), errors)


def _check_membership(ring: GaloisRing, name: str, nodes: Sequence[GRElement], allowed: set, set_name: str) -> list[str]:
    return [f"{name}_{i + 1} = {e} is not in {set_name}" for i, e in enumerate(nodes) if e not in allowed]


def _check_distinct(xs: Sequence[GRElement], ys: Sequence[GRElement] | None) -> list[str]:
    out = []
    labelled = [(f"x_{i + 1}", e) for i, e in enumerate(xs)]
    if ys is not None:
        labelled += [(f"y_{j + 1}", e) for j, e in enumerate(ys)]
    for a in range(len(labelled)):
        for b in range(a + 1, len(labelled)):
            if labelled[a][1] == labelled[b][1]:
                out.append(f"{labelled[a][0]} = {labelled[b][0]} (nodes must be distinct)")
    return out


def validate(spec: CauchySpec, ring: GaloisRing) -> list[str]:
    """Every violated hypothesis of ``spec.kind`` as a readable line; empty if valid."""
    kind = spec.kind
    nodes = _resolve_nodes(spec, ring)
    xs, ys = nodes.xs, nodes.ys
    errors = list(nodes.errors)
    k = len(xs)
    p, s = ring.p, ring.s
    teich_nonzero = set(ring.teichmuller_set()[1:])

    if kind in (CauchyKind.SECOND_KIND, CauchyKind.TYPE2_NILSHIFT, CauchyKind.EXPONENT_CONSTRAINED) and p == 2:
        errors.append(f"characteristic {ring.q} is even; this construction needs odd p")
    if kind is CauchyKind.CHAR2_SECOND_KIND and (p != 2 or s < 2):
        errors.append(f"characteristic {ring.q} is not 2^s with s >= 2")

    if kind in (CauchyKind.TYPE1_SUB, CauchyKind.GENERALIZED, CauchyKind.CHAR2_SECOND_KIND):
        errors += _check_membership(ring, "x", xs, teich_nonzero, "the nonzero Teichmuller set")
        errors += _check_membership(ring, "y", ys, teich_nonzero, "the nonzero Teichmuller set")
        errors += _check_distinct(xs, ys)
    elif kind is CauchyKind.SECOND_KIND:
        if p != 2:
            allowed = set(tau_prime(ring)[1:])
            errors += _check_membership(ring, "x", xs, allowed, "tau' minus 0")
            errors += _check_membership(ring, "y", ys, allowed, "tau' minus 0")
        errors += _check_distinct(xs, ys)
    elif kind is CauchyKind.TYPE2_NILSHIFT:
        if p != 2:
            errors += _check_membership(ring, "x", xs, set(tau_prime(ring)[1:]), "tau' minus 0")
        errors += _check_distinct(xs, None)
        if spec.nilpotent_shift.is_unit():
            errors.append(f"l = {spec.nilpotent_shift} is not nilpotent")
    elif kind is CauchyKind.EXPONENT_CONSTRAINED:
        n = ring.teichmuller_order
        for name, exps in (("sigma", spec.sigma), ("eta", spec.eta)):
            for i, e in enumerate(exps):
                if not 0 <= e <= n - 1:
                    errors.append(f"{name}_{i + 1} = {e} is outside [0, {n - 1}]")
        errors += _check_distinct(xs, ys)
        if n % 2 == 0:
            half = n // 2
            for i, si in enumerate(spec.sigma):
                for j, ej in enumerate(spec.eta):
                    if (si - ej) % n == half:
                        errors.append(f"sigma_{i + 1} - eta_{j + 1} = {si - ej} is congruent to {half} mod {n}")

    if kind is CauchyKind.GENERALIZED:
        for name, units in (("w", spec.row_units), ("v", spec.col_units)):
            if units is None or len(units) != k:
                errors.append(f"{name} must list {k} units")
                continue
            errors += [f"{name}_{i + 1} = {u} is not a unit" for i, u in enumerate(units) if not u.is_unit()]

    # pairwise unit conditions on differences and on every denominator
    for i in range(k):
        for j in range(i + 1, k):
            if not (xs[i] - xs[j]).is_unit():
                errors.append(f"x_{i + 1} - x_{j + 1} = {xs[i] - xs[j]} is not a unit")
            if not (ys[i] - ys[j]).is_unit():
                errors.append(f"y_{i + 1} - y_{j + 1} = {ys[i] - ys[j]} is not a unit")
    sign = "-" if _subtractive(kind) else "+"
    for i in range(k):
        for j in range(k):
            d = _denominator(kind, xs[i], ys[j])
            if not d.is_unit():
                yname = f"x_{j + 1} + l" if kind is CauchyKind.TYPE2_NILSHIFT else f"y_{j + 1}"
                errors.append(f"x_{i + 1} {sign} {yname} = {d} is not a unit")
    return errors


def _subtractive(kind: CauchyKind) -> bool:
    return kind in (CauchyKind.TYPE1_SUB, CauchyKind.GENERALIZED)


def _denominator(kind: CauchyKind, x: GRElement, y: GRElement) -> GRElement:
    return x - y if _subtractive(kind) else x + y


def _validated(spec: CauchySpec, ring: GaloisRing) -> _Nodes:
    errors = validate(spec, ring)
    if errors:
        raise ConstructionRejected(LABELS[spec.kind], errors)
    return _resolve_nodes(spec, ring)


def build_cauchy(spec: CauchySpec, ring: GaloisRing) -> GRMatrix:
    nodes = _validated(spec, ring)
    xs, ys = nodes.xs, nodes.ys
    k = len(xs)
    rows = [[_denominator(spec.kind, xs[i], ys[j]).inverse() for j in range(k)] for i in range(k)]
    if spec.kind is CauchyKind.GENERALIZED:
        rows = [[spec.row_units[i] * spec.col_units[j] * rows[i][j] for j in range(k)] for i in range(k)]
    return GRMatrix(ring, rows)


def cauchy_det_closed_form(spec: CauchySpec, ring: GaloisRing) -> GRElement:
    """Determinant from the product formula, never from minors.

    Subtractive kinds: prod_{i>j} (x_i - x_j)(y_j - y_i) / prod (x_i - y_j).
    Additive kinds:    prod_{i>j} (x_i - x_j)(y_i - y_j) / prod (x_i + y_j).
    The generalized kind is further scaled by prod w_i * prod v_j.
    """
    nodes = _validated(spec, ring)
    xs, ys = nodes.xs, nodes.ys
    k = len(xs)
    num = ring.one
    for i in range(1, k):
        for j in range(i):
            dy = ys[j] - ys[i] if _subtractive(spec.kind) else ys[i] - ys[j]
            num = num * (xs[i] - xs[j]) * dy
    den = ring.one
    for i in range(k):
        for j in range(k):
            den = den * _denominator(spec.kind, xs[i], ys[j])
    det = num * den.inverse()
    if spec.kind is CauchyKind.GENERALIZED:
        for u in spec.row_units + spec.col_units:
            det = det * u
    return det


def type2_involution_witness(x1: GRElement, x2: GRElement, l: GRElement, ring: GaloisRing) -> GRElement:
    """Off-diagonal entry 2 / ((2 x1 + l)(2 x2 + l)) of A^2 for the 2x2 TYPE-II matrix A.

    A unit result shows A^2 != I.
    """
    if ring.p == 2:
        raise InvalidInputError("TYPE-II construction needs odd characteristic")
    allowed = set(tau_prime(ring)[1:])
    if x1 not in allowed or x2 not in allowed:
        raise InvalidInputError("x1 and x2 must lie in tau' minus 0")
    if x1 == x2:
        raise InvalidInputError("x1 and x2 must be distinct")
    if l.is_unit():
        raise InvalidInputError(f"l = {l} is not nilpotent")
    return ((2 * x1 + l) * (2 * x2 + l)).inverse() * 2
