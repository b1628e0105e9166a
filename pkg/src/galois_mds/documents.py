"""JSON interchange for rings, matrices, Cauchy specs and morphisms.

Elements are written as ascending coefficient lists of length m.  On input an
element may also be a bare integer or the string ``"xi^k"``.  Emission is
deterministic: sorted keys, two-space indent, trailing newline.
"""

from __future__ import annotations

import json
import re
import sys
from pathlib import Path
from typing import Any

from .cauchy import CauchyKind, CauchySpec
from .errors import DocumentError
from .galois_ring import GaloisRing, GRElement
from .matrices import GRMatrix
from .morphisms import MorphismKind, MorphismSpec

_XI_POWER = re.compile(r"^\s*xi\s*\^\s*(-?\d+)\s*$")


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_json(source: str) -> Any:
    """Parse ``source`` as a JSON literal, ``-`` for stdin, or a file path."""
    text = source.lstrip()
    try:
        if text.startswith(("{", "[")):
            return json.loads(source)
        if source == "-":
            return json.load(sys.stdin)
        return json.loads(Path(source).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _require(doc: Any, key: str, kind: type | tuple[type, ...], where: str) -> Any:
    if not isinstance(doc, dict):
        raise DocumentError("expected a JSON object", where)
    if key not in doc:
        raise DocumentError("missing field", f"{where}.{key}")
    val = doc[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        raise DocumentError(f"expected {getattr(kind, '__name__', kind)}", f"{where}.{key}")
    return val


def _int_list(val: Any, where: str) -> list[int]:
    if not isinstance(val, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in val):
        raise DocumentError("expected a list of integers", where)
    return val


# -- rings -----------------------------------------------------------------------


def parse_ring(doc: Any, where: str = "ring") -> GaloisRing:
    p = _require(doc, "p", int, where)
    s = _require(doc, "s", int, where)
    modulus = _int_list(_require(doc, "modulus", list, where), f"{where}.modulus")
    return GaloisRing(p, s, modulus)


def ring_document(ring: GaloisRing) -> dict:
    return ring.descriptor()


# -- elements --------------------------------------------------------------------


def parse_element(ring: GaloisRing, val: Any, where: str) -> GRElement:
    if isinstance(val, bool):
        raise DocumentError("booleans are not ring elements", where)
    if isinstance(val, int):
        return ring(val)
    if isinstance(val, str):
        match = _XI_POWER.match(val)
        if not match:
            raise DocumentError(f"unrecognized element shorthand {val!r} (use \"xi^k\")", where)
        return ring.xi_power(int(match.group(1)))
    coeffs = _int_list(val, where)
    if len(coeffs) > ring.m:
        raise DocumentError(f"{len(coeffs)} coefficients for a degree-{ring.m} ring", where)
    return ring(coeffs)


def element_document(a: GRElement) -> list[int]:
    return list(a.coeffs)


def _element_list(ring: GaloisRing, val: Any, where: str) -> tuple[GRElement, ...]:
    if not isinstance(val, list):
        raise DocumentError("expected a list of elements", where)
    return tuple(parse_element(ring, e, f"{where}[{i}]") for i, e in enumerate(val))


# -- matrices --------------------------------------------------------------------


def parse_matrix(doc: Any, where: str = "matrix") -> GRMatrix:
    ring = parse_ring(_require(doc, "ring", dict, where), f"{where}.ring")
    k = _require(doc, "order", int, where)
    entries = _require(doc, "entries", list, where)
    if len(entries) != k or k < 1:
        raise DocumentError(f"expected {k} rows, got {len(entries)}", f"{where}.entries")
    rows = []
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != k:
            raise DocumentError(f"expected a row of {k} elements", f"{where}.entries[{i}]")
        rows.append([parse_element(ring, e, f"{where}.entries[{i}][{j}]") for j, e in enumerate(row)])
    return GRMatrix(ring, rows)


def matrix_document(a: GRMatrix) -> dict:
    return {
        "ring": ring_document(a.ring),
        "order": a.order,
        "entries": [[element_document(e) for e in row] for row in a],
    }


# -- Cauchy specs ----------------------------------------------------------------


def parse_cauchy_spec(doc: Any, ring: GaloisRing, where: str = "spec") -> CauchySpec:
    raw_kind = _require(doc, "kind", str, where)
    try:
        kind = CauchyKind(raw_kind)
    except ValueError:
        choices = ", ".join(k.value for k in CauchyKind)
        raise DocumentError(f"unknown kind {raw_kind!r} (expected one of {choices})", f"{where}.kind") from None

    def elems(key):
        return _element_list(ring, doc[key], f"{where}.{key}") if key in doc else None

    def ints(key):
        return tuple(_int_list(doc[key], f"{where}.{key}")) if key in doc else None

    shift = parse_element(ring, doc["l"], f"{where}.l") if "l" in doc else None
    return CauchySpec(
        kind,
        elems("xs") or (),
        elems("ys"),
        shift,
        elems("w"),
        elems("v"),
        ints("sigma"),
        ints("eta"),
    )


def cauchy_spec_document(spec: CauchySpec) -> dict:
    doc: dict[str, Any] = {"kind": spec.kind.value}
    if spec.xs:
        doc["xs"] = [element_document(e) for e in spec.xs]
    for key, val in (("ys", spec.ys), ("w", spec.row_units), ("v", spec.col_units)):
        if val is not None:
            doc[key] = [element_document(e) for e in val]
    if spec.nilpotent_shift is not None:
        doc["l"] = element_document(spec.nilpotent_shift)
    for key, val in (("sigma", spec.sigma), ("eta", spec.eta)):
        if val is not None:
            doc[key] = list(val)
    return doc


# -- morphisms -------------------------------------------------------------------


def parse_morphism(doc: Any, ring: GaloisRing, where: str = "morphism") -> MorphismSpec:
    raw_kind = _require(doc, "kind", str, where)
    try:
        kind = MorphismKind(raw_kind)
    except ValueError:
        choices = ", ".join(k.value for k in MorphismKind)
        raise DocumentError(f"unknown kind {raw_kind!r} (expected one of {choices})", f"{where}.kind") from None
    target = ring
    if kind is MorphismKind.PRESENTATION_ISOMORPHISM:
        target = parse_ring(_require(doc, "target_ring", dict, where), f"{where}.target_ring")
    scale = parse_element(target, doc["c"], f"{where}.c") if "c" in doc else None
    if kind is MorphismKind.FROBENIUS_POWER:
        t = _require(doc, "t", int, where)
        base_degree = _require(doc, "base_degree", int, where) if "base_degree" in doc else 1
        return MorphismSpec(kind, ring, ring, index=t, scale=scale, base_degree=base_degree)
    if kind is MorphismKind.SCALED_AUTOMORPHISM:
        return MorphismSpec(kind, ring, ring, index=_require(doc, "i", int, where), scale=scale)
    s_u = _require(doc, "s_u", int, where)
    return MorphismSpec(kind, ring, target, scale=scale, conjugate_exponent=s_u)


def morphism_document(f: MorphismSpec) -> dict:
    doc: dict[str, Any] = {"kind": f.kind.value}
    if f.kind is MorphismKind.FROBENIUS_POWER:
        doc["t"] = f.index
        if f.base_degree != 1:
            doc["base_degree"] = f.base_degree
    elif f.kind is MorphismKind.SCALED_AUTOMORPHISM:
        doc["i"] = f.index
    else:
        doc["s_u"] = f.conjugate_exponent
        doc["target_ring"] = ring_document(f.target)
    if f.scale is not None:
        doc["c"] = element_document(f.scale)
    return doc


# -- generic entry points ------------------------------------------------------


def parse_document(source: str | Any, ring: GaloisRing | None = None):
    """Parse a ring, matrix, Cauchy spec or morphism, recognized by its fields.

    ``source`` is a path / JSON literal or an already-decoded document.  Specs
    and morphisms need a ring, given either here or as a ``"ring"`` field.
    """
    doc = load_json(source) if isinstance(source, str) else source
    if not isinstance(doc, dict):
        raise DocumentError("expected a JSON object")
    if "entries" in doc:
        return parse_matrix(doc)
    if "kind" not in doc:
        if {"p", "s", "modulus"} <= doc.keys():
            return parse_ring(doc)
        raise DocumentError("cannot tell the document type (no 'entries', 'kind' or ring fields)")
    if "ring" in doc:
        ring = parse_ring(doc["ring"])
    if ring is None:
        raise DocumentError("a ring is required to interpret this document", "ring")
    kind = doc["kind"]
    if kind in {k.value for k in MorphismKind}:
        return parse_morphism(doc, ring)
    return parse_cauchy_spec(doc, ring)


def to_document(value) -> dict:
    if isinstance(value, GaloisRing):
        return ring_document(value)
    if isinstance(value, GRMatrix):
        return matrix_document(value)
    if isinstance(value, CauchySpec):
        return cauchy_spec_document(value)
    if isinstance(value, MorphismSpec):
        return morphism_document(value)
    raise TypeError(f"no document form for {type(value).__name__}")


def emit_document(value, path: str | Path | None = None) -> str:
    """Serialize ``value`` (or an already-built dict); write it to ``path`` if given."""
    text = dumps(value if isinstance(value, dict) else to_document(value))
    if path is not None and str(path) != "-":
        Path(path).write_text(text, encoding="utf-8", newline="\n")
    return text
