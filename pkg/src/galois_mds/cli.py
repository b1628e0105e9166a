"""Command-line front end.

    galois-mds ring-info --ring RING
    galois-mds cauchy    --ring RING --spec SPEC [-o OUT]
    galois-mds verify    --matrix MATRIX [--method fast|exhaustive|both]
    galois-mds morph     --matrix MATRIX --morphism MORPHISM [-o OUT]
    galois-mds enumerate --matrix MATRIX [--verify] [-o OUT]

Every document argument is a file path, ``-`` for stdin, or an inline JSON
literal.  Exit status: 0 success / MDS, 1 not MDS, 2 validation error,
3 I/O or parse error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .cauchy import build_cauchy
from .documents import (
    element_document,
    emit_document,
    load_json,
    matrix_document,
    morphism_document,
    parse_cauchy_spec,
    parse_matrix,
    parse_morphism,
    parse_ring,
)
from .errors import DocumentError, GaloisMDSError
from .matrices import MDSVerdict, mat_is_mds_exhaustive, mat_is_mds_fast, minor_count
from .morphisms import apply_morphism_to_matrix, enumerate_scaled_automorphisms

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INVALID = 2
EXIT_IO = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_IO, f"{self.prog}: error: {message}\n")


def _emit(doc: dict, out: str | None) -> None:
    text = emit_document(doc, out)
    if out is None or out == "-":
        sys.stdout.write(text)


def _ring_info(args) -> int:
    ring = parse_ring(load_json(args.ring))
    doc = {
        "p": ring.p,
        "s": ring.s,
        "m": ring.m,
        "modulus": list(ring.modulus.coeffs),
        "cardinality": ring.cardinality,
        "units": ring.unit_count,
        "nilpotents": ring.nilpotent_count,
        "xi": element_document(ring.xi),
        "xi_order": ring.order(ring.xi),
        "teichmuller_size": len(ring.teichmuller_set()),
        "basic_primitive": ring.is_basic_primitive,
    }
    _emit(doc, args.output)
    return EXIT_OK


def _cauchy(args) -> int:
    ring = parse_ring(load_json(args.ring))
    spec = parse_cauchy_spec(load_json(args.spec), ring)
    _emit(matrix_document(build_cauchy(spec, ring)), args.output)
    return EXIT_OK


def _verdict_doc(v: MDSVerdict) -> dict:
    bad = v.singular_minor
    return {
        "mds": v.is_mds,
        "method": v.method,
        "singular_minor": None if bad is None else {"rows": list(bad[0]), "cols": list(bad[1])},
    }


def _verify(args) -> int:
    a = parse_matrix(load_json(args.matrix))
    if args.method == "both":
        fast, exhaustive = mat_is_mds_fast(a), mat_is_mds_exhaustive(a)
        if fast.is_mds != exhaustive.is_mds:
            print(
                f"error: fast ({fast.is_mds}) and exhaustive ({exhaustive.is_mds}) verdicts disagree",
                file=sys.stderr,
            )
            return EXIT_INVALID
        doc = _verdict_doc(exhaustive)
        doc["method"] = "both"
        doc["fast_method"] = fast.method
        verdict = exhaustive
    else:
        verdict = mat_is_mds_fast(a) if args.method == "fast" else mat_is_mds_exhaustive(a)
        doc = _verdict_doc(verdict)
    doc["minors"] = minor_count(a.order)
    _emit(doc, args.output)
    return EXIT_OK if verdict.is_mds else EXIT_FALSE


def _morph(args) -> int:
    a = parse_matrix(load_json(args.matrix))
    f = parse_morphism(load_json(args.morphism), a.ring)
    _emit(matrix_document(apply_morphism_to_matrix(f, a)), args.output)
    return EXIT_OK


def _enumerate(args) -> int:
    a = parse_matrix(load_json(args.matrix))
    family = enumerate_scaled_automorphisms(a.ring)
    members = []
    all_mds = True
    for f in family:
        image = apply_morphism_to_matrix(f, a)
        member = {"morphism": morphism_document(f), "entries": matrix_document(image)["entries"]}
        if args.verify:
            ok = mat_is_mds_fast(image).is_mds
            member["mds"] = ok
            all_mds &= ok
        members.append(member)
    doc = {
        "ring": a.ring.descriptor(),
        "order": a.order,
        "raw_count": family.raw_count,
        "unique_count": family.unique_count,
        "unit_count": family.unit_count,
        "members": members,
    }
    if args.verify:
        doc["all_mds"] = all_mds
    _emit(doc, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="galois-mds", description="Cauchy MDS matrices over Galois rings.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=fn)
        p.add_argument("-o", "--output", help="write the result here instead of stdout")
        return p

    p = add("ring-info", _ring_info, "summarize a Galois ring")
    p.add_argument("--ring", required=True, help='ring descriptor {"p", "s", "modulus"}')

    p = add("cauchy", _cauchy, "build a Cauchy matrix from a spec")
    p.add_argument("--ring", required=True)
    p.add_argument("--spec", required=True, help="Cauchy spec document")

    p = add("verify", _verify, "decide whether a matrix is MDS")
    p.add_argument("--matrix", required=True)
    p.add_argument("--method", choices=("fast", "exhaustive", "both"), default="fast")

    p = add("morph", _morph, "apply a morphism entry-wise to a matrix")
    p.add_argument("--matrix", required=True)
    p.add_argument("--morphism", required=True)

    p = add("enumerate", _enumerate, "images of a matrix under every scaled automorphism")
    p.add_argument("--matrix", required=True)
    p.add_argument("--verify", action="store_true", help="also check each image is MDS")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DocumentError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except GaloisMDSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
