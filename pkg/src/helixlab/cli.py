"""Command line interface.

Exit codes: 0 success / verdict true, 1 verdict false or precondition failed,
2 input or configuration error, 3 inconclusive because of search caps.
"""

from __future__ import annotations

import argparse
import sys

from . import formats
from .chern import ChernCharacter, from_coordinates, hrr_euler, validate_preset
from .errors import HelixlabError, NotSODBasis, ParseError, ZeroVector
from .k3 import (bogomolov_restriction_report, discriminant, is_spherical_class, mukai_pair,
                 restrict_to_k3, slope)
from .lattice import GramForm, canonicalize, check_sod_basis, gram_of, kvector
from .mutation import apply_word, format_word, helix_shift, parse_word
from .orbit import SearchCaps, enumerate_exceptional, enumerate_sod_bases, orbit_bfs, transitivity_report

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


def _out(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _vec(u) -> str:
    return "(" + ", ".join(str(x) for x in u) + ")"


def _parse_gram(text: str) -> GramForm:
    rows = [[formats.decode_int(x.strip()) for x in row.split(",")] for row in text.split(";")]
    return GramForm(rows)


def _parse_list(text: str):
    return [formats.decode_rational(x.strip()) for x in text.split(",")]


def _resolve_form(args):
    """(preset or None, GramForm) from --gram or the preset argument."""
    if getattr(args, "gram", None):
        return None, _parse_gram(args.gram)
    if not args.preset:
        raise HelixlabError("give a preset or --gram")
    V = formats.load_preset(args.preset)
    return V, V.gram_form


def _load_collection(path, preset_arg):
    doc = formats.collection_from_doc(formats.read_document(path))
    name = preset_arg or doc.variety
    V = formats.load_preset(name) if name else None
    G = doc.gram_form(V)
    return doc, V, G, doc.coordinates(V)


# -- subcommands ------------------------------------------------------------

def cmd_preset(args) -> int:
    if args.action == "list":
        for name in formats.preset_names():
            _out(name)
        return EXIT_OK
    if not args.name:
        raise HelixlabError(f"'preset {args.action}' needs a preset name")
    V = formats.load_preset(args.name)
    if args.action == "show":
        _out(formats.dumps(formats.preset_to_doc(V)))
        return EXIT_OK
    if args.action == "reference":
        _out(formats.dumps(formats.collection_to_doc(formats.reference_document(V))))
        return EXIT_OK
    verdict = validate_preset(V)
    if args.json:
        _out(formats.dumps({"name": V.name, "valid": verdict.valid, "violations": list(verdict.violations)}))
    else:
        _out(f"{V.name}: {'valid' if verdict.valid else 'INVALID'}")
        for v in verdict.violations:
            _out(f"  {v}")
    return EXIT_OK if verdict.valid else EXIT_FALSE


def cmd_verify(args) -> int:
    _, _, G, coords = _load_collection(args.collection, args.preset)
    verdict = check_sod_basis(G, coords)
    if args.json:
        _out(formats.dumps(formats.sod_verdict_to_doc(verdict)))
    else:
        _out("semiorthogonal basis" if verdict.ok else "NOT a semiorthogonal basis")
        for msg in verdict.problems():
            _out(f"  {msg}")
    return EXIT_OK if verdict.ok else EXIT_FALSE


def cmd_gram(args) -> int:
    if args.collection:
        _, _, G, coords = _load_collection(args.collection, args.preset)
        rows = gram_of(G, coords)
    else:
        V, G = _resolve_form(args)
        if V is not None and V.basis_ch is not None:
            rows = [[hrr_euler(V, x, y) for y in V.basis_ch] for x in V.basis_ch]
        else:
            rows = G.rows()
    rows = [[formats.encode_rational(x) for x in row] for row in rows]
    if args.json:
        _out(formats.dumps({"gram": rows}))
    else:
        width = max(len(str(x)) for row in rows for x in row)
        for row in rows:
            _out(" ".join(str(x).rjust(width) for x in row))
    return EXIT_OK


def cmd_mutate(args) -> int:
    doc, V, G, coords = _load_collection(args.collection, args.preset)
    word = parse_word(args.word)
    out = apply_word(G, coords, word)
    if args.helix:
        out = helix_shift(G, out, args.helix)
    if args.canonical:
        out = canonicalize(out)
    _out(formats.dumps(formats.collection_to_doc(doc.with_coordinates(out, V))))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    V, G = _resolve_form(args)
    if args.bases:
        items = sorted(enumerate_sod_bases(G, args.height))
        if args.json:
            _out(formats.dumps({"height": args.height, "count": len(items),
                                "bases": [[list(u) for u in C] for C in items]}))
        else:
            for C in items:
                _out(" ".join(_vec(u) for u in C))
            _out(f"# {len(items)} bases of height <= {args.height}")
    else:
        items = sorted(enumerate_exceptional(G, args.height))
        if args.json:
            _out(formats.dumps({"height": args.height, "count": len(items),
                                "vectors": [list(u) for u in items]}))
        else:
            for u in items:
                _out(_vec(u))
            _out(f"# {len(items)} exceptional classes of height <= {args.height}")
    return EXIT_OK


def _caps(args) -> SearchCaps:
    return SearchCaps(max_depth=args.depth, max_nodes=args.max_nodes, height_cap=args.height_cap)


def cmd_orbit(args) -> int:
    if args.collection:
        _, _, G, start = _load_collection(args.collection, args.preset)
    else:
        _, G = _resolve_form(args)
        start = G.reference_basis()
    rep = orbit_bfs(G, start, _caps(args), workers=args.workers)
    if args.json:
        _out(formats.dumps(formats.orbit_report_to_doc(rep)))
    else:
        s = rep.stats
        _out(f"visited {len(rep.witness)} collections, depth {s.depth_reached}, "
             f"expanded {s.nodes_expanded}, boundary {s.boundary_nodes}, "
             f"truncated: depth={s.truncated_depth} nodes={s.truncated_nodes}")
        for C in sorted(rep.witness):
            flag = " [boundary]" if C in rep.boundary else ""
            _out(f"{' '.join(_vec(u) for u in C)}  <- {format_word(rep.witness[C]) or '(start)'}{flag}")
    return EXIT_INCONCLUSIVE if rep.stats.truncated else EXIT_OK


def cmd_transitivity(args) -> int:
    V, G = _resolve_form(args)
    rep = transitivity_report(G, args.height, _caps(args), preset=V)
    name = V.name if V is not None else None
    if args.json:
        _out(formats.dumps(formats.transitivity_report_to_doc(rep, name)))
    else:
        _out(f"{name or 'gram'}: height <= {rep.height}, caps depth={rep.caps.max_depth} "
             f"nodes={rep.caps.max_nodes} height_cap={rep.caps.height_cap}")
        _out(f"bases found {len(rep.bases)}, reached {len(rep.reached)}, unreached {len(rep.unreached)}")
        _out(f"orbit: {rep.orbit_stats.nodes_expanded} expanded, depth {rep.orbit_stats.depth_reached}, "
             f"truncated={rep.truncated}")
        for C in rep.unreached:
            _out(f"  unreached {' '.join(_vec(u) for u in C)}")
            for why in rep.obstructions.get(C, []):
                _out(f"    obstruction: {why}")
        _out(f"status: {rep.status}")
    return rep.exit_code


def cmd_restrict(args) -> int:
    V = formats.load_preset(args.preset)
    if args.coords is not None:
        xi = kvector(_parse_list(args.coords))
        if not any(xi):
            raise ZeroVector("the zero class cannot be restricted meaningfully")
        x = from_coordinates(V, xi)
    else:
        vals = _parse_list(args.chern)
        if len(vals) != 4:
            raise ParseError("a Chern character has 4 entries r,a,b,c")
        x = ChernCharacter(*vals)
        if x == ChernCharacter(0, 0, 0, 0):
            raise ZeroVector("the zero class cannot be restricted meaningfully")
    v = restrict_to_k3(V, x)
    pairing = mukai_pair(v, v)
    mu = slope(v) if v.r else None
    delta = discriminant(v) if v.r else None
    bog = bogomolov_restriction_report(V, v) if v.r else None
    enc = formats.encode_rational
    if args.json:
        _out(formats.dumps({
            "variety": V.name,
            "chern": formats.chern_to_doc(x),
            "chi_self": enc(hrr_euler(V, x, x)),
            "mukai": formats.mukai_to_doc(v),
            "self_pairing": enc(pairing),
            "spherical": is_spherical_class(v),
            "slope": None if mu is None else enc(mu),
            "discriminant": None if delta is None else enc(delta),
            "bogomolov": None if bog is None else formats.bogomolov_to_doc(bog),
        }))
    else:
        _out(f"chern character: {x}   chi(x, x) = {hrr_euler(V, x, x)}")
        _out(f"mukai vector: {v}   H_S^2 = {v.ambient}")
        _out(f"self-pairing: {pairing}")
        _out(f"spherical: {'true' if is_spherical_class(v) else 'false'}")
        _out(f"slope: {mu if mu is not None else 'undefined (rank 0)'}")
        if bog is not None:
            _out(f"discriminant: {delta}")
            _out(f"restriction threshold: index {bog.index} >= {bog.threshold}: {bog.satisfied}")
            if bog.claimed_discriminant is not None:
                _out(f"claimed rank-2 discriminant: {bog.claimed_discriminant}, threshold "
                     f"{bog.claimed_threshold}: {bog.claimed_satisfied}")
            if bog.caveat:
                _out(f"caveat: {bog.caveat}")
            if not bog.index_hypothesis:
                _out("warning: index < 2, the rank-2 restriction argument does not apply")
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="helixlab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("preset", parents=[common], help="list, show, validate presets")
    s.add_argument("action", choices=["list", "show", "validate", "reference"])
    s.add_argument("name", nargs="?")
    s.set_defaults(func=cmd_preset)

    s = sub.add_parser("verify", parents=[common], help="check a collection is a semiorthogonal basis")
    s.add_argument("collection")
    s.add_argument("--preset")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gram", parents=[common], help="print a Gram matrix")
    s.add_argument("preset", nargs="?")
    s.add_argument("--gram")
    s.add_argument("--collection")
    s.set_defaults(func=cmd_gram)

    s = sub.add_parser("mutate", parents=[common], help="apply a braid word")
    s.add_argument("collection")
    s.add_argument("word", nargs="?", default="")
    s.add_argument("--preset")
    s.add_argument("--canonical", action="store_true")
    s.add_argument("--helix", choices=["forward", "backward"],
                   help="apply a helix shift after the word")
    s.set_defaults(func=cmd_mutate)

    s = sub.add_parser("enumerate", parents=[common], help="exceptional classes or bases up to a height")
    s.add_argument("preset", nargs="?")
    s.add_argument("--gram")
    s.add_argument("--height", type=int, required=True)
    s.add_argument("--bases", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    for name, func, depth in (("orbit", cmd_orbit, 4), ("transitivity", cmd_transitivity, 24)):
        s = sub.add_parser(name, parents=[common])
        s.add_argument("preset", nargs="?")
        s.add_argument("--gram")
        if name == "orbit":
            s.add_argument("--collection")
        else:
            s.add_argument("--height", type=int, required=True)
        s.add_argument("--depth", type=int, default=depth)
        s.add_argument("--max-nodes", type=int, default=1_000_000)
        s.add_argument("--height-cap", type=int, default=None)
        if name == "orbit":
            s.add_argument("--workers", type=int, default=1)
        s.set_defaults(func=func)

    s = sub.add_parser("restrict", parents=[common], help="restrict a class to the anticanonical K3")
    s.add_argument("preset")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--coords", help="comma-separated lattice coordinates")
    g.add_argument("--chern", help="comma-separated r,a,b,c (rationals as p/q)")
    s.set_defaults(func=cmd_restrict)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except NotSODBasis as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FALSE
    except (HelixlabError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
