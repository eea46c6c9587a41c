"""JSON documents: presets, collections and reports.

Rationals are written as bare integers when integral and as "p/q" strings
otherwise; floats are rejected on input. ``dumps`` is deterministic, so a
document produced here survives parse -> dump byte for byte.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Optional

from .chern import ChernCharacter, FanoPreset, from_coordinates, to_coordinates
from .errors import HelixlabError, ParseError
from .k3 import BogomolovReport, MukaiVector
from .lattice import GramForm, SODVerdict, kvector
from .mutation import format_word
from .orbit import OrbitReport, TransitivityReport

PRESET_DIR_ENV = "HELIXLAB_PRESET_DIR"
_RATIONAL_RE = re.compile(r"\s*(-?\d+)(?:\s*/\s*(-?\d+))?\s*")


def encode_rational(q):
    q = Fraction(q)
    return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def decode_rational(x) -> Fraction:
    if isinstance(x, bool):
        raise ParseError(f"expected a rational, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        m = _RATIONAL_RE.fullmatch(x)
        if m is None:
            raise ParseError(f"malformed rational {x!r}")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise ParseError(f"zero denominator in {x!r}")
        return Fraction(num, den)
    raise ParseError(f"expected an integer or a 'p/q' string, got {x!r}")


def decode_int(x) -> int:
    q = decode_rational(x)
    if q.denominator != 1:
        raise ParseError(f"expected an integer, got {x!r}")
    return int(q)


def _render(obj, level: int) -> str:
    pad = "  " * (level + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        body = ",\n".join(f"{pad}{json.dumps(k)}: {_render(v, level + 1)}" for k, v in obj.items())
        return "{\n" + body + "\n" + "  " * level + "}"
    if isinstance(obj, list):
        if all(not isinstance(x, (list, dict)) for x in obj):
            return "[" + ", ".join(json.dumps(x, ensure_ascii=False) for x in obj) + "]"
        body = ",\n".join(pad + _render(x, level + 1) for x in obj)
        return "[\n" + body + "\n" + "  " * level + "]"
    return json.dumps(obj, ensure_ascii=False)


def dumps(doc) -> str:
    """Deterministic JSON: two-space indent, lists of scalars kept on one line."""
    return _render(doc, 0) + "\n"


def loads(text: str):
    def no_floats(s):
        raise ParseError(f"floating point literal {s} is not allowed")
    try:
        return json.loads(text, parse_float=no_floats)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def read_document(path) -> dict:
    doc = loads(Path(path).read_text())
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    return doc


# -- Chern characters and presets -------------------------------------------

def chern_to_doc(x: ChernCharacter) -> list:
    return [encode_rational(v) for v in x]


def chern_from_doc(entry) -> ChernCharacter:
    if not isinstance(entry, list) or len(entry) != 4:
        raise ParseError(f"a Chern character is a list of 4 rationals, got {entry!r}")
    r, a, b, c = (decode_rational(v) for v in entry)
    if r.denominator != 1 or a.denominator != 1:
        raise ParseError(f"rank and c1 must be integers in {entry!r}")
    return ChernCharacter(int(r), int(a), b, c)


def _matrix_from_doc(rows) -> tuple[tuple[int, ...], ...]:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("gram must be a list of integer rows")
    return tuple(tuple(decode_int(x) for x in row) for row in rows)


def preset_to_doc(V: FanoPreset) -> dict:
    return {
        "name": V.name,
        "d": V.d,
        "k": V.k,
        "b2": V.b2,
        "b3": V.b3,
        "gram": None if V.gram is None else [list(row) for row in V.gram],
        "basis_ch": None if V.basis_ch is None else [chern_to_doc(x) for x in V.basis_ch],
    }


def preset_from_doc(doc: dict) -> FanoPreset:
    try:
        name = doc["name"]
        d, k = decode_int(doc["d"]), decode_int(doc["k"])
    except KeyError as exc:
        raise ParseError(f"preset is missing field {exc}") from None
    if not isinstance(name, str):
        raise ParseError("preset name must be a string")
    gram = doc.get("gram")
    basis = doc.get("basis_ch")
    return FanoPreset(
        name=name, d=d, k=k,
        b2=decode_int(doc.get("b2", 1)), b3=decode_int(doc.get("b3", 0)),
        gram=None if gram is None else _matrix_from_doc(gram),
        basis_ch=None if basis is None else tuple(chern_from_doc(e) for e in basis),
    )


def _bundled_preset_dir():
    return resources.files("helixlab") / "presets"


def preset_names() -> list[str]:
    names = {p.name[:-5] for p in _bundled_preset_dir().iterdir() if p.name.endswith(".json")}
    extra = os.environ.get(PRESET_DIR_ENV)
    if extra and Path(extra).is_dir():
        names |= {p.stem for p in Path(extra).glob("*.json")}
    return sorted(names)


def load_preset(name_or_path: str) -> FanoPreset:
    """Load a preset by file path, by name in $HELIXLAB_PRESET_DIR, or by bundled name."""
    path = Path(name_or_path)
    if path.suffix == ".json" or path.is_file():
        if not path.is_file():
            raise ParseError(f"preset file {name_or_path} not found")
        return preset_from_doc(read_document(path))
    extra = os.environ.get(PRESET_DIR_ENV)
    if extra:
        candidate = Path(extra) / f"{name_or_path}.json"
        if candidate.is_file():
            return preset_from_doc(read_document(candidate))
    bundled = _bundled_preset_dir() / f"{name_or_path}.json"
    if bundled.is_file():
        return preset_from_doc(loads(bundled.read_text()))
    raise ParseError(f"unknown preset {name_or_path!r}; known: {', '.join(preset_names())}")


# -- collections ----------------------------------------------------------

@dataclass(frozen=True)
class CollectionDocument:
    """A collection tied to a variety name or to an inline Gram form.

    Elements are stored as given: lattice coordinates (``kind == "coordinates"``)
    or Chern characters (``kind == "chern"``), never a mix.
    """

    elements: tuple
    kind: str = "coordinates"
    variety: Optional[str] = None
    gram: Optional[tuple[tuple[int, ...], ...]] = None

    def gram_form(self, preset: Optional[FanoPreset] = None) -> GramForm:
        if self.gram is not None:
            return GramForm(self.gram)
        if preset is None:
            raise HelixlabError("collection names no Gram form and no preset was given")
        return preset.gram_form

    def coordinates(self, preset: Optional[FanoPreset] = None):
        if self.kind == "coordinates":
            return self.elements
        if preset is None:
            raise HelixlabError("Chern-character elements need a preset to convert")
        return tuple(to_coordinates(preset, x) for x in self.elements)

    def with_coordinates(self, coords, preset: Optional[FanoPreset] = None) -> CollectionDocument:
        """Same document header and element kind, new elements."""
        if self.kind == "coordinates":
            elements = tuple(tuple(u) for u in coords)
        else:
            elements = tuple(from_coordinates(preset, u) for u in coords)
        return CollectionDocument(elements, self.kind, self.variety, self.gram)


def collection_to_doc(doc: CollectionDocument) -> dict:
    out = {}
    if doc.variety is not None:
        out["variety"] = doc.variety
    if doc.gram is not None:
        out["gram"] = [list(r) for r in doc.gram]
    if doc.kind == "coordinates":
        out["coordinates"] = [list(u) for u in doc.elements]
    else:
        out["chern"] = [chern_to_doc(x) for x in doc.elements]
    return out


def collection_from_doc(doc: dict) -> CollectionDocument:
    has_coords, has_chern = "coordinates" in doc, "chern" in doc
    if has_coords and has_chern:
        raise ParseError("a collection gives either 'coordinates' or 'chern', not both")
    if not (has_coords or has_chern):
        raise ParseError("a collection needs 'coordinates' or 'chern'")
    variety = doc.get("variety")
    if variety is not None and not isinstance(variety, str):
        raise ParseError("'variety' must be a string")
    gram = _matrix_from_doc(doc["gram"]) if doc.get("gram") is not None else None
    if has_coords:
        rows = doc["coordinates"]
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ParseError("'coordinates' must be a list of integer lists")
        elements = tuple(kvector(decode_int(x) for x in row) for row in rows)
        kind = "coordinates"
    else:
        if not isinstance(doc["chern"], list):
            raise ParseError("'chern' must be a list of 4-tuples")
        elements = tuple(chern_from_doc(e) for e in doc["chern"])
        kind = "chern"
    return CollectionDocument(elements, kind, variety, gram)


def reference_document(V: FanoPreset) -> CollectionDocument:
    return CollectionDocument(V.gram_form.reference_basis(), "coordinates", V.name)


# -- reports --------------------------------------------------------------

def sod_verdict_to_doc(v: SODVerdict) -> dict:
    return {
        "ok": v.ok,
        "exceptional": list(v.exceptional),
        "orthogonality_violations": [{"pair": [j, i], "chi": val}
                                     for j, i, val in v.orthogonality_violations],
        "determinant": v.determinant,
        "unimodular": v.unimodular,
        "problems": v.problems(),
    }


def _stats_to_doc(s) -> dict:
    return {
        "nodes_expanded": s.nodes_expanded,
        "frontier_peak": s.frontier_peak,
        "depth_reached": s.depth_reached,
        "boundary_nodes": s.boundary_nodes,
        "truncated_depth": s.truncated_depth,
        "truncated_nodes": s.truncated_nodes,
    }


def _caps_to_doc(c) -> dict:
    return {"max_depth": c.max_depth, "max_nodes": c.max_nodes, "height_cap": c.height_cap}


def orbit_report_to_doc(rep: OrbitReport) -> dict:
    return {
        "start": [list(u) for u in rep.start],
        "caps": _caps_to_doc(rep.caps),
        "stats": _stats_to_doc(rep.stats),
        "visited": [{"collection": [list(u) for u in C],
                     "witness": format_word(rep.witness[C]),
                     "boundary": C in rep.boundary}
                    for C in sorted(rep.witness)],
    }


def transitivity_report_to_doc(rep: TransitivityReport, variety: Optional[str] = None) -> dict:
    return {
        "variety": variety,
        "height": rep.height,
        "caps": _caps_to_doc(rep.caps),
        "status": rep.status,
        "truncated": rep.truncated,
        "bases_found": len(rep.bases),
        "reached_count": len(rep.reached),
        "unreached_count": len(rep.unreached),
        "exceptional_vectors": rep.exceptional_vectors,
        "vectors_in_bases": rep.vectors_in_bases,
        "orbit_stats": _stats_to_doc(rep.orbit_stats),
        "reached": [{"basis": [list(u) for u in C], "witness": format_word(w)}
                    for C, w in rep.reached.items()],
        "unreached": [{"basis": [list(u) for u in C],
                       "obstructions": rep.obstructions.get(C, [])}
                      for C in rep.unreached],
    }


def mukai_to_doc(v: MukaiVector) -> dict:
    return {"vector": [v.r, encode_rational(v.a), encode_rational(v.s)], "ambient": v.ambient}


def mukai_from_doc(doc: dict) -> MukaiVector:
    try:
        r, a, s = doc["vector"]
        return MukaiVector(decode_int(r), decode_rational(a), decode_rational(s), decode_int(doc["ambient"]))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed Mukai vector document: {exc}") from None


def bogomolov_to_doc(b: BogomolovReport) -> dict:
    opt = lambda q: None if q is None else encode_rational(q)  # noqa: E731
    return {
        "index": b.index,
        "rank": b.rank,
        "discriminant": encode_rational(b.discriminant),
        "threshold": encode_rational(b.threshold),
        "satisfied": b.satisfied,
        "claimed_discriminant": b.claimed_discriminant,
        "claimed_threshold": opt(b.claimed_threshold),
        "claimed_satisfied": b.claimed_satisfied,
        "index_hypothesis": b.index_hypothesis,
        "caveat": b.caveat,
    }
