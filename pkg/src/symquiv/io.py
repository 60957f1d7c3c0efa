"""Textual formats: quiver files, representation files, generator records."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Dict, List, Tuple

from .errors import ParseError
from .linalg import RationalMatrix
from .presentation import PathMatrix
from .quiver import DimensionVector, Quiver
from .representation import StructuredRepresentation
from .semiinvariant import GeneratorDescriptor, Weight
from .symmetric import ORTHOGONAL, SYMPLECTIC, SymmetricQuiver


def _strip(line: str) -> str:
    if "#" in line:
        line = line[:line.index("#")]
    return line.strip()


def parse_rational(tok: str) -> Fraction:
    try:
        if "/" in tok:
            num, den = tok.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(tok))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError("bad rational %r" % tok) from exc


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


# -- quiver files -----------------------------------------------------------------

def parse_quiver(text: str) -> SymmetricQuiver:
    name = "Q"
    vertices: List[int] = []
    arrows: List[Tuple[str, int, int]] = []
    sigma_v: Dict[int, int] = {}
    sigma_a: Dict[str, str] = {}
    for raw in text.splitlines():
        line = _strip(raw)
        if not line:
            continue
        parts = line.split()
        key = parts[0]
        try:
            if key == "quiver":
                name = parts[1]
            elif key == "vertex":
                vertices.extend(int(p) for p in parts[1:])
            elif key == "arrow":
                arrows.append((parts[1], int(parts[2]), int(parts[3])))
            elif key == "sigma" and parts[1] == "v":
                i, j = int(parts[2]), int(parts[3])
                sigma_v[i] = j
                sigma_v[j] = i
            elif key == "sigma" and parts[1] == "a":
                a, b = parts[2], parts[3]
                sigma_a[a] = b
                sigma_a[b] = a
            else:
                raise ParseError("unknown directive %r" % key)
        except (IndexError, ValueError) as exc:
            raise ParseError("bad line %r" % raw) from exc
    q = Quiver(vertices, arrows, name=name)
    return SymmetricQuiver(q, sigma_v, sigma_a)


def serialize_quiver(sq: SymmetricQuiver) -> str:
    q = sq.base
    lines = ["quiver %s" % q.name]
    lines.append("vertex " + " ".join(str(v) for v in q.vertices))
    for a in sorted(q.arrows, key=lambda a: a.name):
        lines.append("arrow %s %d %d" % (a.name, a.tail, a.head))
    seen = set()
    for v in q.vertices:
        if v in seen:
            continue
        w = sq.sv(v)
        seen.update({v, w})
        lines.append("sigma v %d %d" % (min(v, w), max(v, w)))
    seen_a = set()
    for a in sorted(q.arrows, key=lambda a: a.name):
        if a.name in seen_a:
            continue
        b = sq.sa(a.name)
        seen_a.update({a.name, b})
        lines.append("sigma a %s %s" % (min(a.name, b), max(a.name, b)))
    return "\n".join(lines) + "\n"


# -- representation files -----------------------------------------------------------

def parse_representation(text: str, sq: SymmetricQuiver) -> StructuredRepresentation:
    flavor = SYMPLECTIC
    dims: Dict[int, int] = {}
    mats: Dict[str, RationalMatrix] = {}
    lines = [l for l in text.splitlines()]
    idx = 0
    quiver_name = None
    while idx < len(lines):
        line = _strip(lines[idx])
        idx += 1
        if not line:
            continue
        parts = line.split()
        key = parts[0]
        try:
            if key == "rep":
                quiver_name = parts[1]
            elif key == "flavor":
                if parts[1] not in (SYMPLECTIC, ORTHOGONAL):
                    raise ParseError("flavor must be sp or o")
                flavor = parts[1]
            elif key == "dim":
                for tok in parts[1:]:
                    v, d = tok.split("=")
                    dims[int(v)] = int(d)
            elif key == "mat":
                arrow = parts[1]
                r, c = parts[2].split("x")
                r, c = int(r), int(c)
                entries: List[Fraction] = []
                for _ in range(r):
                    row = _strip(lines[idx])
                    idx += 1
                    toks = row.split()
                    if len(toks) != c:
                        raise ParseError("matrix row needs %d entries" % c)
                    entries.extend(parse_rational(t) for t in toks)
                mats[arrow] = RationalMatrix(r, c, entries)
            else:
                raise ParseError("unknown directive %r" % key)
        except (IndexError, ValueError) as exc:
            raise ParseError("bad line %r" % line) from exc
    dim = DimensionVector({v: dims.get(v, 0) for v in sq.base.vertices})
    plus = {n: m for n, m in mats.items() if n in sq.a_plus}
    fixed = {n: m for n, m in mats.items() if n in sq.a_fixed}
    unknown = set(mats) - set(plus) - set(fixed)
    if unknown:
        raise ParseError("matrices for mirror arrows are derived, drop %s"
                         % sorted(unknown))
    return StructuredRepresentation(sq, flavor, dim, plus, fixed)


def serialize_representation(sr: StructuredRepresentation) -> str:
    sq = sr.sq
    lines = ["rep %s" % sq.base.name, "flavor %s" % sr.flavor]
    lines.append("dim " + " ".join("%d=%d" % (v, sr.dim[v]) for v in sq.base.vertices))
    for name in sorted(list(sr.matrices) + list(sr.fixed_matrices)):
        m = sr.matrices.get(name, sr.fixed_matrices.get(name))
        lines.append("mat %s %dx%d" % (name, m.rows, m.cols))
        for i in range(m.rows):
            lines.append(" ".join(format_rational(x) for x in m.row(i)))
    return "\n".join(lines) + "\n"


# -- generator records ----------------------------------------------------------------

def _combo_to_json(combo):
    return sorted([[format_rational(c), list(p)] for p, c in combo.items()])


def _combo_from_json(data):
    return {tuple(p): parse_rational(c) for c, p in data}


def _template_to_json(t: PathMatrix):
    return {"rows": list(t.rows), "cols": list(t.cols),
            "entries": [[_combo_to_json(e) for e in row] for row in t.entries]}


def _template_from_json(data, q: Quiver) -> PathMatrix:
    entries = [[_combo_from_json(e) for e in row] for row in data["entries"]]
    return PathMatrix(q, list(data["rows"]), list(data["cols"]), entries)


def descriptor_to_json(d: GeneratorDescriptor) -> str:
    rec = {
        "kind": d.kind,
        "provenance": d.provenance,
        "weight": {str(k): format_rational(v) for k, v in sorted(d.weight.values.items())
                   if v},
    }
    if d.template is not None:
        rec["template"] = _template_to_json(d.template)
    if d.pencil is not None:
        from .tame import Pencil
        from .semiinvariant import _SkewPencil
        pen = d.pencil
        signs = None
        if isinstance(pen, _SkewPencil):
            signs = list(pen.signs)
            pen = pen.base
        rec["pencil"] = {
            "rows": list(pen.rows), "cols": list(pen.cols),
            "phi": [[_combo_to_json(e) for e in row] for row in pen.phi_entries],
            "psi": [[_combo_to_json(e) for e in row] for row in pen.psi_entries],
            "const": [[_combo_to_json(e) for e in row] for row in pen.const_entries],
        }
        if signs:
            rec["pencil"]["signs"] = signs
        rec["index"] = d.index
    return json.dumps(rec, sort_keys=True)


def descriptor_from_json(line: str, sq: SymmetricQuiver) -> GeneratorDescriptor:
    rec = json.loads(line)
    weight = Weight({int(k): parse_rational(v) for k, v in rec["weight"].items()})
    template = None
    pencil = None
    if "template" in rec:
        template = _template_from_json(rec["template"], sq.base)
    if "pencil" in rec:
        from .tame import Pencil
        from .semiinvariant import _SkewPencil
        pd = rec["pencil"]
        pen = Pencil(sq.base, list(pd["rows"]), list(pd["cols"]),
                     [[_combo_from_json(e) for e in row] for row in pd["phi"]],
                     [[_combo_from_json(e) for e in row] for row in pd["psi"]],
                     [[_combo_from_json(e) for e in row] for row in pd["const"]])
        if pd.get("signs"):
            pen = _SkewPencil(pen, tuple(pd["signs"]))
        pencil = pen
    return GeneratorDescriptor(rec["kind"], weight, rec["provenance"],
                               template=template, pencil=pencil,
                               index=rec.get("index"))


# -- small vectors ------------------------------------------------------------------

def parse_dim_vector(text: str, sq: SymmetricQuiver) -> DimensionVector:
    toks = [t for t in text.replace(",", " ").split() if t]
    verts = sq.base.vertices
    if len(toks) != len(verts):
        raise ParseError("expected %d entries for vertices %s" % (len(verts), verts))
    return DimensionVector({v: int(t) for v, t in zip(verts, toks)})


def parse_weight(text: str, sq: SymmetricQuiver) -> Weight:
    toks = [t for t in text.replace(",", " ").split() if t]
    verts = sq.base.vertices
    if len(toks) != len(verts):
        raise ParseError("expected %d entries for vertices %s" % (len(verts), verts))
    return Weight({v: parse_rational(t) for v, t in zip(verts, toks)})


def format_dim_vector(d: DimensionVector, sq: SymmetricQuiver) -> str:
    return ",".join(str(d[v]) for v in sq.base.vertices)


def parse_matrix(text: str) -> RationalMatrix:
    rows = []
    for raw in text.splitlines():
        line = _strip(raw)
        if not line:
            continue
        rows.append([parse_rational(t) for t in line.split()])
    if not rows:
        raise ParseError("empty matrix file")
    if len(set(len(r) for r in rows)) != 1:
        raise ParseError("ragged matrix rows")
    return RationalMatrix.from_rows(rows)
