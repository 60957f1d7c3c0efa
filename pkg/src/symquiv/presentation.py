"""Projective presentations as matrices of formal path combinations.

A ``PathMatrix`` is a presentation template: rows list the projective
summands being mapped in, columns the target summands, and each entry is a
rational combination of quiver paths from the column vertex to the row
vertex.  Evaluating the template at a representation produces the block
number matrix of the induced map on Hom spaces; taking cokernels of the
template itself produces the presented module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .errors import ShapeMismatch, ValidationError
from .linalg import (RationalMatrix, column_space_complement,
                     coordinates_in_span, kernel_basis)
from .quiver import DimensionVector, Quiver
from .representation import Representation

Path = Tuple[str, ...]
PathCombo = Dict[Path, Fraction]


@dataclass
class PathMatrix:
    quiver: Quiver
    rows: List[int]                       # vertices of the inner projectives
    cols: List[int]                       # vertices of the outer projectives
    entries: List[List[PathCombo]]        # entries[r][c], paths col -> row

    def __post_init__(self):
        for r, qv in enumerate(self.rows):
            for c, pv in enumerate(self.cols):
                for path in self.entries[r][c]:
                    if path == ():
                        if pv != qv:
                            raise ValidationError("identity entry on mismatched vertices")
                        continue
                    t, h = self.quiver.path_endpoints(path)
                    if t != pv or h != qv:
                        raise ValidationError(
                            "entry path %r must run %r -> %r" % (path, pv, qv))

    def entry(self, r: int, c: int) -> PathCombo:
        return self.entries[r][c]

    def scale_row(self, r: int, factor: Fraction) -> None:
        for c in range(len(self.cols)):
            self.entries[r][c] = {p: factor * x for p, x in self.entries[r][c].items()}

    def describe(self) -> List[List[str]]:
        out = []
        for r in range(len(self.rows)):
            row = []
            for c in range(len(self.cols)):
                combo = self.entries[r][c]
                if not combo:
                    row.append("0")
                else:
                    parts = []
                    for p in sorted(combo):
                        coeff = combo[p]
                        label = ".".join(reversed(p)) if p else "1"
                        parts.append("%s*%s" % (coeff, label) if coeff != 1 else label)
                    row.append("+".join(parts))
            out.append(row)
        return out


def path_combo(*items) -> PathCombo:
    """Build a combination; items are paths or (coefficient, path) pairs."""
    out: PathCombo = {}
    for it in items:
        if isinstance(it, tuple) and it and isinstance(it[0], (int, Fraction)):
            coeff, path = it
        else:
            coeff, path = Fraction(1), tuple(it)
        path = tuple(path)
        out[path] = out.get(path, Fraction(0)) + Fraction(coeff)
    return {p: c for p, c in out.items() if c}


def evaluate_path(w: Representation, path: Path, tail: int, head: int) -> RationalMatrix:
    if not path:
        if w.dim[tail] != w.dim[head]:
            raise ShapeMismatch("identity path between different dimensions")
        return RationalMatrix.identity(w.dim[tail])
    return w.path_matrix(path)


def evaluate_template(t: PathMatrix, w: Representation) -> RationalMatrix:
    """The block matrix Hom(template, w); block (r, c) maps W(col) to W(row)."""
    blocks = []
    for r, qv in enumerate(t.rows):
        row = []
        for c, pv in enumerate(t.cols):
            combo = t.entries[r][c]
            block = RationalMatrix.zero(w.dim[qv], w.dim[pv])
            for path, coeff in combo.items():
                block = block + evaluate_path(w, path, pv, qv).scale(coeff)
            row.append(block)
        blocks.append(row)
    if not blocks:
        return RationalMatrix.zero(0, 0)
    return RationalMatrix.block(blocks)


def template_is_square(t: PathMatrix, w: Representation) -> bool:
    return sum(w.dim[v] for v in t.rows) == sum(w.dim[v] for v in t.cols)


# -- modules from presentations ------------------------------------------------

class _ProjSum:
    """Direct sum of indecomposable projectives with a path-labelled basis."""

    def __init__(self, q: Quiver, vertices: Sequence[int]):
        self.q = q
        self.vertices = list(vertices)
        self.paths = [q.paths_from(x) for x in self.vertices]
        self.basis: Dict[int, List[Tuple[int, Path]]] = {}
        for z in q.vertices:
            items: List[Tuple[int, Path]] = []
            for c, table in enumerate(self.paths):
                for p in table[z]:
                    items.append((c, p))
            self.basis[z] = items

    def dim(self, z: int) -> int:
        return len(self.basis[z])

    def index(self, z: int, summand: int, path: Path) -> int:
        return self.basis[z].index((summand, path))

    def arrow_matrix(self, name: str) -> RationalMatrix:
        a = self.q.arrow_by_name[name]
        src = self.basis[a.tail]
        dst = self.basis[a.head]
        m = RationalMatrix.zero(len(dst), len(src))
        lookup = {item: i for i, item in enumerate(dst)}
        for j, (c, p) in enumerate(src):
            m[lookup[(c, p + (name,))], j] = 1
        return m


def module_from_presentation(t: PathMatrix) -> Representation:
    """Cokernel of the presentation map, with deterministic quotient bases."""
    q = t.quiver
    p0 = _ProjSum(q, t.cols)
    p1 = _ProjSum(q, t.rows)
    # the map phi sends the basis path (r, tail_path) of P1 to
    # sum over columns of entry-path * tail_path inside P0
    phi: Dict[int, RationalMatrix] = {}
    for z in q.vertices:
        m = RationalMatrix.zero(p0.dim(z), p1.dim(z))
        for jcol, (r, tpath) in enumerate(p1.basis[z]):
            for c in range(len(t.cols)):
                for spath, coeff in t.entries[r][c].items():
                    full = spath + tpath
                    i = p0.index(z, c, full)
                    m[i, jcol] = m[i, jcol] + coeff
        phi[z] = m
    proj = {}
    comp = {}
    for z in q.vertices:
        proj[z], comp[z] = column_space_complement(phi[z])
    dim = DimensionVector({z: proj[z].rows for z in q.vertices})
    mats = {}
    for a in q.arrows:
        p0a = p0.arrow_matrix(a.name)
        section = RationalMatrix.zero(p0.dim(a.tail), proj[a.tail].rows)
        for col, idx in enumerate(comp[a.tail]):
            section[idx, col] = 1
        mats[a.name] = proj[a.head] * p0a * section
    return Representation(q, dim, mats)


def _generator_complement(span_columns: RationalMatrix) -> List[int]:
    """Indices of greedy standard vectors complementing a column space."""
    _, comp = column_space_complement(span_columns)
    return comp


def minimal_presentation(m: Representation) -> PathMatrix:
    """Minimal projective presentation of a representation.

    The cover is built on a deterministic complement of the radical, the
    syzygy is expressed in the path bases of the cover, and the resulting
    template evaluates to the defining matrix of the determinantal
    semi-invariant attached to ``m``.
    """
    q = m.quiver
    # generators: complement of the radical at each vertex
    gens: List[Tuple[int, List[Fraction]]] = []
    for x in q.vertices:
        arrows_in = sorted(q.arrows_into(x), key=lambda a: a.name)
        width = sum(m.dim[a.tail] for a in arrows_in)
        rad = RationalMatrix.zero(m.dim[x], width)
        off = 0
        for a in arrows_in:
            b = m.matrices[a.name]
            for i in range(b.rows):
                for j in range(b.cols):
                    rad[i, off + j] = b[i, j]
            off += b.cols
        for idx in _generator_complement(rad):
            vec = [Fraction(0)] * m.dim[x]
            vec[idx] = Fraction(1)
            gens.append((x, vec))
    p0 = _ProjSum(q, [x for x, _ in gens])
    # pi: P0 -> M on path bases
    pi: Dict[int, RationalMatrix] = {}
    for z in q.vertices:
        mat = RationalMatrix.zero(m.dim[z], p0.dim(z))
        for j, (c, path) in enumerate(p0.basis[z]):
            vec = list(gens[c][1])
            for name in path:
                vec = m.matrices[name].apply(vec)
            for i, val in enumerate(vec):
                mat[i, j] = val
        pi[z] = mat
    # the syzygy as a subrepresentation of P0
    kb: Dict[int, List[List[Fraction]]] = {z: kernel_basis(pi[z]) for z in q.vertices}
    karrow: Dict[str, RationalMatrix] = {}
    for a in q.arrows:
        p0a = p0.arrow_matrix(a.name)
        cols = []
        for vec in kb[a.tail]:
            img = p0a.apply(vec)
            coords = coordinates_in_span(kb[a.head], img)
            assert coords is not None, "syzygy is not arrow-stable"
            cols.append(coords)
        mat = RationalMatrix.zero(len(kb[a.head]), len(kb[a.tail]))
        for j, col in enumerate(cols):
            for i, val in enumerate(col):
                mat[i, j] = val
        karrow[a.name] = mat
    # generators of the syzygy
    rows: List[int] = []
    row_vectors: List[Tuple[int, List[Fraction]]] = []
    for y in q.vertices:
        arrows_in = sorted(q.arrows_into(y), key=lambda a: a.name)
        width = sum(len(kb[a.tail]) for a in arrows_in)
        rad = RationalMatrix.zero(len(kb[y]), width)
        off = 0
        for a in arrows_in:
            b = karrow[a.name]
            for i in range(b.rows):
                for j in range(b.cols):
                    rad[i, off + j] = b[i, j]
            off += b.cols
        for idx in _generator_complement(rad):
            rows.append(y)
            row_vectors.append((y, kb[y][idx]))
    cols = [x for x, _ in gens]
    entries: List[List[PathCombo]] = []
    for y, vec in row_vectors:
        row_entry: List[PathCombo] = [dict() for _ in cols]
        for pos, coeff in enumerate(vec):
            if coeff:
                c, path = p0.basis[y][pos]
                row_entry[c][path] = row_entry[c].get(path, Fraction(0)) + coeff
        entries.append([{p: v for p, v in e.items() if v} for e in row_entry])
    return PathMatrix(q, rows, cols, entries)
