"""Weights of determinantal semi-invariants, their evaluation, and the
generator enumeration for finite and tame symmetric quivers."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .errors import (AsymmetricDimension, NonOrthogonalDimensions,
                     NotFiniteType, NotSquare, NotSkewSymmetric, NotTame,
                     OddSymplecticDimension, PatternNotFound, ValidationError)
from .linalg import (RationalMatrix, determinant, interpolate_polynomial,
                     pfaffian)
from .presentation import (PathMatrix, evaluate_template, minimal_presentation,
                           template_is_square)
from .quiver import DimensionVector, Quiver, euler_form
from .representation import (Representation, StructuredRepresentation,
                             dvw_matrix, random_structured)
from .symmetric import ORTHOGONAL, SYMPLECTIC, SymmetricQuiver, classify_symmetric


class Weight:
    """Rational-valued weight vector on the vertices (denominators 1 or 2)."""

    __slots__ = ("values",)

    def __init__(self, values: Dict[int, Fraction]):
        self.values = {int(k): Fraction(v) for k, v in values.items()}
        for v in self.values.values():
            if v.denominator not in (1, 2):
                raise ValidationError("weight entries must be integers or halves")

    def __getitem__(self, x: int) -> Fraction:
        return self.values.get(x, Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, dict):
            other = Weight(other)
        if not isinstance(other, Weight):
            return NotImplemented
        keys = set(self.values) | set(other.values)
        return all(self[k] == other[k] for k in keys)

    def __hash__(self):
        return hash(tuple(sorted((k, v) for k, v in self.values.items() if v)))

    def __add__(self, other: "Weight") -> "Weight":
        keys = set(self.values) | set(other.values)
        return Weight({k: self[k] + other[k] for k in keys})

    def scale(self, c) -> "Weight":
        return Weight({k: Fraction(c) * v for k, v in self.values.items()})

    def halve(self) -> "Weight":
        return self.scale(Fraction(1, 2))

    def pair(self, d: DimensionVector) -> Fraction:
        return sum((v * d[k] for k, v in self.values.items()), Fraction(0))

    def as_sorted_items(self):
        return tuple(sorted(self.values.items()))

    def character_key(self, sq) -> Tuple:
        """The underlying character: weight vectors are representatives, and
        only the exponent differences across mirror pairs are observable."""
        return tuple((x, self[x] - self[sq.sv(x)]) for x in sq.v_plus)

    def __repr__(self):
        body = ", ".join("%d:%s" % (k, v) for k, v in sorted(self.values.items()) if v)
        return "Weight(%s)" % body


def euler_row(q: Quiver, alpha: DimensionVector) -> Weight:
    """The linear form pairing alpha against dimension vectors on the left."""
    vals = {}
    for y in q.vertices:
        v = Fraction(alpha[y])
        for a in q.arrows_into(y):
            v -= alpha[a.tail]
        vals[y] = v
    return Weight(vals)


def weight_of_cv(sq: SymmetricQuiver, alpha: DimensionVector,
                 flavor: str = SYMPLECTIC) -> Weight:
    """Weight of the determinantal semi-invariant attached to alpha, with the
    coordinates at sigma-fixed vertices zeroed out."""
    w = euler_row(sq.base, alpha)
    for x in sq.v_fixed:
        w.values[x] = Fraction(0)
    return w


def gamma(sq: SymmetricQuiver, chi: Weight) -> Weight:
    """The involution sending a weight to minus its sigma pullback."""
    return Weight({x: -chi[sq.sv(x)] for x in sq.base.vertices})


def template_weight(sq: SymmetricQuiver, t: PathMatrix, half: bool = False) -> Weight:
    vals = {x: Fraction(0) for x in sq.base.vertices}
    for v in t.cols:
        vals[v] += 1
    for v in t.rows:
        vals[v] -= 1
    w = Weight(vals)
    for x in sq.v_fixed:
        w.values[x] = Fraction(0)
    return w.halve() if half else w


def evaluate_cv(v: Representation, w_structured: StructuredRepresentation) -> Fraction:
    """Determinant of the Hom-space map for the pair, in the fixed basis order."""
    w = w_structured.full()
    if euler_form(v.quiver, v.dim, w.dim) != 0:
        raise NonOrthogonalDimensions(
            "the Euler pairing of the dimension vectors must vanish")
    m = dvw_matrix(v, w)
    return determinant(m)


def evaluate_det(t: PathMatrix, w_structured: StructuredRepresentation) -> Fraction:
    m = evaluate_template(t, w_structured.full())
    if not m.is_square():
        raise NotSquare("template does not evaluate to a square matrix")
    return determinant(m)


def evaluate_pf(t: PathMatrix, w_structured: StructuredRepresentation) -> Fraction:
    m = evaluate_template(t, w_structured.full())
    if not m.is_square():
        raise NotSquare("template does not evaluate to a square matrix")
    return pfaffian(m)


# -- generator descriptors -------------------------------------------------------

@dataclass
class GeneratorDescriptor:
    kind: str                      # 'det', 'pf', 'pencil-det', 'pencil-pf'
    weight: Weight
    provenance: str
    template: Optional[PathMatrix] = None
    pencil: Optional[object] = None
    index: Optional[int] = None    # parameter exponent for pencil kinds

    def evaluate(self, w: StructuredRepresentation) -> Fraction:
        if self.kind == "det":
            return evaluate_det(self.template, w)
        if self.kind == "pf":
            return evaluate_pf(self.template, w)
        coeffs = pencil_coefficients(self.pencil, w,
                                     "pf" if self.kind == "pencil-pf" else "det")
        return coeffs.get(self.index, Fraction(0))

    def sort_key(self):
        return (self.kind, self.weight.as_sorted_items(),
                self.index if self.index is not None else -1, self.provenance)


def pencil_coefficients(pencil, w: StructuredRepresentation, kind: str) -> Dict[int, Fraction]:
    """Exact coefficients of the parameter polynomial det or pf of the pencil
    evaluated at a representation, by interpolation at integer nodes."""
    full = w.full()
    m0 = evaluate_template(pencil.combine(Fraction(0), Fraction(1)), full)
    if not m0.is_square():
        raise NotSquare("pencil does not evaluate to square matrices")
    degree = m0.rows if kind == "det" else m0.rows // 2
    pts = []
    for t in range(degree + 1):
        mt = evaluate_template(pencil.combine(Fraction(t), Fraction(1)), full)
        val = determinant(mt) if kind == "det" else pfaffian(mt)
        pts.append((Fraction(t), val))
    coeffs = interpolate_polynomial(pts)
    return {i: c for i, c in enumerate(coeffs) if c}


def _skew_witnesses(sq: SymmetricQuiver, flavor: str, beta, seed: int, count: int):
    return [random_structured(sq, flavor, beta, seed=seed + 101 * k)
            for k in range(count)]


def skew_normalize_template(t: PathMatrix, sq: SymmetricQuiver, flavor: str,
                            beta, seed: int = 0, witnesses: int = 8) -> Optional[PathMatrix]:
    """Search row permutations and sign flips making the evaluated template
    exactly skew-symmetric on the flavor's representation space."""
    from itertools import permutations, product as iproduct
    ws = _skew_witnesses(sq, flavor, beta, seed, 2)
    rows = len(t.rows)
    if rows > 4:
        return None
    full0 = ws[0].full()
    size = sum(full0.dim[v] for v in t.rows)
    if size != sum(full0.dim[v] for v in t.cols) or size % 2:
        return None
    for perm in permutations(range(rows)):
        permuted_rows = [t.rows[i] for i in perm]
        permuted_entries = [t.entries[i] for i in perm]
        for signs in iproduct((1, -1), repeat=rows):
            cand = PathMatrix(t.quiver, list(permuted_rows), list(t.cols),
                              [[{p: Fraction(s) * v for p, v in e.items()}
                                for e in row]
                               for s, row in zip(signs, permuted_entries)])
            ok = True
            for w in ws:
                m = evaluate_template(cand, w.full())
                if not m.is_skew_symmetric():
                    ok = False
                    break
            if not ok:
                continue
            for w in _skew_witnesses(sq, flavor, beta, seed + 7777, witnesses - 2):
                m = evaluate_template(cand, w.full())
                if not m.is_skew_symmetric():
                    ok = False
                    break
            if ok:
                return cand
    return None


def is_pfaffian_type(t: PathMatrix, sq: SymmetricQuiver, flavor: str, beta,
                     seed: int = 0) -> bool:
    """Whether the template carries a pfaffian on the flavor's space."""
    return skew_normalize_template(t, sq, flavor, beta, seed=seed) is not None


def _nonzero_on_seeds(descriptor: GeneratorDescriptor, sq: SymmetricQuiver,
                      flavor: str, beta, seeds=(0, 1, 2)) -> bool:
    for s in seeds:
        w = random_structured(sq, flavor, beta, seed=1000 + s)
        try:
            if descriptor.evaluate(w) != 0:
                return True
        except (NotSquare, NotSkewSymmetric):
            return False
    return False


# -- finite type -------------------------------------------------------------------

def _chain_vertices(sq: SymmetricQuiver) -> List[int]:
    q = sq.base
    sources = q.sources()
    if len(sources) != 1:
        raise NotFiniteType("the equioriented orientation has a unique source")
    order = [sources[0]]
    while True:
        outs = q.arrows_out_of(order[-1])
        if not outs:
            break
        order.append(outs[0].head)
    if len(order) != len(q.vertices):
        raise NotFiniteType("underlying graph is not a chain")
    return order


def chain_interval_module(sq: SymmetricQuiver, j: int, i: int) -> Representation:
    """Interval module on positions j..i (1-based) of the equioriented chain."""
    order = _chain_vertices(sq)
    n = len(order)
    if not (1 <= j <= i <= n):
        raise ValidationError("interval out of range")
    dim = DimensionVector({v: 0 for v in sq.base.vertices})
    for pos in range(j, i + 1):
        dim.values[order[pos - 1]] = 1
    mats = {}
    for a in sq.base.arrows:
        if dim[a.tail] and dim[a.head]:
            mats[a.name] = RationalMatrix.identity(1)
    return Representation(sq.base, dim, mats)


def generators_finite(sq: SymmetricQuiver, beta: DimensionVector,
                      flavor: str) -> List[GeneratorDescriptor]:
    """Generator list for an equioriented symmetric chain."""
    from .symmetric import classify_symmetric
    st = classify_symmetric(sq)
    if st.tag != "FiniteA":
        raise NotFiniteType("generators_finite needs a finite symmetric type")
    if not sq.is_symmetric_dim(beta):
        raise AsymmetricDimension("beta must be sigma-symmetric")
    order = _chain_vertices(sq)
    n = len(order)
    m = n // 2
    if n % 2 and flavor == SYMPLECTIC and beta[order[m]] % 2:
        raise OddSymplecticDimension("middle dimension must be even")
    out: List[GeneratorDescriptor] = []
    top = m - 1 if n % 2 == 0 else m
    for j in range(1, top + 1):
        for i in range(j, top + 1):
            v = chain_interval_module(sq, j, i)
            if euler_form(sq.base, v.dim, beta) != 0:
                continue
            t = minimal_presentation(v)
            out.append(GeneratorDescriptor(
                "det", template_weight(sq, t), "interval[%d,%d]" % (j, i), template=t))
    for i in range(1, m + 1):
        hi = n - i
        v = chain_interval_module(sq, i, hi)
        if euler_form(sq.base, v.dim, beta) != 0:
            continue
        t = minimal_presentation(v)
        wants_pf = (flavor == ORTHOGONAL) if n % 2 == 0 else (flavor == SYMPLECTIC)
        if wants_pf:
            if beta[order[i - 1]] % 2:
                continue
            normalized = skew_normalize_template(t, sq, flavor, beta)
            assert normalized is not None, "mirror interval must be skew"
            out.append(GeneratorDescriptor(
                "pf", template_weight(sq, normalized, half=True),
                "mirror-interval[%d,%d]" % (i, hi), template=normalized))
        else:
            out.append(GeneratorDescriptor(
                "det", template_weight(sq, t), "mirror-interval[%d,%d]" % (i, hi),
                template=t))
    out.sort(key=lambda d: d.sort_key())
    return out


# -- tame type ----------------------------------------------------------------------

PENCIL_KIND = {
    ("A201", SYMPLECTIC): "det", ("A201", ORTHOGONAL): "pf",
    ("A202", SYMPLECTIC): "det", ("A202", ORTHOGONAL): "pf",
    ("A02", ORTHOGONAL): "det", ("A02", SYMPLECTIC): "pf",
    ("A11", ORTHOGONAL): "det", ("A11", SYMPLECTIC): "det",
    ("A00", SYMPLECTIC): "det", ("A00", ORTHOGONAL): "det",
    ("D10", SYMPLECTIC): "det", ("D10", ORTHOGONAL): "pf",
    ("D01", ORTHOGONAL): "det", ("D01", SYMPLECTIC): "pf",
}


@dataclass
class _SkewPencil:
    base: object
    signs: Tuple[int, ...]

    def combine(self, phi, psi):
        t = self.base.combine(phi, psi)
        for r, s in enumerate(self.signs):
            if s == -1:
                t.scale_row(r, Fraction(-1))
        return t


def _skew_normalize_pencil(pen, sq, flavor, beta, seed=0):
    from itertools import product as iproduct
    ws = _skew_witnesses(sq, flavor, beta, seed, 2)
    rows = len(pen.rows)
    for signs in iproduct((1, -1), repeat=rows):
        cand = _SkewPencil(pen, signs)
        ok = True
        for w in ws:
            for t in (2, 3):
                m = evaluate_template(cand.combine(Fraction(t), Fraction(1)), w.full())
                if not m.is_skew_symmetric():
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return cand
    return None


def generators_tame(sq: SymmetricQuiver, d: DimensionVector,
                    flavor: str) -> List[GeneratorDescriptor]:
    """Generator list for a canonical tame symmetric quiver and a regular
    symmetric dimension vector: the coefficient pencil plus one determinant
    or pfaffian per admissible arc."""
    from .symmetric import classify_symmetric
    from .tame import (admissible_arcs, canonical_decomposition, pencil_templates,
                       pf_singleton_template, realize_interval, tau_orbits)
    st = classify_symmetric(sq)
    if st.tag == "FiniteA":
        raise NotTame("generators_tame needs a tame symmetric type")
    if flavor == SYMPLECTIC:
        for x in sq.v_fixed:
            if d[x] % 2:
                return []
    orbits = tau_orbits(sq)
    dec = canonical_decomposition(sq, d, orbits=orbits)
    out: List[GeneratorDescriptor] = []
    # the coefficient family of the parameter pencil
    pen = pencil_templates(sq)
    kind = PENCIL_KIND[(st.tag, flavor)]
    w0 = random_structured(sq, flavor, d, seed=424242)
    probe = evaluate_template(pen.combine(Fraction(1), Fraction(1)), w0.full())
    use_pencil = probe.is_square()
    if use_pencil and kind == "pf":
        normalized = _skew_normalize_pencil(pen, sq, flavor, d)
        if normalized is None or probe.rows % 2:
            use_pencil = False
        else:
            pen = normalized
    if use_pencil:
        indices = set()
        for s in (0, 1):
            w = random_structured(sq, flavor, d, seed=5000 + s)
            indices.update(pencil_coefficients(pen, w, kind).keys())
        base = pen.base if isinstance(pen, _SkewPencil) else pen
        wt = Weight({x: Fraction(0) for x in sq.base.vertices})
        for v in base.cols:
            wt.values[v] = wt[v] + 1
        for v in base.rows:
            wt.values[v] = wt[v] - 1
        for x in sq.v_fixed:
            wt.values[x] = Fraction(0)
        if kind == "pf":
            wt = wt.halve()
        for i in sorted(indices):
            out.append(GeneratorDescriptor(
                "pencil-" + kind, wt, "pencil[%d]" % i, pencil=pen, index=i))
    # the extra skew singleton of the free central symmetry family
    if st.tag == "A00":
        try:
            t = pf_singleton_template(sq)
            normalized = skew_normalize_template(t, sq, flavor, d)
            if normalized is not None:
                desc = GeneratorDescriptor(
                    "pf", template_weight(sq, normalized, half=True),
                    "skew-singleton", template=normalized)
                if _nonzero_on_seeds(desc, sq, flavor, d):
                    out.append(desc)
        except NotSquare:
            pass
    # arc generators
    for lp in dec.labelled:
        poly = lp.polygon
        if poly.partner is not None and poly.partner < poly.name:
            continue
        for arc in admissible_arcs(lp):
            # singleton and anchored wrap arcs carry a full-turn module, a
            # proper arc drops its clockwise-last vertex
            if arc.wrap or arc.length == 1:
                gen_length = poly.rank
            else:
                gen_length = arc.length - 1
            module = realize_interval(sq, orbits, poly.name, arc.start, gen_length)
            t = minimal_presentation(module)
            desc = None
            normalized = skew_normalize_template(t, sq, flavor, d)
            if normalized is not None:
                cand = GeneratorDescriptor(
                    "pf", template_weight(sq, normalized, half=True),
                    "arc[%s:%d+%d]" % (poly.name, arc.start, arc.length),
                    template=normalized)
                if _nonzero_on_seeds(cand, sq, flavor, d):
                    desc = cand
            if desc is None:
                cand = GeneratorDescriptor(
                    "det", template_weight(sq, t),
                    "arc[%s:%d+%d]" % (poly.name, arc.start, arc.length), template=t)
                if _nonzero_on_seeds(cand, sq, flavor, d) and \
                        template_is_square(t, w0.full()):
                    desc = cand
            if desc is not None:
                out.append(desc)
    # each sigma-fixed arrow contributes its own determinant or pfaffian;
    # these coincide with arc modules or pencil extremes in the smallest
    # cases, and the deduplication below drops the overlap
    for fname in sq.a_fixed:
        arrow = sq.base.arrow_by_name[fname]
        if flavor == ORTHOGONAL:
            if d[arrow.tail] % 2:
                continue
            desc = _single_arrow_descriptor(sq, fname, "pf", label="arrow")
        else:
            desc = _single_arrow_descriptor(sq, fname, "det", label="arrow")
        if _nonzero_on_seeds(desc, sq, flavor, d):
            out.append(desc)
    # drop duplicates: same weight and same values on two seeded points
    w0 = random_structured(sq, flavor, d, seed=9100)
    w1 = random_structured(sq, flavor, d, seed=9101)
    seen = set()
    deduped = []
    for g in out:
        key = (g.kind.replace("pencil-", ""), g.weight.as_sorted_items(),
               g.evaluate(w0), g.evaluate(w1))
        if key in seen:
            continue
        seen.add(key)
        deduped.append(g)
    deduped.sort(key=lambda dd: dd.sort_key())
    return deduped


# -- composition reduction ------------------------------------------------------------

def reduce_composition(sq: SymmetricQuiver, alpha: DimensionVector,
                       flavor: str = SYMPLECTIC):
    """Contract a two-arrow flow vertex, collecting the determinant or
    pfaffian factors split off by the contraction."""
    q = sq.base
    for x in sorted(sq.v_plus):
        arrows = q.arrows_at(x)
        if len(arrows) != 2:
            continue
        ins = [a for a in arrows if a.head == x]
        outs = [a for a in arrows if a.tail == x]
        if len(ins) != 1 or len(outs) != 1:
            continue
        a, b = ins[0], outs[0]
        y, z = a.tail, b.head
        if y in sq.v_minus or (z in sq.v_minus and sq.sa(b.name) != b.name):
            continue
        ax, ay, az = alpha[x], alpha[y], alpha[z]
        if ax < max(ay, az):
            continue
        extracted: List[GeneratorDescriptor] = []
        if sq.sa(b.name) == b.name:
            # sigma-fixed composite: contract x and sigma(x) into one arrow
            if ax > ay:
                if flavor == SYMPLECTIC:
                    extracted.append(_single_arrow_descriptor(sq, b.name, "det"))
                elif ax % 2 == 0:
                    extracted.append(_single_arrow_descriptor(sq, b.name, "pf"))
                else:
                    continue
            else:
                extracted.append(_single_arrow_descriptor(sq, a.name, "det"))
            new_arrow = a.name + "." + b.name + "." + sq.sa(a.name)
            arrows_new = [(ar.name, ar.tail, ar.head) for ar in q.arrows
                          if ar.name not in (a.name, b.name, sq.sa(a.name))]
            arrows_new.append((new_arrow, y, sq.sv(y)))
            verts = [v for v in q.vertices if v not in (x, sq.sv(x))]
            q2 = Quiver(verts, arrows_new, name=q.name + "-red")
            sv = {v: sq.sv(v) for v in verts}
            sa = {ar: sq.sa(ar) for ar in q2.arrow_by_name if ar != new_arrow}
            sa[new_arrow] = new_arrow
            sq2 = type(sq)(q2, sv, sa)
        else:
            if ax > max(ay, az):
                pass
            elif ax == ay and ax > az:
                extracted.append(_single_arrow_descriptor(sq, a.name, "det"))
            elif ax == az and ax > ay:
                extracted.append(_single_arrow_descriptor(sq, b.name, "det"))
            else:
                extracted.append(_single_arrow_descriptor(sq, a.name, "det"))
                extracted.append(_single_arrow_descriptor(sq, b.name, "det"))
            new_arrow = a.name + "." + b.name
            mirror_new = sq.sa(b.name) + "." + sq.sa(a.name)
            drop = {a.name, b.name, sq.sa(a.name), sq.sa(b.name)}
            arrows_new = [(ar.name, ar.tail, ar.head) for ar in q.arrows
                          if ar.name not in drop]
            arrows_new.append((new_arrow, y, z))
            arrows_new.append((mirror_new, sq.sv(z), sq.sv(y)))
            verts = [v for v in q.vertices if v not in (x, sq.sv(x))]
            q2 = Quiver(verts, arrows_new, name=q.name + "-red")
            sv = {v: sq.sv(v) for v in verts}
            sa = {ar.name: sq.sa(ar.name) for ar in q.arrows if ar.name not in drop}
            sa[new_arrow] = mirror_new
            sa[mirror_new] = new_arrow
            sq2 = type(sq)(q2, sv, sa)
        alpha2 = DimensionVector({v: alpha[v] for v in verts})
        return sq2, alpha2, extracted
    raise PatternNotFound("no contractible two-arrow vertex")


def _single_arrow_descriptor(sq: SymmetricQuiver, name: str, kind: str,
                             label: str = "contraction") -> GeneratorDescriptor:
    a = sq.base.arrow_by_name[name]
    t = PathMatrix(sq.base, [a.head], [a.tail], [[{(name,): Fraction(1)}]])
    w = template_weight(sq, t, half=(kind == "pf"))
    return GeneratorDescriptor(kind, w, "%s[%s]" % (label, name), template=t)
