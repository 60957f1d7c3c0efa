"""Regular dimension-vector combinatorics for tame symmetric quivers:
translation orbits, labelled polygons, admissible arcs, and the plain,
symplectic and orthogonal generic decompositions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Tuple

from .errors import (IndexOutOfOrbit, NotRegular, NotSymmetric,
                     ParityViolation, UnsupportedSymmetricType)
from .linalg import RationalMatrix, solve
from .presentation import PathMatrix, module_from_presentation
from .quiver import DimensionVector, Quiver, defect, null_root, tits_form
from .reflection import MINUS, PLUS, coxeter_dim, coxeter_rep, dual_rep
from .representation import Representation
from .symmetric import (ORTHOGONAL, SYMPLECTIC, SymmetricQuiver,
                        _cycle_order, classify_symmetric)


@dataclass
class Pole:
    kind: str            # 'vertex' or 'edge'
    index: int           # polygon index (for an edge, the anchor of {i, i+1})
    fixed_vertex: Optional[int] = None   # sigma-fixed vertex met by the support
    fixed_arrow: Optional[str] = None    # sigma-fixed arrow met by the support


@dataclass
class Polygon:
    name: str
    dims: List[DimensionVector]          # tau-plus cyclic order
    sigma: Optional[List[int]]           # index involution, None when paired away
    partner: Optional[str] = None        # polygon carrying the delta images
    poles: List[Pole] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return len(self.dims)

    def interval_sum(self, start: int, length: int) -> DimensionVector:
        acc = None
        for k in range(length):
            e = self.dims[(start + k) % self.rank]
            acc = e if acc is None else acc + e
        assert acc is not None
        return acc


@dataclass
class TauOrbits:
    sq: SymmetricQuiver
    polygons: List[Polygon]

    def by_name(self, name: str) -> Polygon:
        for p in self.polygons:
            if p.name == name:
                return p
        raise IndexOutOfOrbit("no polygon named %r" % name)


@dataclass(frozen=True)
class Arc:
    polygon: str
    start: int
    end: int          # closed ascending cyclic interval [start, end]
    length: int       # number of indices covered
    ind: int
    q: int
    symmetric: bool
    wrap: bool = False  # anchored full circuit rather than a proper interval


@dataclass
class LabelledPolygon:
    polygon: Polygon
    labels: List[int]


def _candidate_regular_simples(q: Quiver) -> List[DimensionVector]:
    h = null_root(q)
    verts = list(q.vertices)
    ranges = [range(0, h[v] + 1) for v in verts]
    out = []
    for combo in product(*ranges):
        alpha = DimensionVector(dict(zip(verts, combo)))
        if alpha.is_zero() or alpha == h:
            continue
        if defect(q, alpha) != 0:
            continue
        if tits_form(q, alpha) != 1:
            continue
        out.append(alpha)
    return out


def tau_orbits(sq: SymmetricQuiver) -> TauOrbits:
    """Orbits of the translation on nonhomogeneous simple regular dimension
    vectors, anchored and oriented deterministically."""
    st = classify_symmetric(sq)
    if st.tag == "FiniteA":
        raise UnsupportedSymmetricType("translation orbits need a tame quiver")
    q = sq.base
    h = null_root(q)
    candidates = set(_candidate_regular_simples(q))
    orbits: List[List[DimensionVector]] = []
    seen = set()
    for alpha in sorted(candidates, key=lambda a: a.as_tuple(q.vertices)):
        if alpha in seen:
            continue
        orbit = [alpha]
        seen.add(alpha)
        cur = alpha
        while True:
            cur = coxeter_dim(q, cur, PLUS)
            if cur == alpha:
                break
            if cur not in candidates or len(orbit) > len(candidates):
                orbit = None
                break
            orbit.append(cur)
            seen.add(cur)
        if orbit is None:
            continue
        total = orbit[0]
        for e in orbit[1:]:
            total = total + e
        if total == h:
            orbits.append(orbit)
    # anchor and pair the orbits
    polygons: List[Polygon] = []
    orbits.sort(key=lambda o: (-len(o), o[0].as_tuple(q.vertices)))
    names = ["delta", "delta1", "delta2"]
    for oi, orbit in enumerate(orbits):
        poly = Polygon(names[oi], list(orbit), None)
        polygons.append(poly)
    # locate delta images
    for oi, poly in enumerate(polygons):
        r = poly.rank
        img = sq.delta(poly.dims[0])
        target = None
        for oj, other in enumerate(polygons):
            if img in other.dims:
                target = oj
                break
        assert target is not None, "delta must permute the orbits"
        if target == oi:
            sigma = []
            for i in range(r):
                di = sq.delta(poly.dims[i])
                sigma.append(poly.dims.index(di))
            poly.sigma = sigma
        else:
            poly.partner = polygons[target].name
    # rotate self-paired polygons so the anchor pole sits at index 0
    for poly in polygons:
        if poly.sigma is None:
            continue
        r = poly.rank
        fixed = [i for i in range(r) if poly.sigma[i] == i]
        if fixed:
            anchor = min(fixed, key=lambda i: poly.dims[i].as_tuple(q.vertices))
        else:
            edges = [i for i in range(r) if poly.sigma[i] == (i + 1) % r]
            anchor = min(edges, key=lambda i: poly.dims[i].as_tuple(q.vertices))
        poly.dims = poly.dims[anchor:] + poly.dims[:anchor]
        sigma = []
        for i in range(r):
            di = sq.delta(poly.dims[i])
            sigma.append(poly.dims.index(di))
        poly.sigma = sigma
        poly.poles = _find_poles(sq, poly)
    return TauOrbits(sq, polygons)


def _find_poles(sq: SymmetricQuiver, poly: Polygon) -> List[Pole]:
    poles: List[Pole] = []
    r = poly.rank
    assert poly.sigma is not None
    for i in range(r):
        if poly.sigma[i] == i:
            poles.append(_pole_data(sq, poly, "vertex", i))
        if poly.sigma[i] == (i + 1) % r and r > 1:
            poles.append(_pole_data(sq, poly, "edge", i))
    return poles


def _pole_data(sq: SymmetricQuiver, poly: Polygon, kind: str, index: int) -> Pole:
    e = poly.dims[index]
    for x in sq.v_fixed:
        if e[x] != 0:
            if kind == "vertex":
                return Pole(kind, index, fixed_vertex=x)
    for name in sq.a_fixed:
        a = sq.base.arrow_by_name[name]
        if e[a.tail] != 0 or e[a.head] != 0:
            return Pole(kind, index, fixed_arrow=name)
    return Pole(kind, index)


# -- canonical decomposition ---------------------------------------------------

@dataclass
class CanonicalDecomposition:
    p: int
    labelled: List[LabelledPolygon]

    def labels_of(self, name: str) -> List[int]:
        for lp in self.labelled:
            if lp.polygon.name == name:
                return lp.labels
        raise IndexOutOfOrbit("no polygon named %r" % name)


def canonical_decomposition(sq: SymmetricQuiver, d: DimensionVector,
                            flavor: Optional[str] = None,
                            orbits: Optional[TauOrbits] = None) -> CanonicalDecomposition:
    """Unique expression of a regular symmetric vector as a multiple of the
    null root plus labelled orbit contributions, normalized so every orbit
    has a zero label."""
    q = sq.base
    if not sq.is_symmetric_dim(d):
        raise NotSymmetric("the input vector is not sigma-symmetric")
    if defect(q, d) != 0:
        raise NotRegular("the input vector has nonzero defect")
    orbits = orbits or tau_orbits(sq)
    h = null_root(q)
    columns: List[DimensionVector] = [h]
    owners: List[Tuple[int, int]] = [(-1, -1)]
    for pi, poly in enumerate(orbits.polygons):
        for i in range(poly.rank - 1):  # drop the last element of each orbit
            columns.append(poly.dims[i])
            owners.append((pi, i))
    verts = list(q.vertices)
    mat = RationalMatrix.zero(len(verts), len(columns))
    for j, col in enumerate(columns):
        for i, v in enumerate(verts):
            mat[i, j] = col[v]
    rhs = [Fraction(d[v]) for v in verts]
    sol = solve(mat, rhs)
    if sol is None:
        raise NotRegular("vector is outside the regular lattice")
    p = sol[0]
    raw: Dict[int, List[Fraction]] = {pi: [Fraction(0)] * poly.rank
                                      for pi, poly in enumerate(orbits.polygons)}
    for val, (pi, i) in zip(sol[1:], owners[1:]):
        raw[pi][i] = val
    labelled = []
    for pi, poly in enumerate(orbits.polygons):
        vals = raw[pi]
        shift = min(vals)
        vals = [v - shift for v in vals]
        p = p + shift
        if any(v.denominator != 1 or v < 0 for v in vals):
            raise NotRegular("orbit labels are not nonnegative integers")
        labelled.append(LabelledPolygon(poly, [int(v) for v in vals]))
    if p.denominator != 1 or p < 0:
        raise NotRegular("the null-root multiplicity is not a nonnegative integer")
    p = int(p)
    # mirrored labels must agree
    for lp in labelled:
        poly = lp.polygon
        if poly.sigma is not None:
            for i in range(poly.rank):
                if lp.labels[i] != lp.labels[poly.sigma[i]]:
                    raise NotSymmetric("labels are not sigma-symmetric")
        elif poly.partner is not None:
            other = next(l for l in labelled if l.polygon.name == poly.partner)
            for i in range(poly.rank):
                img = sq.delta(poly.dims[i])
                j = other.polygon.dims.index(img)
                if lp.labels[i] != other.labels[j]:
                    raise NotSymmetric("paired orbit labels disagree")
    if flavor == SYMPLECTIC:
        _check_symplectic_parity(sq, d, labelled)
    return CanonicalDecomposition(p, labelled)


def _check_symplectic_parity(sq, d, labelled) -> None:
    for x in sq.v_fixed:
        if d[x] % 2:
            raise ParityViolation("symplectic dimension at %r must be even" % x)


# -- arcs ------------------------------------------------------------------------

def _cyclic_interval(start: int, length: int, r: int) -> List[int]:
    return [(start + k) % r for k in range(length)]


def admissible_arcs(lp: LabelledPolygon) -> List[Arc]:
    """Runs of the peeling procedure plus the index-zero arcs.

    Runs carry the multiplicities of the generic decomposition; equal-label
    edges and the arcs whose interior labels are all positive index extra
    generators with multiplicity zero.
    """
    poly = lp.polygon
    labels = lp.labels
    r = poly.rank
    arcs: Dict[Tuple[int, int], Arc] = {}
    if r == 0:
        return []
    maxlab = max(labels) if labels else 0
    run_count: Dict[Tuple[int, int], int] = {}
    for level in range(1, maxlab + 1):
        marked = [lab >= level for lab in labels]
        if all(marked):
            raise NotRegular("labels must vanish somewhere on each polygon")
        for s in range(r):
            if marked[s] and not marked[(s - 1) % r]:
                length = 0
                while marked[(s + length) % r]:
                    length += 1
                run_count[(s, length)] = run_count.get((s, length), 0) + 1
    for (s, length), q in run_count.items():
        ind = min(labels[(s + k) % r] for k in range(length))
        sym = _is_symmetric_interval(poly, s, length)
        arcs[(s, length)] = Arc(poly.name, s, (s + length - 1) % r, length, ind, q, sym)
    # equal-label edges
    if r >= 2:
        for i in range(r):
            j = (i + 1) % r
            if labels[i] == labels[j]:
                key = (i, 2)
                if key not in arcs:
                    arcs[key] = Arc(poly.name, i, j, 2, labels[i], 0,
                                    _is_symmetric_interval(poly, i, 2))
    # index-zero arcs with strictly positive interior
    for s in range(r):
        if labels[s] != 0:
            continue
        for length in range(1, r + 1):
            e = (s + length - 1) % r
            if labels[e] != 0:
                continue
            interior = [(s + k) % r for k in range(1, length - 1)]
            wrap = length == 1
            if wrap:
                interior = [(s + k) % r for k in range(1, r)]
            if interior and all(labels[k] > 0 for k in interior):
                key = (s, r if wrap else length)
                if key not in arcs:
                    arcs[key] = Arc(poly.name, s, (s + (key[1]) - 1) % r, key[1],
                                    0, 0, _is_symmetric_interval(poly, s, key[1]),
                                    wrap=wrap)
    out = sorted(arcs.values(), key=lambda a: (a.start, a.length))
    return out


def _is_symmetric_interval(poly: Polygon, start: int, length: int) -> bool:
    if poly.sigma is None:
        return False
    idx = set(_cyclic_interval(start, length, poly.rank))
    return idx == {poly.sigma[i] for i in idx}


def _arc_pole(poly: Polygon, start: int, length: int) -> Optional[Pole]:
    """The pole sitting in the middle of a symmetric interval."""
    if poly.sigma is None:
        return None
    r = poly.rank
    if length % 2 == 1:
        mid = (start + length // 2) % r
        for pole in poly.poles:
            if pole.kind == "vertex" and pole.index == mid:
                return pole
    else:
        mid = (start + length // 2 - 1) % r
        for pole in poly.poles:
            if pole.kind == "edge" and pole.index == mid:
                return pole
    return None


# -- generic decompositions -------------------------------------------------------

@dataclass
class Summand:
    dim: DimensionVector
    mult: int
    recipe: Tuple


def _polygon_partial(lp: LabelledPolygon) -> DimensionVector:
    poly = lp.polygon
    acc = poly.dims[0].scale(0)
    for i, lab in enumerate(lp.labels):
        acc = acc + poly.dims[i].scale(lab)
    return acc


def generic_decomposition(sq: SymmetricQuiver, d: DimensionVector, mode: str,
                          orbits: Optional[TauOrbits] = None):
    """Summands of the generic, symplectic-generic or orthogonal-generic
    decomposition, as (dimension vector, multiplicity) pairs.

    Internal recipes for module realization ride along on the summand
    records returned by :func:`generic_summands`.
    """
    return [(s.dim, s.mult) for s in generic_summands(sq, d, mode, orbits)]


def generic_summands(sq: SymmetricQuiver, d: DimensionVector, mode: str,
                     orbits: Optional[TauOrbits] = None) -> List[Summand]:
    if mode not in ("plain", SYMPLECTIC, ORTHOGONAL):
        raise ValueError("mode must be plain, sp or o")
    orbits = orbits or tau_orbits(sq)
    flavor = mode if mode in (SYMPLECTIC, ORTHOGONAL) else None
    dec = canonical_decomposition(sq, d, flavor=flavor, orbits=orbits)
    h = null_root(sq.base)
    out: List[Summand] = []
    h_budget = dec.p
    for lp in dec.labelled:
        poly = lp.polygon
        if poly.partner is not None and poly.partner < poly.name:
            continue  # the mirror polygon repeats the same arcs
        arcs = [a for a in admissible_arcs(lp) if a.q > 0]
        sym_arcs = [a for a in arcs if a.symmetric]
        asym_arcs = [a for a in arcs if not a.symmetric]
        emitted_mirrors = set()
        for arc in asym_arcs:
            if poly.sigma is not None:
                # each arc strictly inside a half pairs with its mirror image
                mstart = poly.sigma[arc.end]
                if (mstart, arc.length) in emitted_mirrors:
                    continue
                emitted_mirrors.add((arc.start, arc.length))
            ivl = poly.interval_sum(arc.start, arc.length)
            mirror = sq.delta(ivl)
            out.append(Summand(ivl + mirror, arc.q,
                               ("pair", poly.name, arc.start, arc.length)))
        if not sym_arcs:
            continue
        if mode == "plain":
            for arc in sym_arcs:
                out.append(Summand(poly.interval_sum(arc.start, arc.length), arc.q,
                                   ("symarc", poly.name, arc.start, arc.length)))
            continue
        # group the symmetric arcs by their pole and apply the pairing rules
        by_pole: Dict[int, List[Arc]] = {}
        for arc in sym_arcs:
            pole = _arc_pole(poly, arc.start, arc.length)
            assert pole is not None, "symmetric arcs sit over a pole"
            by_pole.setdefault(poly.poles.index(pole), []).append(arc)
        for pole_idx, group in sorted(by_pole.items()):
            pole = poly.poles[pole_idx]
            group.sort(key=lambda a: -a.length)  # outermost first
            partial = _polygon_partial(lp)
            if mode == SYMPLECTIC:
                substitute = pole.fixed_vertex is not None
            else:
                substitute = (pole.fixed_arrow is not None and
                              partial[sq.base.arrow_by_name[pole.fixed_arrow].tail] % 2 == 0)
            if not substitute:
                for arc in group:
                    out.append(Summand(poly.interval_sum(arc.start, arc.length), arc.q,
                                       ("symarc", poly.name, arc.start, arc.length)))
                continue
            expanded: List[Arc] = []
            for arc in group:
                expanded.extend([arc] * arc.q)
            if len(expanded) % 2 == 1:
                if h_budget == 0:
                    raise ParityViolation(
                        "an odd stack of symmetric arcs needs a null-root summand")
                h_budget -= 1
                inner = expanded[0]
                out.append(Summand(h + poly.interval_sum(inner.start, inner.length), 1,
                                   ("hmerge", poly.name, inner.start, inner.length)))
                expanded = expanded[1:]
            for t in range(0, len(expanded), 2):
                outer, inner = expanded[t], expanded[t + 1]
                # cross pairing: inner start to mirrored outer end, and back
                r = poly.rank
                cross1_start = inner.start
                cross1_len = (outer.end - inner.start) % r + 1
                cross1 = poly.interval_sum(cross1_start, cross1_len)
                cross2 = sq.delta(cross1)
                out.append(Summand(cross1 + cross2, 1,
                                   ("cross", poly.name, cross1_start, cross1_len)))
    for t in range(h_budget):
        out.append(Summand(h, 1, ("h", t)))
    return out


# -- family path data and pencils ------------------------------------------------

@dataclass
class Pencil:
    quiver: Quiver
    rows: List[int]
    cols: List[int]
    phi_entries: List[List[dict]]
    psi_entries: List[List[dict]]
    const_entries: List[List[dict]]

    def combine(self, phi: Fraction, psi: Fraction) -> PathMatrix:
        entries = []
        for r in range(len(self.rows)):
            row = []
            for c in range(len(self.cols)):
                combo: dict = {}
                for src, coeff in ((self.phi_entries[r][c], Fraction(phi)),
                                   (self.psi_entries[r][c], Fraction(psi)),
                                   (self.const_entries[r][c], Fraction(1))):
                    for p, v in src.items():
                        combo[p] = combo.get(p, Fraction(0)) + coeff * v
                row.append({p: v for p, v in combo.items() if v})
            entries.append(row)
        return PathMatrix(self.quiver, list(self.rows), list(self.cols), entries)


def _zeros(rows, cols):
    return [[dict() for _ in cols] for _ in rows]


def _single(rows, cols, r, c, path, coeff=1):
    grid = _zeros(rows, cols)
    grid[r][c] = {tuple(path): Fraction(coeff)}
    return grid


def _unique_path(q: Quiver, src: int, dst: int) -> Tuple[str, ...]:
    paths = q.paths_from(src)[dst]
    paths = [p for p in paths if p]
    assert len(paths) >= 1, "no path from %r to %r" % (src, dst)
    return paths[0]


def _visits(q: Quiver, path, start) -> List[int]:
    verts = [start]
    cur = start
    for name in path:
        cur = q.arrow_by_name[name].head
        verts.append(cur)
    return verts


def pencil_templates(sq: SymmetricQuiver) -> Pencil:
    """The coefficient-family pencil of the canonical tame orientation."""
    st = classify_symmetric(sq)
    q = sq.base
    if st.tag in ("D10", "D01"):
        sources = q.sources()
        t1, t2 = sorted(sources)
        a = q.arrows_out_of(t1)[0]
        b = q.arrows_out_of(t2)[0]
        j0 = a.head
        cbar = _unique_path(q, j0, sq.sv(j0)) if sq.sv(j0) != j0 else ()
        sa = sq.sa(a.name)
        sb = sq.sa(b.name)
        rows = [sq.sv(t1), sq.sv(t2)]
        cols = [t1, t2]
        p_aa = (a.name,) + cbar + (sa,)
        p_ab = (b.name,) + cbar + (sa,)
        p_ba = (a.name,) + cbar + (sb,)
        p_bb = (b.name,) + cbar + (sb,)
        phi = _single(rows, cols, 0, 0, p_aa)
        psi = _single(rows, cols, 1, 1, p_bb)
        const = _zeros(rows, cols)
        const[0][1] = {p_ab: Fraction(1)}
        const[1][0] = {p_ba: Fraction(1)}
        return Pencil(q, rows, cols, phi, psi, const)
    if st.tag == "A202":
        fixed = [q.arrow_by_name[n] for n in sq.a_fixed]
        sources = q.sources()
        sinks = q.sinks()
        a0 = None
        for s in sorted(sources):
            if sq.sv(s) in sinks and q.paths_from(s)[sq.sv(s)]:
                a0 = s
                break
        assert a0 is not None
        abar = _unique_path(q, a0, sq.sv(a0))
        on_path = set(abar)
        f_b = next(f for f in fixed if f.name not in on_path)
        y = f_b.head
        cbar = _unique_path(q, a0, y) if y != a0 else ()
        rows = [sq.sv(a0), y]
        cols = [a0, sq.sv(y)]
        phi = _single(rows, cols, 0, 0, abar)
        psi = _single(rows, cols, 1, 1, (f_b.name,))
        const = _zeros(rows, cols)
        const[0][1] = {sq.sigma_path(cbar): Fraction(1)} if cbar else {(): Fraction(1)}
        const[1][0] = {tuple(cbar): Fraction(1)} if cbar else {(): Fraction(1)}
        return Pencil(q, rows, cols, phi, psi, const)
    # remaining A-families: one source, one sink, two boundary paths
    sources = q.sources()
    assert len(sources) == 1, "canonical orientation expected"
    s = sources[0]
    t = sq.sv(s)
    paths = [p for p in q.paths_from(s)[t] if p]
    assert len(paths) == 2
    p1, p2 = sorted(paths)
    rows = [t]
    cols = [s]
    if st.tag == "A11":
        through_fixed_vertex = None
        for p in (p1, p2):
            if any(v in sq.v_fixed for v in _visits(q, p, s)):
                through_fixed_vertex = p
        assert through_fixed_vertex is not None
        pa = through_fixed_vertex
        pb = p1 if pa == p2 else p2
    elif st.tag in ("A201", "A02"):
        pa, pb = p1, p2
    elif st.tag == "A00":
        pa, pb = p1, p2
    else:
        raise UnsupportedSymmetricType("no pencil for %s" % st)
    psi = _single(rows, cols, 0, 0, pa)
    phi = _single(rows, cols, 0, 0, pb)
    return Pencil(q, rows, cols, phi, psi, _zeros(rows, cols))


def pf_singleton_template(sq: SymmetricQuiver) -> PathMatrix:
    """The skew single-block template of the free central symmetry family."""
    st = classify_symmetric(sq)
    assert st.tag == "A00"
    pen = pencil_templates(sq)
    return pen.combine(Fraction(1), Fraction(1))


# -- string and tree modules ------------------------------------------------------

def _cover_data(sq: SymmetricQuiver):
    order = _cycle_order(sq.base)
    return order


def _window_matches(sq, order, pos, length, target: DimensionVector) -> bool:
    m = len(order)
    counts: Dict[int, int] = {v: 0 for v in sq.base.vertices}
    for z in range(pos, pos + length):
        counts[order[z % m][0]] += 1
    return all(counts[v] == target[v] for v in sq.base.vertices)


def _find_tiling(sq, poly: Polygon):
    """Offsets realizing the polygon's orbit as consecutive windows on the
    universal cover of the cycle."""
    order = _cover_data(sq)
    m = len(order)
    r = poly.rank
    lens = [sum(e.values.values()) for e in poly.dims]
    for s in range(m):
        for rho in range(r):
            for eps in (1, -1):
                pos = s
                ok = True
                for t in range(r):
                    idx = (rho + eps * t) % r
                    if not _window_matches(sq, order, pos, lens[idx], poly.dims[idx]):
                        ok = False
                        break
                    pos += lens[idx]
                if ok:
                    return order, s, rho, eps
    raise IndexOutOfOrbit("no string tiling found for polygon %s" % poly.name)


def _string_module(sq, order, a: int, b: int) -> Representation:
    """Pushdown of the interval [a, b] on the covering line."""
    q = sq.base
    m = len(order)
    positions = list(range(a, b + 1))
    by_vertex: Dict[int, List[int]] = {v: [] for v in q.vertices}
    for z in positions:
        by_vertex[order[z % m][0]].append(z)
    dim = DimensionVector({v: len(by_vertex[v]) for v in q.vertices})
    mats = {arrow.name: RationalMatrix.zero(dim[arrow.head], dim[arrow.tail])
            for arrow in q.arrows}
    for z in range(a, b):
        v, arrow_name, direction = order[z % m]
        arrow = q.arrow_by_name[arrow_name]
        if direction == 1:
            src, dst = z, z + 1
        else:
            src, dst = z + 1, z
        mats[arrow_name][by_vertex[arrow.head].index(dst),
                         by_vertex[arrow.tail].index(src)] = 1
    return Representation(q, dim, mats)


def _tree_module(sq, target: DimensionVector) -> Optional[Representation]:
    q = sq.base
    if any(v not in (0, 1) for v in target.values.values()):
        return None
    support = set(target.support())
    if not support:
        return None
    # connectivity of the support
    seen = {min(support)}
    frontier = [min(support)]
    while frontier:
        v = frontier.pop()
        for a in q.arrows_at(v):
            for w in (a.tail, a.head):
                if w in support and w not in seen:
                    seen.add(w)
                    frontier.append(w)
    if seen != support:
        return None
    mats = {}
    for a in q.arrows:
        if a.tail in support and a.head in support:
            mats[a.name] = RationalMatrix.identity(1)
    return Representation(q, target, mats)


def _dtilde_wrap_template(sq, poly: Polygon) -> PathMatrix:
    pen = pencil_templates(sq)
    if poly.name == "delta":
        return pen.combine(Fraction(1), Fraction(1))
    assert poly.sigma is not None
    all_fixed = all(poly.sigma[i] == i for i in range(poly.rank))
    full = pen.combine(Fraction(1), Fraction(1))
    entries = [[dict(full.entries[r][c]) for c in range(2)] for r in range(2)]
    if all_fixed:
        entries[1][0] = {}
    else:
        entries[0][0] = {}
    return PathMatrix(full.quiver, full.rows, full.cols, entries)


def realize_interval(sq: SymmetricQuiver, orbits: TauOrbits, poly_name: str,
                     start: int, length: int) -> Representation:
    """The regular module whose dimension is a consecutive orbit sum."""
    st = classify_symmetric(sq)
    poly = orbits.by_name(poly_name)
    r = poly.rank
    if st.tag.startswith("A"):
        order, s, rho, eps = _find_tiling(sq, poly)
        lens = [sum(e.values.values()) for e in poly.dims]
        prefix = [0]
        for t in range(r):
            idx = (rho + eps * t) % r
            prefix.append(prefix[-1] + lens[idx])
        windows = [(start + k) % r for k in range(length)]
        if eps == 1:
            t0 = (windows[0] - rho) % r
            a = s + prefix[t0]
            total = sum(lens[w] for w in windows)
            b = a + total - 1
        else:
            t0 = (rho - windows[-1]) % r
            a = s + prefix[t0]
            total = sum(lens[w] for w in windows)
            b = a + total - 1
        mod = _string_module(sq, order, a, b)
        expected = poly.interval_sum(start, length)
        assert mod.dim == expected, "string tiling mismatch"
        return mod
    # D-tilde families
    if length >= r:
        if length == r:
            t = _dtilde_wrap_template(sq, poly)
            mod = module_from_presentation(t)
            assert mod.dim == null_root(sq.base)
            return mod
        raise IndexOutOfOrbit("intervals beyond one full turn are not realized here")
    target = poly.interval_sum(start, length)
    for shift in range(2 * r + 1):
        shifted = target
        for _ in range(shift):
            shifted = coxeter_dim(sq.base, shifted, PLUS)
        tree = _tree_module(sq, shifted)
        if tree is not None:
            mod = tree
            for _ in range(shift):
                mod = coxeter_rep(sq.base, mod, MINUS)
            assert mod.dim == target
            return mod
    raise IndexOutOfOrbit("no tree realization of the requested interval")


def realize_summand(sq: SymmetricQuiver, orbits: TauOrbits, summand: Summand,
                    parameter_offset: int = 0) -> Representation:
    """A module of the summand's dimension, per the recipe attached to it."""
    kind = summand.recipe[0]
    if kind == "h":
        idx = summand.recipe[1] + parameter_offset
        pen = pencil_templates(sq)
        primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
        phi = Fraction(primes[idx % len(primes)])
        mod = module_from_presentation(pen.combine(phi, Fraction(1)))
        assert mod.dim == null_root(sq.base)
        return mod
    _, poly_name, start, length = summand.recipe
    if kind == "symarc":
        return realize_interval(sq, orbits, poly_name, start, length)
    if kind in ("pair", "cross"):
        half = realize_interval(sq, orbits, poly_name, start, length)
        return half.direct_sum(dual_rep(sq, half))
    if kind == "hmerge":
        poly = orbits.by_name(poly_name)
        return realize_interval(sq, orbits, poly_name, start, length + poly.rank)
    raise IndexOutOfOrbit("unknown summand recipe %r" % (summand.recipe,))


def tame_regular_module(sq: SymmetricQuiver, which: Tuple,
                        orbits: Optional[TauOrbits] = None) -> Representation:
    """Named regular indecomposables of a canonical tame symmetric quiver.

    ``which`` is ('E', i, j), ('E1', i, j), ('E2', i, j) for the module with
    socle index i and closed orbit interval [i, j] on the respective polygon,
    or ('Vhom', phi, psi) for the homogeneous module of null-root dimension.
    """
    orbits = orbits or tau_orbits(sq)
    tag = which[0]
    if tag == "Vhom":
        _, phi, psi = which
        pen = pencil_templates(sq)
        mod = module_from_presentation(pen.combine(Fraction(phi), Fraction(psi)))
        assert mod.dim == null_root(sq.base)
        return mod
    poly_name = {"E": "delta", "E1": "delta1", "E2": "delta2"}.get(tag)
    if poly_name is None:
        raise IndexOutOfOrbit("unknown module family %r" % (tag,))
    poly = orbits.by_name(poly_name)
    _, i, j = which
    r = poly.rank
    if not (0 <= i < r and 0 <= j < r):
        raise IndexOutOfOrbit("orbit indices must lie in [0, %d)" % r)
    length = (j - i) % r + 1
    return realize_interval(sq, orbits, poly_name, i, length)
