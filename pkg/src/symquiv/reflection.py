"""Sink/source reflections on dimension vectors, weights and representations,
Coxeter translation, and the duality functor."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List

from .errors import NotAdmissible, NonzeroOnFixedVertex, NotSinkOrSource
from .linalg import RationalMatrix, column_space_complement, kernel_basis
from .quiver import DimensionVector, Quiver
from .representation import Representation
from .symmetric import SymmetricQuiver, admissible_sinks

PLUS = "plus"
MINUS = "minus"


def reflect_dim(q: Quiver, x: int, alpha: DimensionVector):
    """BGP reflection of a dimension vector at a sink or source x.

    Returns (reflected quiver, reflected dimension vector).
    """
    if not (q.is_sink(x) or q.is_source(x)):
        raise NotSinkOrSource("vertex %r is neither a sink nor a source" % x)
    total = 0
    for a in q.arrows_at(x):
        other = a.tail if a.head == x else a.head
        total += alpha[other]
    new = DimensionVector(dict(alpha.values))
    new.values[x] = total - alpha[x]
    return q.reverse_arrows_at(x), new


def reflect_pair_dim(sq: SymmetricQuiver, x: int, alpha: DimensionVector):
    """Reflection at an admissible sink-source pair (x, sigma x)."""
    if x not in admissible_sinks(sq):
        raise NotAdmissible("vertex %r is not an admissible sink" % x)
    q1, a1 = reflect_dim(sq.base, x, alpha)
    q2, a2 = reflect_dim(q1, sq.sv(x), a1)
    return sq.with_base(q2), a2


def arrows_between(q: Quiver, x: int, y: int) -> int:
    return sum(1 for a in q.arrows if {a.tail, a.head} == {x, y})


def reflect_weight(sq: SymmetricQuiver, x: int, chi) -> Dict[int, Fraction]:
    """Weight transform under the admissible pair reflection at sink x.

    Accepts a vertex dict or a Weight; the input must vanish on sigma-fixed
    vertices and the output does too.
    """
    if hasattr(chi, "values") and not isinstance(chi, dict):
        chi = dict(chi.values)
    if x not in admissible_sinks(sq):
        raise NotAdmissible("vertex %r is not an admissible sink" % x)
    for v in sq.v_fixed:
        if chi.get(v, 0) != 0:
            raise NonzeroOnFixedVertex("weight must vanish on fixed vertex %r" % v)
    q = sq.base
    sx = sq.sv(x)
    out: Dict[int, Fraction] = {}
    for y in q.vertices:
        if y in sq.v_fixed:
            out[y] = Fraction(0)
        elif y == x:
            out[y] = -Fraction(chi.get(x, 0))
        elif y == sx:
            out[y] = -Fraction(chi.get(sx, 0))
        else:
            val = Fraction(chi.get(y, 0))
            val += arrows_between(q, x, y) * Fraction(chi.get(x, 0))
            val += arrows_between(q, sx, y) * Fraction(chi.get(sx, 0))
            out[y] = val
    return out


def reflect_rep(q: Quiver, x: int, direction: str, v: Representation):
    """Kernel (plus, at a sink) or cokernel (minus, at a source) reflection.

    Returns (reflected quiver, reflected representation) with deterministic
    bases: kernels from reduced row echelon form, cokernels from the greedy
    standard-vector complement of the column space.
    """
    if direction == PLUS:
        if not q.is_sink(x):
            raise NotSinkOrSource("plus reflection needs a sink, %r is not" % x)
        arrows = sorted(q.arrows_into(x), key=lambda a: a.name)
        blocks = [v.matrices[a.name] for a in arrows]
        tails = [a.tail for a in arrows]
        total = sum(v.dim[t] for t in tails)
        stacked = RationalMatrix.zero(v.dim[x], total)
        off = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    stacked[i, off + j] = b[i, j]
            off += b.cols
        kb = kernel_basis(stacked)
        new_dim = DimensionVector(dict(v.dim.values))
        new_dim.values[x] = len(kb)
        qr = q.reverse_arrows_at(x)
        mats = {}
        for a in q.arrows:
            if a.head != x:
                mats[a.name] = v.matrices[a.name]
        off = 0
        for a, t in zip(arrows, tails):
            width = v.dim[t]
            proj = RationalMatrix.zero(width, len(kb))
            for col, vec in enumerate(kb):
                for i in range(width):
                    proj[i, col] = vec[off + i]
            mats[a.name] = proj  # reversed arrow x -> tail
            off += width
        return qr, Representation(qr, new_dim, mats)
    if direction == MINUS:
        if not q.is_source(x):
            raise NotSinkOrSource("minus reflection needs a source, %r is not" % x)
        arrows = sorted(q.arrows_out_of(x), key=lambda a: a.name)
        heads = [a.head for a in arrows]
        total = sum(v.dim[h] for h in heads)
        stacked = RationalMatrix.zero(total, v.dim[x])
        off = 0
        for a, h in zip(arrows, heads):
            b = v.matrices[a.name]
            for i in range(b.rows):
                for j in range(b.cols):
                    stacked[off + i, j] = b[i, j]
            off += b.rows
        proj, _comp = column_space_complement(stacked)
        new_dim = DimensionVector(dict(v.dim.values))
        new_dim.values[x] = proj.rows
        qr = q.reverse_arrows_at(x)
        mats = {}
        for a in q.arrows:
            if a.tail != x:
                mats[a.name] = v.matrices[a.name]
        off = 0
        for a, h in zip(arrows, heads):
            height = v.dim[h]
            incl = RationalMatrix.zero(proj.rows, height)
            for j in range(height):
                for i in range(proj.rows):
                    incl[i, j] = proj[i, off + j]
            mats[a.name] = incl  # reversed arrow head -> x
            off += height
        return qr, Representation(qr, new_dim, mats)
    raise ValueError("direction must be 'plus' or 'minus'")


def reflect_pair_rep(sq: SymmetricQuiver, x: int, direction: str, v: Representation):
    """C at the admissible pair: the sink reflection then the partner source."""
    if direction == PLUS:
        if x not in admissible_sinks(sq):
            raise NotAdmissible("vertex %r is not an admissible sink" % x)
        q1, v1 = reflect_rep(sq.base, x, PLUS, v)
        q2, v2 = reflect_rep(q1, sq.sv(x), MINUS, v1)
        return sq.with_base(q2), v2
    q1, v1 = reflect_rep(sq.base, x, MINUS, v)
    q2, v2 = reflect_rep(q1, sq.sv(x), PLUS, v1)
    return sq.with_base(q2), v2


def _admissible_numbering(q: Quiver, direction: str) -> List[int]:
    """Ascending-id vertex order that is a valid sink (plus) or source
    (minus) sequence."""
    order = []
    cur = q
    remaining = set(q.vertices)
    while remaining:
        pick = None
        for v in sorted(remaining):
            ok = cur.is_sink(v) if direction == PLUS else cur.is_source(v)
            if ok:
                pick = v
                break
        assert pick is not None, "acyclic quivers always have a sink and a source"
        order.append(pick)
        cur = cur.reverse_arrows_at(pick)
        remaining.discard(pick)
    return order


def coxeter_dim(q: Quiver, alpha: DimensionVector, direction: str) -> DimensionVector:
    """Full reflection word along the ascending admissible numbering."""
    cur_q = q
    cur = alpha
    for x in _admissible_numbering(q, direction):
        cur_q, cur = reflect_dim(cur_q, x, cur)
    return cur


def coxeter_rep(q: Quiver, v: Representation, direction: str) -> Representation:
    cur_q = q
    cur = v
    for x in _admissible_numbering(q, direction):
        cur_q, cur = reflect_rep(cur_q, x, direction, cur)
    return cur


def dual_rep(sq: SymmetricQuiver, v: Representation) -> Representation:
    """The duality functor: spaces pulled back along sigma, matrices
    minus-transposed.  Works on any sigma-compatible orientation, so it can
    be applied to reflected representations as well."""
    q = v.quiver
    dim = sq.delta(v.dim)
    mats = {}
    for a in q.arrows:
        mats[a.name] = v.matrices[sq.sa(a.name)].transpose().scale(-1)
    return Representation(q, dim, mats)
