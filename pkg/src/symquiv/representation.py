"""Representations over exact rationals, structured symplectic/orthogonal
representations, Hom/Ext dimensions, and seeded random generation."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence

from .errors import (AsymmetricDimension, BadInterval, OddSymplecticDimension,
                     QuiverMismatch, ShapeMismatch, ValidationError)
from .linalg import RationalMatrix, linalg_kit
from .quiver import DimensionVector, Quiver
from .symmetric import ORTHOGONAL, SYMPLECTIC, SymmetricQuiver


class Representation:
    """Rational matrices attached to the arrows of a quiver."""

    def __init__(self, quiver: Quiver, dim: DimensionVector,
                 matrices: Dict[str, RationalMatrix]):
        self.quiver = quiver
        self.dim = dim
        self.matrices = dict(matrices)
        for a in quiver.arrows:
            m = self.matrices.get(a.name)
            if m is None:
                m = RationalMatrix.zero(dim[a.head], dim[a.tail])
                self.matrices[a.name] = m
            if m.rows != dim[a.head] or m.cols != dim[a.tail]:
                raise ShapeMismatch(
                    "matrix for %s must be %dx%d" % (a.name, dim[a.head], dim[a.tail]))

    def matrix(self, name: str) -> RationalMatrix:
        return self.matrices[name]

    def path_matrix(self, path: Sequence[str]) -> RationalMatrix:
        """Composite matrix of a path, first arrow applied first."""
        if not path:
            raise ValidationError("empty path has ambiguous endpoints")
        out = self.matrices[path[0]]
        for name in path[1:]:
            out = self.matrices[name] * out
        return out

    def direct_sum(self, other: "Representation") -> "Representation":
        if self.quiver is not other.quiver and \
                self.quiver.orientation_key() != other.quiver.orientation_key():
            raise QuiverMismatch("direct sum requires a common quiver")
        dim = self.dim + other.dim
        mats = {}
        for a in self.quiver.arrows:
            m1 = self.matrices[a.name]
            m2 = other.matrices[a.name]
            block = RationalMatrix.zero(m1.rows + m2.rows, m1.cols + m2.cols)
            for i in range(m1.rows):
                for j in range(m1.cols):
                    block[i, j] = m1[i, j]
            for i in range(m2.rows):
                for j in range(m2.cols):
                    block[m1.rows + i, m1.cols + j] = m2[i, j]
            mats[a.name] = block
        return Representation(self.quiver, dim, mats)

    def __repr__(self):
        return "Representation(%r, dim=%r)" % (self.quiver.name, self.dim)


def zero_representation(q: Quiver) -> Representation:
    return Representation(q, DimensionVector.zero(q), {})


def interval_module(n: int, j: int, i: int) -> Representation:
    """The indecomposable of equioriented A_n supported on [j, i]."""
    if not (1 <= j <= i <= n):
        raise BadInterval("need 1 <= j <= i <= n")
    from .families import symmetric_a
    q = symmetric_a(n).base
    dim = DimensionVector({v: 1 if j <= v <= i else 0 for v in q.vertices})
    mats = {}
    for a in q.arrows:
        if j <= a.tail and a.head <= i:
            mats[a.name] = RationalMatrix.identity(1)
    return Representation(q, dim, mats)


def dvw_matrix(v: Representation, w: Representation) -> RationalMatrix:
    """The block matrix of the map from vertex-Hom spaces to arrow-Hom spaces.

    Vertex blocks run in ascending vertex order, arrow blocks in ascending
    arrow-name order; Hom spaces are row-major vectorised.
    """
    if v.quiver.orientation_key() != w.quiver.orientation_key():
        raise QuiverMismatch("representations live on different quivers")
    q = v.quiver
    verts = list(q.vertices)
    arrows = sorted(q.arrows, key=lambda a: a.name)
    col_sizes = [w.dim[x] * v.dim[x] for x in verts]
    row_sizes = [w.dim[a.head] * v.dim[a.tail] for a in arrows]
    total_c = sum(col_sizes)
    total_r = sum(row_sizes)
    out = RationalMatrix.zero(total_r, total_c)
    col_off = {}
    off = 0
    for x, sz in zip(verts, col_sizes):
        col_off[x] = off
        off += sz
    row_off = 0
    for a, rsz in zip(arrows, row_sizes):
        wd_h, vd_t = w.dim[a.head], v.dim[a.tail]
        # f(ha) V(a): rows (p, q) over W(ha) x V(ta); block I (x) V(a)^t
        va = v.matrices[a.name]
        base_c = col_off[a.head]
        wd_ha = w.dim[a.head]
        vd_ha = v.dim[a.head]
        for p in range(wd_h):
            for qq in range(vd_t):
                r = row_off + p * vd_t + qq
                for s in range(vd_ha):
                    coeff = va[s, qq]
                    if coeff:
                        c = base_c + p * vd_ha + s
                        out[r, c] = out[r, c] + coeff
        # minus W(a) f(ta)
        wa = w.matrices[a.name]
        base_c = col_off[a.tail]
        wd_ta = w.dim[a.tail]
        for p in range(wd_h):
            for qq in range(vd_t):
                r = row_off + p * vd_t + qq
                for s in range(wd_ta):
                    coeff = wa[p, s]
                    if coeff:
                        c = base_c + s * vd_t + qq
                        out[r, c] = out[r, c] - coeff
        row_off += rsz
    return out


def dvw_and_homext(v: Representation, w: Representation):
    """Returns (matrix, homDim, extDim) for the pair (v, w)."""
    m = dvw_matrix(v, w)
    kit = linalg_kit(m)
    return m, len(kit.kernel_basis), kit.cokernel_dim


# -- structured representations ----------------------------------------------

def form_matrix(flavor: str, size: int) -> RationalMatrix:
    """The pairing used at a sigma-fixed vertex: standard J or the identity."""
    if flavor == SYMPLECTIC:
        if size % 2:
            raise OddSymplecticDimension("symplectic form needs even size")
        half = size // 2
        j = RationalMatrix.zero(size, size)
        for i in range(half):
            j[i, half + i] = 1
            j[half + i, i] = -1
        return j
    return RationalMatrix.identity(size)


class StructuredRepresentation:
    """Symplectic or orthogonal representation of a symmetric quiver.

    Only matrices on the positive arrows and on the sigma-fixed arrows are
    stored; mirror arrows are derived, never stored.
    """

    def __init__(self, sq: SymmetricQuiver, flavor: str, dim: DimensionVector,
                 matrices: Dict[str, RationalMatrix],
                 fixed_matrices: Dict[str, RationalMatrix]):
        if flavor not in (SYMPLECTIC, ORTHOGONAL):
            raise ValidationError("flavor must be 'sp' or 'o'")
        self.sq = sq
        self.flavor = flavor
        self.dim = dim
        if not sq.is_symmetric_dim(dim):
            raise AsymmetricDimension("dimension vector is not sigma-symmetric")
        if flavor == SYMPLECTIC:
            for x in sq.v_fixed:
                if dim[x] % 2:
                    raise OddSymplecticDimension(
                        "symplectic dimension at fixed vertex %r must be even" % x)
        self.matrices = {}
        for name in sq.a_plus:
            a = sq.base.arrow_by_name[name]
            m = matrices.get(name, RationalMatrix.zero(dim[a.head], dim[a.tail]))
            if m.rows != dim[a.head] or m.cols != dim[a.tail]:
                raise ShapeMismatch("matrix for %s has the wrong shape" % name)
            self.matrices[name] = m
        self.fixed_matrices = {}
        for name in sq.a_fixed:
            a = sq.base.arrow_by_name[name]
            sz = dim[a.tail]
            m = fixed_matrices.get(name, RationalMatrix.zero(sz, sz))
            if m.rows != sz or m.cols != sz:
                raise ShapeMismatch("fixed matrix for %s must be %dx%d" % (name, sz, sz))
            if flavor == SYMPLECTIC and not m.is_symmetric():
                raise ShapeMismatch("symplectic fixed matrix for %s must be symmetric" % name)
            if flavor == ORTHOGONAL and not m.is_skew_symmetric():
                raise ShapeMismatch("orthogonal fixed matrix for %s must be skew" % name)
            self.fixed_matrices[name] = m

    def full(self) -> Representation:
        """The induced representation of the underlying quiver.

        Mirror arrows carry minus-transpose matrices, twisted by the fixed
        vertex pairing where an endpoint is sigma-fixed.
        """
        sq = self.sq
        mats: Dict[str, RationalMatrix] = {}
        mats.update(self.matrices)
        mats.update(self.fixed_matrices)
        # with no fixed vertices or arrows the two structured spaces and
        # their groups coincide; one mirror orbit flips sign so that the
        # underlying form is the skew one and mirrored even paths pair up
        flip = None
        if not sq.v_fixed and not sq.a_fixed:
            flip = min(sq.a_plus)
        for name in sq.a_plus:
            a = sq.base.arrow_by_name[name]
            mirror = sq.sa(name)
            sign = 1 if name == flip else -1
            m = self.matrices[name].transpose().scale(sign)
            if a.head in sq.v_fixed:
                m = m * form_matrix(self.flavor, self.dim[a.head])
            elif a.tail in sq.v_fixed:
                m = _inverse(form_matrix(self.flavor, self.dim[a.tail])) * m
            mats[mirror] = m
        return Representation(sq.base, self.dim, mats)

    def __repr__(self):
        return "StructuredRepresentation(%s, %r)" % (self.flavor, self.dim)


def _inverse(m: RationalMatrix) -> RationalMatrix:
    n = m.rows
    aug = RationalMatrix.zero(n, 2 * n)
    for i in range(n):
        for j in range(n):
            aug[i, j] = m[i, j]
        aug[i, n + i] = 1
    from .linalg import rref
    ech, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValidationError("matrix is singular")
    inv = RationalMatrix.zero(n, n)
    for i in range(n):
        for j in range(n):
            inv[i, j] = ech[i, n + j]
    return inv


def check_structured(sr: StructuredRepresentation) -> bool:
    """Re-run the constructor invariants as a boolean predicate."""
    try:
        StructuredRepresentation(sr.sq, sr.flavor, sr.dim, sr.matrices,
                                 sr.fixed_matrices)
        return True
    except ValidationError:
        return False


def random_structured(sq: SymmetricQuiver, flavor: str, dim: DimensionVector,
                      seed: int) -> StructuredRepresentation:
    """Seeded structured representation with integer entries in [-9, 9]."""
    rng = random.Random(seed)
    mats = {}
    for name in sq.a_plus:
        a = sq.base.arrow_by_name[name]
        mats[name] = RationalMatrix(
            dim[a.head], dim[a.tail],
            [rng.randint(-9, 9) for _ in range(dim[a.head] * dim[a.tail])])
    fixed = {}
    for name in sq.a_fixed:
        a = sq.base.arrow_by_name[name]
        sz = dim[a.tail]
        m = RationalMatrix.zero(sz, sz)
        for i in range(sz):
            if flavor == SYMPLECTIC:
                m[i, i] = rng.randint(-9, 9)
            for j in range(i + 1, sz):
                x = rng.randint(-9, 9)
                m[i, j] = x
                m[j, i] = x if flavor == SYMPLECTIC else -x
        fixed[name] = m
    return StructuredRepresentation(sq, flavor, dim, mats, fixed)


# -- group elements ------------------------------------------------------------

@dataclass
class GroupElement:
    sq: SymmetricQuiver
    flavor: str
    blocks: Dict[int, RationalMatrix]        # on the positive vertices, det 1
    fixed_blocks: Dict[int, RationalMatrix]  # form-preserving at fixed vertices

    def block_at(self, x: int) -> RationalMatrix:
        if x in self.blocks:
            return self.blocks[x]
        if x in self.fixed_blocks:
            return self.fixed_blocks[x]
        partner = self.sq.sv(x)
        return _inverse(self.blocks[partner]).transpose()


def identity_group_element(sq: SymmetricQuiver, flavor: str,
                           dim: DimensionVector) -> GroupElement:
    blocks = {x: RationalMatrix.identity(dim[x]) for x in sq.v_plus}
    fixed = {x: RationalMatrix.identity(dim[x]) for x in sq.v_fixed}
    return GroupElement(sq, flavor, blocks, fixed)


def _random_sl(rng, n: int) -> RationalMatrix:
    """Product of elementary transvections; determinant exactly one."""
    m = RationalMatrix.identity(n)
    for _ in range(2 * n + 2):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        c = Fraction(rng.randint(-3, 3))
        t = RationalMatrix.identity(n)
        t[i, j] = c
        m = m * t
    return m


def _cayley(s: RationalMatrix) -> RationalMatrix:
    n = s.rows
    eye = RationalMatrix.identity(n)
    return (eye - s) * _inverse(eye + s)


def _random_form_preserving(rng, flavor: str, n: int) -> RationalMatrix:
    """Cayley transform of a form-compatible matrix: Sp(J) or SO(I) element."""
    if n == 0:
        return RationalMatrix.zero(0, 0)
    for _ in range(50):
        if flavor == ORTHOGONAL:
            s = RationalMatrix.zero(n, n)
            for i in range(n):
                for j in range(i + 1, n):
                    x = Fraction(rng.randint(-2, 2), rng.randint(1, 3))
                    s[i, j] = x
                    s[j, i] = -x
        else:
            g = form_matrix(SYMPLECTIC, n)
            sym = RationalMatrix.zero(n, n)
            for i in range(n):
                sym[i, i] = Fraction(rng.randint(-2, 2), rng.randint(1, 3))
                for j in range(i + 1, n):
                    x = Fraction(rng.randint(-2, 2), rng.randint(1, 3))
                    sym[i, j] = x
                    sym[j, i] = x
            s = g * sym
        try:
            return _cayley(s)
        except ValidationError:
            continue
    raise ValidationError("could not sample a form-preserving element")


def random_group_element(sq: SymmetricQuiver, flavor: str, dim: DimensionVector,
                         seed: int) -> GroupElement:
    rng = random.Random(seed)
    blocks = {x: _random_sl(rng, dim[x]) for x in sq.v_plus}
    fixed = {x: _random_form_preserving(rng, flavor, dim[x]) for x in sq.v_fixed}
    return GroupElement(sq, flavor, blocks, fixed)


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    blocks = {x: g.blocks[x] * h.blocks[x] for x in g.blocks}
    fixed = {x: g.fixed_blocks[x] * h.fixed_blocks[x] for x in g.fixed_blocks}
    return GroupElement(g.sq, g.flavor, blocks, fixed)


def act(g: GroupElement, sr: StructuredRepresentation) -> StructuredRepresentation:
    """Base change: arrow matrices by g_h V(a) g_t^{-1}, fixed ones by congruence."""
    sq = sr.sq
    mats = {}
    for name in sq.a_plus:
        a = sq.base.arrow_by_name[name]
        gh = g.block_at(a.head)
        gt = g.block_at(a.tail)
        mats[name] = gh * sr.matrices[name] * _inverse(gt)
    fixed = {}
    for name in sq.a_fixed:
        a = sq.base.arrow_by_name[name]
        gt = g.block_at(a.tail)
        gti = _inverse(gt)
        fixed[name] = gti.transpose() * sr.fixed_matrices[name] * gti
    return StructuredRepresentation(sq, sr.flavor, sr.dim, mats, fixed)
