"""Coefficient pencils on tame symmetric quivers.

On the double-arrow quiver the symplectic ring at dimension p*h is the
polynomial ring on the p+1 coefficients of a determinant pencil; the
orthogonal ring at odd p collapses to constants.
"""

from symquiv import (determinant, families, generators_tame, null_root,
                     random_structured, weight_space_dim)
from symquiv.semiinvariant import Weight

sq = families.a201(0, 0)
h = null_root(sq.base)

for p in (2, 3):
    d = h.scale(p)
    gens = generators_tame(sq, d, "sp")
    print("p = %d: %d symplectic pencil coefficients" % (p, len(gens)))
    w = random_structured(sq, "sp", d, seed=7)
    vals = {g.index: g.evaluate(w) for g in gens}
    print("  values:", vals)
    print("  extremes are the two arrow determinants:",
          {vals[0], vals[max(vals)]} ==
          {determinant(w.fixed_matrices["a"]), determinant(w.fixed_matrices["b"])})
    chi = Weight({1: 1, 2: -1})
    print("  oracle weight-space dimension:", weight_space_dim(sq, "sp", d, chi))

print("\northogonal side at odd p is trivial:",
      generators_tame(sq, h.scale(3), "o") == [])
print("orthogonal side at p = 4 is a pfaffian pencil:")
for g in generators_tame(sq, h.scale(4), "o"):
    print(" ", g.kind, g.provenance, "weight", dict(g.weight.values))
