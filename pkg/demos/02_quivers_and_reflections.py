"""Symmetric quivers, Euler forms, and sink-source pair reflections."""

from symquiv import (DimensionVector, admissible_sinks, classify_symmetric,
                     coxeter_dim, defect, euler_form, families,
                     normalize_orientation, null_root, PLUS)
from symquiv.quiver import Quiver
from symquiv.symmetric import SymmetricQuiver

print("Classification of a few canonical symmetric quivers:")
for sq in (families.symmetric_a(4), families.a201(2, 2), families.a02(2, 2),
           families.a11(0, 2), families.d10(3), families.d01(3)):
    print(" ", sq.base.name, "->", classify_symmetric(sq))

print("\nNull roots and defects on the double-arrow family:")
kron = families.a201(0, 0)
h = null_root(kron.base)
print("  h =", h, " defect(h) =", defect(kron.base, h))
proj = DimensionVector({1: 1, 2: 2})
print("  a preprojective vector", proj, "has defect", defect(kron.base, proj))
print("  the translation fixes h:", coxeter_dim(kron.base, h, PLUS) == h)

print("\nNormalizing a scrambled orientation of the symmetric 4-chain:")
q = Quiver([1, 2, 3, 4], [("a1", 1, 2), ("a2", 3, 2), ("a3", 3, 4)])
sq = SymmetricQuiver(q, {1: 4, 2: 3, 3: 2, 4: 1},
                     {"a1": "a3", "a2": "a2", "a3": "a1"})
print("  admissible sinks:", admissible_sinks(sq))
word, canon = normalize_orientation(sq)
print("  reflection word:", word)
print("  canonical arrows:", canon.base.orientation_key())
