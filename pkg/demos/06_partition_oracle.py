"""Littlewood-Richardson combinatorics and the weight-space oracle."""

from fractions import Fraction

from symquiv import (classical_invariant_dim, families, lr_coefficient,
                     null_root, pair_semiinvariant_dim, rectangle_tensor,
                     weight_space_dim)
from symquiv.quiver import DimensionVector
from symquiv.semiinvariant import Weight

print("Littlewood-Richardson coefficients:")
print("  c^(2)_{(1),(1)} =", lr_coefficient([1], [1], [2]))
print("  c^(2,1)_{(1),(1,1)} =", lr_coefficient([1], [1, 1], [2, 1]))

print("\nA product of rectangles is multiplicity free:")
for nu in rectangle_tensor(2, 2, 1, 1):
    print("  ", nu, " coefficient", lr_coefficient([2, 2], [1], nu))

print("\nClassical invariant dimensions:")
print("  SL(3), (2,2,2):", classical_invariant_dim((2, 2, 2), "SL", 3))
print("  Sp(4), (1,1):  ", classical_invariant_dim((1, 1), "Sp", 4))
print("  O(3), (1):     ", classical_invariant_dim((1,), "O", 3))
print("  pair (2,1)/(1,0) in GL(2):", pair_semiinvariant_dim((2, 1), (1, 0), 2))

print("\nWeight-space dimensions agree with the generator counts:")
sq = families.symmetric_a(2)
for k in range(4):
    beta = DimensionVector({1: 3, 2: 3})
    chi = Weight({1: Fraction(k), 2: Fraction(-k)})
    print("  chain, weight %d: dim %d" % (k, weight_space_dim(sq, "sp", beta, chi)))
kron = families.a201(0, 0)
d = null_root(kron.base).scale(3)
print("  double arrow, pencil stratum: dim",
      weight_space_dim(kron, "sp", d, Weight({1: 1, 2: -1})), "(= p + 1)")
