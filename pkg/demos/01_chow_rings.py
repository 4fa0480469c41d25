"""Truncated Chow rings, Segre classes and push-forwards.

Run: python demos/01_chow_rings.py
"""

from lievariety import bundles as bd
from lievariety.gradedring import ProjBundleLayer, integrate, invert_unit, ring_g24, ring_p3

P3 = ring_p3()
h = P3.h
print("On P^3 everything is a polynomial in h with h^4 = 0.")
print("  (1 + h)^-1 =", invert_unit(1 + h))
print("  (1 - h)^-4 =", (1 - h) ** -4)

G = ring_g24()
c1, c2 = G.c1, G.c2
print("\nOn G(2,4), c1 and c2 are the Chern classes of the dual tautological bundle.")
print("  c1^3 reduces to", c1 ** 3)
for name, cls in [("c1^4", c1 ** 4), ("c1^2 c2", c1 ** 2 * c2), ("c2^2", c2 ** 2)]:
    print(f"  integral of {name} = {integrate(cls)}")

# the tautological hyperplane bundle U, with V4/U of first Chern class h
B = bd.line_bundle(h)
U = bd.bundle_from_character(P3, bd.trivial(P3, 4).character - B.character)
print("\nThe rank 3 tautological bundle U on P(V4*):")
print("  c(U) =", U.total_chern)
print("  s(U) =", U.segre)
print("  ch(U*) =", bd.dual(U).character.ch)

print("\nPushing powers of xi = c1(O(1)) down from P(U):")
layer = ProjBundleLayer(P3, 3, "xi")
for k in range(6):
    print(f"  xi^{k} -> {bd.projbundle_pushforward(layer.xi ** k, U)}")
