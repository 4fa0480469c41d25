"""A bracket on a 3-space is a symmetric tensor q plus a linear form u.

The Jacobi identity holds exactly when q kills u.

Run: python demos/04_three_dimensional_brackets.py
"""

import random
from fractions import Fraction

from lievariety import liealg as L
from lievariety import linalg

sl2 = L.StructureConstants(3, {(0, 1): [0, 2, 0], (0, 2): [0, 0, -2], (1, 2): [1, 0, 0]})
heis = L.StructureConstants(3, {(0, 1): [0, 0, 1]})

for name, omega in [("sl2", sl2), ("heisenberg", heis)]:
    d = L.decompose_dim3(omega)
    print(f"{name}: rank q = {linalg.rank([list(r) for r in d.q])}, u = {[str(x) for x in d.u]}")

# a solvable example: u nonzero, q restricted to the kernel of u
dec = L.Dim3Decomposition(((0, 0, 0), (0, 1, 0), (0, 0, 0)), (Fraction(1), Fraction(0), Fraction(0)))
omega = L.recompose_dim3(dec)
print("q u =", [str(x) for x in L.contraction(dec)], "-> Jacobi:", L.is_lie(omega))

rng = random.Random(0)
agree = 0
for _ in range(300):
    omega = L.StructureConstants(3, {p: [rng.randint(-2, 2) for _ in range(3)] for p in [(0, 1), (0, 2), (1, 2)]})
    dec = L.decompose_dim3(omega)
    agree += L.is_lie(omega) == (not any(L.contraction(dec)))
print(f"\nJacobi identity vs contraction test on 300 random tensors: {agree}/300 agree")
