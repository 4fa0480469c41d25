"""Random points on each component, checked and classified exactly.

Run: python demos/03_sampling_components.py
"""

import random

from lievariety import liealg as L
from lievariety.cli import dumps_structure

rng = random.Random(2)
for comp in L.COMPONENTS:
    omega = L.sample(comp, rng, generic=True, random_basis=True)
    profile = L.classify(omega)
    nonzero = sum(1 for _, v in omega.pairs() for c in v if c)
    print(f"{comp}: {nonzero} nonzero structure constants, Jacobi ok = {L.is_lie(omega)}")
    print(f"    {profile.describe()}, centre of dimension {profile.center_dim}")

print("\nA boundary point: the C4 model with a pure-trace tau.")
omega = L.build_c4([[0, 0], [0, 0]], [1, 0], [2, 3], [1, -1])
print("   ", L.classify(omega).describe())

print("\nThe JSON form used by the command line tool:")
print(dumps_structure(L.sample_c2(0)))
