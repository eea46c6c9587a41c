"""
Mutations and helices
=====================
"""

from helixlab import (apply_word, canonicalize, check_sod_basis, helix_shift, load_preset,
                      mutate, serre_operator)
from helixlab.chern import from_coordinates

V = load_preset("p3")
G = V.gram_form
ref = G.reference_basis()

# L1 replaces (O, O(1)) by (L_O O(1), O); the new class is O(1) - 4 O
C = mutate(G, ref, "L", 1)
print("L1:", C)
print("first element as ch:", from_coordinates(V, C[0]))
print(check_sod_basis(G, C).ok)

# braid relation: the two sides agree exactly, not just up to sign
print(apply_word(G, ref, "L1 L2 L1") == apply_word(G, ref, "L2 L1 L2"))

# n right mutations in a row rotate the helix by one step
shifted = helix_shift(G, ref)
print("helix shift:", shifted)
print("as ch:", from_coordinates(V, shifted[-1]))  # O(4)
print(canonicalize(apply_word(G, ref, "R1 R2 R3")) == canonicalize(shifted))

kappa = serre_operator(G)
for row in kappa.matrix:
    print(row)

# twisting by -K four times moves the whole collection by O(4)
C = ref
for _ in range(4):
    C = helix_shift(G, C)
print([str(from_coordinates(V, u)) for u in C])
