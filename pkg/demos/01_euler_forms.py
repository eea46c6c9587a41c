"""
Euler forms from Riemann-Roch
=============================

Gram matrices of the standard exceptional collections, recomputed from
Chern characters.
"""

from helixlab import hrr_euler, line_bundle, load_preset, validate_preset

p3 = load_preset("p3")
q3 = load_preset("q3")

# chi(O(i), O(j)) on P^3 is the number of degree j-i monomials in 4 variables
for row in p3.basis_ch:
    print([int(hrr_euler(p3, row, col)) for col in p3.basis_ch])
print()

# the quadric starts with the spinor bundle, whose ch has a 1/6
print("spinor:", q3.basis_ch[0])
for row in q3.basis_ch:
    print([int(hrr_euler(q3, row, col)) for col in q3.basis_ch])
print()

# h^0 of the fundamental embedding, one value per preset
for name in ("p3", "q3", "v5", "v22"):
    V = load_preset(name)
    O, O1 = line_bundle(V.d, 0), line_bundle(V.d, 1)
    print(f"{name:>4}: chi(O, O(1)) = {hrr_euler(V, O, O1)}   valid: {validate_preset(V).valid}")
