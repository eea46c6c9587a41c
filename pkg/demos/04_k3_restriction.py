"""
Restricting to an anticanonical K3
==================================
"""

from helixlab import (bogomolov_restriction_report, enumerate_exceptional, from_coordinates,
                      load_preset, mukai_pair, restrict_to_k3, slope)

q3 = load_preset("q3")

# Mukai vector (r, c1, ch2 + r) on S in |-K|, with H_S^2 = k d
for x in q3.basis_ch:
    v = restrict_to_k3(q3, x)
    print(f"{str(x):<24} -> {v}  <v,v> = {mukai_pair(v, v)}  slope {slope(v)}")

# every exceptional class restricts to a spherical one
G = q3.gram_form
restricted = [restrict_to_k3(q3, from_coordinates(q3, u)) for u in enumerate_exceptional(G, 6)]
pairings = {int(mukai_pair(v, v)) for v in restricted}
print(len(restricted), "classes, self-pairings seen:", pairings)

spinor = restrict_to_k3(q3, q3.basis_ch[0])
rep = bogomolov_restriction_report(q3, spinor)
print("discriminant", rep.discriminant, "threshold", rep.threshold, rep.satisfied)
print("claimed", rep.claimed_discriminant, "threshold", rep.claimed_threshold, rep.claimed_satisfied)
print(rep.caveat)
