"""
Searching the braid orbit
=========================

Breadth-first search over canonicalized collections, and a comparison
with the list of all semiorthogonal bases of bounded height.
"""

from helixlab import (SearchCaps, canonicalize, format_word, load_preset, orbit_bfs, to_coordinates,
                      transitivity_report)
from helixlab.chern import ChernCharacter

q3 = load_preset("q3")
p3 = load_preset("p3")

rep = orbit_bfs(q3.gram_form, q3.gram_form.reference_basis(), SearchCaps(max_depth=3, height_cap=20))
print(len(rep.visited), "collections within 3 moves")
for C, word in list(rep.witness.items())[:6]:
    print(f"{format_word(word) or '(start)':>10}  {C}")
print()

caps = SearchCaps(max_depth=24)
for V in (q3, p3):
    t = transitivity_report(V.gram_form, 8, caps, preset=V)
    print(f"{V.name}: {len(t.bases)} bases of height <= 8, {len(t.reached)} reached -> {t.status}")

# on P^3 the leftovers all carry a rank-one class that is not a line bundle
t = transitivity_report(p3.gram_form, 8, caps, preset=p3)
C = t.unreached[0]
print(C)
for line in t.obstructions[C]:
    print("  ", line)

# multiplying every class by 1 + [point] preserves chi, and that is exactly
# the kind of basis the braid group cannot reach
moved = [ChernCharacter(x.r, x.a, x.b, x.c + x.r) for x in p3.basis_ch]
print(canonicalize(tuple(to_coordinates(p3, x) for x in moved)) in t.unreached)
