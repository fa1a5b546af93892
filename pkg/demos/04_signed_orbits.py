"""
Signed orbits
=============

A point w(lambda) of a regular orbit can carry the sign det(w).  Products of
unsigned (C) and signed (S) orbits obey C x C -> C, C x S -> S, S x S -> C,
and in an S result every term on a mirror cancels.
"""

from orbitkit.algebra import signed_orbit, signed_product
from orbitkit.coxeter import build_group
from orbitkit.orbit import format_point, generate_orbit

g = build_group("A2")
s = signed_orbit(g, (1, 1))
for p in s.points:
    print(f"{s.signs[p]:+d}  ({format_point(p)})")

c = generate_orbit(g, (1, 0))
print("\nC x S:", signed_product(c, s))
print("S x S:", signed_product(s, s))

h2 = build_group("H2")
sh = signed_orbit(h2, (1, 1))
print("\nH2 S x S:", signed_product(sh, sh))
