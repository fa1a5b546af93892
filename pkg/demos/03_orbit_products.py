"""
Products of orbits
==================

The product of two orbits is the set of all pairwise sums, taken with
multiplicity.  It splits into a sum of whole orbits; only the dominant sums
need to be counted.
"""

from orbitkit.algebra import orbit_product, power_tuple_count, symmetrized_power
from orbitkit.coxeter import build_group
from orbitkit.invariants import index_of_product, index_of_sum
from orbitkit.orbit import generate_orbit

c2 = build_group("C2")
a, b = generate_orbit(c2, (1, 0)), generate_orbit(c2, (0, 1))
prod = orbit_product(a, b)
print("C2: G(1,0) x G(0,1) =", prod)
print("sizes:", a.size, "x", b.size, "=", prod.total_size())

# The H2 decagon times itself
h2 = build_group("H2")
d = generate_orbit(h2, (1, 1))
print("\nH2: G(1,1)^2 =", orbit_product(d, d))

# Symmetric, antisymmetric and mixed parts of a power
tri = generate_orbit(build_group("A2"), (1, 0))
for comp in ("symm", "anti", "mixed"):
    part = symmetrized_power(tri, 3, comp)
    print(f"A2 G(1,0)^3 [{comp:5s}] = {part}   ({power_tuple_count(3, 3, comp)} tuples)")

# The second-degree index of a product is fixed by the factors alone
print("\nI^(2): decomposition", index_of_sum(prod, 2), " closed form", index_of_product(c2, (1, 0), (0, 1), 2))
