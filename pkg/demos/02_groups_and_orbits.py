"""
Coxeter groups and their orbits
===============================

A group is named by its Coxeter-Dynkin diagram.  Points are written in the
basis of fundamental weights, and an orbit is determined by its unique
dominant point (all coordinates >= 0).
"""

from orbitkit.coxeter import build_group
from orbitkit.orbit import dominant_representative, format_point, generate_orbit, lowest_point, orbit_size

for name in ["A2", "C2", "G2", "H2", "A3", "H3", "F4", "E8", "A2xA1"]:
    g = build_group(name)
    print(f"{name:6s} rank {g.rank}  order {g.order}")

# The hexagon of A2 with a=1, b=2
a2 = build_group("A2")
orbit = generate_orbit(a2, (1, 2))
print("\nG(1,2) in A2:", [format_point(p) for p in orbit.points])

# any orbit point leads back to the same dominant and lowest points
p = orbit.points[3]
print("dominant of", format_point(p), "is", format_point(dominant_representative(a2, p)))
print("lowest point:", format_point(lowest_point(a2, p)))

# Sizes come from the stabilizer without listing the orbit.
e8 = build_group("E8")
for j in range(8):
    w = [int(i == j) for i in range(8)]
    print(f"E8 omega_{j + 1}: {orbit_size(e8, w)} points")

# H3 coordinates may involve tau
h3 = build_group("H3")
ico = generate_orbit(h3, ("t", 0, 0))
print("\nH3 orbit of (t,0,0) has", ico.size, "points")
