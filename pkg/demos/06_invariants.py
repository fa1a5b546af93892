"""
Congruence classes, indices and anomaly numbers
===============================================

Three numbers are attached to every orbit.  The congruence class is constant
on the orbit and adds under products.  The even index sums the k-th power
of the squared length over the orbit.  The odd anomaly number sums odd
powers of the projection on a chosen direction u.
"""

from orbitkit.algebra import orbit_product
from orbitkit.coxeter import build_group
from orbitkit.invariants import (
    allowed_anomaly_nodes,
    anomaly_number,
    anomaly_of_product,
    anomaly_vector,
    congruence_number,
    index_even,
)
from orbitkit.orbit import generate_orbit

a3 = build_group("A3")
for p in [(1, 0, 0), (0, 1, 0), (1, 1, 0), (2, 0, 0)]:
    print(p, "class", congruence_number(a3, p).values, " I^(2) =", index_even(a3, p, 1),
          " I^(4) =", index_even(a3, p, 2))

# Classes add under products
a, b = (1, 0, 0), (1, 1, 0)
prod = orbit_product(generate_orbit(a3, a), generate_orbit(a3, b))
print("\nclasses in G(1,0,0) x G(1,1,0):", {congruence_number(a3, x).values for x in prod.terms})

# u is the fundamental weight of a removed node
print("\nanomaly directions for A3: nodes", allowed_anomaly_nodes(a3.spec.factors[0]))
u = anomaly_vector(a3, 1)
for p in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
    print(p, " I^(1) =", anomaly_number(a3, p, u, 1), " I^(3) =", anomaly_number(a3, p, u, 3))

total = sum(m * anomaly_number(a3, x, u, 3) for x, m in prod.terms.items())
print("degree 3 on the product:", total, "=", anomaly_of_product(a3, a, b, u))

# Self-conjugate groups have no cubic anomaly, whatever the orbit.
d5 = build_group("D5")
print("\nD5, u = omega_1:", anomaly_number(d5, (0, 0, 0, 1, 0), anomaly_vector(d5, 1), 3))
