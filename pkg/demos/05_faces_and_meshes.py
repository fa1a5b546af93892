"""
Faces of orbit polytopes
========================

Each orbit is the vertex set of a polytope.  Faces are described by
decorated diagrams: black nodes are set by the starting point, star nodes
span the face, and open nodes fix it.  Counting faces needs only group
orders, and the vertex lists come from generating small orbits.
"""

from collections import Counter

from orbitkit.coxeter import build_group
from orbitkit.orbit import format_point
from orbitkit.polytope import enumerate_faces, export_mesh, face_membership_table, face_vertices

h3 = build_group("H3")

# the truncated icosahedron: seed (1,1,0)
faces = enumerate_faces(h3, "bbo")
for f in faces:
    print(f"dim {f.dimension}  {f.decoration}  x{f.count}")
by_dim = Counter()
for f in faces:
    by_dim[f.dimension] += f.count
print("V - E + F =", by_dim[0] - by_dim[1] + by_dim[2])

# one pentagon and one hexagon of the soccer ball
print("pentagon:", [format_point(p) for p in face_vertices(h3, (1, 1, 0), "bss")])
print("hexagon: ", [format_point(p) for p in face_vertices(h3, (1, 1, 0), "ssb")])

# every face type of every H3 polytope, as in a membership table
table = face_membership_table(h3)
print("\ncolumns:", " ".join(table.columns))
for row, n in zip(table.rows, table.counts):
    print(f"{row}  {n:4d}  in columns {table.columns_of(row)}")

# OFF text for a mesh viewer
off = export_mesh(h3, (1, 1, 0))
print("\n" + "\n".join(off.splitlines()[:4]), "...")
