"""Faces of orbit polytopes from decorated diagrams, and OFF export.

A decoration marks each node ``o`` (open), ``b`` (black) or ``s`` (star).
Starting from the extreme decoration of a dominant point (black where the
coordinate is positive), new decorations are produced by turning one black
node into a star and blackening the open nodes adjacent to it.  Stars
generate the symmetry group of the face, open nodes its pointwise
stabilizer, so a face orbit has ``|G| / (|G(star)| * |G(open)|)`` members.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .coxeter import CoxeterGroup, Point, simple_reflection, subdiagram_order
from .errors import DomainError
from .orbit import format_point, generate_orbit, is_dominant, point_key

__all__ = [
    "Decoration",
    "FaceOrbit",
    "MembershipTable",
    "parse_decoration",
    "extreme_decoration",
    "extreme_decorations",
    "enumerate_faces",
    "face_membership_table",
    "face_vertices",
    "face_sets",
    "export_mesh",
]

OPEN, BLACK, STAR = "o", "b", "s"
Decoration = str  # one character per node from "obs", e.g. "sbo"


def parse_decoration(group: CoxeterGroup, text: str) -> Decoration:
    d = text.strip().lower()
    if len(d) != group.rank or set(d) - {OPEN, BLACK, STAR}:
        raise DomainError(f"decoration {text!r} must be {group.rank} characters from 'o', 'b', 's'")
    return d


def _row_key(d: Decoration) -> tuple:
    # dimension, then open count, then s < b < o position by position
    return (d.count(STAR), d.count(OPEN), d.translate(str.maketrans("sbo", "012")))


@dataclass(frozen=True)
class FaceOrbit:
    decoration: Decoration
    dimension: int
    count: int
    symmetry_order: int
    pointwise_stabilizer_order: int

    @property
    def star_nodes(self) -> list[int]:
        return [i for i, c in enumerate(self.decoration) if c == STAR]


def _face_orbit(group: CoxeterGroup, d: Decoration) -> FaceOrbit:
    stars = [i for i, c in enumerate(d) if c == STAR]
    opens = [i for i, c in enumerate(d) if c == OPEN]
    g1 = subdiagram_order(group, stars)
    g2 = subdiagram_order(group, opens)
    return FaceOrbit(d, len(stars), group.order // (g1 * g2), g1, g2)


def extreme_decoration(group: CoxeterGroup, dominant: Iterable) -> Decoration:
    """Black where the dominant point's coordinate is positive, open elsewhere."""
    from .scalar import as_qtau

    pt = tuple(as_qtau(c) for c in dominant)
    if len(pt) != group.rank:
        raise DomainError(f"{group.name} points need {group.rank} coordinates")
    if not is_dominant(pt):
        raise DomainError(f"({format_point(pt)}) is not dominant")
    if not any(pt):
        raise DomainError("the origin has no polytope")
    return "".join(BLACK if c else OPEN for c in pt)


def extreme_decorations(group: CoxeterGroup) -> list[Decoration]:
    """All 2**n - 1 starting decorations, in table order."""
    n = group.rank
    out = []
    for mask in range(1, 2**n):
        out.append("".join(BLACK if mask >> (n - 1 - i) & 1 else OPEN for i in range(n)))
    return sorted(out, key=_row_key)


def _children(group: CoxeterGroup, d: Decoration) -> list[Decoration]:
    out = []
    for i, c in enumerate(d):
        if c != BLACK:
            continue
        marks = list(d)
        marks[i] = STAR
        for j in group.neighbors(i):
            if marks[j] == OPEN:
                marks[j] = BLACK
        out.append("".join(marks))
    return out


def _reachable(group: CoxeterGroup, start: Decoration) -> set[Decoration]:
    seen = {start}
    queue = deque([start])
    while queue:
        d = queue.popleft()
        for e in _children(group, d):
            if e not in seen:
                seen.add(e)
                queue.append(e)
    # no black node left means the decoration describes the whole polytope
    return {d for d in seen if BLACK in d}


def enumerate_faces(group: CoxeterGroup, start: Decoration) -> list[FaceOrbit]:
    """Face orbits (vertices included) of the polytope fixed by ``start``.

    >>> from orbitkit import build_group
    >>> [(f.decoration, f.count) for f in enumerate_faces(build_group("A3"), "boo")]
    [('boo', 4), ('sbo', 6), ('ssb', 4)]
    """
    start = parse_decoration(group, start)
    if STAR in start or BLACK not in start:
        raise DomainError(f"{start!r} is not an extreme decoration of {group.name}")
    return [_face_orbit(group, d) for d in sorted(_reachable(group, start), key=_row_key)]


@dataclass(frozen=True)
class MembershipTable:
    """Rows: every face decoration; columns: the extreme decorations; ``member[r][c]``."""

    rows: tuple[Decoration, ...]
    columns: tuple[Decoration, ...]
    member: tuple[tuple[bool, ...], ...]
    counts: tuple[int, ...]

    def columns_of(self, row: Decoration) -> list[int]:
        """1-based column numbers containing ``row``."""
        i = self.rows.index(row)
        return [c + 1 for c, v in enumerate(self.member[i]) if v]


def face_membership_table(group: CoxeterGroup) -> MembershipTable:
    columns = extreme_decorations(group)
    reach = [_reachable(group, c) for c in columns]
    rows = sorted(set().union(*reach), key=_row_key)
    member = tuple(tuple(r in s for s in reach) for r in rows)
    counts = tuple(_face_orbit(group, r).count for r in rows)
    return MembershipTable(tuple(rows), tuple(columns), member, counts)


def _closure(group: CoxeterGroup, seed: Point, nodes: Sequence[int]) -> set[Point]:
    seen = {seed}
    stack = [seed]
    while stack:
        p = stack.pop()
        for k in nodes:
            q = simple_reflection(group, k, p)
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return seen


def face_vertices(group: CoxeterGroup, seed: Iterable, face) -> list[Point]:
    """Vertices of the representative face through the dominant ``seed``.

    ``face`` is a :class:`FaceOrbit` or a decoration string.  The vertices are
    the closure of the seed under the star-node reflections.
    """
    group.require_coordinates()
    seed = group.point(seed)
    start = extreme_decoration(group, seed)
    d = face.decoration if isinstance(face, FaceOrbit) else parse_decoration(group, face)
    if d not in _reachable(group, start):
        raise DomainError(f"face {d!r} does not belong to the polytope {start!r}")
    stars = [i for i, c in enumerate(d) if c == STAR]
    return sorted(_closure(group, seed, stars), key=point_key)


def face_sets(group: CoxeterGroup, seed: Iterable, decoration: Decoration) -> set[frozenset]:
    """Every face in the orbit of the representative face, as vertex sets."""
    first = frozenset(face_vertices(group, seed, decoration))
    seen = {first}
    queue = deque([first])
    while queue:
        f = queue.popleft()
        for k in range(group.rank):
            g = frozenset(simple_reflection(group, k, p) for p in f)
            if g not in seen:
                seen.add(g)
                queue.append(g)
    return seen


# -- export -------------------------------------------------------------------

def _embedding(group: CoxeterGroup) -> np.ndarray:
    """Matrix E with E @ x orthonormal for omega coordinates x (Cholesky of the Gram)."""
    gram = np.array([[float(c) for c in row] for row in group.weight_gram])
    return np.linalg.cholesky(gram).T


def _polytope_dimension(group: CoxeterGroup, dominant: Point) -> int:
    from .coxeter import _components

    comps = _components(group, range(group.rank))
    return sum(len(c) for c in comps if any(dominant[i] for i in c))


def _fmt(x: float) -> str:
    s = f"{x:.12g}"
    return "0" if s in ("-0", "0") else s


def _order_polygon(coords: np.ndarray, idx: list[int]) -> list[int]:
    pts = coords[idx]
    c = pts.mean(axis=0)
    rel = pts - c
    # plane normal from the two dominant principal directions
    _, _, vt = np.linalg.svd(rel)
    normal = vt[2]
    if np.linalg.norm(c) > 1e-9:
        if np.dot(normal, c) < 0:
            normal = -normal
    else:
        # polygon through the origin: face the dominant axis
        k = int(np.argmax(np.abs(normal)))
        if normal[k] < 0:
            normal = -normal
    e1 = rel[0] / np.linalg.norm(rel[0])
    e2 = np.cross(normal, e1)
    ang = np.arctan2(rel @ e2, rel @ e1)
    order = np.argsort(ang, kind="stable")
    return [idx[i] for i in order]


def export_mesh(group: CoxeterGroup, seed: Iterable, fmt: str = "off",
                faceted: Optional[bool] = None) -> str:
    """Render the orbit polytope as ASCII OFF.

    For rank <= 3 the 2-faces are emitted as polygons (counter-clockwise seen
    from outside).  Higher ranks, or ``faceted=False``, give a point cloud;
    above rank 3 the ``nOFF`` variant carries the dimension.
    """
    if fmt.lower() != "off":
        raise DomainError(f"unsupported mesh format {fmt!r}")
    group.require_coordinates()
    orbit = generate_orbit(group, seed)
    dom = orbit.dominant
    if not any(dom):
        raise DomainError("the origin has no polytope")
    if faceted is None:
        faceted = group.rank <= 3
    if faceted and group.rank > 3:
        raise DomainError("faceted OFF export needs rank <= 3")

    emb = _embedding(group)
    coords = np.array([[float(c) for c in p] for p in orbit.points]) @ emb.T
    dim_out = max(3, group.rank)
    if coords.shape[1] < dim_out:
        coords = np.hstack([coords, np.zeros((coords.shape[0], dim_out - coords.shape[1]))])
    index = {p: i for i, p in enumerate(orbit.points)}

    polygons: list[list[int]] = []
    if faceted:
        pdim = _polytope_dimension(group, dom)
        if pdim == 3:
            start = extreme_decoration(group, dom)
            for f in enumerate_faces(group, start):
                if f.dimension != 2:
                    continue
                for fs in face_sets(group, dom, f.decoration):
                    polygons.append(_order_polygon(coords, sorted(index[p] for p in fs)))
        elif pdim == 2:
            polygons.append(_order_polygon(coords, list(range(len(orbit.points)))))
        polygons.sort(key=lambda poly: (len(poly), sorted(poly)))

    edges = set()
    for poly in polygons:
        for a, b in zip(poly, poly[1:] + poly[:1]):
            edges.add((min(a, b), max(a, b)))

    lines = []
    if dim_out == 3:
        lines.append("OFF")
    else:
        lines.append("nOFF")
        lines.append(str(dim_out))
    lines.append(f"{len(coords)} {len(polygons)} {len(edges)}")
    for row in coords:
        lines.append(" ".join(_fmt(x) for x in row))
    for poly in polygons:
        lines.append(" ".join(str(v) for v in [len(poly), *poly]))
    return "\n".join(lines) + "\n"
