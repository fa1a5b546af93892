"""Products, symmetrized powers and signed products of orbits.

Every decomposition here rests on one observation: each orbit contains its
dominant point exactly once, so the multiplicity of G(d) in a G-invariant
multiset of points equals the number of times ``d`` itself occurs.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Mapping, Optional, Union

import numpy as np

from .coxeter import CoxeterGroup, Point, scalar_product, simple_reflection
from .errors import DomainError, InternalError, SizeGuardError
from .orbit import (
    Orbit,
    dominant_representative,
    format_point,
    generate_orbit,
    is_dominant,
    max_points,
    orbit_size,
    point_key,
)

__all__ = [
    "OrbitSum",
    "SignedOrbit",
    "orbit_product",
    "symmetrized_power",
    "signed_orbit",
    "signed_product",
    "orbit_polynomial",
    "power_tuple_count",
]


@dataclass(frozen=True, eq=False)
class OrbitSum:
    """A formal sum of orbits, keyed by dominant point.

    ``kind`` is ``"C"`` for ordinary orbits and ``"S"`` when the terms stand
    for sign-decorated orbits (see :func:`signed_product`).
    """

    group: CoxeterGroup
    terms: Mapping[Point, int]
    kind: str = "C"

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", {p: m for p, m in self.terms.items() if m})

    def multiplicity(self, point: Iterable) -> int:
        return self.terms.get(self.group.point(point), 0)

    def items(self) -> list[tuple[Point, int]]:
        """Terms sorted by descending squared radius, then lexicographic dominant point."""
        g = self.group
        return sorted(self.terms.items(),
                      key=lambda kv: (-scalar_product(g, kv[0], kv[0]), point_key(kv[0])))

    def total_size(self) -> int:
        """Sum of multiplicity times orbit size (number of points represented)."""
        return sum(m * orbit_size(self.group, p) for p, m in self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrbitSum):
            return NotImplemented
        return self.group is other.group and self.kind == other.kind and self.terms == other.terms

    def __add__(self, other: "OrbitSum") -> "OrbitSum":
        if other.group is not self.group or other.kind != self.kind:
            raise DomainError("cannot add orbit sums of different groups or kinds")
        c = Counter(self.terms)
        c.update(other.terms)
        return OrbitSum(self.group, dict(c), self.kind)

    def scaled(self, k: int) -> "OrbitSum":
        return OrbitSum(self.group, {p: k * m for p, m in self.terms.items()}, self.kind)

    def to_json(self) -> list[dict]:
        return [
            {"dominant": [str(c) for c in p], "multiplicity": m, "size": orbit_size(self.group, p)}
            for p, m in self.items()
        ]

    def __str__(self) -> str:
        out = ""
        for p, m in self.items():
            label = f"({format_point(p)})"
            term = label if abs(m) == 1 else f"{abs(m)}{label}"
            if not out:
                out = term if m > 0 else "-" + term
            else:
                out += (" + " if m > 0 else " - ") + term
        return out or "0"

    def __repr__(self) -> str:
        return f"OrbitSum({self.group.name}: {self})"


def _add(p: Point, q: Point) -> Point:
    return tuple(a + b for a, b in zip(p, q))


# Sums whose float image has a coordinate below -_SLACK are certainly not dominant;
# the rest are confirmed exactly.  Float error is many orders of magnitude smaller.
_SLACK = 1e-7
_BLOCK = 1 << 18


def _floats(points) -> np.ndarray:
    return np.array([[float(c) for c in p] for p in points], dtype=float).reshape(len(points), -1)


def _candidate_pairs(outer, inner):
    """Index pairs (i, j) whose sum outer[i] + inner[j] may be dominant."""
    fo, fi = _floats(outer), _floats(inner)
    if not len(fo) or not len(fi):
        return
    rows = max(1, _BLOCK // len(fi))
    for start in range(0, len(fo), rows):
        block = fo[start:start + rows, None, :] + fi[None, :, :]
        for i, j in np.argwhere((block > -_SLACK).all(axis=-1)):
            yield start + int(i), int(j)


def _count_dominant(outer, inner) -> Counter:
    counts: Counter = Counter()
    for i, j in _candidate_pairs(outer, inner):
        s = _add(outer[i], inner[j])
        if is_dominant(s):
            counts[s] += 1
    return counts


def _threads(threads: Optional[int]) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get("ORBITKIT_THREADS")
    return max(1, int(env)) if env else 1


def _check_same_group(a: Orbit, b: Orbit) -> None:
    if a.group is not b.group:
        raise DomainError(f"orbits belong to different groups: {a.group.name}, {b.group.name}")


def orbit_product(a: Orbit, b: Orbit, *, limit: Optional[int] = None,
                  threads: Optional[int] = None) -> OrbitSum:
    """Decompose the product ``a (x) b`` into orbits.

    All ``|a|*|b|`` pairwise sums are formed; the multiplicity of G(d) is the
    number of sums equal to the dominant point ``d``.  With ``threads > 1``
    (or ``ORBITKIT_THREADS``) the outer orbit is split across worker
    processes; the result does not depend on the split.

    >>> from orbitkit import build_group, generate_orbit
    >>> g = build_group("A2")
    >>> print(orbit_product(generate_orbit(g, (1, 0)), generate_orbit(g, (0, 1))))
    (1,1) + 3(0,0)
    """
    _check_same_group(a, b)
    cap = max_points(limit)
    if a.size * b.size > cap:
        raise SizeGuardError(f"product has {a.size * b.size} points > limit {cap}")
    workers = _threads(threads)
    outer, inner = (a.points, b.points) if a.size >= b.size else (b.points, a.points)
    if workers > 1 and len(outer) * len(inner) >= 50_000:
        step = -(-len(outer) // workers)
        chunks = [outer[i:i + step] for i in range(0, len(outer), step)]
        counts: Counter = Counter()
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_count_dominant, chunks, [inner] * len(chunks)):
                counts.update(part)
    else:
        counts = _count_dominant(outer, inner)
    return OrbitSum(a.group, dict(counts))


# -- symmetrized powers -----------------------------------------------------

_COMPONENTS = {(2, "symm"), (2, "anti"), (3, "symm"), (3, "anti"), (3, "mixed")}


def power_tuple_count(n: int, k: int, component: str) -> int:
    """Number of index tuples in a symmetry component of the k-th power of an n-point orbit."""
    if (k, component) not in _COMPONENTS:
        raise DomainError(f"unsupported symmetrized power k={k}, component={component!r}")
    if k == 2:
        return n * (n + 1) // 2 if component == "symm" else n * (n - 1) // 2
    if component == "symm":
        return n * (n + 1) * (n + 2) // 6
    if component == "anti":
        return n * (n - 1) * (n - 2) // 6
    return n * (n * n - 1) // 3


def _power_sums(points, k: int, component: str):
    """Yield the point sums selected by the index inequalities, with repetition.

    With the orbit points numbered 0..N-1 the components are: k=2 symm p>=q,
    anti p>q; k=3 symm p>=q>=s, anti p>q>s, mixed p>=q and p>s.  The mixed
    rule selects every 3-subset twice and every {i,i,j} (i != j) once.
    """
    if k == 2:
        pick = combinations_with_replacement if component == "symm" else combinations
        for p, q in pick(points, 2):
            yield _add(p, q)
        return
    if component == "symm":
        for p, q, s in combinations_with_replacement(points, 3):
            yield _add(_add(p, q), s)
    elif component == "anti":
        for p, q, s in combinations(points, 3):
            yield _add(_add(p, q), s)
    else:
        for p, q, s in combinations(points, 3):
            t = _add(_add(p, q), s)
            yield t
            yield t
        for p, q in combinations(points, 2):
            yield _add(_add(p, p), q)
            yield _add(_add(q, q), p)


def symmetrized_power(a: Orbit, k: int, component: str, *,
                      limit: Optional[int] = None) -> OrbitSum:
    """Decompose the ``component`` (symm/anti/mixed) of the k-th power of ``a``.

    Only ``k`` in {2, 3} is supported; ``mixed`` exists only for ``k == 3``.
    """
    total = power_tuple_count(a.size, k, component)
    cap = max_points(limit)
    if total > cap:
        raise SizeGuardError(f"power has {total} points > limit {cap}")
    counts: Counter = Counter()
    for s in _power_sums(a.points, k, component):
        if is_dominant(s):
            counts[s] += 1
    return OrbitSum(a.group, dict(counts))


# -- signed orbits ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SignedOrbit:
    """An orbit of a strictly dominant point with the sign det(w) on each point w(lambda)."""

    orbit: Orbit
    signs: Mapping[Point, int] = field(repr=False)

    @property
    def group(self) -> CoxeterGroup:
        return self.orbit.group

    @property
    def points(self):
        return self.orbit.points

    @property
    def size(self) -> int:
        return self.orbit.size


def signed_orbit(group: CoxeterGroup, seed: Iterable, *, limit: Optional[int] = None) -> SignedOrbit:
    """Build the S-orbit of ``seed``; its dominant point must have all coordinates positive.

    Signs flip under every simple reflection.  Because the stabilizer of a
    regular point is trivial the assignment is consistent; this is verified
    for every point and every reflection.
    """
    orbit = generate_orbit(group, seed, limit=limit)
    if any(c.sign() <= 0 for c in orbit.dominant):
        raise DomainError("S-orbits need a dominant point with all coordinates positive")
    signs = {orbit.dominant: 1}
    stack = [orbit.dominant]
    while stack:
        p = stack.pop()
        for k in range(group.rank):
            q = simple_reflection(group, k, p)
            s = -signs[p]
            prev = signs.get(q)
            if prev is None:
                signs[q] = s
                stack.append(q)
            elif prev != s:
                raise InternalError(f"conflicting signs at ({format_point(q)})")
    return SignedOrbit(orbit, signs)


def _as_signed(x: Union[Orbit, SignedOrbit]):
    if isinstance(x, SignedOrbit):
        return x.orbit, x.signs, True
    return x, None, False


def signed_product(a: Union[Orbit, SignedOrbit], b: Union[Orbit, SignedOrbit], *,
                   limit: Optional[int] = None) -> OrbitSum:
    """Product of C-orbits (plain :class:`Orbit`) and S-orbits (:class:`SignedOrbit`).

    C x C and S x S give C-orbits; C x S gives S-orbits.  Coefficients are the
    signed counts of each dominant point among the sums (strictly dominant
    points for an S result).  For an S result all wall contributions must
    cancel; a non-zero residue raises :class:`InternalError`.
    """
    oa, sa, a_signed = _as_signed(a)
    ob, sb, b_signed = _as_signed(b)
    _check_same_group(oa, ob)
    cap = max_points(limit)
    if oa.size * ob.size > cap:
        raise SizeGuardError(f"product has {oa.size * ob.size} points > limit {cap}")
    kind = "S" if a_signed != b_signed else "C"
    counts: Counter = Counter()
    for i, j in _candidate_pairs(oa.points, ob.points):
        p, q = oa.points[i], ob.points[j]
        s = _add(p, q)
        if is_dominant(s):
            counts[s] += (sa[p] if a_signed else 1) * (sb[q] if b_signed else 1)
    if kind == "S":
        wall = {p: m for p, m in counts.items() if m and any(not c for c in p)}
        if wall:
            raise InternalError(f"non-cancelling wall terms in S-product: {len(wall)} points")
    return OrbitSum(oa.group, dict(counts), kind)


# -- invariant polynomials ----------------------------------------------------

def orbit_polynomial(a: Orbit) -> list[Point]:
    """Exponent vectors of the monomials of the orbit's invariant polynomial.

    The polynomial is ``sum x**mu`` over the orbit points ``mu``, so the
    exponent data is the point list itself, in canonical order.
    """
    return list(a.points)


def normalize_label(group: CoxeterGroup, point: Iterable) -> Point:
    """Dominant representative of an orbit label that may be non-dominant."""
    return dominant_representative(group, point)
