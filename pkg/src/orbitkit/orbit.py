"""Orbits of Coxeter groups in the omega basis."""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Optional

from .coxeter import CoxeterGroup, Point, scalar_product, simple_reflection, subdiagram_order
from .errors import DomainError, InternalError, SizeGuardError
from .scalar import QTau, as_qtau

__all__ = [
    "Orbit",
    "DEFAULT_MAX_POINTS",
    "max_points",
    "point_key",
    "is_dominant",
    "dominant_representative",
    "lowest_point",
    "generate_orbit",
    "closure_orbit",
    "orbit_size",
    "format_point",
    "parse_point",
]

DEFAULT_MAX_POINTS = 10_000_000


def max_points(override: Optional[int] = None) -> int:
    """Active size guard: explicit override, else ``ORBITKIT_MAX_POINTS``, else 10**7."""
    if override is not None:
        return override
    env = os.environ.get("ORBITKIT_MAX_POINTS")
    return int(env) if env else DEFAULT_MAX_POINTS


def point_key(p: Point) -> tuple:
    """Canonical sort key: lexicographic on the (rational, tau) components."""
    return tuple(c.sort_key() for c in p)


def format_point(p: Point) -> str:
    return ",".join(str(c) for c in p)


def parse_point(text: str) -> Point:
    """``"1,0,1+t"`` -> tuple of QTau."""
    return tuple(as_qtau(part) for part in text.split(","))


def is_dominant(p: Point) -> bool:
    return all(c.sign() >= 0 for c in p)


def _check(group: CoxeterGroup, x: Iterable) -> Point:
    group.require_coordinates()
    return group.point(x)


def dominant_representative(group: CoxeterGroup, x: Iterable) -> Point:
    """Reflect at negative coordinates until the point is dominant.

    >>> from orbitkit import build_group
    >>> dominant_representative(build_group("A2"), (-1, 2))
    (QTau(1, 0), QTau(1, 0))
    """
    x = _check(group, x)
    while True:
        for k, c in enumerate(x):
            if c.sign() < 0:
                x = simple_reflection(group, k, x)
                break
        else:
            return x


def lowest_point(group: CoxeterGroup, x: Iterable) -> Point:
    """The orbit member with all coordinates non-positive."""
    x = _check(group, x)
    while True:
        for k, c in enumerate(x):
            if c.sign() > 0:
                x = simple_reflection(group, k, x)
                break
        else:
            return x


def orbit_size(group: CoxeterGroup, dominant: Iterable) -> int:
    """``|G| / |Stab(dominant)|`` without generating the orbit.

    The stabilizer is the parabolic subgroup on the nodes where the dominant
    point has coordinate zero.  Works for bare dihedral groups too, given a
    0/1 zero-pattern style point.
    """
    dominant = tuple(as_qtau(c) for c in dominant)
    if len(dominant) != group.rank:
        raise DomainError(f"{group.name} points need {group.rank} coordinates")
    if not is_dominant(dominant):
        raise DomainError(f"{format_point(dominant)} is not dominant")
    zeros = [k for k, c in enumerate(dominant) if not c]
    return group.order // subdiagram_order(group, zeros)


@dataclass(frozen=True, eq=False)
class Orbit:
    """An orbit: its dominant point plus all points in canonical sorted order."""

    group: CoxeterGroup
    dominant: Point
    points: tuple[Point, ...]

    @property
    def size(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return tuple(as_qtau(c) for c in p) in self._set

    @property
    def _set(self) -> frozenset:
        s = self.__dict__.get("_pointset")
        if s is None:
            s = frozenset(self.points)
            object.__setattr__(self, "_pointset", s)
        return s

    @property
    def lowest(self) -> Point:
        return lowest_point(self.group, self.dominant)

    def radius_squared(self) -> QTau:
        return scalar_product(self.group, self.dominant, self.dominant)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Orbit):
            return NotImplemented
        return self.group is other.group and self.dominant == other.dominant

    def __hash__(self) -> int:
        return hash((self.group.name, self.dominant))

    def __repr__(self) -> str:
        return f"Orbit({self.group.name}, ({format_point(self.dominant)}), size={self.size})"


def generate_orbit(group: CoxeterGroup, seed: Iterable, *, limit: Optional[int] = None) -> Orbit:
    """All points of the orbit of ``seed``.

    The seed is first moved to its dominant representative.  From there only
    reflections at nodes with a positive coordinate are applied; every point
    of the orbit is reached this way.

    Raises
    ------
    DomainError
        For groups without coordinates (bare dihedral I2(m)).
    SizeGuardError
        If the orbit would exceed ``limit`` (see :func:`max_points`).
    """
    dom = dominant_representative(group, seed)
    cap = max_points(limit)
    expected = orbit_size(group, dom)
    if expected > cap:
        raise SizeGuardError(f"orbit of ({format_point(dom)}) has {expected} points > limit {cap}")
    seen = {dom}
    frontier = [dom]
    rank = group.rank
    while frontier:
        nxt = []
        for p in frontier:
            for k in range(rank):
                if p[k].sign() > 0:
                    q = simple_reflection(group, k, p)
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
        frontier = nxt
    if len(seen) != expected:
        raise InternalError(f"orbit of ({format_point(dom)}) has {len(seen)} points, expected {expected}")
    return Orbit(group, dom, tuple(sorted(seen, key=point_key)))


def closure_orbit(group: CoxeterGroup, seed: Iterable) -> frozenset:
    """Closure of ``seed`` under all simple reflections (no dominance shortcut)."""
    seed = _check(group, seed)
    seen = {seed}
    stack = [seed]
    while stack:
        p = stack.pop()
        for k in range(group.rank):
            q = simple_reflection(group, k, p)
            if q not in seen:
                seen.add(q)
                stack.append(q)
    return frozenset(seen)
