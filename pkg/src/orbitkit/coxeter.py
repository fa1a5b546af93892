"""Catalog of finite Coxeter groups and their derived matrices.

Nodes are numbered from 1 in the user-facing API (diagram numbering: left to
right along the main line, the node above the main line of D_n / E_n last).
Internally every matrix and point is 0-indexed.  Reducible groups are built
by block-diagonal assembly, with node numbers concatenated in factor order.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import DomainError, InternalError
from .scalar import ONE, TAU, ZERO, QTau

__all__ = [
    "SimpleFactor",
    "GroupSpec",
    "CoxeterGroup",
    "build_group",
    "parse_group",
    "subdiagram_order",
    "simple_reflection",
    "scalar_product",
    "Point",
]

Point = tuple  # tuple[QTau, ...], coordinates in the omega basis

_MIN_RANK = {"A": 1, "B": 3, "C": 2, "D": 4}
_FIXED_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2, "H2": 2, "H3": 3, "H4": 4}


@dataclass(frozen=True)
class SimpleFactor:
    """One connected component: ``family`` in ABCDEFGHI plus rank (or ``m`` for I2)."""

    family: str
    rank: int
    m: Optional[int] = None

    def __post_init__(self) -> None:
        fam = self.family
        if fam in _MIN_RANK:
            if self.rank < _MIN_RANK[fam]:
                raise DomainError(f"{fam}{self.rank}: rank must be >= {_MIN_RANK[fam]}")
        elif fam == "I":
            if self.rank != 2 or self.m is None or self.m < 5 or self.m == 6:
                raise DomainError(f"I2({self.m}): need m >= 5 and m != 6")
        elif f"{fam}{self.rank}" not in _FIXED_RANK:
            raise DomainError(f"unknown Coxeter group {fam}{self.rank}")

    @property
    def name(self) -> str:
        if self.family == "I":
            return "H2" if self.m == 5 else f"I2({self.m})"
        return f"{self.family}{self.rank}"

    @property
    def has_coordinates(self) -> bool:
        """False for dihedral I2(m), m != 5: exact coordinates would leave Q(tau)."""
        return not (self.family == "I" and self.m != 5)

    @property
    def is_crystallographic(self) -> bool:
        return self.family not in ("H", "I")

    @property
    def order(self) -> int:
        n = self.rank
        fam = self.family
        if fam == "A":
            return math.factorial(n + 1)
        if fam in ("B", "C"):
            return 2**n * math.factorial(n)
        if fam == "D":
            return 2 ** (n - 1) * math.factorial(n)
        if fam == "I":
            return 2 * self.m
        return {
            "E6": 2**7 * 3**4 * 5,
            "E7": 2**10 * 3**4 * 5 * 7,
            "E8": 2**14 * 3**5 * 5**2 * 7,
            "F4": 2**7 * 3**2,
            "G2": 12,
            "H2": 10,
            "H3": 120,
            "H4": 120**2,
        }[self.name]


@dataclass(frozen=True)
class GroupSpec:
    factors: tuple[SimpleFactor, ...]

    @property
    def name(self) -> str:
        return "x".join(f.name for f in self.factors)


_FACTOR_RE = re.compile(r"([A-Ia-i])(\d+)(?:\((\d+)\))?")


def parse_group(name: str) -> GroupSpec:
    """Parse names like ``"A3"``, ``"H2"``, ``"I2(7)"``, ``"H2(7)"``, ``"A1xA1"``."""
    parts = [p for p in re.split(r"\s*[x×*]\s*", name.strip()) if p]
    if not parts:
        raise DomainError(f"empty group name {name!r}")
    factors = []
    for part in parts:
        mt = _FACTOR_RE.fullmatch(part)
        if not mt:
            raise DomainError(f"cannot parse group name {part!r}")
        fam, rank, m = mt.group(1).upper(), int(mt.group(2)), mt.group(3)
        if m is not None:
            if rank != 2 or fam not in ("H", "I"):
                raise DomainError(f"cannot parse group name {part!r}")
            m = int(m)
            if m == 6:
                fam, rank, m = "G", 2, None
            elif m in (3, 4):
                raise DomainError(f"{part} is A2 / C2; use that name")
            else:
                fam = "I"
        elif fam == "H" and rank == 2:
            fam, m = "I", 5
        elif fam == "I":
            raise DomainError(f"{part}: I2 needs an explicit m, e.g. I2(7)")
        factors.append(SimpleFactor(fam, rank, m))
    return GroupSpec(tuple(factors))


# -- per-factor data ------------------------------------------------------

def _edges(f: SimpleFactor) -> dict[tuple[int, int], int]:
    """Diagram edges (0-based within the factor) -> m_ij, for m_ij >= 3."""
    n = f.rank
    fam = f.family
    e: dict[tuple[int, int], int] = {}
    if fam == "I":
        return {(0, 1): f.m}
    if fam in ("D", "E"):
        for i in range(n - 2):
            e[(i, i + 1)] = 3
        branch = {"D": n - 3, "E": {6: 2, 7: 2, 8: 4}.get(n)}[fam]
        e[(branch, n - 1)] = 3
        return e
    for i in range(n - 1):
        e[(i, i + 1)] = 3
    if fam in ("B", "C"):
        e[(n - 2, n - 1)] = 4
    elif fam == "F":
        e[(1, 2)] = 4
    elif fam == "G":
        e[(0, 1)] = 6
    elif fam == "H":
        e[(n - 2, n - 1)] = 5
    return e


def _root_norms(f: SimpleFactor) -> list[Fraction]:
    n = f.rank
    norms = [Fraction(2)] * n
    if f.family == "B":
        norms[n - 1] = Fraction(1)
    elif f.family == "C":
        for i in range(n - 1):
            norms[i] = Fraction(1)
    elif f.family == "F":
        norms[2] = norms[3] = Fraction(1)
    elif f.family == "G":
        norms[1] = Fraction(2, 3)
    return norms


def _factor_cartan(f: SimpleFactor) -> list[list[QTau]]:
    """Cartan entries C_jk = 2<a_j,a_k>/<a_k,a_k>; row k holds alpha_k in the omega basis."""
    n = f.rank
    norms = _root_norms(f)
    c = [[QTau(2) if i == j else ZERO for j in range(n)] for i in range(n)]
    for (i, j), m in _edges(f).items():
        if m == 5:
            c[i][j] = c[j][i] = -TAU
            continue
        # <a_i,a_j> = -sqrt(N_i N_j) cos(pi/m); the products below are rational
        cos2 = {3: Fraction(1, 4), 4: Fraction(1, 2), 6: Fraction(3, 4)}[m]
        ip2 = norms[i] * norms[j] * cos2  # <a_i,a_j>^2
        # C_ij = 2<a_i,a_j>/N_j, C_ji = 2<a_i,a_j>/N_i; C_ij*C_ji = 4 cos^2
        for a, b in ((i, j), (j, i)):
            sq = 4 * ip2 / (norms[b] * norms[b])
            c[a][b] = QTau(-_exact_sqrt(sq))
    return c


def _exact_sqrt(q: Fraction) -> Fraction:
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num != q.numerator or den * den != q.denominator:
        raise InternalError(f"non-square Cartan entry {q}")
    return Fraction(num, den)


# -- exact linear algebra ---------------------------------------------------

def _mat_inverse(a: Sequence[Sequence[QTau]]) -> list[list[QTau]]:
    n = len(a)
    m = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise InternalError("singular Cartan matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col].inverse()
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def _det(a: Sequence[Sequence[QTau]]) -> QTau:
    n = len(a)
    m = [list(r) for r in a]
    det = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return ZERO
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = det * m[col][col]
        inv = m[col][col].inverse()
        for r in range(col + 1, n):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [x - factor * y for x, y in zip(m[r], m[col])]
    return det


# -- the group --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CoxeterGroup:
    """A finite Coxeter group with its matrices, as produced by :func:`build_group`.

    ``cartan``, ``cartan_inv``, ``root_norms`` and ``weight_gram`` are ``None``
    when any factor is a bare dihedral group I2(m), m != 5.
    """

    spec: GroupSpec
    rank: int
    coxeter_matrix: tuple[tuple[int, ...], ...]
    cartan: Optional[tuple[tuple[QTau, ...], ...]]
    cartan_inv: Optional[tuple[tuple[QTau, ...], ...]]
    root_norms: Optional[tuple[QTau, ...]]
    weight_gram: Optional[tuple[tuple[QTau, ...], ...]]
    order: int
    factor_offsets: tuple[int, ...] = field(default=())

    @property
    def name(self) -> str:
        return self.spec.name

    @property
    def has_coordinates(self) -> bool:
        return self.cartan is not None

    @property
    def is_irreducible(self) -> bool:
        return len(self.spec.factors) == 1

    def require_coordinates(self) -> None:
        if self.cartan is None:
            raise DomainError(
                f"{self.name}: coordinates are not available for dihedral I2(m), m != 5"
            )

    def factor_of(self, node: int) -> tuple[SimpleFactor, int]:
        """(factor, 0-based local index) for a 0-based global node."""
        for f, off in zip(self.spec.factors, self.factor_offsets):
            if off <= node < off + f.rank:
                return f, node - off
        raise DomainError(f"node {node + 1} out of range for {self.name}")

    def neighbors(self, node: int) -> list[int]:
        row = self.coxeter_matrix[node]
        return [j for j, m in enumerate(row) if j != node and m >= 3]

    @cached_property
    def simple_roots(self) -> tuple[Point, ...]:
        """alpha_k in the omega basis: the rows of the Cartan matrix."""
        self.require_coordinates()
        return tuple(tuple(row) for row in self.cartan)

    def point(self, coords: Iterable) -> Point:
        """Coerce an iterable of scalars to a rank-length point."""
        from .scalar import as_qtau

        pt = tuple(as_qtau(c) for c in coords)
        if len(pt) != self.rank:
            raise DomainError(f"{self.name} points need {self.rank} coordinates, got {len(pt)}")
        return pt

    def zero(self) -> Point:
        return (ZERO,) * self.rank

    def __repr__(self) -> str:
        return f"CoxeterGroup({self.name!r}, order={self.order})"


_CACHE: dict[GroupSpec, CoxeterGroup] = {}


def build_group(spec) -> CoxeterGroup:
    """Build (and cache) the group for a :class:`GroupSpec` or a name string.

    >>> build_group("H4").order
    14400
    >>> build_group("A1xA1").order
    4
    """
    if isinstance(spec, str):
        spec = parse_group(spec)
    cached = _CACHE.get(spec)
    if cached is not None:
        return cached

    n = sum(f.rank for f in spec.factors)
    cox = [[2] * n for _ in range(n)]
    offsets = []
    off = 0
    coords = all(f.has_coordinates for f in spec.factors)
    cartan = [[ZERO] * n for _ in range(n)] if coords else None
    norms: list[QTau] = []
    order = 1
    for f in spec.factors:
        offsets.append(off)
        for i in range(f.rank):
            cox[off + i][off + i] = 1
        for (i, j), m in _edges(f).items():
            cox[off + i][off + j] = cox[off + j][off + i] = m
        if coords:
            block = _factor_cartan(f)
            for i in range(f.rank):
                for j in range(f.rank):
                    cartan[off + i][off + j] = block[i][j]
            norms.extend(QTau(x) for x in _root_norms(f))
        order *= f.order
        off += f.rank

    if coords:
        inv = _mat_inverse(cartan)
        # <w_i,w_j> = (C^-1)_ij <a_j,a_j>/2
        gram = [[inv[i][j] * norms[j] / 2 for j in range(n)] for i in range(n)]
        group = CoxeterGroup(
            spec, n, tuple(map(tuple, cox)), tuple(map(tuple, cartan)),
            tuple(map(tuple, inv)), tuple(norms), tuple(map(tuple, gram)), order,
            tuple(offsets),
        )
    else:
        group = CoxeterGroup(spec, n, tuple(map(tuple, cox)), None, None, None, None,
                             order, tuple(offsets))
    _CACHE[spec] = group
    return group


# -- subdiagram classification -------------------------------------------

def _components(group: CoxeterGroup, nodes: Sequence[int]) -> list[list[int]]:
    remaining = set(nodes)
    comps = []
    while remaining:
        start = min(remaining)
        remaining.discard(start)
        comp, stack = [start], [start]
        while stack:
            v = stack.pop()
            for w in group.neighbors(v):
                if w in remaining:
                    remaining.discard(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def classify_component(group: CoxeterGroup, comp: Sequence[int]) -> SimpleFactor:
    """Isomorphism type of a connected induced subdiagram (B and C both report C)."""
    k = len(comp)
    if k == 1:
        return SimpleFactor("A", 1)
    cset = set(comp)
    adj = {v: [w for w in group.neighbors(v) if w in cset] for v in comp}
    edges = {(v, w): group.coxeter_matrix[v][w] for v in comp for w in adj[v] if v < w}
    if len(edges) != k - 1:
        raise InternalError("subdiagram with a cycle")
    degree = {v: len(adj[v]) for v in comp}
    labels = sorted(edges.values())
    branch = [v for v in comp if degree[v] >= 3]

    if branch:
        if len(branch) > 1 or degree[branch[0]] > 3 or labels[-1] != 3:
            raise InternalError("unclassifiable subdiagram")
        b = branch[0]
        arms = []
        for start in adj[b]:
            length, prev, cur = 1, b, start
            while degree[cur] == 2:
                prev, cur = cur, next(w for w in adj[cur] if w != prev)
                length += 1
            arms.append(length)
        arms.sort()
        if arms[0] == 1 and arms[1] == 1:
            return SimpleFactor("D", k)
        if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
            return SimpleFactor("E", k)
        raise InternalError(f"unclassifiable branched subdiagram, arms {arms}")

    # a path: order its nodes and read the label sequence
    ends = [v for v in comp if degree[v] == 1]
    path = [ends[0]]
    while len(path) < k:
        path.append(next(w for w in adj[path[-1]] if w not in path[-2:-1] and w != path[-1]))
    seq = [group.coxeter_matrix[a][b] for a, b in zip(path, path[1:])]
    special = [(i, m) for i, m in enumerate(seq) if m != 3]
    if not special:
        return SimpleFactor("A", k)
    if len(special) > 1:
        raise InternalError(f"unclassifiable path labels {seq}")
    pos, m = special[0]
    at_end = pos in (0, len(seq) - 1)
    if k == 2:
        if m == 4:
            return SimpleFactor("C", 2)
        if m == 6:
            return SimpleFactor("G", 2)
        return SimpleFactor("I", 2, m)
    if m == 4 and at_end:
        return SimpleFactor("C", k)
    if m == 4 and k == 4:
        return SimpleFactor("F", 4)
    if m == 5 and at_end and k in (3, 4):
        return SimpleFactor("H", k)
    raise InternalError(f"unclassifiable path labels {seq}")


def subdiagram_factors(group: CoxeterGroup, nodes: Iterable[int]) -> list[SimpleFactor]:
    """Types of the connected components of the subdiagram on 0-based ``nodes``."""
    return [classify_component(group, c) for c in _components(group, sorted(set(nodes)))]


def subdiagram_order(group: CoxeterGroup, nodes: Iterable[int]) -> int:
    """Order of the parabolic subgroup generated by the 0-based ``nodes``.

    >>> subdiagram_order(build_group("H3"), [1, 2])
    10
    """
    nodes = list(nodes)
    for v in nodes:
        if not 0 <= v < group.rank:
            raise DomainError(f"node {v + 1} out of range for {group.name}")
    order = 1
    for f in subdiagram_factors(group, nodes):
        order *= f.order
    return order


# -- reflections and the bilinear form --------------------------------------

def simple_reflection(group: CoxeterGroup, k: int, x: Point) -> Point:
    """Reflect ``x`` in the mirror of alpha_k (0-based): ``x_j - x_k * C_kj``."""
    xk = x[k]
    if not xk:
        return x
    row = group.cartan[k]
    return tuple(xj - xk * c if c else xj for xj, c in zip(x, row))


def scalar_product(group: CoxeterGroup, x: Point, y: Point) -> QTau:
    """Exact ``<x, y>`` for omega-basis coordinates."""
    if len(x) != group.rank or len(y) != group.rank:
        raise DomainError("dimension mismatch in scalar product")
    gram = group.weight_gram
    total = ZERO
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = gram[i]
        acc = ZERO
        for yj, g in zip(y, row):
            if yj and g:
                acc = acc + yj * g
        total = total + xi * acc
    return total
