"""Congruence classes, even-degree indices and anomaly numbers of orbits."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .coxeter import CoxeterGroup, Point, SimpleFactor, scalar_product
from .errors import DomainError
from .orbit import generate_orbit, is_dominant, orbit_size
from .scalar import ONE, ZERO, QTau

__all__ = [
    "CongruenceClass",
    "AnomalyVector",
    "congruence_number",
    "index_even",
    "index_of_product",
    "index_of_sum",
    "anomaly_vector",
    "anomaly_number",
    "anomaly_of_product",
    "allowed_anomaly_nodes",
]


@dataclass(frozen=True)
class CongruenceClass:
    values: tuple[int, ...]
    moduli: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(v % m for v, m in zip(self.values, self.moduli)))

    def __add__(self, other: "CongruenceClass") -> "CongruenceClass":
        if self.moduli != other.moduli:
            raise DomainError("congruence classes of different groups")
        return CongruenceClass(tuple(a + b for a, b in zip(self.values, other.values)), self.moduli)

    def __mul__(self, k: int) -> "CongruenceClass":
        return CongruenceClass(tuple(k * v for v in self.values), self.moduli)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.values)


def _int(c: QTau) -> int:
    if not c.is_rational() or c.rat.denominator != 1:
        raise DomainError(f"congruence classes need integer coordinates, got {c}")
    return c.rat.numerator


def _factor_class(f: SimpleFactor, x: list[QTau]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    n = f.rank
    fam = f.family
    if fam == "I":
        if f.m != 5:
            raise DomainError(f"congruence classes are not defined for {f.name}")
        # tau is replaced by 3, a root of t^2 = t + 1 modulo 5
        vals = []
        for c in x:
            if not c.is_integral():
                raise DomainError(f"H2 congruence needs coordinates in Z[tau], got {c}")
            vals.append(c.rat.numerator + 3 * c.tau_coef.numerator)
        return (3 * vals[0] + 2 * vals[1],), (5,)
    if fam == "H":
        raise DomainError(f"congruence classes for {f.name} are not defined")
    xi = [_int(c) for c in x]
    if fam in ("E", "F", "G") and f.name in ("E8", "F4", "G2"):
        return (0,), (1,)
    if fam == "A":
        return (sum((k + 1) * v for k, v in enumerate(xi)),), (n + 1,)
    if fam == "B":
        return (xi[n - 1],), (2,)
    if fam == "C":
        return (sum(xi[0::2]),), (2,)
    if fam == "D":
        c1 = xi[n - 2] + xi[n - 1]
        last_odd = n - 2 if n % 2 else n - 3  # 1-based index of the last doubled term
        c2 = 2 * sum(xi[0:last_odd:2]) + (n - 2) * xi[n - 2] + n * xi[n - 1]
        return (c1, c2), (2, 4)
    if f.name == "E6":
        return (xi[0] - xi[1] + xi[3] - xi[4],), (3,)
    if f.name == "E7":
        return (xi[3] + xi[5] + xi[6],), (2,)
    raise DomainError(f"congruence classes are not defined for {f.name}")


def congruence_number(group: CoxeterGroup, x: Iterable) -> CongruenceClass:
    """Congruence class of a lattice point; factor classes are concatenated.

    >>> from orbitkit import build_group
    >>> congruence_number(build_group("A2"), (1, 0)).values
    (1,)
    """
    x = group.point(x)
    values: list[int] = []
    moduli: list[int] = []
    for f, off in zip(group.spec.factors, group.factor_offsets):
        v, m = _factor_class(f, list(x[off:off + f.rank]))
        values.extend(v)
        moduli.extend(m)
    return CongruenceClass(tuple(values), tuple(moduli))


# -- indices ------------------------------------------------------------------

def index_even(group: CoxeterGroup, dominant: Iterable, k: int) -> QTau:
    """``<lambda,lambda>**k * |G(lambda)|``, the degree-2k index.

    Equal to the sum of ``<mu,mu>**k`` over the orbit since all orbit points
    have the same length.
    """
    group.require_coordinates()
    lam = group.point(dominant)
    if not is_dominant(lam):
        raise DomainError("index_even expects a dominant point")
    if k < 0:
        raise DomainError("index degree must be non-negative")
    size = orbit_size(group, lam)
    if k == 0:
        return QTau(size)
    return scalar_product(group, lam, lam) ** k * size


def index_of_product(group: CoxeterGroup, a: Iterable, b: Iterable, degree: int) -> QTau:
    """Closed-form index of ``G(a) (x) G(b)`` for degree 0, 2 or 4.

    Degree 4 uses the factor ``2(r+2)/r`` with ``r`` the rank; that rule
    relies on the orbit's second moment being isotropic, which holds for
    irreducible groups only.
    """
    i0a, i0b = index_even(group, a, 0), index_even(group, b, 0)
    if degree == 0:
        return i0a * i0b
    i2a, i2b = index_even(group, a, 1), index_even(group, b, 1)
    if degree == 2:
        return i2a * i0b + i0a * i2b
    if degree == 4:
        if not group.is_irreducible:
            raise DomainError("the degree-4 product rule needs an irreducible group")
        r = group.rank
        i4a, i4b = index_even(group, a, 2), index_even(group, b, 2)
        return i4a * i0b + i2a * i2b * Fraction(2 * (r + 2), r) + i0a * i4b
    raise DomainError("index_of_product supports degrees 0, 2 and 4")


def index_of_sum(orbit_sum, degree: int) -> QTau:
    """Sum of term indices over a decomposition (``degree`` even)."""
    if degree % 2:
        raise DomainError("index_of_sum needs an even degree")
    total = ZERO
    for p, m in orbit_sum.terms.items():
        total = total + index_even(orbit_sum.group, p, degree // 2) * m
    return total


# -- anomaly numbers ------------------------------------------------------------

@dataclass(frozen=True)
class AnomalyVector:
    """Direction ``u`` (omega basis, unnormalized) orthogonal to the retained simple roots."""

    u: Point
    removed_node: int  # 1-based

    def convention(self) -> dict:
        return {"u": [str(c) for c in self.u], "normalized": False,
                "removed_node": self.removed_node}


def allowed_anomaly_nodes(f: SimpleFactor) -> tuple[int, ...]:
    """1-based nodes whose removal gives a maximal reductive U(1) x G' reduction."""
    n = f.rank
    fam = f.family
    if fam == "A":
        return tuple(range(1, n + 1)) if n >= 2 else ()
    if fam == "B":
        return (1,)
    if fam == "C":
        return (n,)
    if fam == "D":
        return (1, n - 1, n)
    if f.name == "E6":
        return (1, 5)
    if f.name == "E7":
        return (6,)
    if f.name in ("H2", "H3", "H4"):
        return (n,)
    return ()


def anomaly_vector(group: CoxeterGroup, removed_node: Optional[int] = None) -> AnomalyVector:
    """The fundamental weight of the removed node (1-based).

    For H2/H3/H4 the node defaults to, and must be, the last one.
    """
    group.require_coordinates()
    if not group.is_irreducible:
        raise DomainError("anomaly vectors are defined for irreducible groups only")
    f = group.spec.factors[0]
    allowed = allowed_anomaly_nodes(f)
    if removed_node is None:
        if f.family in ("H", "I"):
            removed_node = f.rank
        else:
            raise DomainError(f"{f.name}: choose --removed-node from {list(allowed)}")
    if removed_node not in allowed:
        raise DomainError(
            f"{f.name}: removing node {removed_node} is not a listed U(1) reduction"
            + (f"; allowed nodes {list(allowed)}" if allowed else "")
        )
    u = tuple(ONE if j == removed_node - 1 else ZERO for j in range(group.rank))
    return AnomalyVector(u, removed_node)


def anomaly_number(group: CoxeterGroup, dominant: Iterable, u: AnomalyVector,
                   degree: int = 3) -> QTau:
    """Exact ``sum <mu,u>**degree`` over the orbit, for odd ``degree``."""
    if degree < 1 or degree % 2 == 0:
        raise DomainError("anomaly numbers need an odd degree >= 1")
    orbit = generate_orbit(group, dominant)
    total = ZERO
    for mu in orbit.points:
        total = total + scalar_product(group, mu, u.u) ** degree
    return total


def anomaly_of_product(group: CoxeterGroup, a: Iterable, b: Iterable, u: AnomalyVector) -> QTau:
    """Closed-form degree-3 anomaly of ``G(a) (x) G(b)``."""
    return (anomaly_number(group, a, u, 3) * index_even(group, b, 0)
            + index_even(group, a, 0) * anomaly_number(group, b, u, 3))
