"""Exact orbit calculus for finite Coxeter groups.

Orbits, their products and symmetrized powers, face lattices of the orbit
polytopes, and orbit invariants, all computed in exact Q(tau) arithmetic.
"""

from .algebra import (
    OrbitSum,
    SignedOrbit,
    orbit_polynomial,
    orbit_product,
    signed_orbit,
    signed_product,
    symmetrized_power,
)
from .coxeter import (
    CoxeterGroup,
    GroupSpec,
    SimpleFactor,
    build_group,
    parse_group,
    scalar_product,
    simple_reflection,
    subdiagram_order,
)
from .errors import DomainError, InternalError, OrbitKitError, SizeGuardError
from .invariants import (
    AnomalyVector,
    CongruenceClass,
    anomaly_number,
    anomaly_vector,
    congruence_number,
    index_even,
    index_of_product,
)
from .orbit import (
    Orbit,
    dominant_representative,
    generate_orbit,
    lowest_point,
    orbit_size,
)
from .polytope import (
    FaceOrbit,
    enumerate_faces,
    export_mesh,
    extreme_decoration,
    face_membership_table,
    face_vertices,
)
from .scalar import TAU, QTau, parse_qtau

__version__ = "0.1.0"

__all__ = [
    "QTau", "TAU", "parse_qtau",
    "CoxeterGroup", "GroupSpec", "SimpleFactor", "build_group", "parse_group",
    "scalar_product", "simple_reflection", "subdiagram_order",
    "Orbit", "dominant_representative", "generate_orbit", "lowest_point", "orbit_size",
    "OrbitSum", "SignedOrbit", "orbit_polynomial", "orbit_product", "signed_orbit",
    "signed_product", "symmetrized_power",
    "AnomalyVector", "CongruenceClass", "anomaly_number", "anomaly_vector",
    "congruence_number", "index_even", "index_of_product",
    "FaceOrbit", "enumerate_faces", "export_mesh", "extreme_decoration",
    "face_membership_table", "face_vertices",
    "OrbitKitError", "DomainError", "SizeGuardError", "InternalError",
]
