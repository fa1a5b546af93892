import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from orbitkit.coxeter import (
    build_group,
    parse_group,
    scalar_product,
    simple_reflection,
    subdiagram_factors,
    subdiagram_order,
)
from orbitkit.errors import DomainError
from orbitkit.orbit import generate_orbit
from orbitkit.scalar import TAU, QTau

from conftest import points_of

WITH_COORDS = ["A1", "A2", "A3", "A4", "B3", "B4", "C2", "C3", "C4", "D4", "D5",
               "F4", "G2", "H2", "H3", "H4", "E6", "A1xA1", "A2xG2", "H2xA1"]

ORDERS = {
    **{f"A{n}": math.factorial(n + 1) for n in range(1, 9)},
    **{f"B{n}": 2**n * math.factorial(n) for n in range(3, 9)},
    **{f"C{n}": 2**n * math.factorial(n) for n in range(2, 9)},
    **{f"D{n}": 2 ** (n - 1) * math.factorial(n) for n in range(4, 9)},
    "E6": 51840, "E7": 2903040, "E8": 696729600,
    "F4": 1152, "G2": 12, "H2": 10, "I2(7)": 14, "I2(12)": 24, "H3": 120, "H4": 14400,
}


@pytest.mark.parametrize("name, order", sorted(ORDERS.items()))
def test_orders(name, order):
    assert build_group(name).order == order


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "B3", "C2", "C3", "D4", "G2", "H2", "H3", "F4", "A1xA1"])
def test_order_equals_regular_orbit_size(name):
    g = build_group(name)
    assert generate_orbit(g, [1] * g.rank).size == g.order


def test_parse_names():
    assert build_group("H2(7)") is build_group("I2(7)")
    assert build_group("H2(6)") is build_group("G2")
    assert build_group("h2") is build_group("H2")
    assert build_group("A1xA1").order == 4
    assert parse_group("A2 x G2").name == "A2xG2"
    for bad in ["Z3", "B2", "D3", "E9", "I2", "I2(4)", "A0", ""]:
        with pytest.raises(DomainError):
            parse_group(bad)


def test_h3_cartan():
    g = build_group("H3")
    assert g.cartan == ((2, -1, 0), (-1, 2, -TAU), (0, -TAU, 2))


def test_g2_weight_gram():
    from fractions import Fraction
    assert build_group("G2").weight_gram == ((2, 1), (1, Fraction(2, 3)))


def test_dihedral_without_coordinates():
    g = build_group("I2(7)")
    assert g.cartan is None and g.coxeter_matrix[0][1] == 7
    with pytest.raises(DomainError):
        g.require_coordinates()


@pytest.mark.parametrize("name", WITH_COORDS)
def test_weight_basis_duality(name):
    # <alpha_k, omega_j> = delta_jk <alpha_k, alpha_k> / 2
    g = build_group(name)
    for k, alpha in enumerate(g.simple_roots):
        assert scalar_product(g, alpha, alpha) == g.root_norms[k]
        for j in range(g.rank):
            omega = tuple(QTau(int(i == j)) for i in range(g.rank))
            expected = g.root_norms[k] / 2 if j == k else 0
            assert scalar_product(g, alpha, omega) == expected


@pytest.mark.parametrize("name", WITH_COORDS)
def test_gram_symmetric_positive_definite(name):
    g = build_group(name)
    gram = g.weight_gram
    assert all(gram[i][j] == gram[j][i] for i in range(g.rank) for j in range(g.rank))
    assert np.linalg.eigvalsh(np.array([[float(x) for x in r] for r in gram])).min() > 0


def _reflection_matrix(g, k):
    cols = []
    for j in range(g.rank):
        e = tuple(QTau(int(i == j)) for i in range(g.rank))
        cols.append(simple_reflection(g, k, e))
    return np.array([[float(c[i]) for c in cols] for i in range(g.rank)])


@pytest.mark.parametrize("name", WITH_COORDS)
def test_coxeter_relations(name):
    g = build_group(name)
    mats = [_reflection_matrix(g, k) for k in range(g.rank)]
    eye = np.eye(g.rank)
    for i in range(g.rank):
        for j in range(g.rank):
            m = g.coxeter_matrix[i][j]
            prod = mats[i] @ mats[j]
            power = eye
            for p in range(1, m + 1):
                power = power @ prod
                assert np.allclose(power, eye) == (p == m), (i, j, p)


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "H2", "H3", "F4", "D4"])
@given(data=st.data())
def test_reflections_are_involutive_isometries(name, data):
    g = build_group(name)
    x = data.draw(points_of(g.rank, st.integers(-4, 4)))
    y = data.draw(points_of(g.rank, st.integers(-4, 4)))
    x, y = g.point(x), g.point(y)
    k = data.draw(st.integers(0, g.rank - 1))
    rx = simple_reflection(g, k, x)
    assert simple_reflection(g, k, rx) == x
    assert scalar_product(g, rx, simple_reflection(g, k, y)) == scalar_product(g, x, y)


def test_reflection_examples():
    a2 = build_group("A2")
    assert simple_reflection(a2, 0, a2.point((1, 0))) == a2.point((-1, 1))
    h2 = build_group("H2")
    assert simple_reflection(h2, 1, h2.point((0, 1))) == h2.point((TAU, -1))


def test_scalar_product_examples():
    from fractions import Fraction
    assert scalar_product(build_group("A2"), (1, 1), (1, 1)) == 2
    assert scalar_product(build_group("C2"), (1, 0), (1, 0)) == Fraction(1, 2)


def test_subdiagram_orders():
    assert subdiagram_order(build_group("H3"), [1, 2]) == 10
    assert subdiagram_order(build_group("A3"), []) == 1
    e8 = build_group("E8")
    # main line 1..7 with node 8 attached to node 5
    assert subdiagram_order(e8, range(7)) == math.factorial(8)
    assert subdiagram_order(e8, range(1, 8)) == 2903040
    assert [f.name for f in subdiagram_factors(e8, range(1, 8))] == ["E7"]
    assert sorted(f.name for f in subdiagram_factors(e8, [0, 1, 2, 3, 5, 6, 7])) == ["A1", "A2", "A4"]
    assert [f.name for f in subdiagram_factors(e8, [0, 1, 2, 3, 4, 5, 7])] == ["D7"]


@pytest.mark.parametrize("name", ["A4", "B4", "C4", "D5", "F4", "H4", "E6", "E7", "E8"])
def test_subdiagram_orders_match_orbit_sizes(name):
    # |G| = |G(omega_j)| * |Stab(omega_j)| for every small fundamental orbit
    g = build_group(name)
    for j in range(g.rank):
        stab = subdiagram_order(g, [i for i in range(g.rank) if i != j])
        if g.order // stab > 3000:
            continue
        omega = [int(i == j) for i in range(g.rank)]
        assert generate_orbit(g, omega).size * stab == g.order
