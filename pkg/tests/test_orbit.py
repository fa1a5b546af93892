import pytest
from hypothesis import given, strategies as st

from orbitkit.coxeter import build_group, scalar_product
from orbitkit.errors import DomainError, SizeGuardError
from orbitkit.orbit import (
    closure_orbit,
    dominant_representative,
    generate_orbit,
    is_dominant,
    lowest_point,
    orbit_size,
    parse_point,
)
from orbitkit.scalar import TAU, QTau

from conftest import points_of, tau_coords
from reference_data import A3_110, H3_00C_CORRECTED, H3_00C_PRINTED, H3_00C_SIZE, ORBITS_2D, ORBITS_3D

LISTINGS = [(g, i) for table in (ORBITS_2D, ORBITS_3D) for g in table for i in range(len(table[g]))]


def as_set(g, pts):
    return {g.point(p) for p in pts}


@pytest.mark.parametrize("a, b", [(1, 1), (2, 3)])
@pytest.mark.parametrize("name, i", LISTINGS)
def test_published_listings(name, i, a, b):
    g = build_group(name)
    seed, listing = {**ORBITS_2D, **ORBITS_3D}[name][i]
    expected = as_set(g, listing(a, b))
    orbit = generate_orbit(g, seed(a, b))
    assert set(orbit.points) == expected
    assert orbit.size == len(expected)


def test_a3_110():
    g = build_group("A3")
    assert set(generate_orbit(g, (1, 1, 0)).points) == as_set(g, A3_110)


@pytest.mark.parametrize("c", [1, 2, TAU])
def test_h3_00c(c):
    g = build_group("H3")
    orbit = generate_orbit(g, (0, 0, c))
    assert orbit.size == H3_00C_SIZE
    assert as_set(g, H3_00C_CORRECTED(c)) <= set(orbit.points)
    r2 = orbit.radius_squared()
    misprinted = as_set(g, H3_00C_PRINTED(c)) - as_set(g, H3_00C_CORRECTED(c))
    assert len(misprinted) == 4
    assert all(scalar_product(g, p, p) != r2 for p in misprinted)


def test_orbit_size_examples():
    assert orbit_size(build_group("H3"), (1, 1, 1)) == 120
    assert orbit_size(build_group("B3"), (0, 0, 1)) == 8
    assert orbit_size(build_group("E8"), (1, 0, 0, 0, 0, 0, 0, 0)) == 240
    assert orbit_size(build_group("I2(7)"), (1, 0)) == 7
    with pytest.raises(DomainError):
        orbit_size(build_group("A2"), (-1, 1))


def test_dominant_and_lowest():
    a2 = build_group("A2")
    assert dominant_representative(a2, (-1, 2)) == a2.point((1, 1))
    assert lowest_point(a2, (1, 0)) == a2.point((0, -1))
    assert lowest_point(build_group("G2"), (1, 0)) == (-1, 0)
    h2 = build_group("H2")
    assert dominant_representative(h2, (-1, 0)) == h2.point((0, 1))
    assert lowest_point(a2, (0, 0)) == (0, 0)


def test_trivial_orbit():
    assert generate_orbit(build_group("C2"), (0, 0)).points == ((0, 0),)


def test_size_guard(monkeypatch):
    g = build_group("E8")
    with pytest.raises(SizeGuardError):
        generate_orbit(g, [1] * 8)
    with pytest.raises(SizeGuardError):
        generate_orbit(build_group("A3"), (1, 1, 1), limit=23)
    monkeypatch.setenv("ORBITKIT_MAX_POINTS", "10")
    with pytest.raises(SizeGuardError):
        generate_orbit(build_group("A3"), (1, 1, 0))


def test_dihedral_orbit_needs_coordinates():
    with pytest.raises(DomainError):
        generate_orbit(build_group("I2(7)"), (1, 0))


def test_parse_point():
    assert parse_point("1,0,1+t") == (QTau(1), QTau(0), QTau(1, 1))


SMALL = ["A2", "C2", "G2", "H2", "A3", "B3", "C3", "H3", "A1xA1", "A2xA1", "A4", "D4", "F4"]


@pytest.mark.parametrize("name", SMALL)
@given(data=st.data())
def test_bfs_equals_full_closure(name, data):
    g = build_group(name)
    elements = tau_coords() if name.startswith("H") else st.integers(0, 2)
    seed = g.point(data.draw(points_of(g.rank, elements)))
    orbit = generate_orbit(g, seed)
    closure = closure_orbit(g, seed)
    assert set(orbit.points) == closure
    assert orbit.size == orbit_size(g, seed)
    # exactly one dominant and one lowest point; all points equidistant
    assert [p for p in orbit.points if is_dominant(p)] == [orbit.dominant]
    assert sum(all(c.sign() <= 0 for c in p) for p in orbit.points) == 1
    r2 = orbit.radius_squared()
    assert all(scalar_product(g, p, p) == r2 for p in orbit.points)


@given(st.fractions(min_value=0, max_value=3, max_denominator=7), st.fractions(min_value=0, max_value=3, max_denominator=7))
def test_rational_seeds(a, b):
    # seeds need not be lattice points
    g = build_group("H2")
    seed = (QTau(a), QTau(b))
    assert set(generate_orbit(g, seed).points) == closure_orbit(g, seed)


def test_non_dominant_seed_gives_same_orbit():
    g = build_group("B3")
    assert generate_orbit(g, (-1, 1, 0)) == generate_orbit(g, (1, 0, 0))
    assert generate_orbit(g, (-1, 1, 0)).points == generate_orbit(g, (1, 0, 0)).points
