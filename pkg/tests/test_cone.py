from math import gcd

import pytest

from k3hilb.cone import (
    RayKind,
    extremal_rays,
    is_effective,
    is_nef,
    negative_part_reduction,
    ray_products,
    surface_model,
)
from k3hilb.errors import UnsupportedFamily
from k3hilb.lattice import DivisorClass, degree, intersect, square
from k3hilb.quadform import null_rays, represents
from oracles import effective_by_search

E = DivisorClass(0, 1)


def cross(u, v):
    return u.x * v.y - u.y * v.x


def test_conic_family_rays():
    cone = extremal_rays(surface_model("rational", 2))
    assert [r.kind for r in cone.rays] == [RayKind.MINUS_TWO_CURVE] * 2
    assert cone.ray2.divisor == DivisorClass(1, -1)


@pytest.mark.parametrize(
    "e, x, y, d",
    [(3, 16, 9, 37), (5, 8, 3, 17), (7, 40, 11, 83), (9, 106000, 23001, 216991)],
)
def test_odd_rational_second_ray(e, x, y, d):
    surface = surface_model("rational", e)
    other = extremal_rays(surface).ray2.divisor
    assert other == DivisorClass(x, -y)
    assert degree(surface.lattice, other) == d


@pytest.mark.parametrize("e", range(2, 51))
def test_rational_second_ray_is_a_minus_two_class(e):
    surface = surface_model("rational", e)
    other = extremal_rays(surface).ray2.divisor
    assert square(surface.lattice, other) == -2
    assert intersect(surface.lattice, other, E) > 0
    assert degree(surface.lattice, other) > 0


@pytest.mark.parametrize("e", range(4, 51))
def test_elliptic_second_ray(e):
    surface = surface_model("elliptic", e)
    cone = extremal_rays(surface)
    other = cone.ray2.divisor
    assert cone.ray2.kind is RayKind.ELLIPTIC_FIBER
    assert square(surface.lattice, other) == 0
    assert gcd(other.x, other.y) == 1
    assert set(null_rays(surface.lattice).rays) == {E, other}


def test_plane_cubic_model():
    surface = surface_model("elliptic", 3)
    assert surface.plane_cubic
    cone = extremal_rays(surface)
    assert cone.curves(RayKind.MINUS_TWO_CURVE) == [DivisorClass(1, -1)]
    assert cone.curves(RayKind.ELLIPTIC_FIBER) == [E]


def test_line_family_rays():
    cone = extremal_rays(surface_model("line", 1))
    assert cone.curves(RayKind.MINUS_TWO_CURVE) == [E]
    assert cone.curves(RayKind.ELLIPTIC_FIBER) == [DivisorClass(1, -1)]


def test_none_family_needs_s_and_has_irrational_cone():
    with pytest.raises(UnsupportedFamily):
        surface_model("none", 6)
    surface = surface_model("none", 6, 2)
    assert all(r.kind is RayKind.IRRATIONAL_NULL for r in extremal_rays(surface).rays)
    assert ray_products(surface, DivisorClass(1, 0)) is None


def test_nef_examples():
    conic = surface_model("rational", 2)
    assert is_nef(conic, DivisorClass(1, 0))
    assert is_nef(conic, DivisorClass(1, 1))  # D.E = 0, D.E' = 6
    assert not is_nef(conic, DivisorClass(1, 2))
    assert not is_nef(conic, E)
    none = surface_model("none", 6, 2)
    assert is_nef(none, DivisorClass(1, 0))
    assert not is_nef(none, DivisorClass(-1, 0))


def test_reduction_examples():
    line = surface_model("line", 1)
    assert negative_part_reduction(line, DivisorClass(1, 2)) == (DivisorClass(1, 0), [E, E])
    conic = surface_model("rational", 2)
    assert negative_part_reduction(conic, DivisorClass(1, 2)) == (DivisorClass(1, 1), [E])


def test_effective_examples():
    conic = surface_model("rational", 2)
    assert is_effective(conic, E)
    assert is_effective(conic, DivisorClass(1, 2))
    assert not is_effective(conic, DivisorClass(0, 0))
    assert not is_effective(conic, DivisorClass(0, -1))
    assert not is_effective(conic, DivisorClass(-1, 2))
    elliptic = surface_model("elliptic", 4, 0)
    assert is_effective(elliptic, 3 * E)
    assert not is_effective(elliptic, DivisorClass(1, -3))


SURFACES = [
    ("rational", 2, None),
    ("rational", 3, None),
    ("rational", 4, None),
    ("rational", 5, None),
    ("elliptic", 3, None),
    ("elliptic", 4, None),
    ("elliptic", 5, None),
    ("line", 1, None),
]


@pytest.mark.parametrize("family, e, s", SURFACES)
def test_effectivity_against_exhaustive_search(family, e, s):
    surface = surface_model(family, e, s)
    cone = extremal_rays(surface)
    curves = [tuple(c) for c in cone.curves(RayKind.MINUS_TWO_CURVE)]
    fibers = [tuple(c) for c in cone.curves(RayKind.ELLIPTIC_FIBER)]
    lattice = surface.lattice
    for x in range(-8, 9):
        for y in range(-8, 9):
            d = DivisorClass(x, y)
            expected = effective_by_search(lattice.e, lattice.s, (x, y), curves, fibers)
            assert is_effective(surface, d) == expected, d


@pytest.mark.parametrize("e", range(2, 12))
def test_rational_lattice_has_no_isotropic_class(e):
    surface = surface_model("rational", e)
    assert null_rays(surface.lattice).irrational
    assert not represents(surface.lattice, 0).representable


@pytest.mark.parametrize("e", range(4, 12))
def test_elliptic_lattice_has_no_minus_two_class(e):
    surface = surface_model("elliptic", e)
    assert not represents(surface.lattice, -2).representable


def test_plane_cubic_lattice_has_the_residual_line():
    lattice = surface_model("elliptic", 3).lattice
    assert square(lattice, DivisorClass(1, -1)) == -2
    assert represents(lattice, -2).representable


@pytest.mark.parametrize("e", [3, 5, 7])
def test_odd_rational_rays_bound_all_small_minus_two_classes(e):
    # every (-2)-class of positive degree lies in the cone spanned by E and E'
    surface = surface_model("rational", e)
    lattice = surface.lattice
    other = extremal_rays(surface).ray2.divisor
    bound = 60
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            d = DivisorClass(x, y)
            if square(lattice, d) != -2 or degree(lattice, d) <= 0:
                continue
            # d = a E + b E' with a, b >= 0
            base = cross(E, other)
            assert cross(d, other) * base >= 0 and cross(E, d) * base >= 0, d
