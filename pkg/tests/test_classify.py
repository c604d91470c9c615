import pytest
from hypothesis import given
from hypothesis import strategies as st

from k3hilb.classify import (
    Assumptions,
    Status,
    classify_curve,
    criterion_clause,
    curve_numerics,
    hilbert_flag_dimension,
)
from k3hilb.cone import surface_model
from k3hilb.errors import UnsupportedAmbient
from k3hilb.lattice import P3, V4, AmbientThreefold, DivisorClass, intersect

CONIC = surface_model("rational", 2)
PLANE_CUBIC = surface_model("elliptic", 3)
GG = Assumptions(normal_bundle_globally_generated=True)


def test_curve_numerics_examples():
    assert curve_numerics(CONIC, DivisorClass(2, 2)) == (12, 13)
    assert curve_numerics(PLANE_CUBIC, DivisorClass(4, 2)) == (22, 57)
    assert curve_numerics(CONIC, DivisorClass(3, 3)) == (18, 28)


def test_flag_dimension():
    assert hilbert_flag_dimension(V4, 13) == 16
    assert hilbert_flag_dimension(P3, 57) == 90
    assert hilbert_flag_dimension(V4, 0) == 3  # g + 3
    with pytest.raises(ValueError):
        hilbert_flag_dimension(V4, -1)


@pytest.mark.parametrize("g", range(0, 200, 7))
def test_ambients_differ_by_thirty(g):
    assert hilbert_flag_dimension(P3, g) - hilbert_flag_dimension(V4, g) == 30


def test_conic_double_in_quartic_threefold():
    r = classify_curve(V4, CONIC, DivisorClass(2, 2), GG)
    assert (r.d, r.g, r.dim_W, r.h1_SD, r.h0_NCV) == (12, 13, 16, 1, 17)
    assert r.status is Status.GENERICALLY_NON_REDUCED
    assert r.rule == "minus-two-curve"
    assert r.D_class == DivisorClass(1, 2)


def test_plane_cubic_pencil_in_p3():
    r = classify_curve(P3, PLANE_CUBIC, DivisorClass(4, 2))
    assert r.D_class == DivisorClass(0, 2)
    assert (r.d, r.g, r.dim_W, r.h1_SD, r.h0_NCV) == (22, 57, 90, 1, 91)
    assert r.status is Status.GENERICALLY_NON_REDUCED
    assert r.rule == "elliptic-pencil"


def test_nef_residual_gives_smooth_component():
    r = classify_curve(V4, CONIC, DivisorClass(2, 1))
    assert r.D_class == DivisorClass(1, 1) and r.D_nef
    assert (r.d, r.g, r.dim_W, r.h1_SD) == (10, 12, 15, 0)
    assert r.status is Status.GENERICALLY_SMOOTH
    assert r.D_dot_rays == (0, 6)


def test_complete_intersection_is_out_of_scope():
    r = classify_curve(V4, CONIC, DivisorClass(3, 0))
    assert r.status is Status.OUT_OF_SCOPE
    assert not r.preconditions["not_complete_intersection"]
    assert "not_complete_intersection" in r.reason
    assert (r.d, r.g) == (12, 19)
    assert r.dim_W is None


def test_missing_assumption_keeps_out_of_scope():
    r = classify_curve(V4, CONIC, DivisorClass(2, 2))
    assert r.status is Status.OUT_OF_SCOPE
    assert r.h1_SD == 1 and r.dim_W is None
    assert all(r.preconditions.values())


def test_pencil_on_quartic_threefold_needs_the_pi_flag():
    surface = surface_model("elliptic", 4)
    c = DivisorClass(1, 2)  # D = 2F
    assert classify_curve(V4, surface, c).status is Status.OUT_OF_SCOPE
    flagged = Assumptions(pi_map_nonsurjective_elliptic=True)
    assert classify_curve(V4, surface, c, flagged).status is Status.GENERICALLY_NON_REDUCED


def test_higher_pencil_status_is_open():
    surface = surface_model("elliptic", 4)
    r = classify_curve(P3, surface, DivisorClass(4, 3))
    assert r.D_class == DivisorClass(0, 3)
    assert r.status is Status.OBSTRUCTED_STATUS_OPEN
    assert r.h1_SD == 2
    assert r.h0_NCV == r.dim_W + 2


def test_no_special_curves_gives_smooth_component():
    surface = surface_model("none", 6, 2)
    r = classify_curve(V4, surface, DivisorClass(1, 1))
    assert r.status is Status.GENERICALLY_SMOOTH
    assert r.D_dot_rays is None


def test_unsupported_ambient():
    fake = AmbientThreefold("cubic", DivisorClass(-2, 0), 9)
    with pytest.raises(UnsupportedAmbient):
        classify_curve(fake, CONIC, DivisorClass(2, 2))


def test_clause_examples():
    c = criterion_clause(CONIC, DivisorClass(1, 2))
    assert (c.clause, c.curve, c.h1_shifted, c.h1) == ("minus-two-curve", DivisorClass(0, 1), 0, 1)
    assert intersect(CONIC.lattice, DivisorClass(1, 2), c.curve) == -2
    c = criterion_clause(surface_model("elliptic", 4), DivisorClass(0, 3))
    assert (c.clause, c.multiplicity, c.h1) == ("elliptic-pencil", 3, 2)
    c = criterion_clause(surface_model("none", 6, 2), DivisorClass(1, 0))
    assert c.clause == "vanishing" and c.ray_products is None


def test_clause_to_dict():
    c = criterion_clause(CONIC, DivisorClass(1, 2))
    assert c.to_dict() == {
        "clause": "minus-two-curve",
        "h1": 1,
        "ray_products": [-2, 10],
        "curve": [0, 1],
        "h1_shifted": 0,
        "multiplicity": None,
    }


@pytest.mark.parametrize("n", range(2, 11))
def test_conic_multiples(n):
    r = classify_curve(V4, CONIC, DivisorClass(n, n), GG)
    assert (r.d, r.g, r.dim_W) == (6 * n, 3 * n * n + 1, 3 * n * n + 4)
    assert r.status is Status.GENERICALLY_NON_REDUCED
    assert r.D_class == DivisorClass(n - 1, n)
    assert intersect(CONIC.lattice, r.D_class, DivisorClass(0, 1)) == -2


SURFACES = [surface_model("rational", e) for e in range(2, 8)]
SURFACES += [surface_model("elliptic", e) for e in range(3, 8)]
SURFACES += [surface_model("line", 1), surface_model("none", 6, 2)]


@given(
    st.sampled_from([P3, V4]),
    st.sampled_from(SURFACES),
    st.builds(DivisorClass, st.integers(-12, 12), st.integers(-12, 12)),
    st.booleans(),
    st.booleans(),
)
def test_report_invariants(ambient, surface, c, gg, pi):
    assumptions = Assumptions(gg, pi)
    r = classify_curve(ambient, surface, c, assumptions)
    assert r == classify_curve(ambient, surface, c, assumptions)
    if r.dim_W is not None:
        assert r.h0_NCV - r.dim_W == r.h1_SD
        assert r.D_effective
    if r.status is Status.GENERICALLY_NON_REDUCED:
        assert r.h1_SD == 1
        assert all(r.preconditions.values())
    if r.status is Status.GENERICALLY_SMOOTH:
        assert r.h1_SD == 0
    if r.status is Status.OUT_OF_SCOPE:
        assert r.reason
        assert r.dim_W is None
    if ambient == P3:
        assert all(r.assumptions.values())
