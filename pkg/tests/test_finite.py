import numpy as np
import pytest

from enqcover.algebra import GF, DomainError, ring
from enqcover.alphabets import W
from enqcover.finite import (
    FiniteFieldError,
    PackedForm,
    end_to_end,
    enumerate_points,
    fiber_invariance_check,
    flex_orbit,
    hasse_window,
    nodal_images,
    normalize,
    projective_line,
)
from enqcover.models import hesse_model, u1_model


def test_packed_form_matches_exact_evaluation():
    R = ring(W)
    w = R.gens(*W)
    f = w[0] ** 3 * w[1] + 5 * w[2] * w[3] * w[4] ** 2 - w[4] ** 4 * 7
    pf = PackedForm.from_poly(f, 31)
    pts = np.array([[1, 2, 3, 4, 5], [30, 0, 7, 1, 2], [0, 0, 0, 0, 1]])
    for row, got in zip(pts, pf(pts)):
        want = f.evaluate({v: int(x) for v, x in zip(W, row)})
        assert got == int(want) % 31


def test_packed_form_rejects_parameters():
    R = ring(("a",) + W)
    with pytest.raises(FiniteFieldError):
        PackedForm.from_poly(R.gen("a") * R.gen("w0"), 11)


def test_enumeration_needs_p_above_five():
    with pytest.raises(DomainError):
        enumerate_points(hesse_model(1, 2), 5)


def test_points_are_normalised_and_sorted():
    pts = enumerate_points(hesse_model(1, 2), 31)
    assert pts == sorted(set(pts))
    assert all(normalize(P, 31) == P for P in pts)


def test_u12_mod_11_contains_the_flex():
    pts = enumerate_points(hesse_model(1, 2, domain=GF(11)), 11)
    assert normalize((0, 1, 2, -2, -1), 11) in pts


def test_u12_mod_11_is_singular():
    # D(1, 2) = -2750 = -2 * 5^3 * 11, so the reduction is a pentagon of lines
    r = end_to_end(1, 2, 11)
    assert r.discriminant == 0
    assert r.count == 5 * 11
    assert r.curve.singular
    assert r.maps_onto_curve and r.flexes_to_infinity and r.translates_agree


def test_u13_mod_31_is_singular():
    r = end_to_end(1, 3, 31)
    assert r.discriminant == 0 and r.count == 5 * 31


def test_nodal_curve_mod_11():
    p = 11
    pts = enumerate_points(u1_model((0, 1, 1, 1, 1)), p)
    images = nodal_images(projective_line(p), p)
    assert set(pts) == images | {(1, 0, 0, 0, 0)}


@pytest.mark.parametrize("a,b,p", [(1, 2, 31), (1, 1, 41), (1, 3, 41)])
def test_nonsingular_reductions(a, b, p):
    r = end_to_end(a, b, p)
    assert r.nonsingular
    assert r.maps_onto_curve
    assert r.flexes_to_infinity
    assert r.translates_agree
    assert r.in_hasse_window
    assert r.count % 25 == 0
    assert r.fibers_are_orbits
    assert all(len(o) == 25 for o in r.orbits)


def test_fiber_invariance_check():
    assert fiber_invariance_check(hesse_model(1, 2, domain=GF(31)))
    assert fiber_invariance_check(hesse_model(1, 1), 41)


def test_fiber_invariance_preconditions():
    with pytest.raises(FiniteFieldError, match="singular"):
        fiber_invariance_check(hesse_model(1, 2, domain=GF(11)))
    with pytest.raises(FiniteFieldError):
        fiber_invariance_check(hesse_model(1, 2, domain=GF(7)))
    with pytest.raises(FiniteFieldError):
        fiber_invariance_check(u1_model((1, 2, 3, 4, 5), domain=GF(11)))


def test_flex_orbit_has_25_points():
    assert len(flex_orbit(1, 2, 31)) == 25


def test_hasse_window():
    assert hasse_window(11) == (6, 18)
    assert hasse_window(31) == (22, 42)


def test_normalize_rejects_zero():
    with pytest.raises(FiniteFieldError):
        normalize((0, 0, 0, 0, 0), 11)
