from fractions import Fraction

import pytest

from enqcover.algebra import QQ
from enqcover.covariants.invariants import disc_D, inv_c4, inv_c6
from enqcover.covering import covering_data_hesse, covering_data_u1, zxy
from enqcover.curve import CurveError, CurvePoint, WeierstrassCurve, jacobian, map_point, scale_point
from enqcover.models import hesse_model, nodal_point, pfaffians, u1_model


def test_nodal_jacobian():
    E = jacobian(1, -1)
    assert (E.a4, E.a6) == (-27, 54)
    assert E.singular and E.j is None
    assert str(E) == "y^2 = x^3 + (-27)*x + (54)"


def test_cuspidal_jacobian():
    E = jacobian(0, 0)
    assert E.singular and E.j is None


def test_discriminant_is_6_12_delta():
    E = WeierstrassCurve(inv_c4(), inv_c6())
    assert E.discriminant == disc_D() ** 5 * 6**12
    F = jacobian(-5909375, -8087890625)
    assert F.discriminant == F.Delta * 6**12
    assert F.Delta == QQ.coerce(-2750) ** 5


@pytest.fixture(scope="module")
def nodal():
    lams = (0, 1, 1, 1, 1)
    return zxy(covering_data_u1(lams)), jacobian(1, -1), pfaffians(u1_model(lams))


@pytest.mark.parametrize("s,t", [(2, 1), (3, -1), (Fraction(1, 2), 5)])
def test_nodal_points_map_onto_curve(nodal, s, t):
    triple, E, q = nodal
    P = map_point(triple, nodal_point(s, t), E, q)
    assert not P.infinity and E.contains(P.x, P.y)


def test_map_is_invariant_under_rescaling(nodal):
    triple, E, q = nodal
    pt = nodal_point(2, 1)
    P = map_point(triple, pt, E, q)
    Q = map_point(triple, [Fraction(-7, 3) * x for x in pt], E, q)
    assert P == Q


def test_node_is_refused(nodal):
    triple, E, q = nodal
    with pytest.raises(CurveError, match="singular"):
        map_point(triple, (1, 0, 0, 0, 0), E, q)


def test_off_curve_point_reports_residuals(nodal):
    triple, E, q = nodal
    with pytest.raises(CurveError, match="residuals"):
        map_point(triple, (1, 1, 0, 0, 0), E, q)


def test_zero_vector_rejected(nodal):
    triple, E, q = nodal
    with pytest.raises(CurveError):
        map_point(triple, (0,) * 5, E, q)


def test_flex_maps_to_infinity():
    triple = zxy(covering_data_hesse(1, 2))
    E = jacobian(inv_c4().evaluate({"a": QQ.one, "b": QQ.coerce(2)}), inv_c6().evaluate({"a": QQ.one, "b": QQ.coerce(2)}))
    P = map_point(triple, (0, 1, 2, -2, -1), E, pfaffians(hesse_model(1, 2)))
    assert P.infinity and str(P) == "O"


def test_scale_point():
    P = CurvePoint(QQ.coerce(2), QQ.coerce(3))
    assert scale_point(P, 2, QQ) == CurvePoint(8, 24)
    assert scale_point(CurvePoint.at_infinity(), 5, QQ).infinity
