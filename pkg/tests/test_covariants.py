import random
from fractions import Fraction

import pytest

from enqcover.algebra import QZ5, ring, zeta_power
from enqcover.alphabets import W, WS
from enqcover.covariants import quintics as qm
from enqcover.covariants.catalogue import NAMES, CatalogueError, builtin, shifted
from enqcover.covariants.chi import apply_chi, chi1
from enqcover.covariants.engine import (
    covariance_test,
    check_lambda_rule,
    extend_to_u1,
    lambda_exponents,
    minimal_delta_power,
)
from enqcover.covariants.invariants import disc_D, discrete_invariants, inv_c4, u1_invariants
from enqcover.covariants.pairing import PairingError, apolar_pair
from enqcover.covariants.spaces import monomial_character
from enqcover.covariants.tables import TableError, check_all, load_tables, parse_tables, rows_for


@pytest.mark.parametrize("name", NAMES)
def test_builtins_are_invariant_and_homogeneous(name):
    f = builtin(name)
    assert f.is_h5_invariant()
    assert f.is_homogeneous()
    assert shifted(f).poly == f.poly


def test_unknown_builtin():
    with pytest.raises(CatalogueError):
        builtin("S99")


def test_two_s10_normalisations():
    # the displayed S10 and the basis element F10 - G10 differ by -50
    assert builtin("S10b").poly == builtin("S10").poly * -50
    assert builtin("S10b").poly == builtin("F10").poly - builtin("G10").poly


def test_s10_product_coefficient():
    f = builtin("S10").poly
    R = ring(("a", "b"))
    a, b = R.gens("a", "b")
    c = f.coefficient_of({w: 1 for w in W})
    assert c.equals(a**10 - 16 * a**5 * b**5 - b**10)


def test_f10_failure_report():
    r = extend_to_u1(builtin("F10"))
    assert not r
    assert r.kind == "denominator"
    assert r.min_k == 1
    assert r.a_exponent == 0
    assert str(r.tensor) == "w0^5"
    assert minimal_delta_power(builtin("F10")) == 1


def test_d_fails_on_weights():
    r = covariance_test(builtin("D"))
    assert not r and r.report.kind == "weights"


def test_h_extension_at_u1():
    r = extend_to_u1(builtin("c4"))
    assert r
    # c4 at prod(lambda) = 0 is 1
    assert r.at((0, 1, 1, 1, 1)).constant_value() == 1


def test_lambda_rule_oracle():
    rng = random.Random(3)
    for row in load_tables():
        m = lambda_exponents(row.character, row.prefix)
        al = [rng.randint(1, 7) for _ in range(4)]
        p = 1
        for x in al:
            p *= x
        al.append(Fraction(1, p))
        assert check_lambda_rule(row.character, row.prefix, m, al)


def test_all_table_rows():
    rows = check_all()
    assert len(rows) == 50
    assert all(r.ok for r in rows)
    assert {r.row.tag for r in rows} == {r.tag for r in load_tables()}


def test_table_version_is_checked():
    with pytest.raises(TableError):
        parse_tables({"version": 99, "tables": []})


def test_rows_for_space():
    rows = rows_for(load_tables()[0].tag)
    assert rows and all(r.tag == rows[0].tag for r in rows)


def test_pairing_identity():
    assert apolar_pair(builtin("S10").poly, builtin("T30").poly).equals(inv_c4() ** 2)


def test_pairing_weights_factorials():
    Rw = ring(W)
    Rs = ring(WS)
    u = Rw.gen("w0") ** 2 * Rw.gen("w1") ** 3
    v = Rs.gen("ws0") ** 2 * Rs.gen("ws1") ** 3
    assert apolar_pair(u, v).constant_value() == 12


def test_pairing_degree_mismatch():
    with pytest.raises(PairingError):
        apolar_pair(ring(W).gen("w0") ** 2, ring(WS).gen("ws0"))


def test_chi1_T_is_diagonal():
    M = chi1("T")
    z = QZ5.zeta5()
    assert M == [[z**2, QZ5.zero], [QZ5.zero, z**3]]


@pytest.mark.parametrize("g", ["S", "T"])
def test_invariants_fixed_by_chi1(g):
    R = ring(("a", "b"), QZ5)
    M = chi1(g)
    for f in (disc_D(), inv_c4()):
        lift = f.map_coeffs(QZ5.coerce, R)
        assert apply_chi(M, lift) == lift


def test_invariant_records():
    rec = discrete_invariants(1, 2)
    assert rec.D == -2750
    assert rec.Delta == rec.D**5
    nod = u1_invariants((0, 1, 1, 1, 1))
    assert (nod.c4, nod.c6, nod.singular) == (1, -1, True)


def test_monomial_character_of_w0():
    assert monomial_character(W, (1, 0, 0, 0, 0)) == tuple(int(i == 0) for i in range(5))


# -- quintics ---------------------------------------------------------------
def test_jacobian_determinant_normalisation():
    det = qm.jacobian_determinant()
    assert det * 25 == builtin("S10b").poly
    assert det == builtin("S10").poly * -2


def test_tangent_line_degrees():
    assert qm.tangent_line_degrees() == {"S10b": None, "S20": None, "S30": 0, "S30'": None, "S40": 2, "S50": 4}


def test_span_memberships():
    sing = qm.singular_span_membership()
    assert [n for n in qm.BASIS_NAMES if sing[n]] == ["S10b", "S20", "S30"]
    ideal = qm.ideal_span_membership()
    assert [n for n in qm.BASIS_NAMES if ideal[n]] == ["S10b", "S20", "S30", "S30'", "S40"]
    r = sing["S20"]
    assert r.denominator and len(r.numerators) == 3


def test_orbit_coordinates_reject_non_invariant():
    R = ring(("a", "b") + W)
    with pytest.raises(ValueError):
        qm.orbit_coordinates(R.gen("w0") ** 5)


def test_independence_ranks():
    assert qm.independence_rank_hesse(1, 2) == 6
    assert qm.independence_rank_nodal() == 6


def test_only_s50_survives_on_nodal_curve():
    res = qm.nodal_restrictions()
    assert [n for n, f in res.items() if f] == ["S50"]


def test_zeta_power_wraps():
    assert zeta_power(5) == zeta_power(0)
