import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from enqcover.algebra import GF, QQ, QZ5, mat_inv, mat_mul, ring, zeta_power
from enqcover.alphabets import W
from enqcover.models import (
    ModelError,
    TransformPair,
    derivative_determinant,
    diagonal_pair,
    extended_generators,
    heisenberg_generators,
    heisenberg_pair,
    hesse_model,
    kernel_identity,
    nodal_parametrization,
    nodal_point,
    pfaffians,
    torus_lambda_action,
    transform,
    u1_model,
)

nonzero = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(lambda x: x != 0)


def random_matrix(rng, lo=-2, hi=2):
    while True:
        m = [[rng.randint(lo, hi) for _ in range(5)] for _ in range(5)]
        try:
            TransformPair(m, m)
            return m
        except Exception:
            continue


def test_hesse_pfaffians():
    q = pfaffians(hesse_model())
    R = q.ring
    w = R.gens(*W)
    a, b = R.gens("a", "b")
    for i in range(5):
        want = a * b * w[i] ** 2 + b**2 * w[(i + 1) % 5] * w[(i + 4) % 5] - a**2 * w[(i + 2) % 5] * w[(i + 3) % 5]
        assert q[i] == want


@pytest.mark.parametrize("m", [hesse_model(), u1_model()])
def test_kernel_identity_symbolic(m):
    assert not any(kernel_identity(m))


def test_kernel_identity_after_transform():
    rng = random.Random(5)
    g = TransformPair(random_matrix(rng), random_matrix(rng))
    m = transform(hesse_model(1, 3), g)
    assert not any(kernel_identity(m))


def test_transform_is_a_left_action():
    rng = random.Random(7)
    g = TransformPair(random_matrix(rng), random_matrix(rng))
    h = TransformPair(random_matrix(rng), random_matrix(rng))
    m = hesse_model(2, -1)
    assert transform(transform(m, h), g) == transform(m, g @ h)


@settings(max_examples=15, deadline=None)
@given(st.tuples(*[nonzero] * 5), st.tuples(*[nonzero] * 5))
def test_diagonal_action_on_u1(alphas, lams):
    got = transform(u1_model(lams), diagonal_pair(alphas))
    scale = Fraction(1)
    for x in alphas:
        scale *= x
    assert got == u1_model(tuple(torus_lambda_action(alphas, lams))).scale(scale)


@pytest.mark.parametrize("dom", [QZ5, GF(11), GF(31)])
def test_hesse_model_is_heisenberg_invariant(dom):
    m = hesse_model(1, 2, domain=dom)
    for x in range(5):
        for y in range(5):
            assert transform(m, heisenberg_pair(x, y, dom)) == m


def test_heisenberg_commutator_is_zeta():
    s, t = heisenberg_generators("W", QZ5)
    c = mat_mul(mat_mul(s, t, QZ5), mat_mul(mat_inv(s, QZ5), mat_inv(t, QZ5), QZ5), QZ5)
    z = QZ5.zeta5()
    assert all(c[i][j] == (z if i == j else QZ5.zero) for i in range(5) for j in range(5))


@pytest.mark.parametrize("space", ["V", "W"])
def test_extended_generator_S_squares_to_inversion(space):
    S, T = extended_generators(QZ5, space)
    S2 = mat_mul(S, S, QZ5)
    for i in range(5):
        for j in range(5):
            assert S2[i][j] == (zeta_power(0) if j == (-i) % 5 else QZ5.zero)


def test_nodal_parametrisation_lies_on_curve():
    R = ring(("s", "t"))
    pt = dict(zip(W, nodal_parametrization(R)))
    for q in pfaffians(u1_model((0, 1, 1, 1, 1))):
        assert not q.subs(pt, target=R, partial=True)


def test_nodal_point_rejects_origin():
    with pytest.raises(ModelError):
        nodal_point(0, 0)


@pytest.mark.parametrize("a,b", [(1, 2), (Fraction(3, 2), -1), (2, 7)])
def test_derivative_determinant(a, b):
    D = QQ.coerce(a) * b * (QQ.coerce(a) ** 10 - 11 * QQ.coerce(a) ** 5 * b**5 - QQ.coerce(b) ** 10)
    assert derivative_determinant(a, b) == 5**4 * D**4
    assert derivative_determinant(a, b, "lex") == -(5**4) * D**4


def test_derivative_determinant_vanishes_on_singular_models():
    assert derivative_determinant(1, 0) == 0
