"""Computational checks on the Heisenberg invariant quintics.

An H5-invariant quintic in w is determined by six orbit coefficients
(the coefficients of the representatives in :data:`ORBIT_REPS`).  Span
questions over Q(a, b) are decided with exact determinants of those
coordinate matrices, and explicit solutions come from Cramer's rule and
are verified by substitution.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..algebra import QQ, Poly, PolyMatrix, determinant, rank, ring
from ..alphabets import W
from ..models import hesse_model, nodal_parametrization, pfaffians
from .catalogue import builtin
from .engine import extend_to_u1
from .spaces import orbit_sum

ORBIT_REPS = (
    (5, 0, 0, 0, 0),
    (3, 1, 0, 0, 1),
    (1, 2, 0, 0, 2),
    (1, 0, 2, 2, 0),
    (3, 0, 1, 1, 0),
    (1, 1, 1, 1, 1),
)

BASIS_NAMES = ("S10b", "S20", "S30", "S30'", "S40", "S50")


def _ring():
    return ring(("a", "b") + W, QQ)


def basis_quintics() -> dict:
    R = _ring()
    return {n: builtin(n).poly.embed(R) for n in BASIS_NAMES}


def orbit_coordinates(f: Poly) -> list:
    """The six orbit coefficients of an invariant quintic (Polys in a, b).

    Raises ValueError if ``f`` is not the corresponding combination of
    orbit sums.
    """
    R = f.ring
    parts = f.collect(W)
    coords = [parts.get(e, R.zero()) for e in ORBIT_REPS]
    rebuilt = R.zero()
    for e, c in zip(ORBIT_REPS, coords):
        rebuilt = rebuilt + c * orbit_sum(R.monomial(dict(zip(W, e))))
    if rebuilt != f:
        raise ValueError("not an H5-invariant quintic")
    return coords


# -- (i) Jacobian determinant -------------------------------------------
def jacobian_determinant(a="a", b="b") -> Poly:
    """det(d p_i / d w_j) for the quadrics of u(a, b)."""
    p = pfaffians(hesse_model(a, b))
    R = p.ring
    return determinant(PolyMatrix(R, [[p[i].diff(W[j]) for j in range(5)] for i in range(5)]))


# -- (ii) tangent line ----------------------------------------------------
def flex_tangent_points(R=None):
    """P = (0, a, b, -b, -a) and the second point Q of its tangent line."""
    R = R or ring(("a", "b", "x"), QQ)
    a, b = R.gens("a", "b")
    P = [R.zero(), a, b, -b, -a]
    Q = [5 * a**3 * b**3, R.zero(), -b * (2 * a**5 - b**5), -b * (a**5 + 2 * b**5), a * (a**5 - 3 * b**5)]
    return P, Q


def on_tangent_line(f: Poly) -> Poly:
    """f(x P + Q) as a polynomial in a, b and the line parameter x."""
    R = ring(("a", "b", "x"), QQ)
    P, Q = flex_tangent_points(R)
    x = R.gen("x")
    sub = {W[i]: x * P[i] + Q[i] for i in range(5)}
    return f.subs(sub, target=R, partial=True)


def tangent_line_degrees() -> dict:
    """x-degree of each basis quintic on the tangent line (None if it vanishes)."""
    out = {}
    for n, f in basis_quintics().items():
        g = on_tangent_line(f)
        out[n] = g.degree_in(("x",)) if g else None
    return out


# -- (iii), (iv) span membership ---------------------------------------
def _cyclic(R, fn) -> Poly:
    return sum((fn(i) for i in range(5)), R.zero())


def singular_generators() -> list:
    """sum p0^2 w0, sum p1 p4 w0, sum p2 p3 w0."""
    p = pfaffians(hesse_model())
    R = p.ring
    w = R.gens(*W)
    return [
        _cyclic(R, lambda i: p[i] ** 2 * w[i]),
        _cyclic(R, lambda i: p[(i + 1) % 5] * p[(i + 4) % 5] * w[i]),
        _cyclic(R, lambda i: p[(i + 2) % 5] * p[(i + 3) % 5] * w[i]),
    ]


def ideal_generators() -> list:
    """The five invariant quintics sum p0 * (cubic) in the curve's ideal."""
    p = pfaffians(hesse_model())
    R = p.ring
    w = R.gens(*W)

    def s(i, k):
        return w[(i + k) % 5]

    return [
        _cyclic(R, lambda i: p[i] * s(i, 0) ** 3),
        _cyclic(R, lambda i: p[i] * s(i, 0) * s(i, 1) * s(i, 4)),
        _cyclic(R, lambda i: p[i] * s(i, 0) * s(i, 2) * s(i, 3)),
        _cyclic(R, lambda i: p[i] * (s(i, 1) ** 2 * s(i, 3) + s(i, 2) * s(i, 4) ** 2)),
        _cyclic(R, lambda i: p[i] * (s(i, 1) * s(i, 2) ** 2 + s(i, 3) ** 2 * s(i, 4))),
    ]


@dataclass(frozen=True)
class SpanResult:
    member: bool
    denominator: Poly | None  # d with d * f = sum c_k g_k
    numerators: tuple | None  # the c_k

    def __bool__(self):
        return self.member


def _coord_matrix(forms, R):
    return [[c.embed(R) for c in orbit_coordinates(f.embed(R))] for f in forms]


def _minor(cols, rows, R) -> Poly:
    # cols: list of coordinate vectors, rows: chosen coordinate indices
    return determinant(PolyMatrix(R, [[v[r] for v in cols] for r in rows]))


def in_span(f: Poly, gens: list) -> SpanResult:
    """Is ``f`` in the Q(a, b)-span of ``gens``?  Exact, via minors."""
    R = _ring()
    G = _coord_matrix(gens, R)
    (F,) = _coord_matrix([f], R)
    n = len(G)
    base_rows = None
    base = None
    for rows in combinations(range(6), n):
        d = _minor(G, rows, R)
        if d:
            base_rows, base = rows, d
            break
    if base is None:
        raise ValueError("generators are dependent")
    nums = []
    for k in range(n):
        cols = list(G)
        cols[k] = F
        nums.append(_minor(cols, base_rows, R))
    lhs = f.embed(R) * base
    rhs = R.zero()
    for c, g in zip(nums, gens):
        rhs = rhs + c * g.embed(R)
    if lhs != rhs:
        return SpanResult(False, None, None)
    return SpanResult(True, base, tuple(nums))


def singular_span_membership() -> dict:
    gens = singular_generators()
    qs = basis_quintics()
    return {n: in_span(qs[n], gens) for n in BASIS_NAMES}


def ideal_span_membership() -> dict:
    gens = ideal_generators()
    qs = basis_quintics()
    return {n: in_span(qs[n], gens) for n in BASIS_NAMES}


# -- independence -------------------------------------------------------
def _all_quintic_monomials():
    out = []

    def rec(prefix, left, k):
        if k == 4:
            out.append(tuple(prefix + [left]))
            return
        for e in range(left, -1, -1):
            rec(prefix + [e], left - e, k + 1)

    rec([], 5, 0)
    return out


def coefficient_rows(forms, names=W) -> list:
    """Numeric coefficient vectors over all 126 quintic monomials."""
    monos = _all_quintic_monomials()
    rows = []
    for f in forms:
        parts = f.collect(names)
        row = []
        for m in monos:
            c = parts.get(m)
            if c is None:
                row.append(QQ.zero)
            elif not c.is_constant():
                raise ValueError("form has non-numeric coefficients")
            else:
                row.append(c.constant_value())
        rows.append(row)
    return rows


def independence_rank_hesse(a=1, b=2) -> int:
    forms = [f.subs({"a": a, "b": b}, partial=True) for f in basis_quintics().values()]
    return rank(coefficient_rows(forms), QQ)


def nodal_extensions(lams=(0, 1, 1, 1, 1)) -> dict:
    out = {}
    for n in BASIS_NAMES:
        r = extend_to_u1(builtin(n))
        if not r:
            raise ValueError(f"{n} has no u1 extension")
        out[n] = r.at(lams)
    return out


def independence_rank_nodal(lams=(0, 1, 1, 1, 1)) -> int:
    return rank(coefficient_rows(list(nodal_extensions(lams).values())), QQ)


def nodal_restrictions() -> dict:
    """Each basis quintic at u1(0,1,1,1,1) pulled back along the nodal curve."""
    R = ring(("s", "t"), QQ)
    pt = nodal_parametrization(R)
    out = {}
    for n, f in nodal_extensions().items():
        out[n] = f.subs(dict(zip(W, pt)), target=R, partial=True)
    return out
