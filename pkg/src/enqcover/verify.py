"""Named groups of exact identity checks.

Each check compares two polynomials (or values) exactly and, on failure,
records the leading monomial of the difference.  Randomised checks draw
from ``random.Random(seed)`` so a run is reproducible from its seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import QQ, QZ5, Poly, join_rings, mat_mul, ring
from .alphabets import LAMBDA, W


class SuiteError(KeyError):
    pass


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    counterexample: str | None = None


@dataclass
class Report:
    suite: str
    seed: int
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __bool__(self):
        return self.ok

    def lines(self) -> list:
        out = []
        for c in self.checks:
            tail = f"  first difference: {c.counterexample}" if c.counterexample else ""
            out.append(f"{'PASS' if c.ok else 'FAIL'} {self.suite}: {c.name}{tail}")
        return out


def _leading(p: Poly) -> str:
    exps, c = max(p.term_list())
    return str(p.ring.monomial(exps, c))


def identity(name: str, lhs, rhs) -> Check:
    if isinstance(lhs, Poly) or isinstance(rhs, Poly):
        rings = [x.ring for x in (lhs, rhs) if isinstance(x, Poly)]
        R = join_rings(*rings)
        diff = R(lhs) - R(rhs)
        return Check(name, not diff, None if not diff else _leading(diff))
    ok = lhs == rhs
    return Check(name, ok, None if ok else f"{lhs} != {rhs}")


def truth(name: str, ok: bool, detail: str | None = None) -> Check:
    return Check(name, bool(ok), None if ok else (detail or "false"))


# -- suites ----------------------------------------------------------------
def _pfaffians(rng) -> list:
    from .models import hesse_model, kernel_identity, pfaffians, u1_model

    out = []
    q = pfaffians(u1_model())
    R = q.ring
    w = R.gens(*W)
    lam = R.gens(*LAMBDA)
    for i in range(5):
        j = lambda k: (i + k) % 5  # noqa: E731
        want = lam[i] * w[i] ** 2 + w[j(1)] * w[j(4)] - lam[j(2)] * lam[j(3)] * w[j(2)] * w[j(3)]
        out.append(identity(f"u1 Pfaffian p{i}", q[i], want))
    h = pfaffians(hesse_model())
    R = h.ring
    w = R.gens(*W)
    a, b = R.gens("a", "b")
    for i in range(5):
        want = a * b * w[i] ** 2 + b**2 * w[(i + 1) % 5] * w[(i + 4) % 5] - a**2 * w[(i + 2) % 5] * w[(i + 3) % 5]
        out.append(identity(f"Hesse Pfaffian p{i}", h[i], want))
    for fam, m in (("Hesse", hesse_model()), ("u1", u1_model())):
        cubic = kernel_identity(m)
        out.append(truth(f"{fam} model annihilates its Pfaffian vector", not any(cubic)))
    return out


def _invariants(rng) -> list:
    from .covariants.chi import apply_chi, chi1
    from .covariants.invariants import disc_D, inv_c4, inv_c6

    D, c4, c6 = disc_D(), inv_c4(), inv_c6()
    out = [identity("c4^3 - c6^2 = 1728 D^5", c4**3 - c6**2, D**5 * 1728)]
    a4, a6 = c4 * -27, c6 * -54
    out.append(identity("cubic discriminant = 6^12 D^5", (a4**3 * 4 + a6**2 * 27) * -16, D**5 * 6**12))
    R = ring(("a", "b"), QZ5)
    lift = {n: f.map_coeffs(QZ5.coerce, R) for n, f in (("D", D), ("c4", c4), ("c6", c6))}
    for g in ("S", "T"):
        M = chi1(g)
        for n in ("D", "c4", "c6"):
            out.append(identity(f"{n} fixed by chi1({g})", apply_chi(M, lift[n]), lift[n]))
    return out


EXPECT_COVARIANT = ("c4", "c6", "S10", "S10b", "S20", "S30", "S30'", "S40", "S50", "U", "H", "Q6", "T30", "F30", "G30", "P2")  # fmt: skip
EXPECT_NOT = ("D", "F10", "G10", "F20", "G20")


def _engine(rng) -> list:
    from .covariants.catalogue import builtin
    from .covariants.engine import covariance_test, extend_to_u1, round_trip
    from .covariants.tables import check_all

    out = []
    rows = check_all()
    bad = [r for r in rows if not r.ok]
    out.append(truth(f"all {len(rows)} substitution table rows reproduced", not bad, bad and str(bad[0].row)))
    for n in EXPECT_COVARIANT:
        out.append(truth(f"covariance_test({n}) is true", covariance_test(builtin(n))))
    for n in EXPECT_NOT:
        out.append(truth(f"covariance_test({n}) is false", not covariance_test(builtin(n))))
    for n in EXPECT_COVARIANT:
        f = builtin(n)
        out.append(truth(f"{n}: u1 extension at (a,...,a) is f(a, 1)", round_trip(f, extend_to_u1(f))))
    return out


def _quintics(rng) -> list:
    from .covariants import quintics as qm
    from .covariants.catalogue import builtin

    out = []
    det = qm.jacobian_determinant()
    out.append(identity("25 det(dp_i/dw_j) = S10 (basis normalisation F10 - G10)", det * 25, builtin("S10b").poly))
    degs = qm.tangent_line_degrees()
    want = {"S10b": None, "S20": None, "S30'": None, "S30": 0, "S40": 2, "S50": 4}
    for n, d in want.items():
        out.append(identity(f"{n} on the flex tangent line has degree {d}", degs[n], d))
    sing = qm.singular_span_membership()
    for n in ("S10b", "S20", "S30"):
        out.append(truth(f"{n} in the span of the singular-locus quintics", sing[n]))
    ideal = qm.ideal_span_membership()
    for n in ("S10b", "S20", "S30", "S30'", "S40"):
        out.append(truth(f"{n} in the span of the ideal quintics", ideal[n]))
    out.append(identity("rank of the six quintics at (1, 2)", qm.independence_rank_hesse(1, 2), 6))
    return out


def _zxy(rng) -> list:
    from .covariants.catalogue import builtin
    from .covariants.invariants import inv_c4, inv_c6
    from .covering import covering_data_hesse, covering_data_u1, flex_reference, nodal_reference, zxy
    from .models import nodal_parametrization

    out = []
    R = ring(("s", "t"), QQ)
    at = dict(zip(W, nodal_parametrization(R)))
    got = zxy(covering_data_u1((0, 1, 1, 1, 1)), at=at)
    for n, g, want in zip("ZXY", got, nodal_reference(R)):
        out.append(identity(f"{n} on the nodal parametrisation", g, want))
    Rf = ring(("a", "b"), QQ)
    a, b = Rf.gens("a", "b")
    flex = {W[0]: 0, W[1]: a, W[2]: b, W[3]: -b, W[4]: -a}
    got = zxy(covering_data_hesse(), at=flex)
    for n, g, want in zip("ZXY", got, flex_reference(Rf)):
        out.append(identity(f"{n} at the flex (0, a, b, -b, -a)", g, want))
    Z = zxy(covering_data_hesse(), which=("Z",)).Z
    c4, c6 = inv_c4().embed(Z.ring), inv_c6().embed(Z.ring)
    S = {n: builtin(n).poly.embed(Z.ring) for n in ("S10b", "S20", "S30", "S30'", "S50")}
    rhs = (
        c4**2 * S["S10b"] * Fraction(39, 10)
        + c6 * S["S20"] * 4
        - c4 * S["S30"] * 54
        - c4 * S["S30'"] * Fraction(198, 5)
        + S["S50"] * 12
    )
    out.append(identity("Z in the quintic basis", Z, rhs))
    out.append(identity("rank of X^3, XYZ, X^2Z^2, YZ^3, XZ^4, Z^6 on the nodal curve", nodal_monomial_rank(), 6))
    return out


def nodal_monomial_rank() -> int:
    from .algebra import rank
    from .covering import covering_data_u1, zxy
    from .models import nodal_parametrization

    R = ring(("s", "t"), QQ)
    at = dict(zip(W, nodal_parametrization(R)))
    Z, X, Y = zxy(covering_data_u1((0, 1, 1, 1, 1)), at=at)
    forms = [X**3, X * Y * Z, X**2 * Z**2, Y * Z**3, X * Z**4, Z**6]
    monos = sorted({e for f in forms for e, _ in f.term_list()})
    rows = [[f.coeff(e) for e in monos] for f in forms]
    return rank(rows, QQ)


def _random_unimodular(rng, steps=6):
    m = [[int(i == j) for j in range(5)] for i in range(5)]
    for _ in range(steps):
        i, j = rng.sample(range(5), 2)
        e = [[int(r == c) for c in range(5)] for r in range(5)]
        e[i][j] = rng.choice((-2, -1, 1, 2))
        m = mat_mul(m, e, QQ)
    return m


def _map(rng) -> list:
    from .covering import covering_data_hesse, covering_data_u1, transport, zxy
    from .finite import end_to_end
    from .models import TransformPair, nodal_parametrization, w_substitution

    out = []
    R = ring(("s", "t"), QQ)
    at = dict(zip(W, nodal_parametrization(R)))
    Z, X, Y = zxy(covering_data_u1((0, 1, 1, 1, 1)), at=at)
    out.append(identity("nodal: Y^2 = X^3 - 27 X Z^4 + 54 Z^6", Y**2, X**3 - X * Z**4 * 27 + Z**6 * 54))
    base = covering_data_hesse(1, 2)
    T = zxy(base)
    g = TransformPair(_random_unimodular(rng), _random_unimodular(rng))
    T2 = zxy(transport(base, g))
    sub = w_substitution(g.gW, T.Z.ring)
    for n, f, f2 in zip("ZXY", T, T2):
        out.append(identity(f"{n} is unimodular-equivariant at u(1, 2)", f2, f.subs(sub, target=f.ring, partial=True)))
    for a, b, p in ((1, 2, 31), (1, 1, 41)):
        r = end_to_end(a, b, p)
        ok = r.maps_onto_curve and r.flexes_to_infinity and r.translates_agree and r.in_hasse_window
        out.append(truth(f"u({a},{b}) over F_{p}: onto the Jacobian, flexes, translates, Hasse", ok, r.summary()))
        out.append(truth(f"u({a},{b}) over F_{p}: fibers on rational points are Heisenberg orbits", r.fibers_are_orbits))
    return out


def random_nonsingular_ab(rng, count=3, bound=9) -> list:
    from .covariants.invariants import disc_D

    D = disc_D()
    out = []
    while len(out) < count:
        a = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        b = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if D.evaluate({"a": QQ.coerce(a), "b": QQ.coerce(b)}):
            out.append((a, b))
    return out


def _derivative(rng) -> list:
    from .covariants.invariants import disc_D
    from .models import derivative_determinant

    out = []
    D = disc_D()
    for a, b in random_nonsingular_ab(rng):
        d = D.evaluate({"a": QQ.coerce(a), "b": QQ.coerce(b)})
        out.append(identity(f"derivative determinant at ({a}, {b})", derivative_determinant(a, b), 5**4 * d**4))
    return out


SUITES = {
    "pfaffians": _pfaffians,
    "invariants": _invariants,
    "engine": _engine,
    "quintics": _quintics,
    "zxy": _zxy,
    "map": _map,
    "derivative": _derivative,
}
SUITE_NAMES = tuple(SUITES) + ("all",)


def verify_suite(name: str, seed: int = 0) -> Report:
    if name not in SUITE_NAMES:
        raise SuiteError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    names = tuple(SUITES) if name == "all" else (name,)
    rep = Report(name, seed)
    for n in names:
        rng = random.Random(f"{seed}:{n}")
        sub = SUITES[n](rng)
        if name == "all":
            sub = [Check(f"{n}: {c.name}", c.ok, c.counterexample) for c in sub]
        rep.checks.extend(sub)
    return rep
