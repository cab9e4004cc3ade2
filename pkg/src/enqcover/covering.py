"""The covariants Z, X, Y of orders 5, 10, 15 and their ingredients.

Starting from a model U together with the values of the covariants H
(in the model space) and Q6 (in S^2 V (x) W) at U, we form

* the polarised Pfaffians P2 = P2(U), P22 = P2(H) and
  P12 = (P2(U + H) - P2 - P22) / 2,
* M30 = det(d q_k / d v_j), a quintic in v, where Q6 = sum_k q_k(v) w_k,
* N30 = coefficient of t in det Hess_w(sum_i vs_i (p_i + t r_i)), a
  quintic in vs, for P2 = (p_i) and P22 = (r_i),
* T23 = U . P22 and T28 = Hess_v(Q6) . P22, five cubics each,

and then

    Z = Q6(P22, P22) / 2          (Q6(x, x) = 2 sum_k w_k q_k(x))
    X = (27/64) * K_X * [l^3 m^2] M30(l P12 + m P22)
    Y = (27/256) * K_Y * [l m^4] N30(l T23 + m T28)

where [.] is the raw coefficient (no multinomial division) and K_X, K_Y
are the fixed normalisation constants below.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .algebra import QQ, Domain, Poly, PolyMatrix, PolyRing, determinant, join_rings, ring
from .alphabets import LAMBDA, V, VS, W
from .covariants.catalogue import builtin
from .covariants.engine import extend_to_u1
from .covariants.invariants import disc_D
from .covariants.spaces import rho
from .models import GenusOneModel, QuadricSystem, TransformPair, hesse_model, pfaffians, transform, u1_model

# normalisation constants for the raw-coefficient contraction convention
K_X = Fraction(-64)
K_Y = Fraction(-16)
X_PREFACTOR = Fraction(27, 64)
Y_PREFACTOR = Fraction(27, 256)
Z_PREFACTOR = Fraction(1, 2)

WEIGHTS = {"U": (0, 0), "H": (4, 2), "Q6": (2, 1), "Z": (20, 9), "X": (44, 20), "Y": (66, 30)}
DEGREES = {"U": 1, "H": 11, "Q6": 6, "Z": 50, "X": 110, "Y": 165}
ORDERS = {"Z": 5, "X": 10, "Y": 15}


class CoveringError(ValueError):
    pass


def _params(xs) -> tuple:
    out = []
    for x in xs:
        if isinstance(x, str) and x not in out:
            out.append(x)
    return tuple(out)


def _work_ring(params, domain: Domain = QQ) -> PolyRing:
    return ring(tuple(params) + W + V, domain)


@dataclass(frozen=True)
class CoveringData:
    """The ingredient triple (U, H, Q6) at one model.

    ``Q6`` is the polynomial sum_k q_k(v) w_k.  ``ledger`` holds the
    accumulated (det gV, det gW) of transports applied so far.
    """

    U: GenusOneModel
    H: GenusOneModel
    Q6: Poly
    provenance: str
    ledger: tuple = field(default=(1, 1))

    @property
    def ring(self) -> PolyRing:
        return self.Q6.ring

    @property
    def domain(self) -> Domain:
        return self.ring.domain

    def q(self, k: int) -> Poly:
        """The quadric in v multiplying w_k."""
        return self.Q6.diff(W[k])

    @property
    def weight_scale(self):
        """u = detV^2 detW: x scales by u^2 and y by u^3 under the ledger."""
        dv, dw = self.ledger
        return self.domain.reduce(dv * dv * dw)


def _as_model(m: GenusOneModel, R: PolyRing) -> GenusOneModel:
    return m.embed(R)


def covering_data_hesse(a="a", b="b") -> CoveringData:
    params = _params((a, b))
    R = _work_ring(params)
    ab = ring(("a", "b"), QQ)
    sub = {}
    for name, val in (("a", a), ("b", b)):
        sub[name] = R.gen(val) if isinstance(val, str) else val
    D = disc_D(ab)
    hA = (-D.diff("b")).subs(sub, target=R)
    hB = D.diff("a").subs(sub, target=R)
    U = _as_model(hesse_model(a, b), R)
    H = _as_model(hesse_model(hA, hB), R)
    q6 = builtin("Q6").poly
    Q = q6.subs(sub, target=R, partial=True)
    return CoveringData(U, H, Q, "hesse")


def _wedge_to_model(p: Poly, R: PolyRing) -> GenusOneModel:
    """sum V{i}{j} * (linear form in w) -> model with those entries."""
    parts = {}
    names = p.ring.names
    for (i, j) in ((i, j) for i in range(5) for j in range(i + 1, 5)):
        name = f"V{i}{j}"
        if name not in names:
            continue
        parts[(i, j)] = p.diff(name).embed(R)
    return GenusOneModel(R, parts)


def covering_data_u1(lams=None) -> CoveringData:
    if lams is None:
        lams = LAMBDA
    lams = tuple(lams)
    params = _params(lams)
    R = _work_ring(params)
    hv = extend_to_u1(builtin("H"))
    qv = extend_to_u1(builtin("Q6"))
    if not hv or not qv:
        raise CoveringError("engine failed on H or Q6")
    sub = {}
    for name, val in zip(LAMBDA, lams):
        if val != name:
            sub[name] = val
    B = ring(params, QQ) if params else None

    def specialise(f: Poly) -> Poly:
        T = join_rings(f.ring, B) if B is not None else f.ring
        vals = {k: (T.gen(v) if isinstance(v, str) else v) for k, v in sub.items()}
        return f.embed(T).subs(vals, target=T, partial=True) if vals else f

    Hp = specialise(hv.poly)
    Qp = specialise(qv.poly)
    H = _wedge_to_model(Hp, R)
    Q = Qp.embed(R)
    U = _as_model(u1_model(lams), R)
    return CoveringData(U, H, Q, "u1")


def _rho_Q6(Q: Poly, g: TransformPair) -> Poly:
    return rho(Q, g.gV, g.gW)


def transport(data: CoveringData, g: TransformPair) -> CoveringData:
    """Values at g U, with the determinant twists of H and Q6 applied."""
    dom = data.domain
    if g.domain != dom:
        g = g.over(dom)
    dv, dw = g.detV, g.detW
    U = transform(data.U, g)
    sH = dom.reduce(dv**4 * dw**2)
    sQ = dom.reduce(dv**2 * dw)
    H = transform(data.H, g).scale(sH)
    Q = _rho_Q6(data.Q6, g) * sQ
    lv, lw = data.ledger
    return CoveringData(U, H, Q, "transported", (dom.reduce(lv * dv), dom.reduce(lw * dw)))


# -- polarised Pfaffians ------------------------------------------------
@dataclass(frozen=True)
class PolarizedPfaffians:
    P2: QuadricSystem
    P12: QuadricSystem
    P22: QuadricSystem


def polarized_pfaffians(data: CoveringData) -> PolarizedPfaffians:
    P2 = pfaffians(data.U)
    P22 = pfaffians(data.H)
    mixed = pfaffians(data.U + data.H)
    P12 = (mixed - P2 - P22).scale(Fraction(1, 2))
    return PolarizedPfaffians(P2, P12, P22)


# -- determinant constructions ------------------------------------------
def m30(data: CoveringData, reading: str = "jacobian") -> Poly:
    """Determinant construction on Q6.

    ``jacobian``: det(d q_k / d v_j), a quintic in v (the reading used for X).
    ``net``: det of the Hessian in v of Q6, a quintic in w.
    """
    R = data.ring
    if reading == "jacobian":
        rows = [[data.q(k).diff(V[j]) for j in range(5)] for k in range(5)]
    elif reading == "net":
        rows = [[data.Q6.diff(V[i]).diff(V[j]) for j in range(5)] for i in range(5)]
    else:
        raise CoveringError(f"unknown M30 reading {reading!r}")
    return determinant(PolyMatrix(R, rows))


def _net_hessian(system: QuadricSystem, R: PolyRing):
    net = R.zero()
    for i in range(5):
        net = net + R.gen(VS[i]) * system[i].embed(R)
    return [[net.diff(W[j]).diff(W[k]) for k in range(5)] for j in range(5)]


def n30(P2: QuadricSystem, P22: QuadricSystem) -> Poly:
    """Coefficient of t in det Hess_w(sum vs_i (p_i + t r_i)), a quintic in vs."""
    R = join_rings(P2.ring, P22.ring, ring(VS, P2.ring.domain))
    A = _net_hessian(P2, R)
    B = _net_hessian(P22, R)
    out = R.zero()
    for r in range(5):
        rows = [B[i] if i == r else A[i] for i in range(5)]
        out = out + determinant(PolyMatrix(R, rows))
    return out


def net_determinant(P2: QuadricSystem) -> Poly:
    R = join_rings(P2.ring, ring(VS, P2.ring.domain))
    return determinant(PolyMatrix(R, _net_hessian(P2, R)))


# -- contractions -------------------------------------------------------
def t_contract(A, r: QuadricSystem) -> list:
    """Five cubics: sum_j A_ij r_j.

    A is either a model (A_ij its matrix entries) or a Q6 value given as a
    Poly sum_k q_k(v) w_k (A_ij = d^2 Q6 / dv_i dv_j).
    """
    if isinstance(A, GenusOneModel):
        R = join_rings(A.ring, r.ring)
        return [sum((A.entry(i, j).embed(R) * r[j].embed(R) for j in range(5)), R.zero()) for i in range(5)]
    if isinstance(A, Poly):
        R = join_rings(A.ring, r.ring)
        Q = A.embed(R)
        return [
            sum((Q.diff(V[i]).diff(V[j]) * r[j].embed(R) for j in range(5)), R.zero()) for i in range(5)
        ]
    raise CoveringError("t_contract needs a model or a Q6 polynomial")


def mixed_substitute(F: Poly, names, part1, part2, mult) -> Poly:
    """Raw coefficient of l^m1 m^m2 in F(l * part1 + m * part2).

    ``names`` are the five variables of F being substituted; part1, part2
    are sequences of five Polys in a common ring.
    """
    m1, m2 = mult
    degs = F.degrees_in(names) if F else {m1 + m2}
    if degs != {m1 + m2} or m1 < 0 or m2 < 0:
        raise CoveringError("multiplicities do not match the degree of F")
    R = join_rings(*(p.ring for p in part1), *(p.ring for p in part2))
    A = [p.embed(R) for p in part1]
    B = [p.embed(R) for p in part2]
    idx = [F.ring.index(v) for v in names]
    used = set(F.variables())
    rest_names = [v for v in F.ring.names if v not in names and v in used]
    T = join_rings(R, ring(tuple(rest_names), R.domain)) if rest_names else R
    A = [p.embed(T) for p in A]
    B = [p.embed(T) for p in B]
    powA = [[T.one()] for _ in range(5)]
    powB = [[T.one()] for _ in range(5)]

    def pw(cache, base, e):
        while len(cache) <= e:
            cache.append(cache[-1] * base)
        return cache[e]

    if m1 == 1:
        # [l m^4] F(l A + m B) = sum_i A_i (dF/dx_i)(B)
        sub = {v: b for v, b in zip(names, B)}
        out = T.zero()
        for v, a in zip(names, A):
            d = F.diff(v)
            if d:
                out = out + a * d.subs(sub, target=T, partial=True)
        return out
    out = T.zero()
    for exps, c in F.term_list():
        e = [exps[i] for i in idx]
        coef_mono = [0] * F.ring.n
        for i, x in enumerate(exps):
            if i not in idx:
                coef_mono[i] = x
        cpoly = F.ring.monomial(tuple(coef_mono), c).embed(T)
        # distribute m1 factors of part1 over the five slots
        for ks in _compositions(m1, e):
            term = cpoly
            for i in range(5):
                k = ks[i]
                mult_c = comb(e[i], k)
                if k:
                    term = term * pw(powA[i], A[i], k)
                if e[i] - k:
                    term = term * pw(powB[i], B[i], e[i] - k)
                if mult_c != 1:
                    term = term * mult_c
            out = out + term
    return out


def _compositions(total, caps):
    """Tuples k with 0 <= k_i <= caps_i and sum k = total."""
    out = []

    def rec(i, left, acc):
        if i == len(caps):
            if left == 0:
                out.append(tuple(acc))
            return
        for k in range(min(left, caps[i]) + 1):
            rec(i + 1, left - k, acc + [k])

    rec(0, total, [])
    return out


# -- Z, X, Y ------------------------------------------------------------
@dataclass(frozen=True)
class CoveringTriple:
    Z: Poly
    X: Poly
    Y: Poly
    provenance: str = ""
    ledger: tuple = (1, 1)

    weights = {k: WEIGHTS[k] for k in ("Z", "X", "Y")}
    degrees = {k: DEGREES[k] for k in ("Z", "X", "Y")}
    orders = ORDERS

    def __iter__(self):
        return iter((self.Z, self.X, self.Y))

    def evaluate(self, point) -> tuple:
        vals = dict(zip(W, point))
        return tuple(f.subs(vals, partial=True) for f in self)


def _subs_systems(systems, at, target):
    return [[f.subs(at, target=target, partial=True) for f in s] for s in systems]


def zxy(data: CoveringData, at: dict | None = None, which=("Z", "X", "Y")) -> CoveringTriple:
    """Z, X, Y of ``data``.

    With ``at`` (an assignment w_i -> Polys or scalars) the forms are
    returned already evaluated there; this is much cheaper than
    evaluating the symbolic forms afterwards.
    """
    pp = polarized_pfaffians(data)
    R = data.ring
    tgt = R
    if at is not None:
        tgt = None
        for v in at.values():
            if isinstance(v, Poly):
                tgt = v.ring
                break
        keep = [n for n in R.names if n not in W]
        base = ring(tuple(keep), R.domain)
        tgt = join_rings(base, tgt) if tgt is not None else base
    ev = (lambda f: f.subs(at, target=tgt, partial=True)) if at is not None else (lambda f: f)

    P12 = [ev(f) for f in pp.P12]
    P22 = [ev(f) for f in pp.P22]
    zero = tgt.zero()
    Z = X = Y = zero
    if "Z" in which:
        # Q6(P22, P22) / 2 = sum_k w_k q_k(P22)
        vsub = {V[i]: P22[i] for i in range(5)}
        acc = zero
        for k in range(5):
            wk = ev(R.gen(W[k]))
            qk = data.q(k)
            r = qk.subs(vsub, target=tgt, partial=True)
            acc = acc + wk * r
        Z = acc
    if "X" in which:
        M = m30(data)
        raw = mixed_substitute(M, V, P12, P22, (3, 2))
        X = raw * (X_PREFACTOR * K_X)
    if "Y" in which:
        N = n30(pp.P2, pp.P22)
        T23 = [ev(f) for f in t_contract(data.U, pp.P22)]
        T28 = [ev(f) for f in t_contract(data.Q6, pp.P22)]
        raw = mixed_substitute(N, VS, T23, T28, (1, 4))
        Y = raw * (Y_PREFACTOR * K_Y)
    keep = tuple(n for n in R.names if n not in V and (at is not None and n not in W or at is None))
    res = ring(keep, R.domain)
    if at is not None:
        res = join_rings(res, tgt)
    outs = [f.embed(res) for f in (Z, X, Y)]
    return CoveringTriple(*outs, provenance=data.provenance, ledger=data.ledger)


# -- reading selection ---------------------------------------------------
def nodal_reference(R=None):
    """The printed Z, X, Y on the nodal parametrisation (s, t)."""
    R = R or ring(("s", "t"), QQ)
    s, t = R.gens("s", "t")
    Z = -(2**8) * 3**4 * s**10 * t**10 * (s**5 - t**5)
    X = 2**16 * 3**9 * s**20 * t**20 * (s**10 + 10 * s**5 * t**5 + t**10)
    Y = 2**26 * 3**15 * s**35 * t**35 * (s**5 + t**5)
    return Z, X, Y


def flex_reference(R=None):
    R = R or ring(("a", "b"), QQ)
    D = disc_D(R)
    return R.zero(), 2**18 * 3**10 * D**10, -(2**27) * 3**15 * D**15


def _ratio(f: Poly, g: Poly):
    """c with f = c g (a scalar), or None."""
    if not g:
        return None if f else 0
    (k, c), *_ = sorted(g.terms.items(), reverse=True)
    fc = f.terms.get(k)
    if fc is None:
        return None
    r = fc / c
    return r if f == g * r else None


@dataclass(frozen=True)
class ReadingTrial:
    reading: str
    nodal_rescale: object  # scalar making raw * rescale equal the printed X, or None
    flex_ok: bool

    @property
    def selected(self) -> bool:
        return self.nodal_rescale is not None and self.flex_ok


def _nodal_at():
    R = ring(("s", "t"), QQ)
    from .models import nodal_parametrization

    return dict(zip(W, nodal_parametrization(R))), R


def reading_experiment() -> list:
    """Try both readings of M30; report which reproduces the exact X values."""
    out = []
    at, _ = _nodal_at()
    nod = covering_data_u1((0, 1, 1, 1, 1))
    hes = covering_data_hesse()
    Rf = ring(("a", "b"), QQ)
    a, b = Rf.gens("a", "b")
    flex = {W[0]: 0, W[1]: a, W[2]: b, W[3]: -b, W[4]: -a}
    _, Xn, _ = nodal_reference()
    _, Xf, _ = flex_reference()
    for reading in ("jacobian", "net"):
        raws = []
        for data, pt in ((nod, at), (hes, flex)):
            pp = polarized_pfaffians(data)
            tgt = None
            for v in pt.values():
                if isinstance(v, Poly):
                    tgt = v.ring
                    break
            keep = tuple(n for n in data.ring.names if n not in W)
            T = join_rings(ring(keep, QQ), tgt)
            P12 = [f.subs(pt, target=T, partial=True) for f in pp.P12]
            P22 = [f.subs(pt, target=T, partial=True) for f in pp.P22]
            M = m30(data, reading)
            if reading == "jacobian":
                raw = mixed_substitute(M, V, P12, P22, (3, 2))
            else:
                # a quintic in w: feed the same vectors into the w slots
                raw = mixed_substitute(M, W, P12, P22, (3, 2))
                raw = raw.subs(pt, target=join_rings(raw.ring, T), partial=True)
            raws.append(raw)
        rn = raws[0]
        Tn = join_rings(rn.ring, Xn.ring)
        c = _ratio(Xn.embed(Tn), rn.embed(Tn))
        flex_ok = False
        if c is not None:
            rf = raws[1]
            Tf = join_rings(rf.ring, Xf.ring)
            flex_ok = rf.embed(Tf) * c == Xf.embed(Tf)
        out.append(ReadingTrial(reading, c, flex_ok))
    return out
