"""Genus one models of degree 5 and the groups acting on them.

A model is a 5x5 alternating matrix of linear forms in ``w0..w4``.  It is
stored by its ten upper-triangular entries, each a :class:`Poly` that is
linear and homogeneous in the w-variables; any other variables of the ring
(``a``, ``b``, ``l0..l4`` ...) act as symbolic scalars.

Conventions (all test-pinned):

* ``(gV, gW)`` sends a model to ``gV * phi(gW^T w) * gV^T``; this is a left
  action and points of the curve move by ``x -> gW^{-T} x``.
* The quadric ``p_i`` is the Pfaffian of the 4x4 minor on rows and columns
  ``i+1, i+2, i+3, i+4`` taken in that cyclic order.  Relative to the
  Pfaffian of the minor with sorted indices this is the sign ``(-1)^i``.
  With this choice ``phi . p = 0`` holds directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from gmpy2 import mpq

from .algebra import (
    QQ,
    Domain,
    DomainError,
    MatrixError,
    Poly,
    PolyMatrix,
    PolyRing,
    mat_coerce,
    mat_identity,
    mat_inv,
    mat_mul,
    mat_transpose,
    pfaffian4,
    ring,
    scalar_det,
    zeta_power,
)
from .alphabets import PAIRS, W


class ModelError(ValueError):
    pass


def _to_poly(x, R: PolyRing) -> Poly:
    if isinstance(x, Poly):
        return x.embed(R)
    if isinstance(x, str) and x.isidentifier():
        return R.gen(x)
    return R.const(x)


def _param_names(*xs) -> tuple:
    names = []
    for x in xs:
        if isinstance(x, str) and x.isidentifier():
            cand = (x,)
        elif isinstance(x, Poly):
            cand = x.ring.names
        else:
            cand = ()
        names.extend(v for v in cand if v not in names and v not in W)
    return tuple(names)


def _domain_of(*xs, default: Domain = QQ) -> Domain:
    for x in xs:
        if isinstance(x, Poly):
            return x.ring.domain
    return default


class GenusOneModel:
    """Alternating 5x5 matrix of linear forms in w0..w4."""

    __slots__ = ("ring", "entries")

    def __init__(self, R: PolyRing, entries: dict):
        if not all(v in R for v in W):
            raise ModelError("model ring must contain w0..w4")
        clean = {}
        for (i, j), e in entries.items():
            if not (0 <= i < j < 5):
                raise ModelError(f"entry index ({i},{j}) is not upper triangular")
            e = _to_poly(e, R)
            if e and not e.is_homogeneous_in(W, 1):
                raise ModelError(f"entry ({i},{j}) is not a linear form in w")
            clean[(i, j)] = e
        self.ring = R
        self.entries = {ij: clean.get(ij, R.zero()) for ij in PAIRS}

    # -- access ---------------------------------------------------------
    def entry(self, i: int, j: int) -> Poly:
        if i == j:
            return self.ring.zero()
        if i < j:
            return self.entries[(i, j)]
        return -self.entries[(j, i)]

    def matrix(self) -> PolyMatrix:
        return PolyMatrix(self.ring, [[self.entry(i, j) for j in range(5)] for i in range(5)])

    @classmethod
    def from_matrix(cls, m: PolyMatrix) -> GenusOneModel:
        if not m.is_alternating() or m.nrows != 5:
            raise ModelError("need an alternating 5x5 matrix")
        return cls(m.ring, {(i, j): m[i, j] for i, j in PAIRS})

    @property
    def domain(self) -> Domain:
        return self.ring.domain

    def coefficient_tensor(self):
        """c[(i,j)][k]: coefficient of w_k in entry (i,j), as Polys in the parameters."""
        out = {}
        for ij, e in self.entries.items():
            parts = e.collect(W)
            out[ij] = [parts.get(tuple(int(k == t) for t in range(5)), self.ring.zero()) for k in range(5)]
        return out

    def parameters(self) -> tuple:
        used = set()
        for e in self.entries.values():
            used.update(e.variables())
        return tuple(v for v in self.ring.names if v in used and v not in W)

    def is_numeric(self) -> bool:
        return not self.parameters()

    # -- algebra -------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, GenusOneModel):
            return NotImplemented
        if self.domain != other.domain:
            return False
        R = _join(self, other)
        return all(self.entries[ij].embed(R) == other.entries[ij].embed(R) for ij in PAIRS)

    def __hash__(self):
        return hash(tuple(self.entries[ij] for ij in PAIRS))

    def __add__(self, other: GenusOneModel) -> GenusOneModel:
        R = _join(self, other)
        return GenusOneModel(R, {ij: self.entries[ij].embed(R) + other.entries[ij].embed(R) for ij in PAIRS})

    def __sub__(self, other: GenusOneModel) -> GenusOneModel:
        return self + other.scale(-1)

    def scale(self, c) -> GenusOneModel:
        c = _to_poly(c, self.ring) if not isinstance(c, Poly) else c
        R = _join_rings(self.ring, c.ring)
        return GenusOneModel(R, {ij: e.embed(R) * c.embed(R) for ij, e in self.entries.items()})

    def embed(self, R: PolyRing) -> GenusOneModel:
        return GenusOneModel(R, {ij: e.embed(R) for ij, e in self.entries.items()})

    def over(self, domain: Domain) -> GenusOneModel:
        """The same model with coefficients coerced into ``domain``."""
        if domain == self.domain:
            return self
        R = self.ring.with_domain(domain)
        return GenusOneModel(R, {ij: e.reduce_mod(domain) for ij, e in self.entries.items()})

    def specialize(self, values: dict) -> GenusOneModel:
        """Substitute values (scalars or Polys) for parameters."""
        keep = tuple(v for v in self.ring.names if v not in values)
        extra = []
        for val in values.values():
            if isinstance(val, Poly):
                extra.extend(v for v in val.ring.names if v not in keep and v not in extra)
        R = ring(keep + tuple(extra), self.domain)
        return GenusOneModel(R, {ij: e.subs(values, target=R, partial=True) for ij, e in self.entries.items()})

    def __repr__(self):
        body = ", ".join(f"({i},{j}): {self.entries[(i, j)]}" for i, j in PAIRS if self.entries[(i, j)])
        return f"GenusOneModel({{{body}}})"


def _join_rings(*rings):
    from .algebra import join_rings

    return join_rings(*rings)


def _join(*models):
    return _join_rings(*(m.ring for m in models))


def model_ring(params=(), domain: Domain = QQ, extra=()) -> PolyRing:
    return ring(tuple(params) + W + tuple(extra), domain)


def _cyclic_model(coef_outer, coef_inner, domain: Domain) -> GenusOneModel:
    # coef_outer[i] multiplies w_i in slot (i+1, i+4), coef_inner[i] in (i+2, i+3)
    params = _param_names(*coef_outer, *coef_inner)
    R = model_ring(params, _domain_of(*coef_outer, *coef_inner, default=domain))
    w = R.gens(*W)
    entries = {ij: R.zero() for ij in PAIRS}
    for i in range(5):
        for (x, y), c in ((((i + 1) % 5, (i + 4) % 5), coef_outer[i]), (((i + 2) % 5, (i + 3) % 5), coef_inner[i])):
            term = _to_poly(c, R) * w[i]
            if x < y:
                entries[(x, y)] = entries[(x, y)] + term
            else:
                entries[(y, x)] = entries[(y, x)] - term
    return GenusOneModel(R, entries)


def hesse_model(a="a", b="b", domain: Domain = QQ) -> GenusOneModel:
    """u(a,b) = a * sum (v1^v4) w0 + b * sum (v2^v3) w0 over cyclic shifts.

    ``a`` and ``b`` may be scalars, variable names or Polys.
    """
    return _cyclic_model([a] * 5, [b] * 5, domain)


def u1_model(lams=None, domain: Domain = QQ) -> GenusOneModel:
    """u1(l0..l4) = sum l0 (v1^v4) w0 + sum (v2^v3) w0; symbolic l0..l4 by default."""
    if lams is None:
        lams = tuple(f"l{i}" for i in range(5))
    lams = list(lams)
    if len(lams) != 5:
        raise ModelError("u1 needs five parameters")
    return _cyclic_model(lams, [1] * 5, domain)


# -- Pfaffians ----------------------------------------------------------
@dataclass(frozen=True)
class QuadricSystem:
    """Five quadrics p0..p4 in w; the element sum_i v*_i p_i of V* (x) S^2 W."""

    forms: tuple

    def __post_init__(self):
        if len(self.forms) != 5:
            raise ModelError("a quadric system has five forms")
        for q in self.forms:
            if q and not q.is_homogeneous_in(W, 2):
                raise ModelError("quadric system entries must be quadratic in w")

    @property
    def ring(self) -> PolyRing:
        return self.forms[0].ring

    def __getitem__(self, i):
        return self.forms[i]

    def __iter__(self):
        return iter(self.forms)

    def __len__(self):
        return 5

    def __add__(self, other):
        R = _join_rings(self.ring, other.ring)
        return QuadricSystem(tuple(x.embed(R) + y.embed(R) for x, y in zip(self, other)))

    def __sub__(self, other):
        R = _join_rings(self.ring, other.ring)
        return QuadricSystem(tuple(x.embed(R) - y.embed(R) for x, y in zip(self, other)))

    def scale(self, c):
        return QuadricSystem(tuple(x * c for x in self))

    def embed(self, R):
        return QuadricSystem(tuple(x.embed(R) for x in self))

    def evaluate(self, point) -> list:
        vals = dict(zip(W, point))
        return [q.subs(vals, partial=True) for q in self]

    def kernel_vector(self) -> tuple:
        """Vector annihilated by the model matrix; equal to ``forms`` in this convention."""
        return self.forms


def pfaffian_minor(m: GenusOneModel, i: int, cyclic: bool = True) -> Poly:
    """Pfaffian of the minor deleting row/column i (cyclic or sorted order)."""
    if cyclic:
        idx = [(i + k) % 5 for k in range(1, 5)]
    else:
        idx = [k for k in range(5) if k != i]
    sub = PolyMatrix(m.ring, [[m.entry(x, y) for y in idx] for x in idx])
    return pfaffian4(sub)


def pfaffian_signs() -> tuple:
    """epsilon_i with p_i = epsilon_i * Pf(sorted minor i)."""
    return tuple((-1) ** i for i in range(5))


def pfaffians(m: GenusOneModel) -> QuadricSystem:
    """The five 4x4 Pfaffians p0..p4 defining the curve of ``m``."""
    return QuadricSystem(tuple(pfaffian_minor(m, i) for i in range(5)))


def kernel_identity(m: GenusOneModel, q: QuadricSystem | None = None) -> list:
    """phi . p (five cubics); identically zero for the Pfaffian vector."""
    q = q or pfaffians(m)
    R = _join_rings(m.ring, q.ring)
    return [sum((m.entry(i, j).embed(R) * q[j].embed(R) for j in range(5)), R.zero()) for i in range(5)]


# -- group action -------------------------------------------------------
@dataclass(frozen=True)
class TransformPair:
    """(gV, gW): two invertible 5x5 scalar matrices over one domain."""

    gV: tuple
    gW: tuple
    domain: Domain = QQ
    detV: object = field(init=False, compare=False)
    detW: object = field(init=False, compare=False)

    def __post_init__(self):
        gV = tuple(tuple(r) for r in mat_coerce(self.gV, self.domain))
        gW = tuple(tuple(r) for r in mat_coerce(self.gW, self.domain))
        if len(gV) != 5 or len(gW) != 5:
            raise MatrixError("transform matrices are 5x5")
        object.__setattr__(self, "gV", gV)
        object.__setattr__(self, "gW", gW)
        dv = scalar_det([list(r) for r in gV], self.domain)
        dw = scalar_det([list(r) for r in gW], self.domain)
        if self.domain.is_zero(dv) or self.domain.is_zero(dw):
            raise MatrixError("singular transform")
        object.__setattr__(self, "detV", dv)
        object.__setattr__(self, "detW", dw)

    @classmethod
    def identity(cls, domain: Domain = QQ) -> TransformPair:
        i = mat_identity(5, domain)
        return cls(i, i, domain)

    def compose(self, g: TransformPair) -> TransformPair:
        """self o g (apply g first)."""
        d = self.domain
        return TransformPair(mat_mul(self.gV, g.gV, d), mat_mul(self.gW, g.gW, d), d)

    __matmul__ = compose

    def inverse(self) -> TransformPair:
        d = self.domain
        return TransformPair(mat_inv([list(r) for r in self.gV], d), mat_inv([list(r) for r in self.gW], d), d)

    def over(self, domain: Domain) -> TransformPair:
        if domain == self.domain:
            return self
        return TransformPair(self.gV, self.gW, domain)

    def point_map(self):
        """Matrix sending a point of C_phi to the matching point of C_{g phi}."""
        return mat_transpose(mat_inv([list(r) for r in self.gW], self.domain))

    def act_point(self, x) -> list:
        d = self.domain
        m = self.point_map()
        return [d.reduce(sum((m[i][j] * d.coerce(x[j]) for j in range(5)), d.zero)) for i in range(5)]


def w_substitution(gW, R: PolyRing) -> dict:
    """w_k -> (gW^T w)_k = sum_j gW[j][k] w_j, as Polys of ``R``."""
    w = R.gens(*W)
    out = {}
    for k in range(5):
        acc = R.zero()
        for j in range(5):
            if not R.domain.is_zero(gW[j][k]):
                acc = acc + w[j] * gW[j][k]
        out[W[k]] = acc
    return out


def transform(m: GenusOneModel, g: TransformPair) -> GenusOneModel:
    if g.domain != m.domain:
        raise DomainError(f"model over {m.domain!r} but transform over {g.domain!r}")
    R = m.ring
    sub = w_substitution(g.gW, R)
    mat = [[m.entry(i, j).subs(sub, target=R, partial=True) if i != j else R.zero() for j in range(5)] for i in range(5)]
    gV = g.gV
    dom = R.domain
    entries = {}
    for a, b in PAIRS:
        acc = R.zero()
        for i, j in product(range(5), range(5)):
            if i == j:
                continue
            c = dom.reduce(gV[a][i] * gV[b][j])
            if not dom.is_zero(c) and mat[i][j]:
                acc = acc + mat[i][j] * c
        entries[(a, b)] = acc
    return GenusOneModel(R, entries)


def diagonal_pair(alphas, domain: Domain = QQ) -> TransformPair:
    """Torus element: gV = diag(a1a4, a0a2, a1a3, a2a4, a0a3), gW = diag(a_i)."""
    al = [domain.coerce(x) for x in alphas]
    dv = [domain.reduce(al[(i + 1) % 5] * al[(i + 4) % 5]) for i in range(5)]
    diag = lambda d: [[d[i] if i == j else domain.zero for j in range(5)] for i in range(5)]  # noqa: E731
    return TransformPair(diag(dv), diag(al), domain)


def torus_lambda_action(alphas, lams) -> list:
    """l_i -> a_i^2 / (a_{i+1} a_{i+4}) * l_i."""
    return [
        mpq(alphas[i]) ** 2 / (mpq(alphas[(i + 1) % 5]) * mpq(alphas[(i + 4) % 5])) * lams[i] for i in range(5)
    ]


# -- Heisenberg group ---------------------------------------------------
def _zeta(domain: Domain):
    return domain.zeta5()


def _zpow(domain: Domain, k: int):
    k %= 5
    if domain.kind == "Qzeta5":
        return zeta_power(k)
    return pow(domain.zeta5(), k, domain.p) if k else domain.one


def heisenberg_generators(space: str, domain: Domain):
    """(sigma, tau) matrices on W (sigma = diag(z^i)) or V (sigma = diag(z^2i)).

    Matrices act on basis vectors by columns: tau sends basis vector i to i+1.
    """
    if space not in ("V", "W"):
        raise ModelError("space must be 'V' or 'W'")
    _zeta(domain)
    mult = 2 if space == "V" else 1
    sigma = [[_zpow(domain, mult * i) if i == j else domain.zero for j in range(5)] for i in range(5)]
    tau = [[domain.one if i == (j + 1) % 5 else domain.zero for j in range(5)] for i in range(5)]
    return sigma, tau


def heisenberg_pair(x: int, y: int, domain: Domain) -> TransformPair:
    """(theta_V, theta_W) of sigma^x tau^y."""
    out = []
    for space in ("V", "W"):
        s, t = heisenberg_generators(space, domain)
        m = mat_identity(5, domain)
        for _ in range(x % 5):
            m = mat_mul(m, s, domain)
        for _ in range(y % 5):
            m = mat_mul(m, t, domain)
        out.append(m)
    return TransformPair(out[0], out[1], domain)


def heisenberg_point_translates(point, domain: Domain) -> list:
    """The 25 images of a point under sigma^x tau^y (acting on coordinates)."""
    out = []
    for x, y in product(range(5), range(5)):
        g = heisenberg_pair(x, y, domain)
        out.append(g.act_point(point))
    return out


def _dft(domain: Domain, mult: int):
    return [[_zpow(domain, mult * j * k) for k in range(5)] for j in range(5)]


def extended_generators(domain: Domain, space: str = "W"):
    """(theta+(S), theta+(T)) normalised to determinant 1.

    T is diag(z^(3 j^2)) for the space's root z (z = zeta on W, zeta^2 on V),
    already of determinant 1.  S is c * (z^(jk)); of the five scalings with
    determinant 1 exactly one has S^2 equal to the index inversion j -> -j,
    namely c = 25 / det(z^(jk)), and that one is returned.
    """
    if space not in ("V", "W"):
        raise ModelError("space must be 'V' or 'W'")
    if domain.kind not in ("Qzeta5", "Fp"):
        raise DomainError("extended generators need Q(zeta5) or a prime field")
    mult = 2 if space == "V" else 1
    F = _dft(domain, mult)
    detF = scalar_det(F, domain)
    c = domain.div(domain.coerce(25), detF)
    S = [[domain.reduce(c * x) for x in r] for r in F]
    T = [[_zpow(domain, mult * 3 * j * j) if j == k else domain.zero for k in range(5)] for j in range(5)]
    return S, T


def extended_pair(name: str, domain: Domain) -> TransformPair:
    if name not in ("S", "T"):
        raise ModelError("extended generator must be 'S' or 'T'")
    k = 0 if name == "S" else 1
    return TransformPair(extended_generators(domain, "V")[k], extended_generators(domain, "W")[k], domain)


# -- the rational nodal quintic ------------------------------------------
def nodal_point(s, t):
    """(s^5 - t^5, s t^4, s^2 t^3, -s^3 t^2, -s^4 t) on the curve of u1(0,1,1,1,1)."""
    if not isinstance(s, Poly) and not isinstance(t, Poly) and s == 0 and t == 0:
        raise ModelError("(s, t) = (0, 0) is not a point")
    return [s**5 - t**5, s * t**4, s**2 * t**3, -(s**3) * t**2, -(s**4) * t]


def nodal_parametrization(R: PolyRing | None = None):
    """Symbolic nodal point in a ring containing ``s`` and ``t``."""
    R = R or ring(("s", "t"))
    s, t = R.gens("s", "t")
    return nodal_point(s, t)


# -- derivative of the orbit map ---------------------------------------
def _sl_basis():
    basis = []
    for i in range(5):
        for j in range(5):
            if i != j:
                basis.append({(i, j): 1})
    for i in range(1, 5):
        basis.append({(0, 0): 1, (i, i): -1})
    return basis


COLEX_PAIRS = tuple(sorted(PAIRS, key=lambda ij: (ij[1], ij[0])))


def _model_vector(entries: dict, pairs=COLEX_PAIRS) -> list:
    # coordinates in the basis (v_i ^ v_j) w_k, i < j, k fastest
    R = next(iter(entries.values())).ring
    out = []
    for ij in pairs:
        e = entries[ij]
        for k in range(5):
            out.append(e.coeff(tuple(int(R.names[t] == W[k]) for t in range(R.n))))
    return out


def derivative_matrix(a, b, row_order: str = "colex") -> list:
    """50x50 derivative of (gV, gW, (a,b)) -> (gV, gW) u(a,b) at the identity.

    Columns: the 24 traceless directions E_ij (i != j), E_00 - E_ii in V,
    then the same 24 in W, then d/da and d/db.  Rows: coordinates in the
    basis (v_i ^ v_j) w_k with k fastest and the pairs i < j in colex order
    (``row_order="lex"`` gives lexicographic pairs, which flips the sign of
    the determinant; the V and W column orders cancel against each other).
    """
    pairs = {"colex": COLEX_PAIRS, "lex": PAIRS}[row_order]
    a, b = QQ.coerce(a), QQ.coerce(b)
    m = hesse_model(a, b)
    R = m.ring
    M = [[m.entry(i, j) for j in range(5)] for i in range(5)]
    cols = []
    for E in _sl_basis():
        # E phi + phi E^T
        ent = {}
        for x, y in PAIRS:
            acc = R.zero()
            for (i, j), c in E.items():
                if i == x:
                    acc = acc + M[j][y] * c
                if i == y:
                    acc = acc + M[x][j] * c
            ent[(x, y)] = acc
        cols.append(_model_vector(ent, pairs))
    w = R.gens(*W)
    for E in _sl_basis():
        # w_k -> w_k + eps * sum_j E[j][k] w_j, first order term
        sub = {}
        for k in range(5):
            acc = R.zero()
            for (j, kk), c in E.items():
                if kk == k:
                    acc = acc + w[j] * c
            sub[k] = acc
        ent = {}
        for x, y in PAIRS:
            e = m.entries[(x, y)]
            acc = R.zero()
            for k in range(5):
                ck = e.diff(W[k])
                if ck and sub[k]:
                    acc = acc + ck * sub[k]
            ent[(x, y)] = acc
        cols.append(_model_vector(ent, pairs))
    for da, db in ((1, 0), (0, 1)):
        cols.append(_model_vector(hesse_model(da, db).entries, pairs))
    return [[cols[c][r] for c in range(50)] for r in range(50)]


def derivative_determinant(a, b, row_order: str = "colex"):
    return scalar_det(derivative_matrix(a, b, row_order), QQ)
