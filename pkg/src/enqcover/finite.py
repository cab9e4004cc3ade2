"""Point enumeration over prime fields and end-to-end checks of the covering map.

Forms are evaluated in bulk with numpy: a form is stored as an exponent
matrix (terms x 5) and a coefficient vector mod p, and evaluated on an
array of points through a table of powers.  Every intermediate product is
reduced mod p, so int64 never overflows for the primes used here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from .algebra import GF, Poly, PrimeField
from .alphabets import W
from .covariants.invariants import disc_D, inv_c4, inv_c6
from .covering import CoveringTriple, covering_data_hesse, covering_data_u1, zxy
from .curve import CurvePoint, WeierstrassCurve, jacobian
from .models import GenusOneModel, QuadricSystem, hesse_model, heisenberg_point_translates, pfaffians, u1_model


class FiniteFieldError(ValueError):
    pass


def prime_field(p) -> PrimeField:
    """GF(p), raising for p <= 5 or composite p."""
    return GF(int(p))


# -- bulk evaluation ------------------------------------------------------
@dataclass(frozen=True)
class PackedForm:
    """A form in w0..w4 over F_p, ready for vectorised evaluation."""

    exps: np.ndarray  # (terms, 5)
    coeffs: np.ndarray  # (terms,)
    p: int

    @classmethod
    def from_poly(cls, f: Poly, p: int) -> PackedForm:
        F = GF(p)
        names = f.ring.names
        idx = [names.index(v) for v in W]
        rows, cs = [], []
        for exps, c in f.term_list():
            if any(exps[i] for i in range(len(names)) if i not in idx):
                raise FiniteFieldError("form has parameters besides w0..w4")
            c = F.coerce(c)
            if c:
                rows.append([exps[i] for i in idx])
                cs.append(c)
        if not rows:
            return cls(np.zeros((0, 5), dtype=np.int64), np.zeros(0, dtype=np.int64), p)
        return cls(np.array(rows, dtype=np.int64), np.array(cs, dtype=np.int64), p)

    @property
    def degree(self) -> int:
        return int(self.exps.sum(axis=1).max()) if len(self.exps) else 0

    def __call__(self, pts: np.ndarray, chunk: int = 4096) -> np.ndarray:
        p = self.p
        pts = np.asarray(pts, dtype=np.int64) % p
        out = np.zeros(len(pts), dtype=np.int64)
        if not len(self.exps):
            return out
        table = _power_table(p, int(self.exps.max()))
        for lo in range(0, len(pts), chunk):
            block = pts[lo : lo + chunk]
            acc = np.broadcast_to(self.coeffs, (len(block), len(self.coeffs))).copy()
            for k in range(5):
                acc = acc * table[self.exps[:, k][None, :], block[:, k][:, None]] % p
            out[lo : lo + chunk] = acc.sum(axis=1) % p
        return out


def _power_table(p: int, top: int) -> np.ndarray:
    # table[e, x] = x^e mod p
    x = np.arange(p, dtype=np.int64)
    rows = [np.ones(p, dtype=np.int64)]
    for _ in range(top):
        rows.append(rows[-1] * x % p)
    return np.stack(rows)


def _reduce_model(m: GenusOneModel, F: PrimeField) -> GenusOneModel:
    if m.domain == F:
        return m
    return m.over(F)


# -- enumeration ------------------------------------------------------------
def normalized_points(p: int, lead: int) -> np.ndarray:
    """All vectors with first nonzero coordinate at ``lead`` equal to 1, in lex order."""
    free = 4 - lead
    grid = np.indices((p,) * free).reshape(free, -1).T if free else np.zeros((1, 0), dtype=np.int64)
    pts = np.zeros((len(grid), 5), dtype=np.int64)
    pts[:, lead] = 1
    pts[:, lead + 1 :] = grid
    return pts


def enumerate_points(m: GenusOneModel, p: int) -> list:
    """Projective points of the curve of ``m`` over F_p.

    Representatives have first nonzero coordinate 1 and are listed in
    lexicographic order of their coordinates in 0..p-1.  The search fixes
    the leading coordinate and then the next one, scanning the remaining
    coordinates in bulk.
    """
    F = prime_field(p)
    q = pfaffians(_reduce_model(m, F))
    forms = [PackedForm.from_poly(f, p) for f in q]
    found = []
    for lead in range(4, -1, -1):
        if lead == 4:
            blocks = [normalized_points(p, 4)]
        else:
            allp = normalized_points(p, lead)
            step = p ** (3 - lead) if lead < 4 else 1
            blocks = [allp[i : i + step] for i in range(0, len(allp), step)]
        for pts in blocks:
            mask = np.ones(len(pts), dtype=bool)
            for f in forms:
                sel = np.nonzero(mask)[0]
                if not len(sel):
                    break
                mask[sel] = f(pts[sel]) == 0
            found.extend(tuple(int(x) for x in r) for r in pts[mask])
    return sorted(found)


def normalize(point, p: int) -> tuple:
    """Scale so the first nonzero coordinate is 1."""
    pt = [int(x) % p for x in point]
    for x in pt:
        if x:
            inv = pow(x, -1, p)
            return tuple(y * inv % p for y in pt)
    raise FiniteFieldError("the zero vector is not a projective point")


def hasse_window(p: int) -> tuple:
    """(lo, hi) with |N - (p + 1)| <= 2 floor(sqrt p)."""
    r = 2 * isqrt(p)
    return p + 1 - r, p + 1 + r


# -- the map over F_p ----------------------------------------------------------
@dataclass
class FiniteCovering:
    """Z, X, Y and the Jacobian of one model, reduced mod p."""

    triple: CoveringTriple
    curve: WeierstrassCurve
    quadrics: QuadricSystem
    p: int
    packed: tuple = field(init=False)

    def __post_init__(self):
        self.packed = tuple(PackedForm.from_poly(f, self.p) for f in self.triple)

    @property
    def domain(self) -> PrimeField:
        return self.curve.domain

    def images(self, pts) -> list:
        """CurvePoints for an array of points (infinity where Z vanishes)."""
        p = self.p
        arr = np.asarray(pts, dtype=np.int64).reshape(-1, 5)
        Z, X, Y = (f(arr) for f in self.packed)
        out = []
        for z, x, y in zip(Z.tolist(), X.tolist(), Y.tolist()):
            if z == 0:
                out.append(CurvePoint.at_infinity())
                continue
            zi = pow(z, -1, p)
            out.append(CurvePoint(x * zi * zi % p, y * zi * zi * zi % p))
        return out

    def on_curve(self, P: CurvePoint) -> bool:
        return P.infinity or self.curve.contains(P.x, P.y)

    def residuals(self, point) -> list:
        F = self.domain
        return [F.coerce(q.subs(dict(zip(W, point)), partial=True).constant_value()) for q in self.quadrics]


def _integer_lift(x, F: PrimeField) -> int:
    return F.coerce(x)


def hesse_covering(a, b, p: int) -> FiniteCovering:
    """The covering map of u(a, b) reduced mod p (a, b given mod p)."""
    F = prime_field(p)
    a, b = _integer_lift(a, F), _integer_lift(b, F)
    triple = zxy(covering_data_hesse(a, b))
    vals = {"a": a, "b": b}
    c4, c6 = inv_c4().evaluate(vals), inv_c6().evaluate(vals)
    curve = jacobian(c4, c6, F)
    q = pfaffians(hesse_model(a, b, domain=F))
    return FiniteCovering(triple, curve, q, p)


def u1_covering(lams, p: int) -> FiniteCovering:
    F = prime_field(p)
    lams = tuple(_integer_lift(x, F) for x in lams)
    triple = zxy(covering_data_u1(lams))
    from .covariants.invariants import u1_invariants

    rec = u1_invariants(lams)
    curve = jacobian(rec.c4, rec.c6, F)
    q = pfaffians(u1_model(lams, domain=F))
    return FiniteCovering(triple, curve, q, p)


def hesse_parameters(m: GenusOneModel) -> tuple:
    """(a, b) if ``m`` is exactly u(a, b), else raise."""
    a = m.entry(1, 4).coeff({"w0": 1})
    b = m.entry(2, 3).coeff({"w0": 1})
    if m != hesse_model(a, b, domain=m.domain):
        raise FiniteFieldError("model is not a Hesse model u(a, b)")
    return a, b


# -- end-to-end checks ------------------------------------------------------
def flex_orbit(a, b, p: int) -> list:
    """The 25 Heisenberg translates of (0, a, b, -b, -a), normalised."""
    F = prime_field(p)
    base = [0, a, b, -b, -a]
    return sorted({normalize(t, p) for t in heisenberg_point_translates([F.coerce(x) for x in base], F)})


def translate_orbit(point, F: PrimeField) -> list:
    return [normalize(t, F.p) for t in heisenberg_point_translates(list(point), F)]


@dataclass
class EndToEndReport:
    a: int
    b: int
    p: int
    points: list
    discriminant: int  # D(a, b) mod p
    curve: WeierstrassCurve
    images: dict  # point -> CurvePoint
    off_curve: list  # (point, image, quadric residuals)
    flexes_missing: list
    flexes_finite: list
    translate_failures: list  # (point, translate)
    fibers: dict  # image -> points
    orbits: list  # one sorted tuple of points per Heisenberg orbit

    @property
    def count(self) -> int:
        return len(self.points)

    @property
    def window(self) -> tuple:
        return hasse_window(self.p)

    @property
    def maps_onto_curve(self) -> bool:
        return not self.off_curve

    @property
    def flexes_to_infinity(self) -> bool:
        return not self.flexes_missing and not self.flexes_finite

    @property
    def translates_agree(self) -> bool:
        return not self.translate_failures

    @property
    def in_hasse_window(self) -> bool:
        lo, hi = self.window
        return lo <= self.count <= hi

    @property
    def fibers_are_orbits(self) -> bool:
        """Each fiber of the map on rational points is exactly one orbit."""
        sizes = sorted(len(v) for v in self.fibers.values())
        return sizes == sorted(len(o) for o in self.orbits) and len(self.fibers) == len(self.orbits)

    @property
    def nonsingular(self) -> bool:
        return self.discriminant != 0

    def summary(self) -> str:
        lo, hi = self.window
        return (
            f"u({self.a},{self.b}) over F_{self.p}: N={self.count} window=[{lo},{hi}] "
            f"D mod p={self.discriminant} onto={self.maps_onto_curve} flexes={self.flexes_to_infinity} "
            f"translates={self.translates_agree}"
        )


def end_to_end(a, b, p: int) -> EndToEndReport:
    """Enumerate u(a, b) over F_p and check the covering map on every point.

    No smoothness precondition: this reports what happens, including on
    singular reductions.
    """
    F = prime_field(p)
    if p % 5 != 1:
        raise FiniteFieldError("the Heisenberg action needs p = 1 mod 5")
    a, b = F.coerce(a), F.coerce(b)
    cov = hesse_covering(a, b, p)
    pts = enumerate_points(hesse_model(a, b, domain=F), p)
    pset = set(pts)
    imgs = dict(zip(pts, cov.images(pts)))
    off = [(P, imgs[P], cov.residuals(P)) for P in pts if not cov.on_curve(imgs[P])]
    flexes = flex_orbit(a, b, p)
    fl_img = dict(zip(flexes, cov.images(flexes)))
    missing = [P for P in flexes if P not in pset]
    finite = [P for P in flexes if not fl_img[P].infinity]
    failures = []
    seen = set()
    orbits = []
    for P in pts:
        if P in seen:
            continue
        orb = translate_orbit(P, F)
        timgs = cov.images(orb)
        for T, im in zip(orb, timgs):
            if im != imgs[P]:
                failures.append((P, T))
        o = tuple(sorted(set(orb)))
        seen.update(o)
        orbits.append(o)
    fibers = {}
    for P in pts:
        fibers.setdefault(imgs[P], []).append(P)
    D = F.coerce(disc_D().evaluate({"a": a, "b": b}))
    return EndToEndReport(a, b, p, pts, D, cov.curve, imgs, off, missing, finite, failures, fibers, orbits)


def fiber_invariance_check(m: GenusOneModel, p: int | None = None) -> bool:
    """Heisenberg invariance of the map and images on the reduced Jacobian.

    ``m`` is a Hesse model over F_p with p = 1 mod 5 and D(a, b) != 0.
    """
    F = m.domain
    if not isinstance(F, PrimeField):
        if p is None:
            raise FiniteFieldError("model is not over a prime field")
        F = prime_field(p)
        m = m.over(F)
    a, b = hesse_parameters(m)
    if F.p % 5 != 1:
        raise FiniteFieldError("fiber invariance needs p = 1 mod 5")
    if F.is_zero(F.coerce(disc_D().evaluate({"a": a, "b": b}))):
        raise FiniteFieldError(f"D(a, b) vanishes mod {F.p}: the reduction is singular")
    rep = end_to_end(a, b, F.p)
    return rep.maps_onto_curve and rep.translates_agree and rep.flexes_to_infinity


def node_free_points(points, node=(1, 0, 0, 0, 0)) -> list:
    return [P for P in points if tuple(P) != tuple(node)]


def nodal_images(s_t_pairs, p: int) -> set:
    """Normalised nodal_point(s, t) for (s, t) over F_p."""
    from .models import nodal_point

    out = set()
    for s, t in s_t_pairs:
        if s % p == 0 and t % p == 0:
            continue
        out.add(normalize(nodal_point(s, t), p))
    return out


def projective_line(p: int) -> list:
    return [(1, t) for t in range(p)] + [(0, 1)]

