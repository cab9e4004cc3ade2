"""The Jacobian y^2 = x^3 - 27 c4 x - 54 c6 and the covering map onto it."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import QQ, Domain, Poly, rank
from .alphabets import W
from .covering import CoveringTriple
from .models import QuadricSystem


class CurveError(ValueError):
    pass


@dataclass(frozen=True)
class WeierstrassCurve:
    c4: object
    c6: object
    domain: Domain = QQ

    @property
    def a4(self):
        return self.domain.reduce(-27 * self.c4)

    @property
    def a6(self):
        return self.domain.reduce(-54 * self.c6)

    @property
    def Delta(self):
        d = self.domain
        return d.div(d.reduce(self.c4**3 - self.c6**2), d.coerce(1728))

    @property
    def discriminant(self):
        """-16 (4 a4^3 + 27 a6^2), equal to 6^12 Delta."""
        return self.domain.reduce(-16 * (4 * self.a4**3 + 27 * self.a6**2))

    @property
    def singular(self) -> bool:
        return self.domain.is_zero(self.Delta)

    @property
    def j(self):
        if self.singular:
            return None
        return self.domain.div(self.domain.reduce(self.c4**3), self.Delta)

    def contains(self, x, y) -> bool:
        d = self.domain
        return d.is_zero(d.reduce(y * y - (x**3 + self.a4 * x + self.a6)))

    def __str__(self):
        return f"y^2 = x^3 + ({self.a4})*x + ({self.a6})"


def jacobian(c4, c6, domain: Domain = QQ) -> WeierstrassCurve:
    return WeierstrassCurve(domain.coerce(c4), domain.coerce(c6), domain)


@dataclass(frozen=True)
class CurvePoint:
    x: object = None
    y: object = None
    infinity: bool = False

    @classmethod
    def at_infinity(cls) -> CurvePoint:
        return cls(infinity=True)

    def __str__(self):
        return "O" if self.infinity else f"({self.x}, {self.y})"


def _scalar(v, dom: Domain):
    if isinstance(v, Poly):
        if not v.is_constant():
            raise CurveError("form did not evaluate to a scalar")
        return v.constant_value()
    return dom.coerce(v)


def quadric_residuals(P2: QuadricSystem, point, domain: Domain) -> list:
    return [_scalar(q, domain) for q in P2.evaluate(point)]


def is_singular_point(P2: QuadricSystem, point, domain: Domain) -> bool:
    """True if the Jacobian of the quadrics has rank < 3 at ``point``."""
    vals = dict(zip(W, point))
    rows = [[_scalar(q.diff(w).subs(vals, partial=True), domain) for w in W] for q in P2]
    return rank(rows, domain) < 3


def map_point(triple: CoveringTriple, point, curve: WeierstrassCurve, quadrics: QuadricSystem | None = None) -> CurvePoint:
    """(X/Z^2, Y/Z^3) at ``point``; the flexes (Z = 0) go to infinity.

    With ``quadrics`` given, membership of the curve is checked first and a
    failure carries the quadric residuals; singular points (the node of a
    nodal quintic) are refused.  Without them an off-curve image raises.
    """
    dom = curve.domain
    pt = [dom.coerce(x) for x in point]
    if all(dom.is_zero(x) for x in pt):
        raise CurveError("the zero vector is not a point")
    if quadrics is not None:
        res = quadric_residuals(quadrics, pt, dom)
        if any(not dom.is_zero(r) for r in res):
            raise CurveError(f"point is not on the curve; quadric residuals {[dom.to_str(r) for r in res]}")
        if is_singular_point(quadrics, pt, dom):
            raise CurveError("point is a singular point of the curve; the map is not defined there")
    vals = dict(zip(W, pt))
    Z, X, Y = (_scalar(f.subs(vals, partial=True), dom) for f in triple)
    if dom.is_zero(Z):
        return CurvePoint.at_infinity()
    x = dom.div(X, dom.reduce(Z * Z))
    y = dom.div(Y, dom.reduce(Z * Z * Z))
    if not curve.contains(x, y):
        raise CurveError("image is not on the Jacobian; is the point on the curve?")
    return CurvePoint(x, y)


def scale_point(P: CurvePoint, u, domain: Domain) -> CurvePoint:
    """(u^2 x, u^3 y): the image of P on the twisted model of the curve."""
    if P.infinity:
        return P
    return CurvePoint(domain.reduce(u * u * P.x), domain.reduce(u * u * u * P.y))
