"""Discrete invariants D, c4, c6 of the Hesse family and derived quantities."""

from __future__ import annotations

from dataclasses import dataclass

from ..algebra import QQ, Poly, ring

AB_RING = ring(("a", "b"))


def _ab(R=None):
    R = R or AB_RING
    return R.gens("a", "b")


def disc_D(R=None) -> Poly:
    a, b = _ab(R)
    return a * b * (a**10 - 11 * a**5 * b**5 - b**10)


def inv_c4(R=None) -> Poly:
    a, b = _ab(R)
    return a**20 + 228 * a**15 * b**5 + 494 * a**10 * b**10 - 228 * a**5 * b**15 + b**20


def inv_c6(R=None) -> Poly:
    a, b = _ab(R)
    return (
        -(a**30)
        + 522 * a**25 * b**5
        + 10005 * a**20 * b**10
        + 10005 * a**10 * b**20
        - 522 * a**5 * b**25
        - b**30
    )


@dataclass(frozen=True)
class InvariantRecord:
    D: object
    c4: object
    c6: object
    Delta: object
    j: object  # None when Delta = 0

    @property
    def singular(self) -> bool:
        return self.j is None


def discrete_invariants(a="a", b="b") -> InvariantRecord:
    """D, c4, c6, Delta = (c4^3 - c6^2)/1728 and j = c4^3/Delta at (a, b).

    Symbolic names give Polys in (a, b); scalars give rationals.  ``j`` is
    ``None`` when Delta vanishes, or when it is symbolic.
    """
    D, c4, c6 = disc_D(), inv_c4(), inv_c6()
    symbolic = isinstance(a, str) or isinstance(b, str)
    if symbolic:
        sub = {}
        R = AB_RING
        if not isinstance(a, str):
            sub["a"] = a
        if not isinstance(b, str):
            sub["b"] = b
        if sub:
            D, c4, c6 = (x.subs(sub, target=R, partial=True) for x in (D, c4, c6))
        Delta = (c4**3 - c6**2) / 1728
        return InvariantRecord(D, c4, c6, Delta, None)
    vals = {"a": QQ.coerce(a), "b": QQ.coerce(b)}
    D, c4, c6 = (x.evaluate(vals) for x in (D, c4, c6))
    Delta = (c4**3 - c6**2) / 1728
    j = c4**3 / Delta if Delta else None
    return InvariantRecord(D, c4, c6, Delta, j)


def u1_invariants(lams) -> InvariantRecord:
    """Invariants at u1(l0..l4): c4, c6 are polynomials in a^5 -> prod(l)."""
    P = QQ.one
    for x in lams:
        P *= QQ.coerce(x)
    R = ring(("P",))
    Pg = R.gen("P")

    def conv(f):
        # every monomial a^k b^m of c4, c6 has 5 | k (b -> 1)
        out = R.zero()
        for (ea, _), c in f.term_list():
            out = out + Pg ** (ea // 5) * c
        return out.evaluate({"P": P})

    c4, c6 = conv(inv_c4()), conv(inv_c6())
    Delta = (c4**3 - c6**2) / 1728
    return InvariantRecord(None, c4, c6, Delta, c4**3 / Delta if Delta else None)
