"""Explicit discrete covariants on the Hesse family.

Every covariant is a :class:`DiscreteCovariant`: a target space tag and a
polynomial in ``a, b`` and that space's basis symbols.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..algebra import QQ, Poly
from ..alphabets import AB, W, WS, wedge
from .invariants import disc_D, inv_c4, inv_c6
from .spaces import TargetSpace, is_h5_invariant, orbit_sum, shift, space, weights


class CatalogueError(KeyError):
    pass


@dataclass(frozen=True)
class DiscreteCovariant:
    name: str
    tag: str
    poly: Poly
    degree: int

    @property
    def space(self) -> TargetSpace:
        return space(self.tag)

    @property
    def weights(self):
        return weights(self.degree, self.space.rs)

    @property
    def ring(self):
        return self.poly.ring

    def at_b1(self) -> Poly:
        return self.poly.subs({"b": 1}, partial=True)

    def is_h5_invariant(self) -> bool:
        return is_h5_invariant(self.poly)

    def is_homogeneous(self) -> bool:
        return self.poly.is_homogeneous_in(AB, self.degree) if self.poly else True

    def components(self) -> list:
        """[(orbit representative monomial, coefficient in a, b)] over tau-orbits."""
        syms = self.space.symbols
        parts = self.poly.collect(syms)
        R = self.poly.ring
        idx = [R.index(s) for s in syms]
        done = set()
        out = []
        for exps in sorted(parts, reverse=True):
            if exps in done:
                continue
            vec = [0] * R.n
            for i, e in zip(idx, exps):
                vec[i] = e
            mono = R.monomial(tuple(vec))
            orbit = orbit_sum(mono)
            coeff = parts[exps]
            # the representative appears in its orbit with sign +1 by construction
            for k in orbit.terms:
                e = R.unpack(k)
                done.add(tuple(e[i] for i in idx))
            out.append((mono, coeff))
        return out

    # -- module operations -------------------------------------------
    def _check(self, other):
        if other.tag != self.tag:
            raise ValueError(f"cannot combine {self.tag} with {other.tag}")

    def __add__(self, other):
        self._check(other)
        if other.degree != self.degree and self.poly and other.poly:
            raise ValueError("degrees differ")
        R = _common_ring(self.poly, other.poly)
        return DiscreteCovariant(f"({self.name}+{other.name})", self.tag, self.poly.embed(R) + other.poly.embed(R), self.degree)

    def __sub__(self, other):
        self._check(other)
        if other.degree != self.degree and self.poly and other.poly:
            raise ValueError("degrees differ")
        R = _common_ring(self.poly, other.poly)
        return DiscreteCovariant(f"({self.name}-{other.name})", self.tag, self.poly.embed(R) - other.poly.embed(R), self.degree)

    def times(self, inv: Poly, inv_degree: int, name: str | None = None):
        """Multiply by an invariant (a Poly in a, b of degree ``inv_degree``)."""
        R = _common_ring(self.poly, inv)
        return DiscreteCovariant(
            name or f"{inv_degree}*{self.name}", self.tag, self.poly.embed(R) * inv.embed(R), self.degree + inv_degree
        )

    def renamed(self, name: str):
        return DiscreteCovariant(name, self.tag, self.poly, self.degree)


def _common_ring(*polys):
    from ..algebra import join_rings

    return join_rings(*(p.ring for p in polys))


# -- construction helpers ----------------------------------------------
def _R(tag):
    return space(tag).coefficient_ring(AB, QQ)


def _osum(R, *factors) -> Poly:
    """Orbit sum of a monomial given as (symbol, exponent) / (wedge base, i, j)."""
    mono = R.one()
    for f in factors:
        if len(f) == 2:
            mono = mono * R.gen(f[0]) ** f[1]
        else:
            name, sign = wedge(*f)
            mono = mono * R.gen(name) * sign
    return orbit_sum(mono)


def _prod(R, names) -> Poly:
    out = R.one()
    for n in names:
        out = out * R.gen(n)
    return out


def _ab(R):
    return R.gens("a", "b")


def hesse_tensor(R, a, b) -> Poly:
    """a * sum (v1^v4) w0 + b * sum (v2^v3) w0 as an element of L2V.W."""
    return a * _osum(R, ("v", 1, 4), ("w0", 1)) + b * _osum(R, ("v", 2, 3), ("w0", 1))


def _build_U():
    R = _R("L2V.W")
    a, b = _ab(R)
    return DiscreteCovariant("U", "L2V.W", hesse_tensor(R, a, b), 1)


def _build_H():
    R = _R("L2V.W")
    D = disc_D(R)
    return DiscreteCovariant("H", "L2V.W", hesse_tensor(R, -D.diff("b"), D.diff("a")), 11)


def _build_Q6():
    R = _R("S2V.W")
    a, b = _ab(R)
    q = (
        5 * a**3 * b**3 * _osum(R, ("v0", 2), ("w0", 1))
        + a * (a**5 - 3 * b**5) * _osum(R, ("v1", 1), ("v4", 1), ("w0", 1))
        - b * (3 * a**5 + b**5) * _osum(R, ("v2", 1), ("v3", 1), ("w0", 1))
    )
    return DiscreteCovariant("Q6", "S2V.W", q, 6)


def _build_P2():
    R = _R("V*.S2W")
    a, b = _ab(R)
    p = (
        a * b * _osum(R, ("vs0", 1), ("w0", 2))
        + b**2 * _osum(R, ("vs0", 1), ("w1", 1), ("w4", 1))
        - a**2 * _osum(R, ("vs0", 1), ("w2", 1), ("w3", 1))
    )
    return DiscreteCovariant("P2", "V*.S2W", p, 2)


def _quintic_basis():
    R = _R("S5W")
    s5 = _osum(R, ("w0", 5))
    pw = _prod(R, W)
    return R, {
        "F1": s5 - 30 * pw,
        "F2": 10 * _osum(R, ("w0", 3), ("w1", 1), ("w4", 1)),
        "F3": 10 * _osum(R, ("w0", 3), ("w2", 1), ("w3", 1)),
        "G1": s5 + 20 * pw,
        "G2": 10 * _osum(R, ("w0", 1), ("w1", 2), ("w4", 2)),
        "G3": 10 * _osum(R, ("w0", 1), ("w2", 2), ("w3", 2)),
    }


def _build_quintics() -> dict:
    R, B = _quintic_basis()
    a, b = _ab(R)
    D = disc_D(R)
    F1, F2, F3, G1, G2, G3 = (B[k] for k in ("F1", "F2", "F3", "G1", "G2", "G3"))
    out = {k: DiscreteCovariant(k, "S5W", v, 0) for k, v in B.items()}
    out["F10"] = (
        (a**10 - 36 * a**5 * b**5 - b**10) * F1
        + 5 * a**4 * b * (a**5 - 3 * b**5) * F2
        + 5 * a * b**4 * (3 * a**5 + b**5) * F3,
        10,
    )
    out["F20"] = (
        (a**20 + 114 * a**15 * b**5 + 114 * a**5 * b**15 - b**20) * F1
        - a**4 * b * (a**15 + 171 * a**10 * b**5 + 247 * a**5 * b**10 - 57 * b**15) * F2
        - a * b**4 * (57 * a**15 + 247 * a**10 * b**5 - 171 * a**5 * b**10 + b**15) * F3,
        20,
    )
    out["F30"] = (
        D
        * (
            10 * a**4 * b**4 * (9 * a**10 + 26 * a**5 * b**5 - 9 * b**10) * F1
            + a**3 * (a**15 + 126 * a**10 * b**5 + 117 * a**5 * b**10 - 12 * b**15) * F2
            - b**3 * (12 * a**15 + 117 * a**10 * b**5 - 126 * a**5 * b**10 + b**15) * F3
        ),
        30,
    )
    out["G10"] = (
        (a**10 + 14 * a**5 * b**5 - b**10) * G1
        + 5 * a**3 * b**2 * (a**5 + 2 * b**5) * G2
        + 5 * a**2 * b**3 * (2 * a**5 - b**5) * G3,
        10,
    )
    out["G20"] = (
        (a**20 - 136 * a**15 * b**5 - 136 * a**5 * b**15 - b**20) * G1
        - a**3 * b**2 * (7 * a**15 + 272 * a**10 * b**5 - 221 * a**5 * b**10 + 26 * b**15) * G2
        - a**2 * b**3 * (26 * a**15 + 221 * a**10 * b**5 + 272 * a**5 * b**10 - 7 * b**15) * G3,
        20,
    )
    out["G30"] = (
        2 * D**2 * (10 * a**3 * b**3 * G1 + a * (a**5 - 3 * b**5) * G2 - b * (3 * a**5 + b**5) * G3),
        30,
    )
    for k in ("F10", "F20", "F30", "G10", "G20", "G30"):
        poly, deg = out[k]
        out[k] = DiscreteCovariant(k, "S5W", poly, deg)
    c4, c6 = inv_c4(R), inv_c6(R)
    F10, F20, F30, G10, G20, G30 = (out[k] for k in ("F10", "F20", "F30", "G10", "G20", "G30"))
    # the basis element F10 - G10 is -50 times the displayed S10
    out["S10b"] = (F10 - G10).renamed("S10b")
    out["S20"] = (F20 - G20).renamed("S20")
    out["S30"] = (F30 - G30).renamed("S30")
    out["S30'"] = (F30 + G30).renamed("S30'")
    out["S40"] = (F10.times(c6, 30) + F20.times(c4, 20)).renamed("S40")
    out["S50"] = (F10.times(c4**2, 40) + F20.times(c6, 30)).renamed("S50")
    return out


def printed_S10() -> DiscreteCovariant:
    """The degree 10 quintic covariant written out term by term."""
    R = _R("S5W")
    a, b = _ab(R)
    p = (
        a**5 * b**5 * _osum(R, ("w0", 5))
        - a**4 * b * (a**5 - 3 * b**5) * _osum(R, ("w0", 3), ("w1", 1), ("w4", 1))
        + a**3 * b**2 * (a**5 + 2 * b**5) * _osum(R, ("w0", 1), ("w1", 2), ("w4", 2))
        + a**2 * b**3 * (2 * a**5 - b**5) * _osum(R, ("w0", 1), ("w2", 2), ("w3", 2))
        - a * b**4 * (3 * a**5 + b**5) * _osum(R, ("w0", 3), ("w2", 1), ("w3", 1))
        + (a**10 - 16 * a**5 * b**5 - b**10) * _prod(R, W)
    )
    return DiscreteCovariant("S10", "S5W", p, 10)


def _build_T30():
    R = _R("S5W*")
    a, b = _ab(R)
    p = (
        125 * a**10 * b**10 * (3 * a**10 - 8 * a**5 * b**5 - 3 * b**10) * _osum(R, ("ws0", 5))
        - 5
        * a**6
        * b**4
        * (3 * a**20 + 134 * a**15 * b**5 + 57 * a**10 * b**10 + 216 * a**5 * b**15 - 22 * b**20)
        * _osum(R, ("ws0", 3), ("ws1", 1), ("ws4", 1))
        + a**2
        * b**3
        * (32 * a**25 - 195 * a**20 * b**5 + 4110 * a**15 * b**10 + 900 * a**10 * b**15 + 480 * a**5 * b**20 + 9 * b**25)
        * _osum(R, ("ws0", 1), ("ws1", 2), ("ws4", 2))
        - a**3
        * b**2
        * (9 * a**25 - 480 * a**20 * b**5 + 900 * a**15 * b**10 - 4110 * a**10 * b**15 - 195 * a**5 * b**20 - 32 * b**25)
        * _osum(R, ("ws0", 1), ("ws2", 2), ("ws3", 2))
        - 5
        * a**4
        * b**6
        * (22 * a**20 + 216 * a**15 * b**5 - 57 * a**10 * b**10 + 134 * a**5 * b**15 - 3 * b**20)
        * _osum(R, ("ws0", 3), ("ws2", 1), ("ws3", 1))
        + (
            a**30
            - 258 * a**25 * b**5
            + 3435 * a**20 * b**10
            - 23040 * a**15 * b**15
            - 3435 * a**10 * b**20
            - 258 * a**5 * b**25
            - b**30
        )
        * _prod(R, WS)
    )
    return DiscreteCovariant("T30", "S5W*", p, 30)


def _build_invariants() -> dict:
    R = _R("1")
    return {
        "D": DiscreteCovariant("D", "1", disc_D(R), 12),
        "c4": DiscreteCovariant("c4", "1", inv_c4(R), 20),
        "c6": DiscreteCovariant("c6", "1", inv_c6(R), 30),
    }


NAMES = (
    "S10", "S10b", "T30", "F1", "F2", "F3", "G1", "G2", "G3",
    "F10", "F20", "F30", "G10", "G20", "G30",
    "S20", "S30", "S30'", "S40", "S50", "U", "H", "Q6", "P2", "D", "c4", "c6",
)  # fmt: skip


@lru_cache(maxsize=None)
def _table() -> dict:
    out = {}
    out.update(_build_quintics())
    out.update(_build_invariants())
    out["S10"] = printed_S10()
    out["T30"] = _build_T30()
    out["U"] = _build_U()
    out["H"] = _build_H()
    out["Q6"] = _build_Q6()
    out["P2"] = _build_P2()
    return out


def builtin(name: str) -> DiscreteCovariant:
    try:
        return _table()[name]
    except KeyError:
        raise CatalogueError(f"unknown covariant {name!r}") from None


def shifted(f: DiscreteCovariant, k: int = 1) -> DiscreteCovariant:
    return DiscreteCovariant(f.name, f.tag, shift(f.poly, k), f.degree)
