"""Target spaces Y, their symbols, torus characters and the H5 action.

Each target space is a tensor product of symmetric and exterior powers of
V, V*, W, W*.  An element is a polynomial in the basis symbols of
:mod:`enqcover.alphabets`, homogeneous of the right degree in each factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra import QQ, Domain, Poly, PolyRing, ring
from ..alphabets import AB, BASES, LAMBDA, parse_symbol, wedge, wedge_names


class SpaceError(ValueError):
    pass


# side (V or W), sign (+1 for V/W, -1 for duals)
_BASE_INFO = {"v": ("V", 1), "vs": ("V", -1), "w": ("W", 1), "ws": ("W", -1)}


@dataclass(frozen=True)
class Factor:
    kind: str  # "S" (symmetric power) or "L" (exterior square)
    base: str  # "v", "vs", "w", "ws"
    power: int

    def symbols(self) -> tuple:
        if self.kind == "S":
            return BASES[self.base]
        return wedge_names(self.base)

    def degrees(self):
        side, sign = _BASE_INFO[self.base]
        return side, sign * self.power


@dataclass(frozen=True)
class TargetSpace:
    tag: str
    factors: tuple

    @property
    def symbols(self) -> tuple:
        out = []
        for f in self.factors:
            out.extend(s for s in f.symbols() if s not in out)
        return tuple(out)

    @property
    def rs(self) -> tuple:
        r = s = 0
        for f in self.factors:
            side, d = f.degrees()
            if side == "V":
                r += d
            else:
                s += d
        return r, s

    def coefficient_ring(self, params=AB, domain: Domain = QQ) -> PolyRing:
        return ring(tuple(params) + self.symbols, domain)

    def u1_ring(self, domain: Domain = QQ) -> PolyRing:
        return ring(LAMBDA + self.symbols, domain)

    def contains(self, p: Poly) -> bool:
        """Is ``p`` homogeneous of the right degree in every factor?"""
        if not p:
            return True
        for f in self.factors:
            deg = f.power if f.kind == "S" else 1
            if not p.is_homogeneous_in(f.symbols(), deg):
                return False
        allowed = set(self.symbols)
        return all(v in allowed for v in p.variables() if parse_symbol(v) is not None)


def _space(tag, *parts) -> TargetSpace:
    return TargetSpace(tag, tuple(Factor(*p) for p in parts))


SPACES = {
    "1": _space("1"),
    "L2V.W": _space("L2V.W", ("L", "v", 2), ("S", "w", 1)),
    "V*.L2W": _space("V*.L2W", ("S", "vs", 1), ("L", "w", 2)),
    "V.L2W*": _space("V.L2W*", ("S", "v", 1), ("L", "ws", 2)),
    "L2V*.W*": _space("L2V*.W*", ("L", "vs", 2), ("S", "ws", 1)),
    "V*.S2W": _space("V*.S2W", ("S", "vs", 1), ("S", "w", 2)),
    "S2V*.W*": _space("S2V*.W*", ("S", "vs", 2), ("S", "ws", 1)),
    "S2V.W": _space("S2V.W", ("S", "v", 2), ("S", "w", 1)),
    "V.S2W*": _space("V.S2W*", ("S", "v", 1), ("S", "ws", 2)),
    "S5W": _space("S5W", ("S", "w", 5)),
    "S5V": _space("S5V", ("S", "v", 5)),
    "S5V*": _space("S5V*", ("S", "vs", 5)),
    "S5W*": _space("S5W*", ("S", "ws", 5)),
    "L2W*.S2W": _space("L2W*.S2W", ("L", "ws", 2), ("S", "w", 2)),
    "S10W": _space("S10W", ("S", "w", 10)),
    "S15W": _space("S15W", ("S", "w", 15)),
}


def space(tag: str) -> TargetSpace:
    try:
        return SPACES[tag]
    except KeyError:
        raise SpaceError(f"unknown target space {tag!r}") from None


# -- torus characters ---------------------------------------------------
def _unit(i):
    v = [0] * 5
    v[i % 5] = 1
    return v


def symbol_character(name: str) -> tuple:
    """Exponent vector of alpha by which the torus element scales ``name``.

    v_i scales by alpha_{i+1} alpha_{i+4}, w_i by alpha_i; duals invert;
    wedges multiply.
    """
    info = parse_symbol(name)
    if info is None:
        raise SpaceError(f"{name!r} is not a tensor symbol")
    if len(info) == 2:
        base, i = info
        if base in ("v", "vs"):
            ch = [x + y for x, y in zip(_unit(i + 1), _unit(i + 4))]
        else:
            ch = _unit(i)
        sign = _BASE_INFO[base][1]
        return tuple(sign * x for x in ch)
    pre, i, j = info
    base = {"V": "v", "Vs": "vs", "W": "w", "Ws": "ws"}[pre]
    a = symbol_character(f"{base}{i}")
    b = symbol_character(f"{base}{j}")
    return tuple(x + y for x, y in zip(a, b))


def monomial_character(names, exps) -> tuple:
    acc = [0] * 5
    for v, e in zip(names, exps):
        if e and parse_symbol(v) is not None:
            for i, x in enumerate(symbol_character(v)):
                acc[i] += e * x
    return tuple(acc)


# -- H5 action ----------------------------------------------------------
def sigma_weight(name: str) -> int:
    """sigma multiplies the symbol by zeta5^weight."""
    info = parse_symbol(name)
    if len(info) == 2:
        base, i = info
        mult = {"v": 2, "vs": -2, "w": 1, "ws": -1}[base]
        return (mult * i) % 5
    pre, i, j = info
    base = {"V": "v", "Vs": "vs", "W": "w", "Ws": "ws"}[pre]
    return (sigma_weight(f"{base}{i}") + sigma_weight(f"{base}{j}")) % 5


def shift_symbol(name: str, k: int = 1):
    """tau^k on a symbol: every index increases by k; returns (name, sign)."""
    info = parse_symbol(name)
    if len(info) == 2:
        base, i = info
        return f"{base}{(i + k) % 5}", 1
    pre, i, j = info
    base = {"V": "v", "Vs": "vs", "W": "w", "Ws": "ws"}[pre]
    return wedge(base, i + k, j + k)


def shift(p: Poly, k: int = 1) -> Poly:
    """Apply tau^k to every tensor symbol of ``p`` (other variables fixed)."""
    R = p.ring
    assignment = {}
    for v in R.names:
        if parse_symbol(v) is not None:
            new, sign = shift_symbol(v, k)
            if new not in R:
                raise SpaceError(f"ring lacks {new!r}")
            assignment[v] = R.gen(new) * sign
    return p.subs(assignment, target=R, partial=True)


def is_h5_invariant(p: Poly) -> bool:
    R = p.ring
    sym = [i for i, v in enumerate(R.names) if parse_symbol(v) is not None]
    wts = {i: sigma_weight(R.names[i]) for i in sym}
    for exps, _ in p.term_list():
        if sum(exps[i] * wts[i] for i in sym) % 5:
            return False
    return shift(p) == p


def orbit_sum(mono: Poly) -> Poly:
    """sum over k of tau^k(mono), each distinct image counted once."""
    out = mono.ring.zero()
    seen = set()
    for k in range(5):
        img = shift(mono, k)
        key = frozenset(img.terms)
        if key in seen:
            continue
        seen.add(key)
        out = out + img
    return out


def rho_substitution(R: PolyRing, gV, gW, gV_inv=None, gW_inv=None) -> dict:
    """Substitution implementing rho(gV, gW) on the tensor symbols of ``R``.

    Basis vectors follow g.e_i = sum_j g[j][i] e_j; dual vectors use the
    inverse transpose.  Wedge symbols expand bilinearly.
    """
    dom = R.domain
    mats = {"v": gV, "w": gW}
    if any(parse_symbol(v) and parse_symbol(v)[0] in ("vs", "ws", "Vs", "Ws") for v in R.names):
        from ..algebra import mat_inv

        gV_inv = gV_inv or mat_inv([list(r) for r in gV], dom)
        gW_inv = gW_inv or mat_inv([list(r) for r in gW], dom)
        # contragredient: e*_i -> sum_j (g^-T)[j][i] e*_j = sum_j g_inv[i][j] e*_j
        mats["vs"] = [list(r) for r in zip(*gV_inv)]
        mats["ws"] = [list(r) for r in zip(*gW_inv)]

    def image(base, i):
        g = mats[base]
        acc = R.zero()
        for j in range(5):
            c = g[j][i]
            if not dom.is_zero(c):
                acc = acc + R.gen(f"{base}{j}") * c
        return acc

    def wedge_image(base, i, j):
        g = mats[base]
        acc = R.zero()
        for x in range(5):
            for y in range(5):
                if x == y:
                    continue
                c = dom.reduce(g[x][i] * g[y][j])
                if dom.is_zero(c):
                    continue
                name, sign = wedge(base, x, y)
                acc = acc + R.gen(name) * (c * sign)
        return acc

    out = {}
    for v in R.names:
        info = parse_symbol(v)
        if info is None:
            continue
        if len(info) == 2:
            out[v] = image(*info)
        else:
            pre, i, j = info
            base = {"V": "v", "Vs": "vs", "W": "w", "Ws": "ws"}[pre]
            out[v] = wedge_image(base, i, j)
    return out


def rho(p: Poly, gV, gW) -> Poly:
    sub = rho_substitution(p.ring, gV, gW)
    return p.subs(sub, target=p.ring, partial=True)


def weights(degree: int, rs) -> "WeightPair":
    r, s = rs
    return WeightPair(Fraction(2 * degree - r, 5), Fraction(degree - s, 5))


@dataclass(frozen=True)
class WeightPair:
    p: Fraction
    q: Fraction

    @property
    def integral(self) -> bool:
        return self.p.denominator == 1 and self.q.denominator == 1

    def as_tuple(self):
        return (self.p, self.q)
