"""Shipped substitution tables and their cross-check.

Each row says: the orbit sum of ``tensor`` with prefix ``a^prefix`` maps,
on passing to the u1 family, to the orbit sum of ``decoration * tensor``.
The rows are literal data (``data/tables.json``); :func:`check_row`
recomputes the decoration two ways and compares.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from ..algebra import QQ, Poly, ring
from ..alphabets import LAMBDA
from .engine import lambda_exponents
from .spaces import monomial_character, shift, space

TABLE_VERSION = 1


class TableError(ValueError):
    pass


@dataclass(frozen=True)
class TableRow:
    tag: str
    tensor: Poly  # representative monomial of the orbit, coefficient +-1
    prefix: int
    decoration: tuple  # exponents of l0..l4

    @property
    def character(self) -> tuple:
        syms = self.tensor.ring.names
        (exps, _), = self.tensor.term_list()
        return monomial_character(syms, exps)

    def decorated_orbit(self) -> Poly:
        """sum over tau^k of l^(shifted decoration) * tau^k(tensor)."""
        sp = space(self.tag)
        R = ring(LAMBDA + sp.symbols, QQ)
        t = self.tensor.embed(R)
        out = R.zero()
        seen = set()
        for k in range(5):
            img = shift(t, k)
            key = frozenset(img.terms)
            if key in seen:
                continue
            seen.add(key)
            deco = R.monomial({LAMBDA[(i + k) % 5]: e for i, e in enumerate(self.decoration)})
            out = out + deco * img
        return out


def _parse_decoration(text: str) -> tuple:
    R = ring(LAMBDA)
    p = R.parse(text)
    terms = p.term_list()
    if len(terms) != 1 or terms[0][1] != 1:
        raise TableError(f"decoration {text!r} is not a monic monomial")
    return tuple(terms[0][0])


def parse_tables(doc: dict) -> list:
    if doc.get("version") != TABLE_VERSION:
        raise TableError(f"unsupported table version {doc.get('version')!r}")
    rows = []
    for tab in doc["tables"]:
        sp = space(tab["space"])
        R = ring(sp.symbols, QQ)
        for r in tab["rows"]:
            t = R.parse(r["tensor"])
            if len(t) != 1:
                raise TableError(f"tensor {r['tensor']!r} is not a monomial")
            rows.append(TableRow(sp.tag, t, int(r["prefix"]), _parse_decoration(r["decoration"])))
    return rows


@lru_cache(maxsize=None)
def load_tables() -> tuple:
    text = resources.files("enqcover.data").joinpath("tables.json").read_text()
    return tuple(parse_tables(json.loads(text)))


def rows_for(tag: str) -> list:
    return [r for r in load_tables() if r.tag == tag]


# -- stepwise elimination ----------------------------------------------
# Log-space vectors over (a, alpha0..alpha4, l0..l4).
_A, _AL, _L = 0, 1, 6


def _relations():
    sub1, sub2 = [], []
    for i in range(5):
        r = [Fraction(0)] * 11
        r[_L + i] += 1  # l_i = a alpha_i^2 / (alpha_{i+1} alpha_{i+4})
        r[_A] -= 1
        r[_AL + i] -= 2
        r[_AL + (i + 1) % 5] += 1
        r[_AL + (i + 4) % 5] += 1
        sub1.append(r)
        r = [Fraction(0)] * 11
        r[_AL + i] += 5  # alpha_i^5 = l_i^2 / (l_{i+2} l_{i+3})
        r[_L + i] -= 2
        r[_L + (i + 2) % 5] += 1
        r[_L + (i + 3) % 5] += 1
        sub2.append(r)
    sub3 = [Fraction(0)] * 11
    sub3[_A] = Fraction(5)  # a^5 = prod l_i
    for i in range(5):
        sub3[_L + i] = Fraction(-1)
    return sub1, sub2, sub3


def _reduce(vec, row, pivot):
    if vec[pivot] == 0:
        return vec
    f = vec[pivot] / row[pivot]
    return [x - f * y for x, y in zip(vec, row)]


def eliminate(character, k) -> tuple:
    """l-exponents of a^k alpha^character, eliminating alpha0..alpha2 with the
    first rule, alpha3, alpha4 with the second and a with the third."""
    sub1, sub2, sub3 = _relations()
    vec = [Fraction(k)] + [Fraction(x) for x in character] + [Fraction(0)] * 5
    pivots = []  # (pivot index, reduced relation)
    for i in range(3):
        r = sub1[i]
        for p, row in pivots:
            r = _reduce(r, row, p)
        pivots.append((_AL + i, r))
    for i in (3, 4):
        r = sub2[i]
        for p, row in pivots:
            r = _reduce(r, row, p)
        pivots.append((_AL + i, r))
    r = sub3
    for p, row in pivots:
        r = _reduce(r, row, p)
    pivots.append((_A, r))
    for p, row in pivots:
        vec = _reduce(vec, row, p)
    if any(vec[i] for i in range(_L)):
        raise TableError("elimination left alpha or a behind")
    return tuple(vec[_L:])


@dataclass(frozen=True)
class RowCheck:
    row: TableRow
    solved: tuple
    eliminated: tuple
    orbit_ok: bool

    @property
    def ok(self) -> bool:
        want = tuple(Fraction(x) for x in self.row.decoration)
        return self.solved == want and self.eliminated == want and self.orbit_ok


def check_row(row: TableRow) -> RowCheck:
    ch = row.character
    solved = lambda_exponents(ch, row.prefix)
    elim = eliminate(ch, row.prefix)
    orbit_ok = True
    syms = row.tensor.ring.names
    for k in range(1, 5):
        img = shift(row.tensor, k)
        (exps, _), = img.term_list()
        m = lambda_exponents(monomial_character(syms, exps), row.prefix)
        rolled = tuple(Fraction(row.decoration[(i - k) % 5]) for i in range(5))
        orbit_ok &= m == rolled
    return RowCheck(row, solved, elim, orbit_ok)


def check_all() -> list:
    return [check_row(r) for r in load_tables()]
