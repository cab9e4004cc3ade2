"""Passing from the Hesse family to the u1 family.

For u1(l) = (gV, gW) u(a, 1) with (gV, gW) a torus element, a covariant
value transforms term by term: a term ``a^k * T`` whose tensor T has torus
character ``alpha^n`` becomes ``a^k alpha^n``, and this is rewritten as a
monomial ``l^m`` using ``l_i = a * alpha_i^2 / (alpha_{i+1} alpha_{i+4})``
and ``prod(alpha) = 1``.  The exponents m are the unique solution of

    sum(m) = k,   C m = n - (sum(n)/5) * (1,1,1,1,1)

with C the circulant matrix of (2, -1, 0, 0, -1).  The extension is
regular exactly when every m is a nonnegative integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil

from ..algebra import QQ, Poly, solve
from ..alphabets import LAMBDA
from .catalogue import DiscreteCovariant
from .spaces import monomial_character


class EngineError(ValueError):
    pass


def _circulant_column(j):
    col = [0] * 5
    col[j] = 2
    col[(j + 1) % 5] = -1
    col[(j - 1) % 5] = -1
    return col


@lru_cache(maxsize=None)
def lambda_exponents(character: tuple, k: int) -> tuple:
    """Exponents m with a^k alpha^character = l^m (rational in general)."""
    n = [Fraction(x) for x in character]
    t = sum(n) / 5
    target = [x - t for x in n] + [Fraction(k)]
    cols = [_circulant_column(j) + [1] for j in range(5)]
    sol = solve(cols, target, QQ)
    if sol is None:
        raise EngineError("inconsistent torus system")  # cannot happen: C has corank 1
    return tuple(Fraction(int(x.numerator), int(x.denominator)) for x in sol)


def check_lambda_rule(character, k, m, alphas) -> bool:
    """Oracle: a^k alpha^n == l^m at a concrete alpha with prod(alpha) = 1 and a = 1."""
    from gmpy2 import mpq

    al = [mpq(x) for x in alphas]
    prod = mpq(1)
    for x in al:
        prod *= x
    if prod != 1:
        raise EngineError("alphas must multiply to 1")
    lam = [al[i] ** 2 / (al[(i + 1) % 5] * al[(i + 4) % 5]) for i in range(5)]
    lhs = mpq(1)
    for x, e in zip(al, character):
        lhs *= x**e
    rhs = mpq(1)
    for x, e in zip(lam, m):
        if Fraction(e).denominator != 1:
            return False
        rhs *= x ** int(e)
    return lhs == rhs


@dataclass(frozen=True)
class FailureReport:
    covariant: str
    kind: str  # "weights", "denominator" or "residue"
    tensor: Poly | None = None
    a_exponent: int | None = None
    exponents: tuple | None = None
    min_k: int | None = None
    detail: str = ""

    def __bool__(self):
        return False


@dataclass(frozen=True)
class U1Value:
    covariant: str
    tag: str
    poly: Poly  # in l0..l4 and the tensor symbols

    def __bool__(self):
        return True

    def at(self, lams) -> Poly:
        """Specialise l0..l4 (scalars or Polys)."""
        return self.poly.subs(dict(zip(LAMBDA, lams)), partial=True)


def extend_to_u1(f: DiscreteCovariant, check_weights: bool = True):
    """The u1 extension f1 of ``f``, or a :class:`FailureReport`."""
    wt = f.weights
    if check_weights and not wt.integral:
        return FailureReport(f.name, "weights", detail=f"weights (p, q) = ({wt.p}, {wt.q}) are not integral")
    sp = f.space
    syms = sp.symbols
    src = f.at_b1()
    R1 = sp.u1_ring(f.ring.domain)
    ia = src.ring.index("a")
    sym_idx = [src.ring.index(s) for s in syms]
    out = {}
    worst = 0
    bad = None
    for exps, c in src.term_list():
        k = exps[ia]
        tens = tuple(exps[i] for i in sym_idx)
        ch = monomial_character(syms, tens)
        m = lambda_exponents(ch, k)
        if any(x.denominator != 1 for x in m):
            mono = Poly(src.ring, {src.ring.pack([e if i in sym_idx else 0 for i, e in enumerate(exps)]): src.ring.domain.one})
            return FailureReport(
                f.name, "residue", mono, k, m, None, "torus exponents are not integral (malformed input)"
            )
        low = -min(int(x) for x in m)
        if low > worst:
            worst = low
            bad = (exps, k, m)
        key = R1.pack([int(x) for x in m] + list(tens)) if low <= 0 else None
        if key is not None:
            out[key] = out.get(key, 0) + c
    if worst > 0:
        exps, k, m = bad
        mono = Poly(src.ring, {src.ring.pack([e if i in sym_idx else 0 for i, e in enumerate(exps)]): src.ring.domain.one})
        return FailureReport(
            f.name,
            "denominator",
            mono,
            k,
            m,
            worst,
            f"term a^{k}*{mono} needs l-exponents {tuple(int(x) for x in m)}",
        )
    return U1Value(f.name, f.tag, Poly._clean(R1, out))


def minimal_delta_power(f: DiscreteCovariant) -> int:
    """Least k with Delta^k f passing the denominator test (0 if f passes)."""
    r = extend_to_u1(f, check_weights=False)
    if isinstance(r, U1Value):
        return 0
    if r.kind != "denominator":
        raise EngineError(f"{f.name}: {r.detail}")
    return r.min_k


@dataclass(frozen=True)
class CovarianceResult:
    covariant: str
    passed: bool
    report: object

    def __bool__(self):
        return self.passed


def covariance_test(f: DiscreteCovariant) -> CovarianceResult:
    """True iff f has integral weights and a regular u1 extension."""
    r = extend_to_u1(f)
    return CovarianceResult(f.name, isinstance(r, U1Value), r)


def round_trip(f: DiscreteCovariant, f1: U1Value) -> bool:
    """f1(a, ..., a) == f(a, 1) as polynomials."""
    R = f.ring
    a = R.gen("a")
    lhs = f1.poly.subs({x: a for x in LAMBDA}, target=R, partial=True)
    return lhs == f.at_b1()


def ceil_div(x, y) -> int:
    return ceil(Fraction(x, y))
