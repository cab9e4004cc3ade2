"""Exact scalar domains: the rationals, Q(zeta_5) and prime fields.

Polynomial code only ever needs ``+``, ``-`` and ``*`` on coefficients plus
the hooks defined here (``coerce``, ``reduce``, ``is_zero``, ``inv``), so a
domain is a small object that knows how to build and normalise its own
elements.  Rationals are ``gmpy2.mpq`` (always reduced, positive
denominator), prime-field elements are plain ``int`` in ``range(p)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import gmpy2
from gmpy2 import mpq, mpz


class DomainError(ValueError):
    """Raised for invalid domain construction or incompatible scalars."""


def _is_prime(n: int) -> bool:
    return n >= 2 and bool(gmpy2.is_prime(n))


class Domain:
    kind: str = ""
    zero: object
    one: object

    def coerce(self, x):
        raise NotImplementedError

    def reduce(self, c):
        return c

    def is_zero(self, c) -> bool:
        return not c

    def inv(self, c):
        raise NotImplementedError

    def div(self, x, y):
        return self.reduce(x * self.inv(y))

    def to_str(self, c) -> str:
        return str(c)

    def from_str(self, s: str):
        return self.coerce(s)

    def descriptor(self) -> dict:
        raise NotImplementedError

    def characteristic(self) -> int:
        return 0

    def zeta5(self):
        """A designated primitive 5th root of unity, if the domain has one."""
        raise DomainError(f"{self!r} has no primitive 5th root of unity")

    def __reduce__(self):
        return (domain_from_descriptor, (self.descriptor(),))


class RationalField(Domain):
    kind = "Q"

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)

    def coerce(self, x):
        if isinstance(x, str):
            x = x.strip()
            if not x:
                raise DomainError("empty rational literal")
            return mpq(x)
        if isinstance(x, Fraction):
            return mpq(x.numerator, x.denominator)
        if isinstance(x, (int, type(mpz(0)), type(mpq(0)))):
            return mpq(x)
        if isinstance(x, float):
            raise DomainError("floats are not exact scalars")
        raise DomainError(f"cannot coerce {x!r} to Q")

    def inv(self, c):
        if not c:
            raise ZeroDivisionError("inverse of zero")
        return 1 / mpq(c)

    def to_str(self, c) -> str:
        c = mpq(c)
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"

    def descriptor(self) -> dict:
        return {"type": "Q"}

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


class PrimeField(Domain):
    kind = "Fp"

    def __init__(self, p: int):
        p = int(p)
        if not _is_prime(p):
            raise DomainError(f"{p} is not prime")
        if p <= 5:
            raise DomainError("prime fields require p > 5")
        self.p = p
        self.zero = 0
        self.one = 1

    def coerce(self, x):
        p = self.p
        if isinstance(x, str):
            x = mpq(x.strip())
        if isinstance(x, Fraction):
            x = mpq(x.numerator, x.denominator)
        if isinstance(x, type(mpq(0))):
            num, den = int(x.numerator), int(x.denominator)
            if den % p == 0:
                raise DomainError(f"denominator {den} vanishes mod {p}")
            return num * pow(den, -1, p) % p
        if isinstance(x, (int, type(mpz(0)))):
            return int(x) % p
        raise DomainError(f"cannot coerce {x!r} to F_{p}")

    def reduce(self, c):
        return c % self.p

    def is_zero(self, c) -> bool:
        return c % self.p == 0

    def inv(self, c):
        c %= self.p
        if not c:
            raise ZeroDivisionError("inverse of zero")
        return pow(c, -1, self.p)

    def descriptor(self) -> dict:
        return {"type": "Fp", "p": self.p}

    def zeta5(self):
        return _fp_zeta5(self.p)

    def sqrt(self, c):
        """Return a square root of ``c`` or ``None`` (Tonelli-Shanks via brute force for small p)."""
        c %= self.p
        if c == 0:
            return 0
        if pow(c, (self.p - 1) // 2, self.p) != 1:
            return None
        return _tonelli(c, self.p)

    def characteristic(self) -> int:
        return self.p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


@lru_cache(maxsize=None)
def _fp_zeta5(p: int) -> int:
    if (p - 1) % 5:
        raise DomainError(f"F_{p} has no primitive 5th root of unity (need p = 1 mod 5)")
    # smallest generator-derived root, deterministic
    for g in range(2, p):
        z = pow(g, (p - 1) // 5, p)
        if z != 1:
            return z
    raise AssertionError("unreachable")


def _tonelli(n: int, p: int) -> int:
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(n, q, p), pow(n, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


class Zeta5:
    """Element of Q(zeta_5) in the basis 1, z, z^2, z^3 with z^4 = -1 - z - z^2 - z^3."""

    __slots__ = ("c",)

    def __init__(self, coords):
        c = tuple(mpq(x) for x in coords)
        if len(c) != 4:
            raise DomainError("Q(zeta_5) elements have 4 rational coordinates")
        self.c = c

    @classmethod
    def _lift(cls, x):
        if isinstance(x, Zeta5):
            return x
        return cls((x, 0, 0, 0))

    def __add__(self, other):
        o = self._lift(other).c
        return Zeta5(tuple(x + y for x, y in zip(self.c, o)))

    __radd__ = __add__

    def __neg__(self):
        return Zeta5(tuple(-x for x in self.c))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other).c
        prod = [mpq(0)] * 7
        for i, x in enumerate(self.c):
            if x:
                for j, y in enumerate(o):
                    if y:
                        prod[i + j] += x * y
        # reduce powers >= 4 using z^5 = 1 and z^4 = -(1 + z + z^2 + z^3)
        for k in (6, 5):
            prod[k - 5] += prod[k]
            prod[k] = mpq(0)
        top = prod[4]
        return Zeta5(tuple(prod[i] - top for i in range(4)))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = Zeta5((1, 0, 0, 0)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugates(self):
        """The four Galois conjugates z -> z^k, k = 1..4."""
        out = []
        for k in range(1, 5):
            acc = Zeta5((0, 0, 0, 0))
            for i, x in enumerate(self.c):
                if x:
                    acc = acc + zeta_power((i * k) % 5) * x
            out.append(acc)
        return out

    def norm(self):
        n = Zeta5((1, 0, 0, 0))
        for g in self.conjugates():
            n = n * g
        assert not any(n.c[1:]), "norm must be rational"
        return n.c[0]

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero")
        conj = self.conjugates()
        rest = conj[1] * conj[2] * conj[3]  # conjugates k = 2, 3, 4
        n = (self * rest).c[0]
        return Zeta5(tuple(x / n for x in rest.c))

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __bool__(self):
        return any(self.c)

    def __eq__(self, other):
        if isinstance(other, (int, type(mpq(0)), type(mpz(0)), Fraction)):
            other = Zeta5._lift(other)
        return isinstance(other, Zeta5) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def is_rational(self) -> bool:
        return not any(self.c[1:])

    def __repr__(self):
        return f"Zeta5({', '.join(str(x) for x in self.c)})"

    def __str__(self):
        q = RationalField()
        return "[" + ",".join(q.to_str(x) for x in self.c) + "]"


def zeta_power(k: int) -> Zeta5:
    k %= 5
    if k == 4:
        return Zeta5((-1, -1, -1, -1))
    coords = [0, 0, 0, 0]
    coords[k] = 1
    return Zeta5(coords)


class CyclotomicField5(Domain):
    kind = "Qzeta5"

    def __init__(self):
        self.zero = Zeta5((0, 0, 0, 0))
        self.one = Zeta5((1, 0, 0, 0))

    def coerce(self, x):
        if isinstance(x, Zeta5):
            return x
        if isinstance(x, str):
            s = x.strip()
            if s.startswith("["):
                parts = s.strip("[]").split(",")
                return Zeta5([mpq(p.strip()) for p in parts])
            return Zeta5._lift(mpq(s))
        if isinstance(x, (list, tuple)):
            return Zeta5(x)
        return Zeta5._lift(RationalField().coerce(x))

    def is_zero(self, c) -> bool:
        return not c

    def inv(self, c):
        return self.coerce(c).inverse()

    def to_str(self, c) -> str:
        return str(self.coerce(c))

    def descriptor(self) -> dict:
        return {"type": "Qzeta5"}

    def zeta5(self):
        return zeta_power(1)

    def __repr__(self):
        return "QQ(zeta5)"

    def __eq__(self, other):
        return isinstance(other, CyclotomicField5)

    def __hash__(self):
        return hash("Qzeta5")


QQ = RationalField()
QZ5 = CyclotomicField5()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def domain_from_descriptor(desc: dict) -> Domain:
    kind = desc.get("type")
    if kind == "Q":
        return QQ
    if kind == "Qzeta5":
        return QZ5
    if kind == "Fp":
        return GF(int(desc["p"]))
    raise DomainError(f"unknown field descriptor {desc!r}")
