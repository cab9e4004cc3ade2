"""Exact sparse multivariate polynomials.

A :class:`PolyRing` fixes an ordered tuple of variable names and a scalar
domain.  Monomials are packed into a single Python int: each exponent gets a
16-bit field (first variable in the most significant field) and the total
degree sits above all of them.  Integer comparison of packed keys is then
graded-lexicographic order, and multiplying monomials is integer addition.
"""

from __future__ import annotations

from functools import lru_cache

from .domains import QQ, Domain, DomainError

BITS = 16
FIELD = (1 << BITS) - 1
MAX_EXP = FIELD


class PolyError(ValueError):
    pass


class PolyRing:
    """Polynomial ring over ``domain`` in the named variables."""

    def __init__(self, names, domain: Domain = QQ):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise PolyError(f"duplicate variable names in {names}")
        self.names = names
        self.domain = domain
        self.n = len(names)
        self._index = {v: i for i, v in enumerate(names)}
        self._shifts = tuple(BITS * (self.n - 1 - i) for i in range(self.n))
        self._deg_shift = BITS * self.n
        self._units = tuple((1 << self._deg_shift) | (1 << s) for s in self._shifts)

    # -- construction -------------------------------------------------
    def __repr__(self):
        return f"PolyRing({', '.join(self.names)}; {self.domain!r})"

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.domain == other.domain
        )

    def __hash__(self):
        return hash((self.names, self.domain))

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise PolyError(f"{name!r} is not a variable of {self!r}") from None

    def __contains__(self, name):
        return name in self._index

    def pack(self, exps) -> int:
        key = 0
        deg = 0
        for e, s in zip(exps, self._shifts):
            if e < 0 or e > MAX_EXP:
                raise PolyError(f"exponent {e} out of range")
            key |= e << s
            deg += e
        return key | (deg << self._deg_shift)

    def unpack(self, key: int) -> tuple:
        return tuple((key >> s) & FIELD for s in self._shifts)

    def key_degree(self, key: int) -> int:
        return key >> self._deg_shift

    def zero(self) -> Poly:
        return Poly(self, {})

    def one(self) -> Poly:
        return Poly(self, {0: self.domain.one})

    def const(self, c) -> Poly:
        c = self.domain.coerce(c)
        if self.domain.is_zero(c):
            return self.zero()
        return Poly(self, {0: c})

    def gen(self, name: str) -> Poly:
        return Poly(self, {self._units[self.index(name)]: self.domain.one})

    def gens(self, *names) -> tuple:
        names = names or self.names
        return tuple(self.gen(v) for v in names)

    def monomial(self, exps: dict | tuple, coeff=1) -> Poly:
        if isinstance(exps, dict):
            vec = [0] * self.n
            for v, e in exps.items():
                vec[self.index(v)] += e
            exps = vec
        return Poly._clean(self, {self.pack(exps): self.domain.coerce(coeff)})

    def from_terms(self, terms) -> Poly:
        """Build from an iterable of (exponent tuple, coefficient)."""
        acc = {}
        for exps, c in terms:
            k = self.pack(exps)
            acc[k] = acc.get(k, 0) + self.domain.coerce(c)
        return Poly._clean(self, acc)

    def __call__(self, x) -> Poly:
        if isinstance(x, Poly):
            if x.ring == self:
                return x
            return x.embed(self)
        if isinstance(x, str):
            return self.parse(x)
        return self.const(x)

    def parse(self, text: str) -> Poly:
        """Parse the canonical rendering produced by ``str(poly)``."""
        text = text.replace(" ", "")
        if text in ("", "0"):
            return self.zero()
        out = self.zero()
        for sign, body in _split_terms(text):
            coeff = "1"
            factors = body.split("*")
            if factors and _is_scalar_token(factors[0]):
                coeff = factors.pop(0)
            mono = {}
            for f in factors:
                if not f:
                    raise PolyError(f"malformed term {body!r}")
                if "^" in f:
                    v, e = f.split("^")
                    mono[v] = mono.get(v, 0) + int(e)
                else:
                    mono[f] = mono.get(f, 0) + 1
            c = self.domain.from_str(coeff)
            if sign == "-":
                c = -c
            out = out + self.monomial(mono, c)
        return out

    def extend(self, extra_names) -> PolyRing:
        return ring(self.names + tuple(v for v in extra_names if v not in self), self.domain)

    def with_domain(self, domain: Domain) -> PolyRing:
        return ring(self.names, domain)


def _split_terms(text: str):
    # split on +/- that are not inside [...] (Q(zeta5) literals) and not exponent signs
    depth = 0
    start = 0
    pieces = []
    for i, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start and text[i - 1] not in "^*/":
            pieces.append(text[start:i])
            start = i
    pieces.append(text[start:])
    for p in pieces:
        if p[0] in "+-":
            yield p[0], p[1:]
        else:
            yield "+", p


def _is_scalar_token(tok: str) -> bool:
    return tok[0].isdigit() or tok[0] == "["


@lru_cache(maxsize=None)
def ring(names, domain: Domain = QQ) -> PolyRing:
    """Cached ring constructor so equal rings are shared objects."""
    return PolyRing(tuple(names), domain)


def join_rings(*rings: PolyRing) -> PolyRing:
    """Smallest ring containing all variables of ``rings`` (first-seen order)."""
    dom = rings[0].domain
    names: list = []
    for r in rings:
        if r.domain != dom:
            raise DomainError("mixed scalar domains")
        names.extend(v for v in r.names if v not in names)
    return ring(tuple(names), dom)


class Poly:
    """Immutable sparse polynomial; ``terms`` maps packed monomial -> nonzero coefficient."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    @staticmethod
    def _clean(ring: PolyRing, acc: dict) -> Poly:
        dom = ring.domain
        if dom.kind == "Fp":
            p = dom.p
            out = {}
            for k, c in acc.items():
                c %= p
                if c:
                    out[k] = c
            return Poly(ring, out)
        return Poly(ring, {k: c for k, c in acc.items() if c})

    # -- basic protocol -----------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __hash__(self):
        return hash((self.ring.names, frozenset(self.terms.items())))

    def _coerce(self, other) -> Poly | None:
        if isinstance(other, Poly):
            if other.ring is self.ring or other.ring == self.ring:
                return other
            if other.ring.domain != self.ring.domain:
                raise DomainError("mixed scalar domains")
            raise PolyError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
        try:
            return self.ring.const(other)
        except DomainError:
            return None

    def __eq__(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                return False
            return self.terms == other.terms
        o = self._coerce(other)
        return o is not None and self.terms == o.terms

    def equals(self, other) -> bool:
        """Equality as polynomials, embedding both into the union of their rings."""
        if not isinstance(other, Poly):
            return self == other
        if other.ring == self.ring:
            return self.terms == other.terms
        R = join_rings(self.ring, other.ring)
        return self.embed(R).terms == other.embed(R).terms

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        acc = dict(big)
        get = acc.get
        for k, c in small.items():
            acc[k] = get(k, 0) + c
        return Poly._clean(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        return Poly._clean(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> Poly:
        c = self.ring.domain.coerce(c) if not _is_domain_elem(c, self.ring.domain) else c
        if self.ring.domain.is_zero(c):
            return self.ring.zero()
        return Poly._clean(self.ring, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except DomainError:
                return NotImplemented
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return self.ring.zero()
        if len(a) < len(b):
            a, b = b, a
        if self.max_degree() + other.max_degree() > MAX_EXP:
            raise PolyError("degree overflow")
        acc = {}
        get = acc.get
        bitems = list(b.items())
        for k1, c1 in a.items():
            for k2, c2 in bitems:
                k = k1 + k2
                acc[k] = get(k, 0) + c1 * c2
        return Poly._clean(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise PolyError("negative powers")
        if n == 0:
            return self.ring.one()
        if len(self.terms) == 1:
            ((k, c),) = self.terms.items()
            exps = self.ring.unpack(k)
            return Poly._clean(self.ring, {self.ring.pack([e * n for e in exps]): c**n})
        result, base = self.ring.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        """Division by a scalar (exact polynomial division is :meth:`exact_div`)."""
        if isinstance(other, Poly):
            if other.is_constant():
                other = other.constant_value()
            else:
                return self.exact_div(other)
        dom = self.ring.domain
        return self.scale(dom.inv(dom.coerce(other) if not _is_domain_elem(other, dom) else other))

    # -- inspection ----------------------------------------------------
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise PolyError("polynomial is not constant")
        return self.terms.get(0, self.ring.domain.zero)

    def constant_term(self):
        return self.terms.get(0, self.ring.domain.zero)

    def max_degree(self) -> int:
        if not self.terms:
            return 0
        return max(self.terms) >> self.ring._deg_shift

    def total_degree(self) -> int:
        """Total degree (-1 for the zero polynomial)."""
        if not self.terms:
            return -1
        return self.max_degree()

    def degree_in(self, names) -> int:
        """Maximal total degree in the given subset of variables (-1 for zero)."""
        if isinstance(names, str):
            names = (names,)
        idx = [self.ring.index(v) for v in names]
        best = -1
        for k in self.terms:
            e = self.ring.unpack(k)
            d = sum(e[i] for i in idx)
            best = max(best, d)
        return best

    def degrees_in(self, names) -> set:
        """Set of total degrees in the variable subset over all terms."""
        if isinstance(names, str):
            names = (names,)
        idx = [self.ring.index(v) for v in names]
        return {sum(self.ring.unpack(k)[i] for i in idx) for k in self.terms}

    def is_homogeneous_in(self, names, degree=None) -> bool:
        ds = self.degrees_in(names)
        if not ds:
            return True
        if len(ds) != 1:
            return False
        return degree is None or ds == {degree}

    def variables(self) -> tuple:
        used = [False] * self.ring.n
        for k in self.terms:
            for i, e in enumerate(self.ring.unpack(k)):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.ring.names, used) if u)

    def term_list(self):
        """(exponent tuple, coefficient) in descending graded-lex order."""
        return [(self.ring.unpack(k), self.terms[k]) for k in sorted(self.terms, reverse=True)]

    def coeff(self, mono: dict | tuple):
        if isinstance(mono, dict):
            vec = [0] * self.ring.n
            for v, e in mono.items():
                vec[self.ring.index(v)] = e
            mono = vec
        return self.terms.get(self.ring.pack(mono), self.ring.domain.zero)

    def collect(self, names) -> dict:
        """Split by monomials in ``names``: {exps over names: coefficient Poly (same ring)}."""
        idx = [self.ring.index(v) for v in names]
        out: dict = {}
        for k, c in self.terms.items():
            e = self.ring.unpack(k)
            sub = tuple(e[i] for i in idx)
            rest = list(e)
            for i in idx:
                rest[i] = 0
            out.setdefault(sub, {})[self.ring.pack(rest)] = c
        return {s: Poly(self.ring, t) for s, t in out.items()}

    def coefficient_of(self, mono: dict) -> Poly:
        """Coefficient (a Poly in the other variables) of the monomial ``mono``."""
        names = tuple(mono)
        key = tuple(mono[v] for v in names)
        return self.collect(names).get(key, self.ring.zero())

    def homogeneous_part(self, names, degree: int) -> Poly:
        idx = [self.ring.index(v) for v in names]
        return Poly(
            self.ring,
            {k: c for k, c in self.terms.items() if sum(self.ring.unpack(k)[i] for i in idx) == degree},
        )

    # -- maps ----------------------------------------------------------
    def diff(self, name: str) -> Poly:
        i = self.ring.index(name)
        s = self.ring._shifts[i]
        unit = self.ring._units[i]
        acc = {}
        for k, c in self.terms.items():
            e = (k >> s) & FIELD
            if e:
                acc[k - unit] = c * e
        return Poly._clean(self.ring, acc)

    def embed(self, target: PolyRing) -> Poly:
        """Reinterpret in ``target``, matching variables by name."""
        if target is self.ring:
            return self
        if target.domain != self.ring.domain:
            raise DomainError("mixed scalar domains")
        pos = []
        for i, v in enumerate(self.ring.names):
            pos.append(target.index(v) if v in target else None)
        acc = {}
        for k, c in self.terms.items():
            e = self.ring.unpack(k)
            vec = [0] * target.n
            for i, x in enumerate(e):
                if x:
                    if pos[i] is None:
                        raise PolyError(f"variable {self.ring.names[i]!r} missing in target ring")
                    vec[pos[i]] = x
            acc[target.pack(vec)] = c
        return Poly(target, acc)

    def subs(self, assignment: dict, target: PolyRing | None = None, partial: bool = False) -> Poly:
        """Ring homomorphism sending each variable to ``assignment[var]``.

        Every variable that occurs must be assigned unless ``partial`` is set,
        in which case unassigned variables map to themselves in ``target``.
        Values are Polys in ``target`` or scalars.
        """
        if target is None:
            target = self.ring
            for val in assignment.values():
                if isinstance(val, Poly):
                    target = val.ring
                    break
        images = []
        for v in self.ring.names:
            if v in assignment:
                val = assignment[v]
                if isinstance(val, Poly):
                    if val.ring != target:
                        if val.ring.domain != target.domain:
                            raise DomainError("mixed scalar domains")
                        val = val.embed(target)
                else:
                    val = target.const(val)
                images.append(val)
            elif partial and v in target:
                images.append(target.gen(v))
            else:
                images.append(None)
        for v in self.variables():
            if images[self.ring.index(v)] is None:
                raise PolyError(f"variable {v!r} is not assigned")
        powers = [dict() for _ in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                if e == 1:
                    cache[e] = images[i]
                else:
                    half = power(i, e // 2)
                    sq = half * half
                    cache[e] = sq * images[i] if e % 2 else sq
            return cache[e]

        # group terms by their leading variables to share partial products
        acc = {}
        one = target.one()
        for k, c in self.terms.items():
            e = self.ring.unpack(k)
            term = None
            for i, x in enumerate(e):
                if x:
                    p = power(i, x)
                    term = p if term is None else term * p
            if term is None:
                term = one
            for tk, tc in term.terms.items():
                acc[tk] = acc.get(tk, 0) + tc * c
        return Poly._clean(target, acc)

    def evaluate(self, values: dict):
        """Evaluate at scalars for every occurring variable; returns a domain element."""
        return self.subs(values, target=ring((), self.ring.domain)).constant_value()

    def map_coeffs(self, fn, target: PolyRing | None = None) -> Poly:
        target = target or self.ring
        if target.names != self.ring.names:
            raise PolyError("map_coeffs keeps the variable set")
        return Poly._clean(target, {k: fn(c) for k, c in self.terms.items()})

    def reduce_mod(self, domain: Domain) -> Poly:
        """Image under Q -> F_p (or coercion into another domain)."""
        target = self.ring.with_domain(domain)
        return Poly._clean(target, {k: domain.coerce(c) for k, c in self.terms.items()})

    def exact_div(self, other: Poly) -> Poly:
        """Exact multivariate division; raises if ``other`` does not divide ``self``."""
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        dom = self.ring.domain
        lead_k = max(other.terms)
        lead_inv = dom.inv(other.terms[lead_k])
        lead_e = self.ring.unpack(lead_k)
        rem = dict(self.terms)
        quot = {}
        while rem:
            k = max(rem)
            e = self.ring.unpack(k)
            if any(x < y for x, y in zip(e, lead_e)):
                raise PolyError("not exactly divisible")
            qk = k - lead_k
            qc = dom.reduce(rem[k] * lead_inv)
            quot[qk] = qc
            for ok, oc in other.terms.items():
                kk = qk + ok
                v = dom.reduce(rem.get(kk, 0) - qc * oc)
                if dom.is_zero(v):
                    rem.pop(kk, None)
                else:
                    rem[kk] = v
        return Poly._clean(self.ring, quot)

    def content_normalized(self) -> Poly:
        """Scale so the leading coefficient is 1."""
        if not self.terms:
            return self
        return self / self.terms[max(self.terms)]

    # -- printing ------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        dom = self.ring.domain
        parts = []
        for exps, c in self.term_list():
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v for v, e in zip(self.ring.names, exps) if e
            )
            if dom.kind == "Q":
                neg = c < 0
                s = dom.to_str(-c if neg else c)
            else:
                neg = False
                s = dom.to_str(c)
            if mono:
                body = mono if s == "1" else f"{s}*{mono}"
            else:
                body = s
            parts.append(("-" if neg else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({self})"


def _is_domain_elem(c, dom: Domain) -> bool:
    if dom.kind == "Q":
        return type(c).__name__ == "mpq"
    if dom.kind == "Fp":
        return isinstance(c, int) and 0 <= c < dom.p
    return type(c).__name__ == "Zeta5"
