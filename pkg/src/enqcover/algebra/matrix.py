"""Small dense matrices of polynomials or scalars.

Entries are :class:`~enqcover.algebra.poly.Poly` objects of one ring, or raw
domain scalars for the purely numeric routines (``rank``, ``solve``,
``scalar_det``).
"""

from __future__ import annotations

from gmpy2 import mpq, mpz

from .domains import Domain
from .poly import Poly, PolyRing


class MatrixError(ValueError):
    pass


class PolyMatrix:
    """Immutable matrix of polynomials over one ring."""

    __slots__ = ("ring", "rows", "nrows", "ncols")

    def __init__(self, ring: PolyRing, rows):
        rows = tuple(tuple(ring(x) for x in r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise MatrixError("ragged rows")
        self.ring = ring
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = len(rows[0]) if rows else 0

    @classmethod
    def identity(cls, ring: PolyRing, n: int) -> PolyMatrix:
        return cls(ring, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, ring: PolyRing, entries) -> PolyMatrix:
        n = len(entries)
        return cls(ring, [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_alternating(self) -> bool:
        if not self.is_square():
            return False
        n = self.nrows
        for i in range(n):
            if self.rows[i][i]:
                return False
            for j in range(i + 1, n):
                if self.rows[i][j] != -self.rows[j][i]:
                    return False
        return True

    def transpose(self) -> PolyMatrix:
        return PolyMatrix(self.ring, list(zip(*self.rows)))

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        return PolyMatrix(
            self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        return PolyMatrix(
            self.ring, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def scale(self, c) -> PolyMatrix:
        return PolyMatrix(self.ring, [[x * c for x in r] for r in self.rows])

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.ncols != other.nrows:
            raise MatrixError("shape mismatch")
        cols = list(zip(*other.rows))
        zero = self.ring.zero()
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for x, y in zip(r, c):
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ring, out)

    def delete(self, i: int, j: int | None = None) -> PolyMatrix:
        """Delete row ``i`` and column ``j`` (default: the same index)."""
        j = i if j is None else j
        return PolyMatrix(
            self.ring,
            [[x for c, x in enumerate(r) if c != j] for k, r in enumerate(self.rows) if k != i],
        )

    def map(self, fn) -> PolyMatrix:
        return PolyMatrix(self.ring, [[fn(x) for x in r] for r in self.rows])

    def is_numeric(self) -> bool:
        return all(x.is_constant() for r in self.rows for x in r)

    def __repr__(self):
        return "PolyMatrix([\n" + "\n".join("  [" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "\n])"


def determinant(m: PolyMatrix) -> Poly:
    """Exact determinant.

    Numeric matrices use fraction-free elimination in the scalar domain;
    symbolic ones use Laplace expansion along rows with memoised minors
    (fine for the n <= 6 sizes that occur here).
    """
    if not m.is_square():
        raise MatrixError("determinant of a non-square matrix")
    ring = m.ring
    if m.nrows == 0:
        return ring.one()
    if m.is_numeric():
        vals = [[x.constant_value() for x in r] for r in m.rows]
        return ring.const(scalar_det(vals, ring.domain))
    return _laplace(m.rows, ring)


def _laplace(rows, ring: PolyRing) -> Poly:
    n = len(rows)
    # minors[cols] = det of rows[n-len(cols):] restricted to cols (sorted tuple)
    memo = {(): ring.one()}
    from itertools import combinations

    for size in range(1, n + 1):
        r = n - size
        row = rows[r]
        new = {}
        for cols in combinations(range(n), size):
            acc = ring.zero()
            for pos, c in enumerate(cols):
                x = row[c]
                if not x:
                    continue
                sub = memo[cols[:pos] + cols[pos + 1 :]]
                if not sub:
                    continue
                term = x * sub
                acc = acc - term if pos % 2 else acc + term
            new[cols] = acc
        memo = new
    return memo[tuple(range(n))]


def scalar_det(vals, domain: Domain):
    """Determinant of a square list-of-lists of domain scalars."""
    n = len(vals)
    if any(len(r) != n for r in vals):
        raise MatrixError("determinant of a non-square matrix")
    if domain.kind == "Q":
        return _det_rational(vals)
    # field elimination (prime fields, Q(zeta5))
    a = [list(r) for r in vals]
    det = domain.one
    for col in range(n):
        piv = next((r for r in range(col, n) if not domain.is_zero(a[r][col])), None)
        if piv is None:
            return domain.zero
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        pv = a[col][col]
        det = domain.reduce(det * pv)
        inv = domain.inv(pv)
        for r in range(col + 1, n):
            f = a[r][col]
            if domain.is_zero(f):
                continue
            f = domain.reduce(f * inv)
            a[r] = [domain.reduce(x - f * y) for x, y in zip(a[r], a[col])]
    return domain.reduce(det)


def _det_rational(vals):
    # clear denominators row-wise, then Bareiss over Z
    n = len(vals)
    scale = mpq(1)
    a = []
    for r in vals:
        den = mpz(1)
        for x in r:
            den = den * mpq(x).denominator // _gcd(den, mpq(x).denominator)
        scale /= den
        a.append([mpz(mpq(x) * den) for x in r])
    sign = 1
    prev = mpz(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if piv is None:
                return mpq(0)
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = mpz(0)
        prev = akk
    return mpq(sign * a[n - 1][n - 1]) * scale if n else mpq(1)


def _gcd(x, y):
    import gmpy2

    return gmpy2.gcd(x, y)


def pfaffian4(m: PolyMatrix) -> Poly:
    """Pfaffian m01*m23 - m02*m13 + m03*m12 of an alternating 4x4 matrix."""
    if (m.nrows, m.ncols) != (4, 4):
        raise MatrixError("pfaffian4 needs a 4x4 matrix")
    if not m.is_alternating():
        raise MatrixError("matrix is not alternating")
    return m[0, 1] * m[2, 3] - m[0, 2] * m[1, 3] + m[0, 3] * m[1, 2]


def row_reduce(vals, domain: Domain):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    a = [[domain.coerce(x) for x in r] for r in vals]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if not domain.is_zero(a[i][c])), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = domain.inv(a[r][c])
        a[r] = [domain.reduce(x * inv) for x in a[r]]
        for i in range(nrows):
            if i != r and not domain.is_zero(a[i][c]):
                f = a[i][c]
                a[i] = [domain.reduce(x - f * y) for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def rank(vals, domain: Domain) -> int:
    if not vals:
        return 0
    return len(row_reduce(vals, domain)[1])


def solve(columns, target, domain: Domain):
    """Solve sum_k x_k * columns[k] = target exactly; returns list or None."""
    n = len(columns)
    rows = [[columns[k][i] for k in range(n)] + [target[i]] for i in range(len(target))]
    red, piv = row_reduce(rows, domain)
    if n in piv:
        return None
    x = [domain.zero] * n
    for r, c in enumerate(piv):
        x[c] = red[r][n]
    return x


# -- dense scalar matrices (lists of lists of domain elements) ----------
def mat_identity(n: int, domain: Domain):
    return [[domain.one if i == j else domain.zero for j in range(n)] for i in range(n)]


def mat_mul(a, b, domain: Domain):
    if len(a[0]) != len(b):
        raise MatrixError("shape mismatch")
    cols = list(zip(*b))
    return [[domain.reduce(sum((x * y for x, y in zip(r, c)), domain.zero)) for c in cols] for r in a]


def mat_inv(a, domain: Domain):
    n = len(a)
    aug = [list(r) + [domain.one if i == j else domain.zero for j in range(n)] for i, r in enumerate(a)]
    red, piv = row_reduce(aug, domain)
    if piv[:n] != list(range(n)):
        raise MatrixError("matrix is singular")
    return [r[n:] for r in red[:n]]


def mat_transpose(a):
    return [list(r) for r in zip(*a)]


def mat_scale(a, c, domain: Domain):
    return [[domain.reduce(x * c) for x in r] for r in a]


def mat_coerce(a, domain: Domain):
    return [[domain.coerce(x) for x in r] for r in a]
