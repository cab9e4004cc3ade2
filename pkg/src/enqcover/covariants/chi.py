"""The representation chi1 on the Hesse plane, computed from theta+."""

from __future__ import annotations

from ..algebra import QZ5, Domain, Poly, ring
from ..models import extended_pair, hesse_model, transform


class ChiError(ValueError):
    pass


def chi1(name: str, domain: Domain = QZ5):
    """2x2 matrix M with theta+(name) u(a, b) = u(M (a, b)).

    Row 0 gives the new ``a`` coefficient, row 1 the new ``b``.
    """
    g = extended_pair(name, domain)
    m = hesse_model("a", "b", domain=domain)
    img = transform(m, g)
    R = m.ring
    new_a = img.entry(1, 4).coeff({"w0": 1, "a": 1}), img.entry(1, 4).coeff({"w0": 1, "b": 1})
    new_b = img.entry(2, 3).coeff({"w0": 1, "a": 1}), img.entry(2, 3).coeff({"w0": 1, "b": 1})
    M = [list(new_a), list(new_b)]
    a, b = R.gens("a", "b")
    la = a * M[0][0] + b * M[0][1]
    lb = a * M[1][0] + b * M[1][1]
    if img != hesse_model(la, lb, domain=domain):
        raise ChiError(f"theta+({name}) does not preserve the Hesse plane")
    dom = domain
    det = dom.reduce(M[0][0] * M[1][1] - M[0][1] * M[1][0])
    if dom.is_zero(det):
        raise ChiError("chi1 is singular")
    return M


def apply_chi(M, f: Poly, domain: Domain = QZ5) -> Poly:
    """f(M (a, b)) for a polynomial f in a, b."""
    R = ring(("a", "b"), domain)
    g = f.embed(ring(("a", "b"), f.ring.domain)).map_coeffs(domain.coerce, R)
    a, b = R.gens("a", "b")
    return g.subs({"a": a * M[0][0] + b * M[0][1], "b": a * M[1][0] + b * M[1][1]}, target=R)
