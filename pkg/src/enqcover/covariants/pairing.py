"""Apolarity pairing between forms in w and forms in w*."""

from __future__ import annotations

from math import factorial

from ..algebra import Poly, join_rings
from ..alphabets import W, WS

# <w^alpha, w*^beta> = delta(alpha, beta) * alpha! * APOLAR_CONSTANT.
# With the factorial weighting no extra rescaling is needed for
# <S10, T30> = c4^2, so the constant is 1.
APOLAR_CONSTANT = 1


class PairingError(ValueError):
    pass


def _degree(p: Poly, names) -> int:
    degs = p.degrees_in(names)
    if len(degs) != 1:
        raise PairingError("argument is not homogeneous in its alphabet")
    return degs.pop()


def apolar_pair(u: Poly, v: Poly) -> Poly:
    """Bilinear pairing of a form in w0..w4 with a form in ws0..ws4.

    Coefficients may involve other variables (for instance a, b); the
    result is a polynomial in those.
    """
    if not u or not v:
        R = join_rings(u.ring, v.ring)
        return R.zero()
    if not all(x in u.ring for x in W) or not all(x in v.ring for x in WS):
        raise PairingError("first argument must be in w, second in w*")
    if _degree(u, W) != _degree(v, WS):
        raise PairingError("degree mismatch")
    R = join_rings(u.ring, v.ring)
    cu = u.embed(R).collect(W)
    cv = v.embed(R).collect(WS)
    out = R.zero()
    for alpha, c in cu.items():
        d = cv.get(alpha)
        if d is None:
            continue
        weight = 1
        for e in alpha:
            weight *= factorial(e)
        out = out + c * d * (weight * APOLAR_CONSTANT)
    return out
