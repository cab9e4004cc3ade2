"""Variable names shared across the package.

Tensor-valued quantities are stored as polynomials in basis-vector symbols:
``w0..w4`` for W, ``v0..v4`` for V, ``vs0..vs4`` for V* and ``ws0..ws4``
for W*.  A wedge ``x_i ^ x_j`` (i < j) is the single symbol ``X{i}{j}`` with
X one of ``V, Vs, W, Ws``; swapping the indices flips the sign.
"""

from __future__ import annotations

from itertools import combinations

W = tuple(f"w{i}" for i in range(5))
V = tuple(f"v{i}" for i in range(5))
VS = tuple(f"vs{i}" for i in range(5))
WS = tuple(f"ws{i}" for i in range(5))
LAMBDA = tuple(f"l{i}" for i in range(5))
AB = ("a", "b")

BASES = {"w": W, "v": V, "vs": VS, "ws": WS}
WEDGE_PREFIX = {"v": "V", "vs": "Vs", "w": "W", "ws": "Ws"}

PAIRS = tuple(combinations(range(5), 2))


def wedge_names(base: str) -> tuple:
    pre = WEDGE_PREFIX[base]
    return tuple(f"{pre}{i}{j}" for i, j in PAIRS)


def wedge(base: str, i: int, j: int):
    """(symbol, sign) for the wedge of basis vectors i, j (indices mod 5)."""
    i, j = i % 5, j % 5
    if i == j:
        raise ValueError("wedge of a vector with itself")
    pre = WEDGE_PREFIX[base]
    if i < j:
        return f"{pre}{i}{j}", 1
    return f"{pre}{j}{i}", -1


def parse_symbol(name: str):
    """Classify a tensor symbol: ('w', i) / ('v', i) / ... or ('V', i, j) etc."""
    for base in ("vs", "ws", "v", "w"):
        if name.startswith(base) and name[len(base):].isdigit():
            return (base, int(name[len(base):]))
    for base, pre in (("vs", "Vs"), ("ws", "Ws"), ("v", "V"), ("w", "W")):
        rest = name[len(pre):]
        if name.startswith(pre) and len(rest) == 2 and rest.isdigit():
            return (pre, int(rest[0]), int(rest[1]))
    return None
