"""Standard small groups used throughout the tests and demos."""

from __future__ import annotations

import numpy as np

from .groups import FiniteGroup, load_group


def cyclic_group(n: int) -> FiniteGroup:
    """Z_n with addition mod n; element k is the residue k."""
    idx = np.arange(n)
    return load_group((idx[:, None] + idx[None, :]) % n)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """G x H with element (g, h) at index g*|H| + h."""
    nG, nH = G.order, H.order
    table = np.empty((nG * nH, nG * nH), dtype=int)
    for g1 in range(nG):
        for h1 in range(nH):
            for g2 in range(nG):
                for h2 in range(nH):
                    table[g1 * nH + h1, g2 * nH + h2] = (
                        G.mul(g1, g2) * nH + H.mul(h1, h2)
                    )
    return load_group(table)


def klein_four() -> FiniteGroup:
    z2 = cyclic_group(2)
    return direct_product(z2, z2)


# Quaternion units in a fixed order; index 0 is the identity.
Q8_LABELS = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")

_Q8_RULES = {
    ("i", "i"): (-1, "1"),
    ("j", "j"): (-1, "1"),
    ("k", "k"): (-1, "1"),
    ("i", "j"): (1, "k"),
    ("j", "i"): (-1, "k"),
    ("j", "k"): (1, "i"),
    ("k", "j"): (-1, "i"),
    ("k", "i"): (1, "j"),
    ("i", "k"): (-1, "j"),
}


def _q8_mul(a: str, b: str) -> str:
    sign = 1
    if a.startswith("-"):
        sign, a = -sign, a[1:]
    if b.startswith("-"):
        sign, b = -sign, b[1:]
    if a == "1":
        unit = b
    elif b == "1":
        unit = a
    else:
        s, unit = _Q8_RULES[(a, b)]
        sign *= s
    if unit.startswith("-"):
        sign, unit = -sign, unit[1:]
    return unit if sign == 1 else "-" + unit


def quaternion_group() -> FiniteGroup:
    """Q8 = {1, -1, i, -i, j, -j, k, -k} in the order of Q8_LABELS."""
    index = {lab: i for i, lab in enumerate(Q8_LABELS)}
    n = len(Q8_LABELS)
    table = np.empty((n, n), dtype=int)
    for a, la in enumerate(Q8_LABELS):
        for b, lb in enumerate(Q8_LABELS):
            table[a, b] = index[_q8_mul(la, lb)]
    return load_group(table)


def dihedral_group(n: int) -> FiniteGroup:
    """D_n of order 2n; element (r, s) with s in {0,1} at index r + s*n,
    multiplication (r1,s1)(r2,s2) = (r1 + (-1)^{s1} r2, s1+s2)."""
    table = np.empty((2 * n, 2 * n), dtype=int)
    for r1 in range(n):
        for s1 in range(2):
            for r2 in range(n):
                for s2 in range(2):
                    r = (r1 + (r2 if s1 == 0 else -r2)) % n
                    s = (s1 + s2) % 2
                    table[r1 + s1 * n, r2 + s2 * n] = r + s * n
    return load_group(table)
