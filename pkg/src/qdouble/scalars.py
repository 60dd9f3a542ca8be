"""Exact arithmetic in the cyclotomic integers Z[zeta_M].

Sums of roots of unity appear in antipode identities and in character
evaluations; a sparse dict {exponent: integer coefficient} represents the
element sum(coeff * zeta_M^exponent).  Equality reduces the difference
modulo the M-th cyclotomic polynomial, so it is exact and complete.
"""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def cyclotomic_polynomial(M: int) -> tuple[int, ...]:
    """Coefficients of Phi_M, ascending degree, computed by dividing
    x^M - 1 by Phi_d for every proper divisor d."""
    poly = [-1] + [0] * (M - 1) + [1]
    for d in range(1, M):
        if M % d:
            continue
        poly = _poly_div_exact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


def _poly_div_exact(num: list[int], den: list[int]) -> list[int]:
    # den is monic; division is exact over Z
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + len(den) - 1]
        out[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    assert all(x == 0 for x in num[: len(den) - 1])
    return out


class CycloInt:
    """Element of Z[zeta_M] as sparse {exponent mod M: coefficient}."""

    __slots__ = ("modulus", "terms")

    def __init__(self, modulus: int, terms: dict[int, int] | None = None):
        self.modulus = modulus
        self.terms = {e % modulus: c for e, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, modulus: int) -> "CycloInt":
        return cls(modulus)

    @classmethod
    def one(cls, modulus: int) -> "CycloInt":
        return cls(modulus, {0: 1})

    @classmethod
    def root(cls, modulus: int, exponent: int) -> "CycloInt":
        return cls(modulus, {exponent % modulus: 1})

    def __add__(self, other: "CycloInt") -> "CycloInt":
        assert self.modulus == other.modulus
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return CycloInt(self.modulus, terms)

    def __neg__(self) -> "CycloInt":
        return CycloInt(self.modulus, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "CycloInt") -> "CycloInt":
        return self + (-other)

    def __mul__(self, other: "CycloInt") -> "CycloInt":
        assert self.modulus == other.modulus
        M = self.modulus
        terms: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1 + e2) % M
                terms[e] = terms.get(e, 0) + c1 * c2
        return CycloInt(M, terms)

    def scale_root(self, exponent: int) -> "CycloInt":
        M = self.modulus
        return CycloInt(M, {(e + exponent) % M: c for e, c in self.terms.items()})

    def canonical(self) -> tuple[int, ...]:
        """Remainder mod Phi_M, a canonical form for equality testing."""
        M = self.modulus
        dense = [0] * M
        for e, c in self.terms.items():
            dense[e] += c
        phi = cyclotomic_polynomial(M)
        deg = len(phi) - 1
        for i in range(M - deg, 0, -1):
            c = dense[i + deg - 1]
            if c:
                for j, pj in enumerate(phi):
                    dense[i - 1 + j] -= c * pj
        return tuple(dense[:deg])

    def is_zero(self) -> bool:
        if not self.terms:
            return True
        return not any(self.canonical())

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycloInt):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.modulus, self.canonical()))

    def __repr__(self):
        return f"CycloInt({self.modulus}, {self.terms!r})"

    def as_single_root(self) -> int | None:
        """If the element equals some zeta_M^e, return e, else None."""
        for e in range(self.modulus):
            if (self - CycloInt.root(self.modulus, e)).is_zero():
                return e
        return None
