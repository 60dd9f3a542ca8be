"""Normalized multiplicative cochains in exponent form.

A k-cochain with modulus M stores exponents e so the actual value is
zeta_M ** e; multiplicative identities become linear identities mod M.
Coboundaries, cocycle checks and coboundary solving (via Smith normal
form) all stay inside exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

import numpy as np

from .catalog import cyclic_group
from .groups import FiniteGroup, QuotientData
from .smith import LinearSystemSolution, NoSolution, smith_solve


@dataclass
class Cochain:
    group: FiniteGroup
    degree: int
    modulus: int
    values: np.ndarray

    def __post_init__(self):
        n = self.group.order
        expected = (n,) * self.degree
        self.values = np.asarray(self.values, dtype=int) % self.modulus
        if self.values.shape != expected:
            raise ValueError(f"values must have shape {expected}")

    def lift(self, modulus: int) -> "Cochain":
        """Rescale exponents into Z/modulus; modulus must be a multiple."""
        if modulus % self.modulus:
            raise ValueError(f"cannot lift mod {self.modulus} to mod {modulus}")
        factor = modulus // self.modulus
        return Cochain(self.group, self.degree, modulus, self.values * factor)

    def is_normalized(self) -> bool:
        """Value is 0 whenever any argument is the identity."""
        for axis in range(self.degree):
            sl = [slice(None)] * self.degree
            sl[axis] = 0
            if np.any(self.values[tuple(sl)]):
                return False
        return True

    def is_trivial(self) -> bool:
        return not np.any(self.values)


def zero_cochain(G: FiniteGroup, degree: int, modulus: int = 1) -> Cochain:
    return Cochain(G, degree, modulus, np.zeros((G.order,) * degree, dtype=int))


def coboundary(c: Cochain) -> Cochain:
    """Multiplicative coboundary delta in exponent form (trivial
    coefficients), degrees 0..3."""
    G, M, v = c.group, c.modulus, c.values
    T = G.table
    if c.degree == 0:
        out = np.zeros((G.order,), dtype=int)
    elif c.degree == 1:
        out = v[:, None] + v[None, :] - v[T]
    elif c.degree == 2:
        out = v[None, :, :] - v[T, :] + v[:, T] - v[:, :, None]
    elif c.degree == 3:
        out = (
            v[None, :, :, :]
            - v[T, :, :]
            + v[:, T, :]
            - v[:, :, T]
            + v[:, :, :, None]
        )
    else:
        raise ValueError(f"coboundary not implemented for degree {c.degree}")
    return Cochain(G, c.degree + 1, M, out % M)


@dataclass
class CocycleReport:
    ok: bool
    normalized: bool
    closed: bool
    violation: tuple | None

    def __bool__(self) -> bool:
        return self.ok


def is_normalized_cocycle(c: Cochain) -> CocycleReport:
    """Check delta c == 0 and normalization; reports the first violating
    tuple if any."""
    if c.degree not in (2, 3):
        raise ValueError("cocycle check expects degree 2 or 3")
    normalized = c.is_normalized()
    d = coboundary(c)
    closed = d.is_trivial()
    violation = None
    if not closed:
        violation = tuple(int(i) for i in np.argwhere(d.values)[0])
    elif not normalized:
        violation = ("normalization",)
    return CocycleReport(
        ok=normalized and closed, normalized=normalized, closed=closed,
        violation=violation,
    )


def solve_modulus(target: Cochain) -> int:
    """Modulus at which coboundary solving is complete: any complex solution
    of delta t = target has t(g)^(M * |G|) = 1, since multiplying the
    equations over the second argument gives t(g)^|G| in mu_M."""
    return lcm(target.modulus, target.modulus * target.group.order)


def solve_coboundary(target: Cochain, extra=None):
    """Find all 1-cochains t with delta t = target (degree 2) plus optional
    linear constraints, exactly mod target.modulus.

    ``extra`` is a list of (coefficient_row, rhs) pairs over the unknowns
    t(g).  The target modulus must already be lifted (see solve_modulus);
    NoSolution then certifies non-membership in B^2 over any field.
    Homogeneous solutions with no extra constraints are exactly the
    characters of G valued in mu_M.
    """
    if target.degree != 2:
        raise ValueError("solve_coboundary expects a degree-2 target")
    G, M = target.group, target.modulus
    n = G.order
    rows, rhs = [], []
    row = [0] * n
    row[0] = 1
    rows.append(row)
    rhs.append(0)
    for g in range(n):
        for h in range(n):
            row = [0] * n
            row[g] += 1
            row[h] += 1
            row[G.mul(g, h)] -= 1
            rows.append(row)
            rhs.append(int(target.values[g, h]))
    for coeff, b in extra or []:
        rows.append([int(x) for x in coeff])
        rhs.append(int(b))
    return smith_solve(rows, rhs, M)


def cyclic_cocycle(N: int, q: int) -> Cochain:
    """The standard 3-cocycle on Z_N with modulus N^2:
    omega(a,b,c) = zeta_{N^2} ** (q * a * (b + c - ((b + c) mod N)))."""
    G = cyclic_group(N)
    idx = np.arange(N)
    carry = idx[:, None] + idx[None, :]
    carry = carry - carry % N
    values = (q * idx[:, None, None] * carry[None, :, :]) % (N * N)
    c = Cochain(G, 3, N * N, values)
    assert is_normalized_cocycle(c)
    return c


def inflate(c: Cochain, qd: QuotientData) -> Cochain:
    """Pull back a cochain on Q = G/ker along the projection G -> Q."""
    if c.group is not qd.quotient and c.group.order != qd.quotient.order:
        raise ValueError("cochain does not live on the quotient group")
    proj = qd.proj
    pulled = c.values[np.ix_(*([proj] * c.degree))] if c.degree else c.values
    out = Cochain(qd.parent, c.degree, c.modulus, pulled)
    if c.degree in (2, 3) and is_normalized_cocycle(c):
        assert is_normalized_cocycle(out), "inflation must preserve the cocycle property"
    return out
