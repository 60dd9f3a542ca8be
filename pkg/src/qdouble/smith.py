"""Exact integer linear algebra over Z and Z/M.

All root-of-unity arithmetic in this package reduces to linear systems
A x = b (mod M) with composite M, which we solve through the Smith normal
form of A over the integers.  Plain Python ints are used inside the SNF
reduction so intermediate entries never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np


@dataclass
class NoSolution:
    """Certificate that A x = b (mod M) has no solution.

    ``obstruction_index`` is the row of the diagonalized system where the
    invariant factor fails to divide the transformed right-hand side.
    """

    obstruction_index: int

    def __bool__(self) -> bool:
        return False


@dataclass
class LinearSystemSolution:
    """Solution set of A x = b (mod M): ``particular`` plus the span of
    ``homogeneous_basis`` over Z/M."""

    modulus: int
    particular: np.ndarray
    homogeneous_basis: list[np.ndarray] = field(default_factory=list)

    def __bool__(self) -> bool:
        return True

    def all_solutions(self, max_count: int = 1 << 20) -> list[np.ndarray]:
        """Enumerate every solution mod M (closure of the homogeneous span).

        Intended for desk-scale systems; raises if the set exceeds
        ``max_count``.
        """
        M = self.modulus
        span = {tuple(int(v) for v in self.particular % M)}
        for vec in self.homogeneous_basis:
            vec = vec % M
            current = list(span)
            for s in current:
                shifted = np.array(s)
                for _ in range(M - 1):
                    shifted = (shifted + vec) % M
                    span.add(tuple(int(v) for v in shifted))
                    if len(span) > max_count:
                        raise ValueError("solution set too large to enumerate")
        return [np.array(s) for s in sorted(span)]


def smith_normal_form(mat, with_transforms: bool = True):
    """Diagonalize an integer matrix: U @ mat @ V == D with U, V unimodular
    and D[i][i] | D[i+1][i+1].

    Returns (diag, U, V, rank) where diag is the list of nonzero invariant
    factors; U and V are None when with_transforms is False.
    """
    A = [[int(x) for x in row] for row in mat]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)] if with_transforms else None
    V = [[int(i == j) for j in range(n)] for i in range(n)] if with_transforms else None

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            if U is not None:
                U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in A:
                row[i], row[j] = row[j], row[i]
            if V is not None:
                for row in V:
                    row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row[dst] += q * row[src]
        Ad, As = A[dst], A[src]
        for k in range(n):
            Ad[k] += q * As[k]
        if U is not None:
            Ud, Us = U[dst], U[src]
            for k in range(m):
                Ud[k] += q * Us[k]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        if V is not None:
            for row in V:
                row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            Ai = A[i]
            for j in range(t, n):
                x = Ai[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            dirty = False
            i = t + 1
            while i < m:
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(i, t, -q)
                    if A[i][t]:
                        swap_rows(t, i)
                        dirty = True
                        break
                i += 1
            if dirty:
                continue
            j = t + 1
            while j < n:
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(j, t, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        dirty = True
                        break
                j += 1
            if dirty:
                continue
            # pivot must divide the remaining submatrix for the invariant
            # factor chain; if not, fold the offending row in and redo
            p = A[t][t]
            viol = None
            for i in range(t + 1, m):
                Ai = A[i]
                for j in range(t + 1, n):
                    if Ai[j] % p:
                        viol = i
                        break
                if viol is not None:
                    break
            if viol is None:
                break
            add_row(t, viol, 1)
        if A[t][t] < 0:
            add_row(t, t, -2)
        t += 1

    diag = [A[i][i] for i in range(t)]
    return diag, U, V, t


def invariant_factors(mat) -> list[int]:
    """Nonzero invariant factors of an integer matrix."""
    diag, _, _, _ = smith_normal_form(mat, with_transforms=False)
    return diag


def kernel_count(mat, modulus: int) -> int:
    """Number of x in (Z/M)^n with A x = 0 (mod M)."""
    mat = np.asarray(mat)
    n = mat.shape[1]
    diag = invariant_factors(mat)
    count = modulus ** (n - len(diag))
    for d in diag:
        count *= gcd(d, modulus)
    return count


def smith_solve(Amat, b, modulus: int):
    """Solve A x = b (mod M) exactly.

    Returns a LinearSystemSolution whose homogeneous basis spans the full
    kernel mod M, or NoSolution.  The particular solution fixes all free
    parameters to zero, so repeated runs are deterministic.
    """
    if modulus < 1:
        raise ValueError("modulus must be positive")
    Amat = np.asarray(Amat, dtype=object) if not isinstance(Amat, np.ndarray) else Amat
    m = len(Amat)
    n = len(Amat[0]) if m else 0
    b = [int(x) for x in b]
    if len(b) != m:
        raise ValueError("dimension mismatch between A and b")
    M = int(modulus)

    diag, U, V, rank = smith_normal_form(Amat)
    # c = U b
    c = [sum(U[i][k] * b[k] for k in range(m)) % M for i in range(m)]

    y = [0] * n
    for i in range(rank):
        d = diag[i]
        g = gcd(d, M)
        if c[i] % g:
            return NoSolution(obstruction_index=i)
        Mg = M // g
        if Mg == 1:
            y[i] = 0
        else:
            y[i] = (c[i] // g) * pow((d // g) % Mg, -1, Mg) % Mg
    for i in range(rank, m):
        if c[i] % M:
            return NoSolution(obstruction_index=i)

    x = [sum(V[j][k] * y[k] for k in range(n)) % M for j in range(n)]

    basis = []
    seen = set()
    for i in range(n):
        if i < rank:
            step = M // gcd(diag[i], M)
            if step % M == 0:
                continue
        else:
            step = 1
        vec = tuple(V[j][i] * step % M for j in range(n))
        if any(vec) and vec not in seen:
            seen.add(vec)
            basis.append(np.array(vec, dtype=int))

    return LinearSystemSolution(
        modulus=M,
        particular=np.array(x, dtype=int),
        homogeneous_basis=basis,
    )
