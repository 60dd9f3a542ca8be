"""Admissibility of central subgroups and quotient cleft objects.

A central subgroup A of F acting trivially on G is admissible when the
extension 2-cocycle beta restricted to A splits over the F-invariant
characters of G.  Admissibility is decided by one exact linear system;
a successful certificate is enough data to build the quotient cleft
object over F/A together with the graded surjection pi.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .cleft import (
    CleftObject,
    GroupLikeData,
    MorphismReport,
    QuasiHopfAlgebra,
    build_algebra,
    check_cleft_morphism,
    group_like_structure,
    verify_quasi_hopf,
)
from .groups import (
    Character,
    QuotientData,
    Subgroup,
    character_from_lifted,
    induced_action,
    quotient_with_section,
)
from .smith import smith_solve


@dataclass
class FailureReason:
    """Falsy admissibility verdict; kind is one of NotCentral,
    ActsNontrivially, NotCCentral, ExtensionNonSplit."""

    kind: str
    witness: object = None

    def __bool__(self) -> bool:
        return False

    def __str__(self) -> str:
        if self.witness is None:
            return self.kind
        return f"{self.kind}({self.witness})"


@dataclass
class AdmissibilityCertificate:
    """The constructive form of an admissibility verdict: coboundary
    sections t_a, the transposed family tau_g on A, the splitting map nu
    into F-invariant characters, and s_a(g) = t_a(g) tau_g(a) (= nu_a)."""

    A: Subgroup
    t: dict            # a -> exponent vector over G, mod modulus
    tau: dict          # g -> {a: exponent mod modulus}
    nu: dict           # a -> Character (F-invariant)
    s: dict            # a -> Character, s_a == nu_a
    modulus: int

    def __bool__(self) -> bool:
        return True

    def nu_vector(self, a: int, G) -> np.ndarray:
        return self.nu[a].lift(self.modulus)


def _nu_system(data: GroupLikeData, A: Subgroup):
    """Rows of the linear system for nu: A -> invariant characters with
    delta nu = beta|_A, over unknowns nu_a(g), all mod the work modulus."""
    c = data.cleft
    F, G, M = c.F, c.G, c.modulus
    members = list(A.members)
    pos = {a: i for i, a in enumerate(members)}
    nG = G.order
    nvar = len(members) * nG

    def var(a: int, g: int) -> int:
        return pos[a] * nG + g

    rows, rhs = [], []

    def add(coeffs, b):
        row = [0] * nvar
        for v, cf in coeffs:
            row[v] += cf
        rows.append(row)
        rhs.append(b % M)

    for g in range(nG):
        add([(var(0, g), 1)], 0)                      # nu_1 trivial
    for a in members:
        for g in range(nG):
            for h in range(nG):                        # character rows
                add([(var(a, g), 1), (var(a, h), 1), (var(a, G.mul(g, h)), -1)], 0)
            for y in F.elements():                     # invariance rows
                gy = c.act(g, y)
                if gy != g:
                    add([(var(a, g), 1), (var(a, gy), -1)], 0)
    for a in members:
        for b in members:                              # splitting rows
            ab = F.mul(a, b)
            beta = data.beta.vector(a, b)
            for g in range(nG):
                add([(var(a, g), 1), (var(b, g), 1), (var(ab, g), -1)], int(beta[g]))
    return rows, rhs, members, nG


def _solution_to_nu(vec, members, nG, data: GroupLikeData) -> dict:
    G, M = data.cleft.G, data.cleft.modulus
    nu = {}
    for i, a in enumerate(members):
        vals = [int(vec[i * nG + g]) % M for g in range(nG)]
        nu[a] = character_from_lifted(G, vals, M)
    return nu


def is_admissible(
    c: CleftObject, omega, A: Subgroup, data: GroupLikeData | None = None
):
    """Decide admissibility of A; returns an AdmissibilityCertificate or a
    falsy FailureReason.  ``omega`` is accepted for interface symmetry and
    checked against the cleft object's cocycle."""
    F, G, M = c.F, c.G, c.modulus
    if omega is not None:
        lifted = omega.lift(M) if omega.modulus != M else omega
        if not np.array_equal(lifted.values, c.omega):
            raise ValueError("omega does not match the cleft object")
    if A.parent is not F:
        raise ValueError("subgroup does not live in F")

    center = set(F.center_members)
    for a in A.members:
        if a not in center:
            return FailureReason("NotCentral", a)
    if not c.action.is_trivial_on(A.members):
        bad = next(a for a in A.members if not c.action.is_trivial_on([a]))
        return FailureReason("ActsNontrivially", bad)

    if data is None:
        data = group_like_structure(c)
    zc = set(data.z_c.members)
    for a in A.members:
        if a not in zc:
            return FailureReason("NotCCentral", a)

    rows, rhs, members, nG = _nu_system(data, A)
    sol = smith_solve(rows, rhs, M)
    if not sol:
        return FailureReason("ExtensionNonSplit")
    nu = _solutions_sorted(sol, members, nG, data)[0]
    return _assemble_certificate(data, A, nu)


def _solutions_sorted(sol, members, nG, data: GroupLikeData) -> list[dict]:
    vecs = sorted(tuple(int(v) for v in w) for w in sol.all_solutions())
    return [_solution_to_nu(v, members, nG, data) for v in vecs]


def _assemble_certificate(data: GroupLikeData, A: Subgroup, nu: dict) -> AdmissibilityCertificate:
    """Build the constructive certificate data from nu and cross-validate
    every clause."""
    c = data.cleft
    F, G, M = c.F, c.G, c.modulus
    t = {a: data.sections[a] % M for a in A.members}
    inv_set = {chi.values for chi in data.invariant_characters}

    tau = {
        g: {a: (int(nu[a].lift(M)[g]) - int(t[a][g])) % M for a in A.members}
        for g in G.elements()
    }
    s = {}
    for a in A.members:
        vals = [(int(t[a][g]) + tau[g][a]) % M for g in G.elements()]
        s[a] = character_from_lifted(G, vals, M)
        assert s[a].values == nu[a].values
        assert nu[a].values in inv_set, "nu must be an F-invariant character"

    # delta t_a == gamma_a and delta tau_g == theta_g|_A
    for a in A.members:
        ta = t[a]
        assert not np.any(
            (ta[:, None] + ta[None, :] - ta[G.table] - c.gamma[a]) % M
        )
    for g in G.elements():
        for a in A.members:
            for b in A.members:
                ab = F.mul(a, b)
                lhs = tau[g][a] + tau[g][b] - tau[g][ab]
                assert (lhs - int(c.theta[g, a, b])) % M == 0

    # round trip: the reconstructed nu'(a) := s_a splits beta|_A again
    for a in A.members:
        for b in A.members:
            ab = F.mul(a, b)
            beta = data.beta.vector(a, b)
            diff = (
                s[a].lift(M) + s[b].lift(M) - s[ab].lift(M) - beta
            ) % M
            assert not np.any(diff), "certificate round trip failed"
    return AdmissibilityCertificate(A=A, t=t, tau=tau, nu=nu, s=s, modulus=M)


def enumerate_nu(c: CleftObject, A: Subgroup, data: GroupLikeData | None = None) -> list[dict]:
    """All splittings nu (as dicts a -> Character), lexicographically sorted.

    The count equals |Hom(A, invariant characters)| (torsor property) and
    each induced section p~_nu(a) = u(nu_a^{-1}, a) is verified to be a
    group homomorphism into the central group-likes by direct
    multiplication.
    """
    if data is None:
        data = group_like_structure(c)
    F, G, M = c.F, c.G, c.modulus
    rows, rhs, members, nG = _nu_system(data, A)
    sol = smith_solve(rows, rhs, M)
    if not sol:
        return []
    out = _solutions_sorted(sol, members, nG, data)

    from .groups import character_homomorphisms
    homs = character_homomorphisms(A, data.invariant_characters)
    assert len(out) == len(homs), "nu solutions must form a Hom(A, X)-torsor"

    H = data.algebra
    for nu in out:
        sect = {
            a: (data.sections[a] - nu[a].lift(M)) % M for a in A.members
        }
        for a in A.members:
            for b in A.members:
                tv, xy = H.unit_supported_product(sect[a], a, sect[b], b)
                assert xy == F.mul(a, b)
                assert not np.any((tv - sect[xy]) % M), "p~_nu is not a homomorphism"
    return out


def brute_force_nu_search(data: GroupLikeData, A: Subgroup) -> list[dict]:
    """Independent oracle: try every function A -> invariant characters with
    nu_1 trivial and keep those with delta nu = beta|_A.  Desk scale only."""
    c = data.cleft
    F, G, M = c.F, c.G, c.modulus
    chars = data.invariant_characters
    trivial = next(ch for ch in chars if ch.is_trivial())
    others = [a for a in A.members if a != 0]
    found = []
    for combo in itertools.product(chars, repeat=len(others)):
        nu = {0: trivial}
        nu.update(dict(zip(others, combo)))
        ok = True
        for a in A.members:
            for b in A.members:
                ab = F.mul(a, b)
                diff = (
                    nu[a].lift(M) + nu[b].lift(M) - nu[ab].lift(M)
                    - data.beta.vector(a, b)
                ) % M
                if np.any(diff):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(nu)
    return found


# ---------------------------------------------------------------------------
# quotient construction


@dataclass
class QuotientBuild:
    cbar: CleftObject
    algebra: QuasiHopfAlgebra
    chi: np.ndarray          # (|F|, |G|) exponents mod modulus
    r: QuotientData
    cert: AdmissibilityCertificate
    f: dict | None           # optional twist hom a -> Character
    report: object           # QuasiHopfReport of the quotient algebra


def build_quotient(
    c: CleftObject,
    omega,
    A: Subgroup,
    cert: AdmissibilityCertificate,
    r: QuotientData | None = None,
    f: dict | None = None,
    nu: dict | None = None,
) -> QuotientBuild:
    """Construct the quotient cleft object over F/A from a certificate.

    chi_x(g) = nu_a(g) / (t_a(g) theta_g(a, r(x))) with a = x r(x)^{-1},
    twisted by the optional homomorphism f: A -> invariant characters;
    the quotient tables are checked to be well-defined on cosets and the
    resulting algebra passes the full axiom suite.
    """
    F, G, M = c.F, c.G, c.modulus
    if r is None:
        r = quotient_with_section(F, A)
    if r.kernel.members != A.members:
        raise ValueError("section data quotients by a different subgroup")
    Fbar = r.quotient
    nu = nu or cert.nu

    chi = np.zeros((F.order, G.order), dtype=int)
    for x in F.elements():
        rx = int(r.section[r.proj[x]])
        a = F.mul(x, int(F.inv[rx]))
        assert a in A
        nua = nu[a].lift(M)
        for g in G.elements():
            chi[x, g] = (int(nua[g]) - int(cert.t[a][g]) - int(c.theta[g, a, rx])) % M
        if f is not None:
            chi[x] = (chi[x] + f[a].lift(M)) % M

    gamma_bar = np.zeros((Fbar.order, G.order, G.order), dtype=int)
    for xbar in Fbar.elements():
        reps = [x for x in F.elements() if r.proj[x] == xbar]
        vals = None
        for x in reps:
            v = (
                chi[x][:, None] + chi[x][None, :] - chi[x][G.table] + c.gamma[x]
            ) % M
            if vals is None:
                vals = v
            else:
                assert np.array_equal(vals, v), ("gamma-bar ill-defined", xbar, x)
        gamma_bar[xbar] = vals

    theta_bar = np.zeros((G.order, Fbar.order, Fbar.order), dtype=int)
    seen = np.zeros((Fbar.order, Fbar.order), dtype=bool)
    for x in F.elements():
        for y in F.elements():
            xy = F.mul(x, y)
            xbar, ybar = int(r.proj[x]), int(r.proj[y])
            vals = np.array([
                (int(chi[xy, g]) - int(chi[x, g]) - int(chi[y, c.act(g, x)])
                 + int(c.theta[g, x, y])) % M
                for g in G.elements()
            ])
            if seen[xbar, ybar]:
                assert np.array_equal(theta_bar[:, xbar, ybar], vals), (
                    "theta-bar ill-defined", xbar, ybar, x, y,
                )
            else:
                theta_bar[:, xbar, ybar] = vals
                seen[xbar, ybar] = True

    from .cleft import validate_cleft
    act_bar = induced_action(c.action, r)
    cbar = validate_cleft(
        act_bar, gamma_bar, theta_bar, c.omega_cochain(),
        gamma_modulus=M, theta_modulus=M, modulus=M,
    )
    Hbar = build_algebra(cbar.omega_cochain(), cbar)
    report = verify_quasi_hopf(Hbar)
    assert report.ok, "quotient algebra failed the axiom suite"
    return QuotientBuild(
        cbar=cbar, algebra=Hbar, chi=chi, r=r, cert=cert, f=f, report=report,
    )


@dataclass
class QuotientReport:
    ok: bool
    failures: list
    morphism: MorphismReport

    def __bool__(self) -> bool:
        return self.ok


def verify_quotient(qb: QuotientBuild, c: CleftObject, cbar: CleftObject) -> QuotientReport:
    """Check the commuting diagram for i/p, the two graded-morphism scalar
    identities for pi (via the morphism checker with f2 = projection), and
    surjectivity of pi."""
    F, G, M = c.F, c.G, c.modulus
    failures = []
    chi = qb.chi
    # pi restricted along i is the identity on k^G: chi_1 = 1
    if np.any(chi[0]):
        failures.append(("diagram-i", "chi_1 != 1"))
    # p-bar after pi equals proj after p: chi_x(1) = 1
    if np.any(chi[:, 0]):
        failures.append(("diagram-p", "chi_x(1) != 1"))

    morphism = check_cleft_morphism(chi, qb.r.proj, c, cbar)
    if not morphism:
        failures.extend(morphism.failures)

    hit = set(int(qb.r.proj[x]) for x in F.elements())
    if hit != set(cbar.F.elements()):
        failures.append(("pi-not-surjective", None))
    return QuotientReport(ok=not failures, failures=failures, morphism=morphism)


def twist_relation_holds(plain: QuotientBuild, twisted: QuotientBuild, f: dict) -> bool:
    """theta-bar tables of two builds differing by the twist hom f satisfy
    theta'_g(xbar, ybar) = theta_g(xbar, ybar) * f(r(x)r(y)r(xy)^{-1})(g),
    and the gamma-bar tables agree.

    (The multiplicative direction is forced by chi'_x = f(x r(x)^{-1}) chi_x:
    writing b = r(x) r(y) r(xy)^{-1}, one has a_{xy} = a_x a_y b, so the
    twisted theta-bar picks up f(b), not its inverse.)"""
    c = plain.cbar
    r = plain.r
    F = r.parent
    Fbar = r.quotient
    M = c.modulus
    if not np.array_equal(plain.cbar.gamma, twisted.cbar.gamma):
        return False
    for xbar in Fbar.elements():
        for ybar in Fbar.elements():
            rx = int(r.section[xbar])
            ry = int(r.section[ybar])
            rxy = int(r.section[Fbar.mul(xbar, ybar)])
            a = F.mul(F.mul(rx, ry), int(F.inv[rxy]))
            fa = f[a].lift(M)
            diff = (
                twisted.cbar.theta[:, xbar, ybar]
                - plain.cbar.theta[:, xbar, ybar]
                - fa
            ) % M
            if np.any(diff):
                return False
    return True
