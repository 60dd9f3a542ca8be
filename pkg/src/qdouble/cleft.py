"""Cleft objects over k^G_omega and the quasi-Hopf algebras they generate.

A cleft object is a triple (F acting on G, gamma, theta) of normalized
2-cochain families subject to three compatibility conditions with the
ambient 3-cocycle omega.  The associated algebra lives on the basis
{e_g x : g in G, x in F}; every structure constant is a root of unity
stored as an exponent mod the working modulus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

import numpy as np

from .cochains import Cochain, is_normalized_cocycle, solve_coboundary
from .groups import (
    Character,
    FiniteGroup,
    GroupAction,
    Subgroup,
    character_from_lifted,
    characters,
    invariant_characters,
)
from .scalars import CycloInt


class CleftError(ValueError):
    pass


class Condition2Violation(CleftError):
    pass


class Condition3Violation(CleftError):
    pass


class Condition4Violation(CleftError):
    pass


@dataclass
class CleftObject:
    """Validated cleft object; all tables share ``modulus``, which is large
    enough that coboundary solving against gamma is complete (it is a
    multiple of |G| times the modulus the input data lived at)."""

    action: GroupAction
    gamma: np.ndarray   # (|F|, |G|, |G|): gamma_x(g, h)
    theta: np.ndarray   # (|G|, |F|, |F|): theta_g(x, y)
    omega: np.ndarray   # (|G|, |G|, |G|)
    modulus: int
    base_modulus: int

    @property
    def F(self) -> FiniteGroup:
        return self.action.acting

    @property
    def G(self) -> FiniteGroup:
        return self.action.target

    def act(self, g: int, x: int) -> int:
        return self.action.act(g, x)

    def omega_cochain(self) -> Cochain:
        return Cochain(self.G, 3, self.modulus, self.omega)

    def gamma_cochain(self, x: int) -> Cochain:
        return Cochain(self.G, 2, self.modulus, self.gamma[x])


def _lift_table(values, old: int, new: int) -> np.ndarray:
    values = np.asarray(values, dtype=int)
    if new % old:
        raise ValueError(f"cannot lift mod {old} to mod {new}")
    return values * (new // old) % new


def validate_cleft(
    action: GroupAction,
    gamma,
    theta,
    omega: Cochain,
    *,
    gamma_modulus: int,
    theta_modulus: int,
    modulus: int | None = None,
) -> CleftObject:
    """Check the three cleft-object conditions exhaustively and return the
    validated object, with all tables lifted to a common working modulus.

    The default working modulus is lcm(inputs) * |G| so that later
    coboundary solves against gamma are complete over any field.
    """
    F, G = action.acting, action.target
    base = lcm(gamma_modulus, theta_modulus, omega.modulus)
    M = modulus if modulus is not None else base * G.order
    if M % base:
        raise ValueError("working modulus must be a multiple of the input moduli")

    rep = is_normalized_cocycle(omega)
    if not rep:
        raise CleftError(f"omega is not a normalized 3-cocycle: {rep.violation}")

    gam = _lift_table(gamma, gamma_modulus, M)
    the = _lift_table(theta, theta_modulus, M)
    om = omega.lift(M).values
    if gam.shape != (F.order, G.order, G.order):
        raise CleftError("gamma has wrong shape")
    if the.shape != (G.order, F.order, F.order):
        raise CleftError("theta has wrong shape")

    if np.any(gam[:, 0, :]) or np.any(gam[:, :, 0]):
        raise CleftError("gamma is not normalized in its G-arguments")
    if np.any(the[:, 0, :]) or np.any(the[:, :, 0]):
        raise CleftError("theta is not normalized in its F-arguments")

    P = action.perm        # P[x, g] = g <| x
    GT, FT = G.table, F.table

    # condition (2): theta_{g<|x}(y,z) theta_g(x,yz) = theta_g(xy,z) theta_g(x,y)
    lhs = the[P].transpose(1, 0, 2, 3) + the[:, :, FT]
    rhs = the[:, FT, :] + the[:, :, :, None]
    bad = np.argwhere((lhs - rhs) % M)
    if len(bad):
        g, x, y, z = (int(v) for v in bad[0])
        raise Condition2Violation(f"condition (2) fails at (g,x,y,z)=({g},{x},{y},{z})")

    # condition (3): gamma_x(gh,k) gamma_x(g,h) omega(g<|x,h<|x,k<|x)
    #                = gamma_x(h,k) gamma_x(g,hk) omega(g,h,k)
    om_acted = om[
        P[:, :, None, None], P[:, None, :, None], P[:, None, None, :]
    ]  # axes (x, g, h, k)
    lhs = gam[:, GT, :] + gam[:, :, :, None] + om_acted
    rhs = gam[:, None, :, :] + gam[:, :, GT] + om[None]
    bad = np.argwhere((lhs - rhs) % M)
    if len(bad):
        x, g, h, k = (int(v) for v in bad[0])
        raise Condition3Violation(f"condition (3) fails at (x,g,h,k)=({x},{g},{h},{k})")

    # condition (4): gamma_{xy}(g,h) / (gamma_x(g,h) gamma_y(g<|x,h<|x))
    #                = theta_g(x,y) theta_h(x,y) / theta_{gh}(x,y)
    nF = F.order
    gam_acted = gam[
        np.arange(nF)[None, :, None, None],
        P[:, None, :, None],
        P[:, None, None, :],
    ]  # axes (x, y, g, h)
    lhs = gam[FT] - gam[:, None, :, :] - gam_acted
    the_t = the.transpose(1, 2, 0)  # axes (x, y, g)
    rhs = the_t[:, :, :, None] + the_t[:, :, None, :] - the[GT].transpose(2, 3, 0, 1)
    bad = np.argwhere((lhs - rhs) % M)
    if len(bad):
        x, y, g, h = (int(v) for v in bad[0])
        raise Condition4Violation(f"condition (4) fails at (x,y,g,h)=({x},{y},{g},{h})")

    return CleftObject(
        action=action, gamma=gam, theta=the, omega=om,
        modulus=M, base_modulus=base,
    )


def trivial_cleft(action: GroupAction, omega: Cochain | None = None) -> CleftObject:
    """The ordinary cross product data: gamma = theta = 1."""
    F, G = action.acting, action.target
    if omega is None:
        omega = Cochain(G, 3, 1, np.zeros((G.order,) * 3, dtype=int))
    gamma = np.zeros((F.order, G.order, G.order), dtype=int)
    theta = np.zeros((G.order, F.order, F.order), dtype=int)
    return validate_cleft(action, gamma, theta, omega, gamma_modulus=1, theta_modulus=1)


# ---------------------------------------------------------------------------
# the quasi-Hopf algebra k^G_omega #_c kF


@dataclass
class QuasiHopfAlgebra:
    """Structure constants on the basis e_g x, flat index g*|F| + x."""

    cleft: CleftObject
    modulus: int
    prod_ok: np.ndarray = field(repr=False, default=None)
    prod_idx: np.ndarray = field(repr=False, default=None)
    prod_exp: np.ndarray = field(repr=False, default=None)
    anti_idx: np.ndarray = field(repr=False, default=None)
    anti_exp: np.ndarray = field(repr=False, default=None)

    @property
    def G(self) -> FiniteGroup:
        return self.cleft.G

    @property
    def F(self) -> FiniteGroup:
        return self.cleft.F

    @property
    def dim(self) -> int:
        return self.G.order * self.F.order

    def flat(self, g: int, x: int) -> int:
        return g * self.F.order + x

    def unflat(self, i: int) -> tuple[int, int]:
        return divmod(i, self.F.order)

    def mul_flat(self, i: int, j: int):
        """(exponent, index) of e_i * e_j, or None if the product is zero."""
        if not self.prod_ok[i, j]:
            return None
        return int(self.prod_exp[i, j]), int(self.prod_idx[i, j])

    def comult_flat(self, i: int):
        """Delta(e_g x) = sum over ab = g of gamma_x(a,b) e_a x (x) e_b x."""
        g, x = self.unflat(i)
        G = self.G
        out = []
        for a in G.elements():
            b = G.mul(int(G.inv[a]), g)
            out.append((self.flat(a, x), self.flat(b, x), int(self.cleft.gamma[x, a, b])))
        return out

    def antipode_flat(self, i: int) -> tuple[int, int]:
        return int(self.anti_exp[i]), int(self.anti_idx[i])

    def counit_flat(self, i: int) -> bool:
        g, _ = self.unflat(i)
        return g == 0

    def beta_exponents(self) -> np.ndarray:
        """beta = sum_g omega(g, g^{-1}, g) e_g."""
        G = self.G
        return np.array(
            [int(self.cleft.omega[g, G.inv[g], g]) for g in G.elements()]
        )

    # -- generic elements --------------------------------------------------

    def element(self, terms: dict) -> "HElement":
        return HElement(self, 1, {
            (k if isinstance(k, int) else self.flat(*k),): _as_scalar(v, self.modulus)
            for k, v in terms.items()
        })

    def basis_element(self, g: int, x: int, exp: int = 0) -> "HElement":
        return HElement(self, 1, {(self.flat(g, x),): CycloInt.root(self.modulus, exp)})

    def unit(self, legs: int = 1) -> "HElement":
        G, F = self.G, self.F
        one = {(self.flat(g, 0),): CycloInt.one(self.modulus) for g in G.elements()}
        el = HElement(self, 1, one)
        out = el
        for _ in range(legs - 1):
            out = out.tensor(el)
        return out

    def beta_element(self) -> "HElement":
        exps = self.beta_exponents()
        return HElement(self, 1, {
            (self.flat(g, 0),): CycloInt.root(self.modulus, int(exps[g]))
            for g in self.G.elements()
        })

    def associator(self, inverse: bool = False) -> "HElement":
        """phi = sum omega(a,b,c)^{-1} e_a (x) e_b (x) e_c."""
        G = self.G
        sign = 1 if inverse else -1
        terms = {}
        for a in G.elements():
            for b in G.elements():
                for c in G.elements():
                    key = (self.flat(a, 0), self.flat(b, 0), self.flat(c, 0))
                    terms[key] = CycloInt.root(self.modulus, sign * int(self.cleft.omega[a, b, c]))
        return HElement(self, 3, terms)

    def unit_supported_product(self, t1, x1: int, t2, x2: int):
        """Product of u1 = sum_g zeta^{t1(g)} e_g x1 with u2 likewise.

        Such products never collide in the basis, so the result is again a
        pair (exponent vector over G, element of F)."""
        c = self.cleft
        G = self.G
        M = self.modulus
        out = np.empty(G.order, dtype=int)
        for g in G.elements():
            out[g] = (int(t1[g]) + int(t2[c.act(g, x1)]) + int(c.theta[g, x1, x2])) % M
        return out, self.F.mul(x1, x2)


def _as_scalar(v, modulus: int) -> CycloInt:
    if isinstance(v, CycloInt):
        return v
    return CycloInt.root(modulus, int(v))


def build_algebra(omega: Cochain, c: CleftObject) -> QuasiHopfAlgebra:
    """Install the structure constants of k^G_omega #_c kF."""
    if omega.modulus != c.modulus:
        omega = omega.lift(c.modulus)
    if not np.array_equal(omega.values, c.omega):
        raise CleftError("omega disagrees with the cocycle the cleft object was validated against")
    F, G = c.F, c.G
    M = c.modulus
    dim = G.order * F.order
    prod_ok = np.zeros((dim, dim), dtype=bool)
    prod_idx = np.zeros((dim, dim), dtype=int)
    prod_exp = np.zeros((dim, dim), dtype=int)
    for g in G.elements():
        for x in F.elements():
            i = g * F.order + x
            h = c.act(g, x)
            for y in F.elements():
                j = h * F.order + y
                prod_ok[i, j] = True
                prod_idx[i, j] = g * F.order + F.mul(x, y)
                prod_exp[i, j] = c.theta[g, x, y]
    anti_idx = np.zeros(dim, dtype=int)
    anti_exp = np.zeros(dim, dtype=int)
    for g in G.elements():
        for x in F.elements():
            i = g * F.order + x
            ginv = int(G.inv[g])
            xinv = int(F.inv[x])
            anti_idx[i] = c.act(ginv, x) * F.order + xinv
            anti_exp[i] = (-int(c.theta[ginv, x, xinv]) - int(c.gamma[x, g, ginv])) % M
    return QuasiHopfAlgebra(
        cleft=c, modulus=M,
        prod_ok=prod_ok, prod_idx=prod_idx, prod_exp=prod_exp,
        anti_idx=anti_idx, anti_exp=anti_exp,
    )


class HElement:
    """Element of H^{(x) legs} with exact cyclotomic coefficients."""

    __slots__ = ("algebra", "legs", "terms")

    def __init__(self, algebra: QuasiHopfAlgebra, legs: int, terms: dict | None = None):
        self.algebra = algebra
        self.legs = legs
        self.terms = {k: v for k, v in (terms or {}).items() if not v.is_zero()}

    def __add__(self, other: "HElement") -> "HElement":
        assert self.legs == other.legs
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms[k] + v if k in terms else v
        return HElement(self.algebra, self.legs, terms)

    def __mul__(self, other: "HElement") -> "HElement":
        assert self.legs == other.legs
        H = self.algebra
        M = H.modulus
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                exp = 0
                key = []
                for i1, i2 in zip(k1, k2):
                    hit = H.mul_flat(i1, i2)
                    if hit is None:
                        key = None
                        break
                    exp += hit[0]
                    key.append(hit[1])
                if key is None:
                    continue
                key = tuple(key)
                coeff = (v1 * v2).scale_root(exp % M)
                out[key] = out[key] + coeff if key in out else coeff
        return HElement(self.algebra, self.legs, out)

    def tensor(self, other: "HElement") -> "HElement":
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                out[k1 + k2] = v1 * v2
        return HElement(self.algebra, self.legs + other.legs, out)

    def comult_leg(self, leg: int) -> "HElement":
        H = self.algebra
        out: dict = {}
        for k, v in self.terms.items():
            for i1, i2, exp in H.comult_flat(k[leg]):
                key = k[:leg] + (i1, i2) + k[leg + 1:]
                coeff = v.scale_root(exp)
                out[key] = out[key] + coeff if key in out else coeff
        return HElement(H, self.legs + 1, out)

    def antipode_leg(self, leg: int) -> "HElement":
        H = self.algebra
        out: dict = {}
        for k, v in self.terms.items():
            exp, idx = H.antipode_flat(k[leg])
            key = k[:leg] + (idx,) + k[leg + 1:]
            coeff = v.scale_root(exp)
            out[key] = out[key] + coeff if key in out else coeff
        return HElement(H, self.legs, out)

    def drop_leg_by_counit(self, leg: int) -> "HElement":
        H = self.algebra
        out: dict = {}
        for k, v in self.terms.items():
            if not H.counit_flat(k[leg]):
                continue
            key = k[:leg] + k[leg + 1:]
            out[key] = out[key] + v if key in out else v
        return HElement(H, self.legs - 1, out)

    def scale(self, coeff: CycloInt) -> "HElement":
        return HElement(self.algebra, self.legs, {k: v * coeff for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, HElement):
            return NotImplemented
        assert self.legs == other.legs
        keys = set(self.terms) | set(other.terms)
        zero = CycloInt.zero(self.algebra.modulus)
        return all(
            (self.terms.get(k, zero) - other.terms.get(k, zero)).is_zero()
            for k in keys
        )

    def __hash__(self):
        raise TypeError("HElement is unhashable")

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.terms.values())


# ---------------------------------------------------------------------------
# axiom verification


@dataclass
class CheckFamily:
    name: str
    checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class QuasiHopfReport:
    families: list[CheckFamily]

    @property
    def ok(self) -> bool:
        return all(f.ok for f in self.families)

    def __bool__(self) -> bool:
        return self.ok

    def counts(self) -> dict[str, int]:
        return {f.name: f.checked for f in self.families}

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "families": [
                {
                    "name": f.name,
                    "checked": f.checked,
                    "failures": [str(x) for x in f.failures[:5]],
                }
                for f in self.families
            ],
        }


def _check_multiplication(H: QuasiHopfAlgebra) -> CheckFamily:
    """Associativity on all basis triples, plus the two-sided unit."""
    failures = []
    dim = H.dim
    M = H.modulus
    ok, idx, exp = H.prod_ok, H.prod_idx, H.prod_exp

    # (e_i e_j) e_k
    lhs_ok = ok[:, :, None] & ok[idx, :]
    lhs_idx = idx[idx, :]
    lhs_exp = exp[:, :, None] + exp[idx, :]
    # e_i (e_j e_k)
    rhs_ok = ok[None, :, :] & ok.transpose()[idx.transpose(), :].transpose(2, 0, 1)
    # rebuild rhs via direct indexing: e_i * (e_j e_k) uses idx[j,k]
    rhs_ok = ok[:, idx] & ok[None, :, :]
    rhs_idx = idx[:, idx]
    rhs_exp = exp[:, idx] + exp[None, :, :]

    both = lhs_ok & rhs_ok
    mismatch = (lhs_ok != rhs_ok)
    mismatch |= both & (lhs_idx != rhs_idx)
    mismatch |= both & (((lhs_exp - rhs_exp) % M) != 0)
    bad = np.argwhere(mismatch)
    if len(bad):
        failures.append(("associativity", tuple(int(v) for v in bad[0])))

    one = H.unit()
    for i in range(dim):
        g, x = H.unflat(i)
        b = H.basis_element(g, x)
        if one * b != b or b * one != b:
            failures.append(("unit", (g, x)))
            break
    return CheckFamily("multiplication", checked=dim ** 3 + 2 * dim, failures=failures)


def _check_comultiplication(H: QuasiHopfAlgebra) -> CheckFamily:
    """Counit laws, multiplicativity of Delta, quasi-coassociativity."""
    c = H.cleft
    F, G = H.F, H.G
    M = H.modulus
    P, GT, FT = c.action.perm, G.table, F.table
    gam, the, om = c.gamma, c.theta, c.omega
    failures = []
    checked = 0

    # counit laws reduce to normalization of gamma in each argument, and
    # multiplicativity of the counit itself to theta_1 = 1
    if np.any(gam[:, 0, :]) or np.any(gam[:, :, 0]):
        failures.append(("counit", "gamma not normalized"))
    if np.any(the[0]):
        failures.append(("counit-multiplicative", "theta_1 != 1"))
    checked += gam.size + the[0].size

    # Delta(uv) = Delta(u) Delta(v) on the basis: for all x, y, a, b
    # theta_{ab}(x,y) + gamma_{xy}(a,b) ==
    #   gamma_x(a,b) + gamma_y(a<|x, b<|x) + theta_a(x,y) + theta_b(x,y)
    nF = F.order
    the_t = the.transpose(1, 2, 0)  # (x, y, g)
    lhs = the[GT].transpose(2, 3, 0, 1) + gam[FT]                 # (x,y,a,b)
    gam_acted = gam[
        np.arange(nF)[None, :, None, None], P[:, None, :, None], P[:, None, None, :]
    ]
    rhs = gam[:, None, :, :] + gam_acted + the_t[:, :, :, None] + the_t[:, :, None, :]
    bad = np.argwhere((lhs - rhs) % M)
    checked += lhs.size
    if len(bad):
        failures.append(("delta-multiplicative", tuple(int(v) for v in bad[0])))

    # quasi-coassociativity: phi . (Delta x id)Delta == (id x Delta)Delta . phi
    om_acted = om[P[:, :, None, None], P[:, None, :, None], P[:, None, None, :]]
    lhs = -om[None] + gam[:, GT, :] + gam[:, :, :, None]          # (x,u,v,b)
    rhs = gam[:, :, GT] + gam[:, None, :, :] - om_acted
    bad = np.argwhere((lhs - rhs) % M)
    checked += lhs.size
    if len(bad):
        failures.append(("quasi-coassociativity", tuple(int(v) for v in bad[0])))
    return CheckFamily("comultiplication", checked=checked, failures=failures)


def _check_associator(H: QuasiHopfAlgebra) -> CheckFamily:
    """Pentagon identity and counit-normalization of phi."""
    om = H.cleft.omega
    G = H.G
    M = H.modulus
    GT = G.table
    failures = []
    lhs = om[None, :, :, :] + om[:, GT, :] + om[:, :, :, None]
    rhs = om[GT, :, :] + om[:, :, GT]
    bad = np.argwhere((lhs - rhs) % M)
    if len(bad):
        failures.append(("pentagon", tuple(int(v) for v in bad[0])))
    if np.any(om[:, 0, :]) or np.any(om[0]) or np.any(om[:, :, 0]):
        failures.append(("phi-normalization", "omega not normalized"))
    return CheckFamily("associator", checked=lhs.size + om.size, failures=failures)


def _check_antipode(H: QuasiHopfAlgebra) -> CheckFamily:
    """The quasi-Hopf antipode axioms with alpha = 1."""
    failures = []
    checked = 0
    one = H.unit()
    beta = H.beta_element()

    for i in range(H.dim):
        g, x = H.unflat(i)
        h = H.basis_element(g, x)
        eps = H.counit_flat(i)
        # sum S(h1) h2 == eps(h) 1
        delta = h.comult_leg(0)
        acc = HElement(H, 1, {})
        for (i1, i2), v in delta.terms.items():
            left = HElement(H, 1, {(i1,): v}).antipode_leg(0)
            acc = acc + left * HElement(H, 1, {(i2,): CycloInt.one(H.modulus)})
        expect = one if eps else HElement(H, 1, {})
        checked += 1
        if acc != expect:
            failures.append(("S-left", (g, x)))
        # sum h1 beta S(h2) == eps(h) beta
        acc = HElement(H, 1, {})
        for (i1, i2), v in delta.terms.items():
            right = HElement(H, 1, {(i2,): CycloInt.one(H.modulus)}).antipode_leg(0)
            acc = acc + HElement(H, 1, {(i1,): v}) * beta * right
        expect = beta if eps else HElement(H, 1, {})
        checked += 1
        if acc != expect:
            failures.append(("S-right", (g, x)))

    # sum phi1 beta S(phi2) phi3 == 1
    phi = H.associator()
    acc = HElement(H, 1, {})
    for (i1, i2, i3), v in phi.terms.items():
        mid = HElement(H, 1, {(i2,): CycloInt.one(H.modulus)}).antipode_leg(0)
        acc = acc + HElement(H, 1, {(i1,): v}) * beta * mid * H.basis_element(*H.unflat(i3))
    checked += 1
    if acc != one:
        failures.append(("phi-beta-compat", None))

    # sum S(phibar1) phibar2 beta S(phibar3) == 1
    phibar = H.associator(inverse=True)
    acc = HElement(H, 1, {})
    for (i1, i2, i3), v in phibar.terms.items():
        left = HElement(H, 1, {(i1,): v}).antipode_leg(0)
        right = HElement(H, 1, {(i3,): CycloInt.one(H.modulus)}).antipode_leg(0)
        acc = acc + left * H.basis_element(*H.unflat(i2)) * beta * right
    checked += 1
    if acc != one:
        failures.append(("phibar-beta-compat", None))
    return CheckFamily("antipode", checked=checked, failures=failures)


def verify_quasi_hopf(H: QuasiHopfAlgebra) -> QuasiHopfReport:
    """Run the four axiom families exhaustively over the basis."""
    return QuasiHopfReport(families=[
        _check_multiplication(H),
        _check_comultiplication(H),
        _check_associator(H),
        _check_antipode(H),
    ])


def verify_canonical_maps(H: QuasiHopfAlgebra) -> list:
    """The canonical i: k^G_omega -> H and p: H -> kF are quasi-bialgebra
    maps; returns the list of failures (empty when all identities hold)."""
    c = H.cleft
    F, G = H.F, H.G
    failures = []
    # p(e_g x) = delta_{g,1} x is an algebra map iff theta_1 = 1 and a
    # coalgebra map iff gamma_x(1,1) = 1
    if np.any(c.theta[0]):
        failures.append("p-algebra-map")
    if np.any(c.gamma[:, 0, 0]):
        failures.append("p-coalgebra-map")
    # i(e_g) = e_g is a coalgebra map iff gamma_1 = 1 (Delta on k^G_omega has
    # trivial coefficients); it is an algebra map by the product rule
    if np.any(c.gamma[0]):
        failures.append("i-coalgebra-map")
    for g in G.elements():
        for h in G.elements():
            prod = H.basis_element(g, 0) * H.basis_element(h, 0)
            expect = H.basis_element(g, 0) if g == h else HElement(H, 1, {})
            if prod != expect:
                failures.append(("i-algebra-map", (g, h)))
                break
    return failures


# ---------------------------------------------------------------------------
# group-like elements, F^gamma, Z_c(F), and the extension 2-cocycle beta


@dataclass
class GroupLike:
    x: int
    t: np.ndarray
    chi: Character
    central: bool


@dataclass
class BetaCocycle:
    """beta(x,y)(g) = t_x(g) t_y(g<|x) t_{xy}(g)^{-1} theta_g(x,y) on F^gamma,
    with genuine F-invariant characters on Z_c(F) x Z_c(F)."""

    domain: Subgroup
    modulus: int
    values: dict

    def vector(self, x: int, y: int) -> np.ndarray:
        return self.values[(x, y)]

    def character(self, G: FiniteGroup, x: int, y: int) -> Character:
        return character_from_lifted(G, self.values[(x, y)], self.modulus)


@dataclass
class GroupLikeData:
    """The group-like bookkeeping of one cleft object: the subgroup
    F^gamma, a fixed section {t_x}, Z_c(F), the group-like lists and the
    extension cocycle."""

    cleft: CleftObject
    algebra: QuasiHopfAlgebra
    f_gamma: Subgroup
    z_c: Subgroup
    sections: dict
    characters: list[Character]
    invariant_characters: list[Character]
    group_likes: list[GroupLike]
    central_group_likes: list[GroupLike]
    beta: BetaCocycle


def _delta_matches(c: CleftObject, t: np.ndarray, x: int) -> bool:
    G, M = c.G, c.modulus
    tv = np.asarray(t)
    return not np.any((tv[:, None] + tv[None, :] - tv[G.table] - c.gamma[x]) % M)


def _centrality_constraints(c: CleftObject, a: int):
    """Linear rows forcing t_a(g) theta_g(a,y) == t_a(g<|y) theta_g(y,a)."""
    G, F = c.G, c.F
    rows = []
    for g in G.elements():
        for y in F.elements():
            row = [0] * G.order
            row[g] += 1
            row[c.act(g, y)] -= 1
            rows.append((row, int(c.theta[g, y, a]) - int(c.theta[g, a, y])))
    return rows


def _is_central_unit(H: QuasiHopfAlgebra, t: np.ndarray, a: int) -> bool:
    """Direct check that sum_g zeta^{t(g)} e_g a commutes with every basis
    element of H."""
    c = H.cleft
    F, G, M = H.F, H.G, H.modulus
    for h in G.elements():
        for y in F.elements():
            # u e_h y: only g with g<|a = h contributes
            left = [
                ((g, F.mul(a, y)), (int(t[g]) + int(c.theta[g, a, y])) % M)
                for g in G.elements()
                if c.act(g, a) == h
            ]
            right_g = c.act(h, y)
            right = [((h, F.mul(y, a)), (int(t[right_g]) + int(c.theta[h, y, a])) % M)]
            if sorted(left) != sorted(right):
                return False
    return True


def gamma_trivial_subgroup(c: CleftObject) -> Subgroup:
    """F^gamma = {x : gamma_x is a 2-coboundary}; closure under products and
    inverses is asserted by constructing the Subgroup."""
    members = []
    for x in c.F.elements():
        if solve_coboundary(c.gamma_cochain(x)):
            members.append(x)
    return Subgroup(c.F, tuple(members))


def group_like_structure(c: CleftObject, H: QuasiHopfAlgebra | None = None) -> GroupLikeData:
    """Compute F^gamma, a deterministic section {t_x}, Z_c(F) (with the
    section re-fixed so u(1,a) is central for a in Z_c), Gamma(H) and
    Gamma_0(H), and the extension 2-cocycle beta."""
    if H is None:
        H = build_algebra(c.omega_cochain(), c)
    F, G, M = c.F, c.G, c.modulus

    sections: dict[int, np.ndarray] = {}
    f_gamma_members = []
    for x in F.elements():
        sol = solve_coboundary(c.gamma_cochain(x))
        if sol:
            f_gamma_members.append(x)
            sections[x] = sol.particular % M
    f_gamma = Subgroup(F, tuple(f_gamma_members))

    trivial_perm = np.arange(G.order)
    z_c_members = []
    for a in f_gamma.members:
        if not np.array_equal(c.action.perm[a], trivial_perm):
            continue
        joint = solve_coboundary(c.gamma_cochain(a), extra=_centrality_constraints(c, a))
        if joint:
            z_c_members.append(a)
            sections[a] = joint.particular % M  # re-fix: u(1, a) central
    z_c = Subgroup(F, tuple(z_c_members))
    assert set(z_c.members) <= set(F.center_members) & set(f_gamma.members)

    chars = characters(G)
    inv_chars = invariant_characters(G, c.action)

    group_likes = []
    central = []
    for x in f_gamma.members:
        for chi in chars:
            t = (sections[x] + chi.lift(M)) % M
            assert _delta_matches(c, t, x), "constructed element is not group-like"
            is_central = x in z_c and chi in inv_chars
            gl = GroupLike(x=x, t=t, chi=chi, central=is_central)
            if is_central:
                assert _is_central_unit(H, t, x)
                central.append(gl)
            group_likes.append(gl)
    assert len(group_likes) == len(chars) * f_gamma.order
    assert len(central) == len(inv_chars) * z_c.order

    beta = _beta_cocycle(c, f_gamma, z_c, sections, inv_chars)
    return GroupLikeData(
        cleft=c, algebra=H, f_gamma=f_gamma, z_c=z_c, sections=sections,
        characters=chars, invariant_characters=inv_chars,
        group_likes=group_likes, central_group_likes=central, beta=beta,
    )


def _beta_cocycle(c, f_gamma, z_c, sections, inv_chars) -> BetaCocycle:
    G, F, M = c.G, c.F, c.modulus
    values = {}
    for x in f_gamma.members:
        tx = sections[x]
        for y in f_gamma.members:
            ty = sections[y]
            xy = F.mul(x, y)
            txy = sections[xy]
            vec = np.array([
                (int(tx[g]) + int(ty[c.act(g, x)]) - int(txy[g]) + int(c.theta[g, x, y])) % M
                for g in G.elements()
            ])
            values[(x, y)] = vec
    beta = BetaCocycle(domain=f_gamma, modulus=M, values=values)
    inv_set = {chi.values for chi in inv_chars}
    for a in z_c.members:
        for b in z_c.members:
            chi = beta.character(G, a, b)  # raises if not a character
            assert chi.values in inv_set, "beta on Z_c must be F-invariant"
            # note: theta_g(a,b) == theta_g(b,a) on Z_c
            assert not np.any((c.theta[:, a, b] - c.theta[:, b, a]) % M)
    return beta


def group_likes(H: QuasiHopfAlgebra, c: CleftObject):
    """All of Gamma(H) plus the fixed section {t_x}."""
    data = group_like_structure(c, H)
    return data.group_likes, data.sections


def central_group_likes(H: QuasiHopfAlgebra, c: CleftObject):
    """Gamma_0(H) and Z_c(F)."""
    data = group_like_structure(c, H)
    return data.central_group_likes, data.z_c


def verify_factor_set(data: GroupLikeData) -> int:
    """Check u(chi1,x) u(chi2,y) == u(chi1 (chi2 o <|x) beta(x,y), xy) by
    direct multiplication; returns the number of products checked."""
    c, H = data.cleft, data.algebra
    F, G, M = c.F, c.G, c.modulus
    checked = 0
    chars = data.characters
    for x in data.f_gamma.members:
        for y in data.f_gamma.members:
            for chi1 in chars:
                for chi2 in chars:
                    if x not in data.z_c and (not chi1.is_trivial() or not chi2.is_trivial()):
                        continue  # full character sweep only on the central part
                    t1 = (data.sections[x] + chi1.lift(M)) % M
                    t2 = (data.sections[y] + chi2.lift(M)) % M
                    prod_t, prod_x = H.unit_supported_product(t1, x, t2, y)
                    xy = F.mul(x, y)
                    chi2_x = np.array([int(chi2.lift(M)[c.act(g, x)]) for g in G.elements()])
                    expect = (
                        data.sections[xy] + chi1.lift(M) + chi2_x + data.beta.vector(x, y)
                    ) % M
                    assert prod_x == xy
                    assert np.array_equal(prod_t, expect), (x, y)
                    checked += 1
    return checked


def brute_force_group_likes(H: QuasiHopfAlgebra, include_zero_coeffs: bool | None = None):
    """Independent oracle: enumerate elements u = sum_g c_g e_g x and keep
    those with Delta(u) = u (x) u, straight from the structure constants.

    For small dim every coefficient ranges over mu_M union {0}; above that
    the (forced) unit-coefficient normal form c_1 = 1 is used.  Returns a
    list of (x, exponent tuple) with None marking a zero coefficient.
    """
    c = H.cleft
    F, G, M = H.F, H.G, H.modulus
    if include_zero_coeffs is None:
        include_zero_coeffs = (M + 1) ** G.order <= 20000
    found = []
    if include_zero_coeffs:
        import itertools
        choices = [None] + list(range(M))
        for x in F.elements():
            for coeffs in itertools.product(choices, repeat=G.order):
                if all(v is None for v in coeffs):
                    continue
                if _is_group_like(c, coeffs, x):
                    found.append((x, coeffs))
    else:
        for x in F.elements():
            gam = c.gamma[x]
            n = G.order
            grids = np.meshgrid(*([np.arange(M)] * (n - 1)), indexing="ij")
            t = np.zeros((grids[0].size, n), dtype=int)
            for i, gr in enumerate(grids):
                t[:, i + 1] = gr.ravel()
            mask = np.ones(len(t), dtype=bool)
            for a in range(n):
                for b in range(n):
                    ab = G.mul(a, b)
                    mask &= ((t[:, a] + t[:, b] - t[:, ab] - int(gam[a, b])) % M) == 0
            for row in t[mask]:
                found.append((x, tuple(int(v) for v in row)))
    return found


def _is_group_like(c: CleftObject, coeffs, x: int) -> bool:
    G, M = c.G, c.modulus
    for a in G.elements():
        for b in G.elements():
            ab = G.mul(a, b)
            lhs = None
            if coeffs[ab] is not None:
                lhs = (int(c.gamma[x, a, b]) + coeffs[ab]) % M
            rhs = None
            if coeffs[a] is not None and coeffs[b] is not None:
                rhs = (coeffs[a] + coeffs[b]) % M
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# morphisms of cleft objects


@dataclass
class MorphismReport:
    ok: bool
    failures: list

    def __bool__(self) -> bool:
        return self.ok


def check_cleft_morphism(chi, f2, c: CleftObject, cprime: CleftObject) -> MorphismReport:
    """Verify that f1(e_g x) = chi_x(g) e_g f2(x), paired with the group
    homomorphism f2, is a morphism of cleft objects over the same G."""
    F, G = c.F, c.G
    Fp = cprime.F
    M = c.modulus
    failures = []
    if cprime.modulus != M:
        return MorphismReport(False, [("modulus-mismatch", (M, cprime.modulus))])
    chi = np.asarray(chi, dtype=int) % M
    f2 = np.asarray(f2, dtype=int)

    if f2[0] != 0:
        failures.append(("f2-identity", None))
    for x in F.elements():
        for y in F.elements():
            if f2[F.mul(x, y)] != Fp.mul(int(f2[x]), int(f2[y])):
                failures.append(("f2-homomorphism", (x, y)))
                break
        if failures and failures[-1][0] == "f2-homomorphism":
            break

    for x in F.elements():
        if not np.array_equal(c.action.perm[x], cprime.action.perm[f2[x]]):
            failures.append(("action-preserved", x))
            break

    if np.any(chi[0]):
        failures.append(("diagram-i", "chi_1 != 1"))
    if np.any(chi[:, 0]):
        failures.append(("diagram-p", "chi_x(1) != 1"))

    # coalgebra map: gamma and chi interact through the comultiplication
    for x in F.elements():
        lhs = c.gamma[x] + chi[x][:, None] + chi[x][None, :]
        rhs = cprime.gamma[f2[x]] + chi[x][G.table]
        bad = np.argwhere((lhs - rhs) % M)
        if len(bad):
            failures.append(("coalgebra-identity", (x, *map(int, bad[0]))))
            break

    # algebra map: theta and chi interact through the product
    for x in F.elements():
        for y in F.elements():
            xy = F.mul(x, y)
            for g in G.elements():
                lhs = (
                    int(cprime.theta[g, f2[x], f2[y]]) + int(chi[x, g])
                    + int(chi[y, c.act(g, x)])
                )
                rhs = int(c.theta[g, x, y]) + int(chi[xy, g])
                if (lhs - rhs) % M:
                    failures.append(("algebra-identity", (x, y, g)))
                    break
            else:
                continue
            break
        else:
            continue
        break

    return MorphismReport(ok=not failures, failures=failures)
