"""Finite groups as multiplication tables.

Element 0 is always the identity (loaders re-index if the table puts it
elsewhere).  Characters are stored as exponent vectors mod the group
exponent E, i.e. chi(g) = zeta_E ** values[g]; no floating point anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import lcm

import numpy as np

from .smith import smith_solve


class GroupError(ValueError):
    pass


class NoIdentity(GroupError):
    pass


class NoInverse(GroupError):
    pass


class NotAssociative(GroupError):
    pass


class NotNormal(GroupError):
    pass


class NotAutomorphism(GroupError):
    pass


class NotRightAction(GroupError):
    pass


@dataclass
class FiniteGroup:
    table: np.ndarray
    inv: np.ndarray
    exponent: int
    center_members: tuple[int, ...]
    commutator_members: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def elements(self) -> range:
        return range(self.order)

    def order_of(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = int(self.table[x, a])
            k += 1
        return k

    def conjugate(self, g: int, x: int) -> int:
        """g ^ x = x^{-1} g x."""
        return int(self.table[self.table[self.inv[x], g], x])

    def center(self) -> "Subgroup":
        return Subgroup(self, self.center_members)

    def commutator_subgroup(self) -> "Subgroup":
        return Subgroup(self, self.commutator_members)

    def is_abelian(self) -> bool:
        return len(self.center_members) == self.order


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(set(int(m) for m in self.members)))
        object.__setattr__(self, "members", members)
        G = self.parent
        if 0 not in members:
            raise GroupError("subgroup must contain the identity")
        mset = set(members)
        for a in members:
            if int(G.inv[a]) not in mset:
                raise GroupError(f"subgroup not closed under inverse at {a}")
            for b in members:
                if G.mul(a, b) not in mset:
                    raise GroupError(f"subgroup not closed under product at ({a}, {b})")

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, a: int) -> bool:
        return int(a) in set(self.members)

    def is_normal(self) -> bool:
        G = self.parent
        mset = set(self.members)
        return all(
            G.mul(G.mul(f, a), int(G.inv[f])) in mset
            for f in G.elements()
            for a in self.members
        )

    def is_central(self) -> bool:
        return set(self.members) <= set(self.parent.center_members)


def subgroup_generated(G: FiniteGroup, gens) -> Subgroup:
    members = {0}
    frontier = [0] + [int(g) for g in gens]
    while frontier:
        a = frontier.pop()
        for g in gens:
            for b in (G.mul(a, int(g)), G.mul(int(g), a)):
                if b not in members:
                    members.add(b)
                    frontier.append(b)
    return Subgroup(G, tuple(sorted(members)))


def _find_identity(table: np.ndarray) -> int:
    n = len(table)
    rng = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], rng) and np.array_equal(table[:, e], rng):
            return e
    raise NoIdentity("table has no two-sided identity element")


def load_group(table) -> FiniteGroup:
    """Validate a multiplication table and build the group.

    The identity is re-indexed to 0 if needed.  Associativity, identity and
    inverse axioms are checked exhaustively; failures name the witness.
    """
    table = np.asarray(table, dtype=int)
    if table.ndim != 2 or table.shape[0] != table.shape[1]:
        raise GroupError("table must be square")
    n = len(table)
    if n == 0:
        raise NoIdentity("empty table")
    if table.min() < 0 or table.max() >= n:
        raise GroupError("table entries out of range")

    e = _find_identity(table)
    if e != 0:
        # swap labels 0 <-> e
        perm = np.arange(n)
        perm[0], perm[e] = e, 0
        table = perm[table[np.ix_(perm, perm)]]

    # associativity: table[table[a,b],c] == table[a,table[b,c]]
    left = table[table]            # axes (a, b, c)
    right = table[:, table]        # axes (a, b, c)
    if not np.array_equal(left, right):
        a, b, c = np.argwhere(left != right)[0]
        raise NotAssociative(f"associativity fails at triple ({a}, {b}, {c})")

    inv = np.full(n, -1, dtype=int)
    for a in range(n):
        hits = np.flatnonzero(table[a] == 0)
        if len(hits) != 1 or table[hits[0], a] != 0:
            raise NoInverse(f"element {a} has no two-sided inverse")
        inv[a] = hits[0]

    exponent = 1
    for a in range(n):
        k, x = 1, a
        while x != 0:
            x = int(table[x, a])
            k += 1
        exponent = lcm(exponent, k)

    center = tuple(
        int(z) for z in range(n) if np.array_equal(table[z], table[:, z])
    )

    commutators = {
        int(table[table[table[inv[a], inv[b]], a], b])
        for a in range(n)
        for b in range(n)
    }
    G = FiniteGroup(
        table=table,
        inv=inv,
        exponent=exponent,
        center_members=center,
        commutator_members=(),
    )
    comm = subgroup_generated(G, sorted(commutators))
    G.commutator_members = comm.members
    return G


@dataclass
class GroupAction:
    """Right action of ``acting`` on ``target`` by automorphisms;
    perm[x][g] = g <| x."""

    acting: FiniteGroup
    target: FiniteGroup
    perm: np.ndarray

    def act(self, g: int, x: int) -> int:
        return int(self.perm[x, g])

    def is_trivial_on(self, elements) -> bool:
        rng = np.arange(self.target.order)
        return all(np.array_equal(self.perm[x], rng) for x in elements)

    def kernel(self) -> Subgroup:
        rng = np.arange(self.target.order)
        members = tuple(
            x for x in self.acting.elements() if np.array_equal(self.perm[x], rng)
        )
        return Subgroup(self.acting, members)


def validate_action(F: FiniteGroup, G: FiniteGroup, perms) -> GroupAction:
    """Check that perms defines a right action of F on G by automorphisms."""
    perm = np.asarray(perms, dtype=int)
    if perm.shape != (F.order, G.order):
        raise GroupError("perm array has wrong shape")
    rng = np.arange(G.order)
    for x in F.elements():
        if not np.array_equal(np.sort(perm[x]), rng):
            raise NotAutomorphism(f"perm[{x}] is not a permutation")
        # automorphism: perm[x][gh] == perm[x][g] * perm[x][h]
        if not np.array_equal(perm[x][G.table], G.table[np.ix_(perm[x], perm[x])]):
            raise NotAutomorphism(f"perm[{x}] is not multiplicative")
    if not np.array_equal(perm[0], rng):
        raise NotRightAction("identity of F must act trivially")
    for x in F.elements():
        for y in F.elements():
            if not np.array_equal(perm[F.mul(x, y)], perm[y][perm[x]]):
                raise NotRightAction(f"right-action law fails at ({x}, {y})")
    return GroupAction(acting=F, target=G, perm=perm)


def trivial_action(F: FiniteGroup, G: FiniteGroup) -> GroupAction:
    perm = np.tile(np.arange(G.order), (F.order, 1))
    return GroupAction(acting=F, target=G, perm=perm)


def conjugation_action(G: FiniteGroup) -> GroupAction:
    """G acting on itself by g <| x = x^{-1} g x; kernel equals Z(G)."""
    perm = np.empty((G.order, G.order), dtype=int)
    for x in G.elements():
        for g in G.elements():
            perm[x, g] = G.conjugate(g, x)
    act = GroupAction(acting=G, target=G, perm=perm)
    assert act.kernel().members == G.center().members
    return act


@dataclass(frozen=True)
class Character:
    """Linear character chi(g) = zeta_E ** values[g] with E the group
    exponent."""

    group: FiniteGroup
    values: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.group.exponent

    def __call__(self, g: int) -> int:
        return self.values[g]

    def lift(self, modulus: int) -> np.ndarray:
        E = self.modulus
        if modulus % E:
            raise ValueError(f"cannot lift exponents mod {E} to mod {modulus}")
        return np.array(self.values, dtype=int) * (modulus // E) % modulus

    def product(self, other: "Character") -> "Character":
        E = self.modulus
        vals = tuple(
            (a + b) % E for a, b in zip(self.values, other.values)
        )
        return Character(self.group, vals)

    def inverse(self) -> "Character":
        E = self.modulus
        return Character(self.group, tuple((-v) % E for v in self.values))

    def is_trivial(self) -> bool:
        return not any(self.values)

    def is_invariant(self, act: GroupAction) -> bool:
        return all(
            self.values[act.act(g, x)] == self.values[g]
            for x in act.acting.elements()
            for g in self.group.elements()
        )


def character_from_lifted(G: FiniteGroup, values, modulus: int) -> Character:
    """Convert an exponent vector mod ``modulus`` that happens to be a
    character into a Character mod the group exponent."""
    E = G.exponent
    if modulus % E:
        raise ValueError("modulus must be a multiple of the group exponent")
    step = modulus // E
    vals = []
    for v in values:
        v = int(v) % modulus
        if v % step:
            raise ValueError("values do not lie in the E-torsion of Z/modulus")
        vals.append(v // step)
    chi = Character(G, tuple(vals))
    if not _is_character_vector(G, chi.values, E):
        raise ValueError("values do not define a character")
    return chi


def _is_character_vector(G: FiniteGroup, values, modulus: int) -> bool:
    if values[0] % modulus:
        return False
    return all(
        (values[g] + values[h] - values[G.mul(g, h)]) % modulus == 0
        for g in G.elements()
        for h in G.elements()
    )


def characters(G: FiniteGroup) -> list[Character]:
    """All |G/[G,G]| linear characters, as exponent vectors mod E.

    Characters are the kernel of the homomorphism equations
    t(g) + t(h) - t(gh) = 0 (mod E), solved exactly and enumerated by
    closing the homogeneous span.
    """
    n = G.order
    E = G.exponent
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
            rhs.append(0)
    sol = smith_solve(rows, rhs, E)
    assert sol, "homogeneous system must be solvable"
    chars = [Character(G, tuple(int(v) % E for v in vec)) for vec in sol.all_solutions()]
    ab_order = G.order // len(G.commutator_members)
    assert len(chars) == ab_order, (len(chars), ab_order)
    return sorted(chars, key=lambda c: c.values)


def invariant_characters(G: FiniteGroup, act: GroupAction) -> list[Character]:
    """The F-invariant linear characters of G under the given action."""
    if act.target is not G:
        raise GroupError("action does not target G")
    return [chi for chi in characters(G) if chi.is_invariant(act)]


@dataclass
class QuotientData:
    parent: FiniteGroup
    kernel: Subgroup
    quotient: FiniteGroup
    proj: np.ndarray
    section: np.ndarray


def quotient_with_section(F: FiniteGroup, A: Subgroup) -> QuotientData:
    """Quotient F/A on coset representatives; the section picks the minimal
    element index in each coset, so outputs are reproducible."""
    if A.parent is not F:
        raise GroupError("subgroup belongs to a different group")
    if not A.is_normal():
        raise NotNormal("kernel subgroup is not normal")
    n = F.order
    coset_of = np.full(n, -1, dtype=int)
    reps = []
    for g in range(n):
        if coset_of[g] >= 0:
            continue
        members = sorted(F.mul(g, a) for a in A.members)
        reps.append(members[0])
        for m in members:
            coset_of[m] = len(reps) - 1
    # re-sort cosets by representative; identity coset (rep 0) comes first
    order_idx = np.argsort(reps)
    relabel = np.empty(len(reps), dtype=int)
    relabel[order_idx] = np.arange(len(reps))
    proj = relabel[coset_of]
    section = np.zeros(len(reps), dtype=int)
    for ybar in range(len(reps)):
        section[ybar] = min(g for g in range(n) if proj[g] == ybar)

    qtable = np.empty((len(reps), len(reps)), dtype=int)
    for i in range(len(reps)):
        for j in range(len(reps)):
            qtable[i, j] = proj[F.mul(int(section[i]), int(section[j]))]
    Fbar = load_group(qtable)
    qd = QuotientData(parent=F, kernel=A, quotient=Fbar, proj=proj, section=section)
    assert all(proj[section[y]] == y for y in range(Fbar.order))
    assert Fbar.order * A.order == F.order
    assert section[0] == 0
    return qd


def induced_action(act: GroupAction, qd: QuotientData) -> GroupAction:
    """Push a right action of F on G down to F/A when A acts trivially."""
    if not act.is_trivial_on(qd.kernel.members):
        raise NotRightAction("kernel does not act trivially; action does not descend")
    Fbar = qd.quotient
    perm = np.array([act.perm[int(qd.section[x])] for x in range(Fbar.order)])
    return validate_action(Fbar, act.target, perm)


def character_homomorphisms(A: Subgroup, chars: list[Character]) -> list[dict]:
    """Brute-force Hom(A, X) for a finite character group X given as a list.

    Returns each homomorphism as a dict {a: Character}; desk scale only.
    """
    F = A.parent
    members = list(A.members)
    trivial = next(c for c in chars if c.is_trivial())
    nontrivial = [a for a in members if a != 0]
    homs = []
    for assignment in itertools.product(chars, repeat=len(nontrivial)):
        f = {0: trivial}
        f.update(dict(zip(nontrivial, assignment)))
        if all(
            f[F.mul(a, b)].values == f[a].product(f[b]).values
            for a in members
            for b in members
        ):
            homs.append(f)
    return homs
