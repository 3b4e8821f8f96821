"""Finite groups as Cayley tables and the dual Hopf algebra k^G."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .algebra import Algebra, HopfAlgebra
from .errors import UnsupportedInput, ValidationError


@dataclass(frozen=True, eq=False)
class GroupTable:
    """``cayley[a, b]`` is the index of the product ``a b``."""

    cayley: np.ndarray
    name: str = ""

    def __post_init__(self):
        t = np.asarray(self.cayley, dtype=np.int64)
        object.__setattr__(self, "cayley", t)
        n = t.shape[0]
        if t.ndim != 2 or t.shape != (n, n) or n == 0:
            raise ValidationError(f"cayley table must be a non-empty square array, got shape {t.shape}")
        if t.min() < 0 or t.max() >= n:
            raise ValidationError("cayley table entries out of range")
        ids = [e for e in range(n) if np.array_equal(t[e], np.arange(n)) and np.array_equal(t[:, e], np.arange(n))]
        if not ids:
            raise ValidationError("cayley table has no identity element")
        object.__setattr__(self, "identity", ids[0])
        for a, b, c in itertools.product(range(n), repeat=3):
            if t[t[a, b], c] != t[a, t[b, c]]:
                raise ValidationError("cayley table is not associative", witness=(a, b, c))
        inv = []
        for a in range(n):
            right = [b for b in range(n) if t[a, b] == ids[0]]
            if not right or t[right[0], a] != ids[0]:
                raise ValidationError(f"element {a} has no inverse", witness=(a,))
            inv.append(right[0])
        object.__setattr__(self, "inverse", np.array(inv, dtype=np.int64))

    @property
    def order(self) -> int:
        return self.cayley.shape[0]

    def mul(self, a: int, b: int) -> int:
        return int(self.cayley[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def generators(self) -> list[int]:
        """A small generating set, chosen greedily in index order."""
        gens: list[int] = []
        span = {self.identity}
        for g in range(self.order):
            if g not in span:
                gens.append(g)
                span = self.closure(gens)
        return gens

    def closure(self, gens) -> set[int]:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.mul(a, g)
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return seen

    def is_abelian(self) -> bool:
        return np.array_equal(self.cayley, self.cayley.T)


def cyclic_group(n: int) -> GroupTable:
    idx = np.arange(n)
    return GroupTable((idx[:, None] + idx[None, :]) % n, name=f"C{n}")


def trivial_group() -> GroupTable:
    return cyclic_group(1)


def symmetric_group(n: int) -> GroupTable:
    """Permutations of ``range(n)`` in lexicographic order; ``(a b)(x) = a(b(x))``."""
    perms = list(itertools.permutations(range(n)))
    index = {q: i for i, q in enumerate(perms)}
    table = [[index[tuple(a[b[x]] for x in range(n))] for b in perms] for a in perms]
    return GroupTable(np.array(table), name=f"S{n}")


def build_group_dual(g: GroupTable, p: int) -> HopfAlgebra:
    """The Hopf algebra of functions on ``g`` in the basis of point indicators."""
    n = g.order
    mult = np.zeros((n, n * n), dtype=np.int64)
    for a in range(n):
        mult[a, a * n + a] = 1
    comult = np.zeros((n * n, n), dtype=np.int64)
    for a, b in itertools.product(range(n), repeat=2):
        comult[a * n + b, g.mul(a, b)] = 1
    counit = np.zeros((1, n), dtype=np.int64)
    counit[0, g.identity] = 1
    antipode = la.permutation_matrix([g.inv(a) for a in range(n)])
    return HopfAlgebra(Algebra(p, mult, np.ones(n, dtype=np.int64)), comult, counit, antipode, group=g)


@dataclass(frozen=True, eq=False)
class GaloisAction:
    """``gamma[g]`` is the matrix by which ``g`` acts."""

    group: GroupTable
    gamma: tuple

    def __getitem__(self, g: int) -> np.ndarray:
        return self.gamma[g]


def check_group_action(act: GaloisAction, p: int) -> list[tuple]:
    """Failures of ``gamma(e) = id`` and ``gamma(g g') = gamma(g) gamma(g')``."""
    g = act.group
    bad = []
    d = act.gamma[0].shape[0]
    if not np.array_equal(act[g.identity], la.identity(d)):
        bad.append(("identity", g.identity))
    for a, b in itertools.product(range(g.order), repeat=2):
        if not np.array_equal(act[g.mul(a, b)], la.matmul(act[a], act[b], p)):
            bad.append(("homomorphism", a, b))
    return bad


def coaction_matrix(gammas, p: int) -> np.ndarray:
    """``s -> sum_g gamma_g(s) (x) delta_g``."""
    n = len(gammas)
    m = gammas[0].shape[0]
    out = np.zeros((m * n, m), dtype=np.int64)
    for g, gm in enumerate(gammas):
        out[g::n, :] = gm
    return out % p


def coaction_from_action(s_alg: Algebra, hopf: HopfAlgebra, gammas):
    """Comodule algebra over ``k^G`` from ``G`` acting on ``s_alg`` by automorphisms."""
    from .comodule import ComoduleAlgebra, check_comodule_algebra

    if hopf.group is None:
        raise UnsupportedInput("Hopf algebra is not tagged as a group dual")
    p = s_alg.p
    gammas = tuple(la.mat(x, p) for x in gammas)
    bad = check_group_action(GaloisAction(hopf.group, gammas), p)
    if bad:
        raise ValidationError(f"not a group action: {bad[0]}", witness=bad[0])
    s = ComoduleAlgebra(s_alg, hopf, coaction_matrix(gammas, p))
    check_comodule_algebra(s).raise_if_failed()
    return s


def action_from_coaction(s) -> GaloisAction:
    """Recover ``g(s) = (id (x) delta_g^*) Delta_S(s)`` from a coaction of ``k^G``."""
    g = s.hopf.group
    if g is None:
        raise UnsupportedInput("Hopf algebra is not tagged as a group dual")
    n = g.order
    act = GaloisAction(g, tuple(s.coaction[h::n, :].copy() for h in range(n)))
    bad = check_group_action(act, s.p)
    for h in range(n):
        lhs = la.matmul(act[h], s.mult, s.p)
        rhs = la.matmul(s.mult, la.kron(s.p, act[h], act[h]), s.p)
        if not np.array_equal(lhs, rhs):
            bad.append(("multiplicative", h))
    if bad:
        raise ValidationError(f"coaction does not come from an action by automorphisms: {bad[0]}", witness=bad[0])
    return act
