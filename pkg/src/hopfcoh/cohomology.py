"""Cochains on a Hopf module, the Hopf and descent cocycle sets and their quotients.

A level-``l`` cochain is a matrix ``M -> M (x) H^{(x) l}``. Level 1 cochains
satisfying the Hopf cocycle conditions form ``Z1``; coactions that are twisted
linear form ``C1``. Both carry a right action of ``Aut_S(M)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from . import linalg as la
from ._backend import kernels
from .algebra import ValidationReport
from .comodule import HopfModule, twisted_linearity_residual
from .errors import (
    ContractError,
    EnumerationBudgetExceeded,
    InternalConsistencyError,
    TheoremViolation,
)

DEFAULT_CAP = 1 << 20


def interleave(dim: int, level: int) -> np.ndarray:
    """``(a_1..a_l) (x) (b_1..b_l) -> (a_1 b_1) .. (a_l b_l)`` on ``dim``-dimensional factors."""
    perm = [j for pair in zip(range(level), range(level, 2 * level)) for j in pair]
    return tensor_permutation([dim] * (2 * level), perm)


def tensor_permutation(dims, perm) -> np.ndarray:
    """Permute tensor factors: output factor ``j`` is input factor ``perm[j]``."""
    total = int(np.prod(dims)) if len(dims) else 1
    idx = np.arange(total).reshape(dims) if len(dims) else np.arange(1)
    src = idx.transpose(perm).reshape(-1) if len(dims) else idx
    out = np.zeros((total, total), dtype=np.int64)
    out[np.arange(total), src] = 1
    return out


class Calculus:
    """Cached structure maps of one Hopf module and the cochain operations on it."""

    def __init__(self, mod: HopfModule):
        self.mod = mod
        self.p = p = mod.p
        self.d = d = mod.dim
        h = mod.hopf
        self.n = n = h.dim
        self.m = mod.s.dim
        self.action = mod.action
        self.coaction = mod.coaction
        self.mu, self.eta, self.comult, self.counit, self.antipode = h.mult, h.eta, h.comult, h.counit, h.antipode
        self.id_d = la.identity(d)
        self.flip_hh = la.flip(n, n)
        self._mul = {}
        # pieces of the differentials
        self._d0_lvl0 = (la.kron(p, self.id_d, self.mu), la.kron(p, self.coaction, la.identity(n)))
        self._d0_lvl1 = (la.kron(p, self.id_d, self.mu, la.identity(n)), la.kron(p, self.coaction, self.flip_hh))
        self._d1_lvl1 = la.kron(p, self.id_d, self.comult)
        self._d1_lvl0 = la.kron(p, self.id_d, self.eta)
        self._counit = la.kron(p, self.id_d, self.counit)
        self._comult_coassoc = self._d1_lvl1
        self._slin = {}
        for lvl in (0, 1, 2):
            k = n**lvl
            self._slin[lvl] = (la.kron(p, self.action, la.identity(k)), la.kron(p, self.id_d, la.flip(k, self.m)))
        self.coaction_prime = la.compose(p, la.kron(p, self.id_d, self.antipode), self.coaction)

    @classmethod
    def of(cls, mod: HopfModule) -> "Calculus":
        calc = mod._cache.get("calculus")
        if calc is None:
            calc = cls(mod)
            mod._cache["calculus"] = calc
        return calc

    # -- products -------------------------------------------------------
    def unit(self, level: int) -> np.ndarray:
        return la.kron(self.p, self.id_d, *([self.eta] * level)) if level else self.id_d.copy()

    def cdot(self, a, b, level: int) -> np.ndarray:
        """``a o. b``: apply ``b`` first, then ``a`` on the module factor, multiply the ``H`` parts."""
        p = self.p
        if level == 0:
            return la.matmul(a, b, p)
        if level not in self._mul:
            mul = la.compose(p, la.kron(p, *([self.mu] * level)), interleave(self.n, level))
            self._mul[level] = la.kron(p, self.id_d, mul)
        return la.compose(p, self._mul[level], la.kron(p, a, la.identity(self.n**level)), b)

    # -- differentials --------------------------------------------------
    def diff(self, i: int, x, level: int) -> np.ndarray:
        p = self.p
        if level == 0 and i == 0:
            left, mid = self._d0_lvl0
            return la.compose(p, left, mid, la.kron(p, x, self.antipode), self.coaction)
        if level == 0 and i == 1:
            return la.matmul(self._d1_lvl0, x, p)
        if level == 1 and i == 0:
            left, mid = self._d0_lvl1
            return la.compose(p, left, mid, la.kron(p, x, self.antipode), self.coaction)
        if level == 1 and i == 1:
            return la.matmul(self._d1_lvl1, x, p)
        if level == 1 and i == 2:
            return la.kron(p, x, self.eta)
        raise ContractError(f"no differential d^{i} on level {level}")

    # -- conditions -----------------------------------------------------
    def s_linear_residual(self, x, level: int) -> np.ndarray:
        p = self.p
        act, shuffle = self._slin[level]
        return (la.matmul(x, self.action, p) - la.compose(p, act, shuffle, la.kron(p, x, la.identity(self.m)))) % p

    def is_s_linear(self, x, level: int) -> bool:
        return not self.s_linear_residual(x, level).any()

    def counit_residual(self, x) -> np.ndarray:
        return (la.matmul(self._counit, x, self.p) - self.id_d) % self.p

    def twisted_residual(self, f) -> np.ndarray:
        return twisted_linearity_residual(f, self.action, self.mod.s)

    def cocycle_bilinear(self, x, y) -> np.ndarray:
        return self.cdot(self.diff(2, x, 1), self.diff(0, y, 1), 2)

    def cocycle_linear(self, x) -> np.ndarray:
        return (-self.diff(1, x, 1)) % self.p

    def cocycle_residual(self, x) -> np.ndarray:
        return (self.cocycle_bilinear(x, x) + self.cocycle_linear(x)) % self.p

    def coassoc_bilinear(self, x, y) -> np.ndarray:
        return la.matmul(la.kron(self.p, x, la.identity(self.n)), y, self.p)

    def coassoc_linear(self, x) -> np.ndarray:
        return (-la.matmul(self._comult_coassoc, x, self.p)) % self.p

    def coassoc_residual(self, f) -> np.ndarray:
        return (self.coassoc_bilinear(f, f) + self.coassoc_linear(f)) % self.p

    def hopf_cocycle_failure(self, x):
        """Name and witness of the first failing Hopf cocycle condition, or ``None``."""
        for name, res in (
            ("S-linearity", lambda: self.s_linear_residual(x, 1)),
            ("counit", lambda: self.counit_residual(x)),
            ("cocycle identity", lambda: self.cocycle_residual(x)),
        ):
            r = res()
            w = la.first_difference(r, np.zeros_like(r))
            if w is not None:
                return name, w
        return None

    def descent_cocycle_failure(self, f):
        for name, res in (
            ("twisted linearity", lambda: self.twisted_residual(f)),
            ("counit", lambda: self.counit_residual(f)),
            ("coassociativity", lambda: self.coassoc_residual(f)),
        ):
            r = res()
            w = la.first_difference(r, np.zeros_like(r))
            if w is not None:
                return name, w
        return None

    # -- actions and comparison -----------------------------------------
    def hopf_act(self, x, f, f_inv) -> np.ndarray:
        return self.cdot(self.cdot(self.diff(1, f_inv, 0), x, 1), self.diff(0, f, 0), 1)

    def descent_act(self, x, f, f_inv) -> np.ndarray:
        p = self.p
        return la.compose(p, la.kron(p, f_inv, la.identity(self.n)), x, f)

    def kappa(self, x) -> np.ndarray:
        return self.cdot(x, self.coaction, 1)

    def kappa_inverse(self, f) -> np.ndarray:
        return self.cdot(f, self.coaction_prime, 1)

    def deformed(self, f) -> np.ndarray:
        """``(id (x) T) o d^2 F``."""
        p = self.p
        return la.matmul(la.kron(p, self.id_d, self.flip_hh), self.diff(2, f, 1), p)


@dataclass(frozen=True, eq=False)
class Cochain:
    level: int
    matrix: np.ndarray

    def __post_init__(self):
        if self.level not in (0, 1, 2, 3):
            raise ContractError(f"unsupported cochain level {self.level}")
        object.__setattr__(self, "matrix", np.asarray(self.matrix, dtype=np.int64))

    def fits(self, mod: HopfModule) -> bool:
        return self.matrix.shape == (mod.dim * mod.hopf.dim**self.level, mod.dim)

    def __eq__(self, other):
        return isinstance(other, Cochain) and self.level == other.level and np.array_equal(self.matrix, other.matrix)

    def __hash__(self):
        return hash((self.level, la.key(self.matrix)))


def _check_fits(c: Cochain, mod: HopfModule):
    if not c.fits(mod):
        raise ContractError(f"level-{c.level} cochain has shape {c.matrix.shape}, module has dim {mod.dim}")


def unit_cochain(mod: HopfModule, level: int) -> Cochain:
    return Cochain(level, Calculus.of(mod).unit(level))


def is_s_linear(c: Cochain, mod: HopfModule) -> bool:
    _check_fits(c, mod)
    return Calculus.of(mod).is_s_linear(c.matrix, c.level)


def circ_dot(phi: Cochain, phi_prime: Cochain, mod: HopfModule) -> Cochain:
    if phi.level != phi_prime.level:
        raise ContractError(f"cannot multiply cochains of levels {phi.level} and {phi_prime.level}")
    _check_fits(phi, mod)
    _check_fits(phi_prime, mod)
    return Cochain(phi.level, Calculus.of(mod).cdot(phi.matrix, phi_prime.matrix, phi.level))


def differential(i: int, c: Cochain, mod: HopfModule) -> Cochain:
    _check_fits(c, mod)
    calc = Calculus.of(mod)
    out = calc.diff(i, c.matrix, c.level)
    if c.level < 2 and calc.is_s_linear(c.matrix, c.level) and not calc.is_s_linear(out, c.level + 1):
        raise InternalConsistencyError(f"d^{i} does not preserve S-linearity")
    return Cochain(c.level + 1, out)


# -- automorphism group ---------------------------------------------------------


@dataclass(eq=False)
class AutGroup:
    """Finite group of invertible matrices, identity first."""

    elements: list
    p: int
    _index: dict = field(default_factory=dict, repr=False)
    _inverse: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        self._index = {la.key(e): i for i, e in enumerate(self.elements)}
        if not self._inverse:
            self._inverse = [None] * len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    @property
    def order(self) -> int:
        return len(self.elements)

    def index_of(self, x) -> int | None:
        return self._index.get(la.key(x))

    def inverse_index(self, i: int) -> int:
        j = self._inverse[i]
        if j is None:
            j = self.index_of(la.inverse(self.elements[i], self.p))
            if j is None:
                raise InternalConsistencyError("group is not closed under inverses")
            self._inverse[i] = j
            self._inverse[j] = i
        return j

    def inverse(self, i: int) -> np.ndarray:
        return self.elements[self.inverse_index(i)]

    def compose_index(self, i: int, j: int) -> int:
        k = self.index_of(la.matmul(self.elements[i], self.elements[j], self.p))
        if k is None:
            raise InternalConsistencyError("group is not closed under composition")
        return k

    def verify(self, pairs: int = 4096) -> None:
        """Identity, inverses, and closure (all pairs when small, else a deterministic sample)."""
        d = self.elements[0].shape[0]
        if not np.array_equal(self.elements[0], la.identity(d)):
            raise InternalConsistencyError("group does not start with the identity")
        for i in range(len(self)):
            self.inverse_index(i)
        n = len(self)
        if n * n <= pairs:
            it = itertools.product(range(n), repeat=2)
        else:
            rng = np.random.default_rng(0)
            it = zip(rng.integers(0, n, pairs), rng.integers(0, n, pairs))
        for i, j in it:
            self.compose_index(int(i), int(j))

    def subgroup(self, indices) -> "AutGroup":
        idx = sorted(indices)
        sub = AutGroup([self.elements[i] for i in idx], self.p)
        sub.verify()
        return sub


def s_linear_endomorphisms(mod: HopfModule) -> np.ndarray:
    """Basis of ``End_S(M)`` as an array of shape ``(k, d, d)``."""
    calc = Calculus.of(mod)
    d, p = mod.dim, mod.p
    a, _ = la.linear_system(lambda x: calc.s_linear_residual(x, 0), (d, d), p)
    basis = la.nullspace(a, p)
    return basis.T.reshape(-1, d, d).copy()


def _canonical_order(mats):
    return sorted(mats, key=la.lex_tuple)


def aut_s(mod: HopfModule, cap: int = DEFAULT_CAP) -> AutGroup:
    cached = mod._cache.get("aut")
    if cached is not None:
        return cached
    p, d = mod.p, mod.dim
    if d == 0:
        return AutGroup([np.zeros((0, 0), dtype=np.int64)], p)
    basis = s_linear_endomorphisms(mod)
    k = basis.shape[0]
    if p**k > cap:
        raise EnumerationBudgetExceeded("Aut_S(M)", p**k, cap)
    coeffs = kernels.invertible_combinations(basis, p)
    mats = (coeffs @ basis.reshape(k, d * d)) % p
    elems = [m.reshape(d, d) for m in mats]
    ident = la.identity(d)
    rest = _canonical_order([e for e in elems if not np.array_equal(e, ident)])
    group = AutGroup([ident] + rest, p)
    if group.order != len(elems):
        raise InternalConsistencyError("identity missing from the automorphism enumeration")
    group.verify()
    mod._cache["aut"] = group
    return group


def h0(mod: HopfModule, aut: AutGroup | None = None) -> AutGroup:
    """Automorphisms with equal zeroth and first differentials."""
    aut = aut if aut is not None else aut_s(mod)
    calc = Calculus.of(mod)
    keep = [i for i, f in enumerate(aut) if np.array_equal(calc.diff(0, f, 0), calc.diff(1, f, 0))]
    return aut.subgroup(keep)


def d0_set(mod: HopfModule, aut: AutGroup | None = None) -> AutGroup:
    """Automorphisms that are comodule maps."""
    aut = aut if aut is not None else aut_s(mod)
    p, n = mod.p, mod.hopf.dim
    keep = [
        i
        for i, f in enumerate(aut)
        if np.array_equal(la.compose(p, la.kron(p, f, la.identity(n)), mod.coaction), la.matmul(mod.coaction, f, p))
    ]
    return aut.subgroup(keep)


# -- cocycle enumeration ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CocycleSet:
    kind: str  # "hopf" or "descent"
    cocycles: list
    distinguished: int
    affine_dimension: int

    def __len__(self):
        return len(self.cocycles)

    def index_map(self) -> dict:
        return {la.key(c): i for i, c in enumerate(self.cocycles)}


def quadratic_solutions(conditions, bilinear, linear, shape, p: int, cap: int, what: str):
    """All ``X`` with every affine condition zero and ``bilinear(X, X) + linear(X) = 0``.

    The affine conditions are solved exactly; the quadratic one is expanded in the
    kernel coordinates of the affine solution space and filtered by the kernel.
    """
    sol = la.solve_affine_conditions(conditions, shape, p)
    if not sol.consistent:
        return [], 0
    k = sol.dimension
    if p**k > cap:
        raise EnumerationBudgetExceeded(what, p**k, cap)
    x0 = sol.particular.reshape(shape)
    ks = [sol.kernel[:, i].reshape(shape) for i in range(k)]

    def vec(a):
        return np.asarray(a, dtype=np.int64).reshape(-1) % p

    const = vec(bilinear(x0, x0) + linear(x0))
    rows = const.shape[0]
    lin = np.zeros((k, rows), dtype=np.int64)
    quad = np.zeros((k, k, rows), dtype=np.int64)
    for i in range(k):
        lin[i] = vec(bilinear(x0, ks[i]) + bilinear(ks[i], x0) + linear(ks[i]))
        quad[i, i] = vec(bilinear(ks[i], ks[i]))
        for j in range(i + 1, k):
            quad[i, j] = vec(bilinear(ks[i], ks[j]) + bilinear(ks[j], ks[i]))
    zeros = kernels.quadratic_zeros(const, lin, quad, p)
    if k:
        flat = (sol.particular[None, :] + zeros @ sol.kernel.T) % p
    else:
        flat = np.tile(sol.particular, (zeros.shape[0], 1))
    return _canonical_order([f.reshape(shape) for f in flat]), k


def z1(mod: HopfModule, cap: int = DEFAULT_CAP) -> CocycleSet:
    cached = mod._cache.get("z1")
    if cached is not None:
        return cached
    calc = Calculus.of(mod)
    d, n, p = mod.dim, mod.hopf.dim, mod.p
    mats, k = quadratic_solutions(
        [lambda x: calc.s_linear_residual(x, 1), calc.counit_residual],
        calc.cocycle_bilinear,
        calc.cocycle_linear,
        (d * n, d),
        p,
        cap,
        "Z1(H, M)",
    )
    for x in mats:
        bad = calc.hopf_cocycle_failure(x)
        if bad is not None:
            raise InternalConsistencyError(f"enumerated Hopf cocycle fails {bad[0]}", witness=bad[1])
    out = CocycleSet("hopf", mats, _find(mats, calc.unit(1), "unit cochain"), k)
    mod._cache["z1"] = out
    return out


def c1(mod: HopfModule, cap: int = DEFAULT_CAP) -> CocycleSet:
    cached = mod._cache.get("c1")
    if cached is not None:
        return cached
    calc = Calculus.of(mod)
    d, n, p = mod.dim, mod.hopf.dim, mod.p
    mats, k = quadratic_solutions(
        [calc.twisted_residual, calc.counit_residual],
        calc.coassoc_bilinear,
        calc.coassoc_linear,
        (d * n, d),
        p,
        cap,
        "C1(H, M)",
    )
    for x in mats:
        bad = calc.descent_cocycle_failure(x)
        if bad is not None:
            raise InternalConsistencyError(f"enumerated descent cocycle fails {bad[0]}", witness=bad[1])
    out = CocycleSet("descent", mats, _find(mats, mod.coaction, "coaction of M"), k)
    mod._cache["c1"] = out
    return out


def _find(mats, target, label) -> int:
    tk = la.key(target)
    for i, x in enumerate(mats):
        if la.key(x) == tk:
            return i
    raise InternalConsistencyError(f"{label} is missing from the enumerated cocycles")


def hopf_action(phi: Cochain, f: np.ndarray, mod: HopfModule) -> Cochain:
    calc = Calculus.of(mod)
    out = calc.hopf_act(phi.matrix, f, la.inverse(f, mod.p))
    if calc.hopf_cocycle_failure(phi.matrix) is None and calc.hopf_cocycle_failure(out) is not None:
        raise InternalConsistencyError("Hopf action left the cocycle set")
    return Cochain(1, out)


def descent_action(fc: Cochain, f: np.ndarray, mod: HopfModule) -> Cochain:
    calc = Calculus.of(mod)
    out = calc.descent_act(fc.matrix, f, la.inverse(f, mod.p))
    if calc.descent_cocycle_failure(fc.matrix) is None and calc.descent_cocycle_failure(out) is not None:
        raise InternalConsistencyError("descent action left the cocycle set")
    return Cochain(1, out)


# -- quotients ---------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Orbit:
    representative: int  # index into the cocycle set
    members: tuple  # indices, ascending
    transversal: dict  # member -> group index carrying the representative to it


@dataclass(frozen=True, eq=False)
class CohomologyReport:
    kind: str  # H1 or D1
    cocycles: CocycleSet
    classes: list
    distinguished_class: int
    aut_order: int

    @property
    def orbit_of(self) -> dict:
        return {i: c for c, orb in enumerate(self.classes) for i in orb.members}

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "aut_order": self.aut_order,
            "cocycles": len(self.cocycles),
            "classes": len(self.classes),
            "distinguished_class": self.distinguished_class,
            "orbit_sizes": [len(o.members) for o in self.classes],
            "representatives": [self.cocycles.cocycles[o.representative].tolist() for o in self.classes],
        }


def action_table(mod: HopfModule, aut: AutGroup, kind: str):
    """Callable ``(x, group index) -> x <- f`` with per-element data precomputed."""
    calc = Calculus.of(mod)
    if kind == "hopf":
        pre = [(calc.diff(1, aut.inverse(i), 0), calc.diff(0, aut[i], 0)) for i in range(len(aut))]
        return lambda x, i: calc.cdot(calc.cdot(pre[i][0], x, 1), pre[i][1], 1)
    if kind == "descent":
        eye = la.identity(mod.hopf.dim)
        pre = [(la.kron(mod.p, aut.inverse(i), eye), aut[i]) for i in range(len(aut))]
        return lambda x, i: la.compose(mod.p, pre[i][0], x, pre[i][1])
    raise ContractError(f"unknown action kind {kind!r}")


def quotient(cs: CocycleSet, aut: AutGroup, mod: HopfModule) -> CohomologyReport:
    """Orbits of the right action of ``aut``; canonical representative is the lex-least member."""
    act = action_table(mod, aut, cs.kind)
    index = cs.index_map()
    seen: set[int] = set()
    classes = []
    for start in range(len(cs)):  # cocycles are in canonical order, so ``start`` is least
        if start in seen:
            continue
        trans = {}
        for gi in range(len(aut)):
            y = act(cs.cocycles[start], gi)
            j = index.get(la.key(y))
            if j is None:
                raise InternalConsistencyError(f"action of group element {gi} leaves the cocycle set")
            trans.setdefault(j, gi)
        if min(trans) != start or seen.intersection(trans):
            raise InternalConsistencyError("orbits are not disjoint")
        seen.update(trans)
        classes.append(Orbit(start, tuple(sorted(trans)), trans))
    dist = next(c for c, o in enumerate(classes) if cs.distinguished in o.members)
    return CohomologyReport("H1" if cs.kind == "hopf" else "D1", cs, classes, dist, aut.order)


def h1(mod: HopfModule, cap: int = DEFAULT_CAP) -> CohomologyReport:
    return quotient(z1(mod, cap), aut_s(mod, cap), mod)


def d1(mod: HopfModule, cap: int = DEFAULT_CAP) -> CohomologyReport:
    return quotient(c1(mod, cap), aut_s(mod, cap), mod)


# -- comparison --------------------------------------------------------------------


def kappa(phi: Cochain, mod: HopfModule, direction: str = "forward") -> Cochain:
    if phi.level != 1:
        raise ContractError("the comparison map acts on level-1 cochains")
    _check_fits(phi, mod)
    calc = Calculus.of(mod)
    if direction == "forward":
        out, back = calc.kappa(phi.matrix), calc.kappa_inverse
    elif direction == "inverse":
        out, back = calc.kappa_inverse(phi.matrix), calc.kappa
    else:
        raise ContractError(f"unknown direction {direction!r}")
    if not np.array_equal(back(out), phi.matrix % mod.p):
        raise InternalConsistencyError("comparison map round trip failed")
    return Cochain(1, out)


def _affine_solution_set(calc: Calculus, conditions):
    shape = (calc.d * calc.n, calc.d)
    return la.solve_affine_conditions(conditions, shape, calc.p)


def verify_comparison(mod: HopfModule, cap: int = DEFAULT_CAP) -> ValidationReport:
    """Compare Hopf and descent cohomology through ``Phi -> Phi o. Delta_M``."""
    p = mod.p
    calc = Calculus.of(mod)
    rep = ValidationReport(f"Hopf vs descent cohomology on {mod.name}")
    aut = aut_s(mod, cap)
    hz, dz = h0(mod, aut), d0_set(mod, aut)
    rep.add_flag(
        "H0 equals D0",
        [la.key(x) for x in hz] == [la.key(x) for x in dz],
        witness=[len(hz), len(dz)],
    )

    # condition-by-condition correspondence on the affine pieces
    s_lin = la.solve_affine_conditions([lambda x: calc.s_linear_residual(x, 1)], (calc.d * calc.n, calc.d), p)
    tw = la.solve_affine_conditions([calc.twisted_residual], (calc.d * calc.n, calc.d), p)
    image = np.column_stack(
        [calc.kappa(s_lin.kernel[:, i].reshape(calc.d * calc.n, calc.d)).reshape(-1) for i in range(s_lin.dimension)]
    ) if s_lin.dimension else np.zeros((tw.kernel.shape[0], 0), dtype=np.int64)
    rep.add_flag("S-linear cochains map onto twisted-linear cochains", la.same_span(image, tw.kernel, p) and s_lin.dimension == tw.dimension)
    za = _affine_solution_set(calc, [lambda x: calc.s_linear_residual(x, 1), calc.counit_residual])
    ca = _affine_solution_set(calc, [calc.twisted_residual, calc.counit_residual])
    part = calc.kappa(za.particular.reshape(calc.d * calc.n, calc.d)).reshape(-1)
    kimg = np.column_stack(
        [calc.kappa(za.kernel[:, i].reshape(calc.d * calc.n, calc.d)).reshape(-1) for i in range(za.dimension)]
    ) if za.dimension else np.zeros((part.shape[0], 0), dtype=np.int64)
    rep.add_flag(
        "counital S-linear cochains map onto counital twisted-linear cochains",
        ca.contains(part) and la.same_span(kimg, ca.kernel, p) and za.dimension == ca.dimension,
    )

    zs, cs = z1(mod, cap), c1(mod, cap)
    images = [calc.kappa(x) for x in zs.cocycles]
    cidx = cs.index_map()
    hits = [cidx.get(la.key(y)) for y in images]
    rep.add_flag("comparison map sends Z1 into C1", all(h is not None for h in hits), witness=[i for i, h in enumerate(hits) if h is None][:1])
    rep.add_flag("comparison map is a bijection Z1 -> C1", sorted(h for h in hits if h is not None) == list(range(len(cs))), witness=[len(zs), len(cs)])
    rep.add_flag("inverse comparison map returns Z1", all(np.array_equal(calc.kappa_inverse(y), x) for x, y in zip(zs.cocycles, images)))
    rep.add_flag("distinguished cocycles correspond", hits[zs.distinguished] == cs.distinguished)

    hq, dq = quotient(zs, aut, mod), quotient(cs, aut, mod)
    d_orbit = dq.orbit_of
    orbits_ok = True
    for orb in hq.classes:
        targets = {d_orbit.get(hits[i]) for i in orb.members}
        if len(targets) != 1 or None in targets or len(dq.classes[targets.pop()].members) != len(orb.members):
            orbits_ok = False
            break
    rep.add_flag("orbits map onto orbits", orbits_ok and len(hq.classes) == len(dq.classes))
    rep.add_flag("distinguished class maps to distinguished class", d_orbit.get(hits[zs.distinguished]) == dq.distinguished_class)

    # equivariance on all pairs (cocycle, group element)
    hact, dact = action_table(mod, aut, "hopf"), action_table(mod, aut, "descent")
    eq_ok = all(
        np.array_equal(calc.kappa(hact(x, gi)), dact(calc.kappa(x), gi))
        for x in (zs.cocycles[o.representative] for o in hq.classes)
        for gi in range(len(aut))
    )
    rep.add_flag("comparison map is equivariant", eq_ok)

    deformed_bad = [
        i
        for i, f in enumerate(cs.cocycles)
        if not np.array_equal(calc.cdot(calc.diff(2, f, 1), calc.deformed(f), 2), calc.diff(1, f, 1))
    ]
    rep.add_flag("deformed cocycle identity holds on C1", not deformed_bad, witness=deformed_bad[:1])
    rep.data.update(
        {"aut": aut.order, "h0": hz.order, "d0": dz.order, "z1": len(zs), "c1": len(cs), "h1": len(hq.classes), "d1": len(dq.classes)}
    )
    return rep


def require(rep: ValidationReport) -> ValidationReport:
    return rep.raise_if_failed(TheoremViolation)


# -- cosimplicial identities -------------------------------------------------------


def w_s_basis(mod: HopfModule, level: int) -> np.ndarray:
    """Basis of S-linear level-``level`` cochains, shape ``(k, d n^level, d)``."""
    calc = Calculus.of(mod)
    shape = (mod.dim * mod.hopf.dim**level, mod.dim)
    a, _ = la.linear_system(lambda x: calc.s_linear_residual(x, level), shape, mod.p)
    return la.nullspace(a, mod.p).T.reshape((-1,) + shape).copy()


def _elements(basis, p, limit, samples, rng):
    k = basis.shape[0]
    shape = basis.shape[1:]
    if p**k <= limit:
        coeffs = itertools.product(range(p), repeat=k)
    else:
        coeffs = (rng.integers(0, p, k) for _ in range(samples))
    for c in coeffs:
        c = np.asarray(c, dtype=np.int64)
        yield (np.tensordot(c, basis, axes=1) % p).reshape(shape) if k else np.zeros(shape, dtype=np.int64)


def precosimplicial_check(
    mod: HopfModule,
    samples: int = 64,
    exhaustive_limit: int = 4096,
    seed: int = 0,
    differential_override=None,
) -> ValidationReport:
    """Cosimplicial identities and monoid-morphism laws of the differentials.

    Exhaustive over S-linear 0-cochains and 1-cochains when there are at most
    ``exhaustive_limit`` of them (pairs likewise), else ``samples`` random ones.
    ``differential_override(i, x, level)`` replaces the differentials, for
    negative controls.
    """
    calc = Calculus.of(mod)
    p = mod.p
    dd = differential_override or calc.diff
    rng = np.random.default_rng(seed)
    rep = ValidationReport(f"cosimplicial identities on {mod.name}")
    w0 = list(_elements(w_s_basis(mod, 0), p, exhaustive_limit, samples, rng))
    w1 = list(_elements(w_s_basis(mod, 1), p, exhaustive_limit, samples, rng))

    def first_bad(items, fn):
        for idx, it in enumerate(items):
            lhs, rhs = fn(it)
            w = la.first_difference(lhs, rhs)
            if w is not None:
                return False, [idx, list(w)]
        return True, None

    for name, fn in (
        ("d2 d0 = d0 d1", lambda f: (dd(2, dd(0, f, 0), 1), dd(0, dd(1, f, 0), 1))),
        ("d1 d0 = d0 d0", lambda f: (dd(1, dd(0, f, 0), 1), dd(0, dd(0, f, 0), 1))),
        ("d2 d1 = d1 d1", lambda f: (dd(2, dd(1, f, 0), 1), dd(1, dd(1, f, 0), 1))),
    ):
        rep.add_flag(name, *first_bad(w0, fn))
    for lvl, items in ((0, w0), (1, w1)):
        for i in range(lvl + 2):
            ok, wit = first_bad(items, lambda x: (calc.s_linear_residual(dd(i, x, lvl), lvl + 1), np.zeros_like(calc.s_linear_residual(dd(i, x, lvl), lvl + 1))))
            rep.add_flag(f"d{i} preserves S-linearity on level {lvl}", ok, wit)
            rep.add(f"d{i} preserves the unit on level {lvl}", dd(i, calc.unit(lvl), lvl), calc.unit(lvl + 1))
            pairs = _pairs(items, exhaustive_limit, samples, rng)
            ok, wit = first_bad(
                pairs,
                lambda ab: (dd(i, calc.cdot(ab[0], ab[1], lvl), lvl), calc.cdot(dd(i, ab[0], lvl), dd(i, ab[1], lvl), lvl + 1)),
            )
            rep.add_flag(f"d{i} is multiplicative on level {lvl}", ok, wit)
    for lvl, items in ((0, w0), (1, w1)):
        u = calc.unit(lvl)
        ok, wit = first_bad(items, lambda x: (calc.cdot(u, x, lvl), x))
        rep.add_flag(f"unit is a left identity on level {lvl}", ok, wit)
        ok, wit = first_bad(items, lambda x: (calc.cdot(x, u, lvl), x))
        rep.add_flag(f"unit is a right identity on level {lvl}", ok, wit)
        triples = _triples(items, exhaustive_limit, samples, rng)
        ok, wit = first_bad(
            triples,
            lambda t: (calc.cdot(calc.cdot(t[0], t[1], lvl), t[2], lvl), calc.cdot(t[0], calc.cdot(t[1], t[2], lvl), lvl)),
        )
        rep.add_flag(f"product is associative on level {lvl}", ok, wit)
    rep.data.update({"w0": len(w0), "w1": len(w1)})
    return rep


def _pairs(items, limit, samples, rng):
    n = len(items)
    if n * n <= limit:
        return [(a, b) for a in items for b in items]
    idx = rng.integers(0, n, (samples, 2))
    return [(items[i], items[j]) for i, j in idx]


def _triples(items, limit, samples, rng):
    n = len(items)
    if n**3 <= limit:
        return [(a, b, c) for a in items for b in items for c in items]
    idx = rng.integers(0, n, (samples, 3))
    return [(items[i], items[j], items[k]) for i, j, k in idx]


def compose_all(p, mats):
    return reduce(lambda a, b: la.matmul(a, b, p), mats)
