"""Builders for the bundled instances.

Every bundled JSON file under ``data/`` is produced by one of these builders;
the test suite checks that the two agree.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import linalg as la
from .algebra import Algebra, HopfAlgebra
from .comodule import ComoduleAlgebra, HopfModule, check_comodule_algebra, extended_module
from .groups import GroupTable, build_group_dual, coaction_from_action, cyclic_group, symmetric_group


@dataclass
class Instance:
    """A Hopf algebra, a comodule algebra over it, and named Hopf modules."""

    hopf: HopfAlgebra
    s: ComoduleAlgebra | None = None
    modules: dict[str, HopfModule] = field(default_factory=dict)
    cap: int = 1 << 20
    name: str = ""

    @property
    def p(self) -> int:
        return self.hopf.p

    def module(self, name: str | None = None) -> HopfModule:
        from .errors import ContractError

        if not self.modules:
            raise ContractError("instance has no modules")
        if name is None:
            return next(iter(self.modules.values()))
        if name not in self.modules:
            raise ContractError(f"unknown module {name!r}; available: {sorted(self.modules)}")
        return self.modules[name]


def polynomial_algebra(p: int, coeffs) -> Algebra:
    """``F_p[x]/(x^deg + c_{deg-1} x^{deg-1} + ... + c_0)`` in the basis ``1, x, ..., x^{deg-1}``."""
    deg = len(coeffs)
    # powers x^0 .. x^{2 deg - 2} reduced to the basis
    powers = [np.eye(deg, dtype=np.int64)[:, k] for k in range(deg)]
    top = np.array([-c % p for c in coeffs], dtype=np.int64)
    for _ in range(deg, 2 * deg - 1):
        prev = powers[-1]
        shifted = np.concatenate([[0], prev[:-1]])
        powers.append((shifted + prev[-1] * top) % p)
    mult = np.zeros((deg, deg * deg), dtype=np.int64)
    for i, j in itertools.product(range(deg), repeat=2):
        mult[:, i * deg + j] = powers[i + j]
    unit = np.zeros(deg, dtype=np.int64)
    unit[0] = 1
    return Algebra(p, mult, unit)


def _is_field(a: Algebra) -> bool:
    for idx in range(1, a.p**a.dim):
        x = np.array([(idx // a.p**k) % a.p for k in range(a.dim)], dtype=np.int64)
        if not la.is_invertible(a.left_mult(x), a.p):
            return False
    return True


def finite_field(p: int, degree: int) -> Algebra:
    """``F_{p^degree}`` from the lexicographically first irreducible monic polynomial."""
    for coeffs in itertools.product(range(p), repeat=degree):
        if degree > 1 and coeffs[0] == 0:
            continue
        a = polynomial_algebra(p, coeffs)
        if _is_field(a):
            return a
    raise AssertionError("no irreducible polynomial found")


def power_map(a: Algebra, e: int) -> np.ndarray:
    """Matrix of ``x -> x^e`` (linear when ``e`` is a power of the characteristic)."""
    cols = []
    for k in range(a.dim):
        x = np.zeros(a.dim, dtype=np.int64)
        x[k] = 1
        y = a.unit.copy()
        for _ in range(e):
            y = a.product(y, x)
        cols.append(y)
    return np.column_stack(cols)


def field_extension(p: int, degree: int):
    """``F_{p^degree} / F_p`` as a comodule algebra over ``k^{C_degree}`` (Frobenius action)."""
    a = finite_field(p, degree)
    frob = power_map(a, p)
    gammas = [la.identity(degree)]
    for _ in range(1, degree):
        gammas.append(la.matmul(frob, gammas[-1], p))
    h = build_group_dual(cyclic_group(degree), p)
    return coaction_from_action(a, h, gammas)


def _with_modules(s: ComoduleAlgebra, ranks, name: str) -> Instance:
    mods = {}
    for label, r in ranks.items():
        mods[label] = extended_module(r, s, name=label)
    return Instance(s.hopf, s, mods, name=name)


def fix1() -> Instance:
    """``F_4 / F_2`` with the Frobenius coaction of ``k^{C_2}``; modules ``S`` and ``S^2``."""
    return _with_modules(field_extension(2, 2), {"M": 1, "M2": 2}, "fix1")


def f9_over_f3() -> Instance:
    return _with_modules(field_extension(3, 2), {"M": 1, "M2": 2}, "f9_over_f3")


def f4_over_f2() -> Instance:
    inst = fix1()
    return Instance(inst.hopf, inst.s, {}, name="f4_over_f2")


def self_coacting(h: HopfAlgebra) -> ComoduleAlgebra:
    s = ComoduleAlgebra(h.algebra, h, h.comult)
    check_comodule_algebra(s).raise_if_failed()
    return s


def kg_self() -> Instance:
    """``k^{C_2}`` over ``F_2`` coacting on itself; module ``S``."""
    s = self_coacting(build_group_dual(cyclic_group(2), 2))
    return _with_modules(s, {"M": 1}, "kg_self")


def s3_dual() -> Instance:
    """``k^{S_3}`` over ``F_3`` coacting on itself; module ``S``."""
    s = self_coacting(build_group_dual(symmetric_group(3), 3))
    return _with_modules(s, {"M": 1}, "s3_dual")


def trivial_coaction(a: Algebra, h: HopfAlgebra) -> ComoduleAlgebra:
    return ComoduleAlgebra(a, h, la.kron(a.p, la.identity(a.dim), h.eta))


def group_dual(g: GroupTable, p: int) -> HopfAlgebra:
    return build_group_dual(g, p)


BUILDERS = {
    "fix1": fix1,
    "kg_self": kg_self,
    "f9_over_f3": f9_over_f3,
    "s3_dual": s3_dual,
    "f4_over_f2": f4_over_f2,
}
