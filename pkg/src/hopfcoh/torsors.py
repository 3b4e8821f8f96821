"""Torsors ``(X, Delta_X, beta)`` under a Hopf module and their classification."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .algebra import ValidationReport
from .cohomology import DEFAULT_CAP, AutGroup, Calculus, aut_s, c1, d1
from .comodule import HopfModule, check_hopf_module
from .errors import InternalConsistencyError, ValidationError


@dataclass(frozen=True, eq=False)
class Torsor:
    """``x`` is a Hopf module, ``beta: M -> X`` an S-linear isomorphism."""

    x: HopfModule
    beta: np.ndarray


def check_torsor(t: Torsor, mod: HopfModule) -> ValidationReport:
    p = mod.p
    rep = ValidationReport("torsor")
    rep.extend(check_hopf_module(t.x), "X: ")
    rep.add_flag("beta invertible", la.is_invertible(t.beta, p))
    rep.add(
        "beta S-linear",
        la.matmul(t.beta, mod.action, p),
        la.compose(p, t.x.action, la.kron(p, t.beta, la.identity(mod.s.dim))),
    )
    return rep


def torsor_u(f, mod: HopfModule) -> Torsor:
    """``F -> (M, F, id)``."""
    t = Torsor(HopfModule(mod.s, mod.action, f, name=f"{mod.name}_F"), la.identity(mod.dim))
    check_torsor(t, mod).raise_if_failed(ValidationError)
    return t


def torsor_v(t: Torsor, mod: HopfModule) -> np.ndarray:
    """``(beta^-1 (x) id) o Delta_X o beta``."""
    check_torsor(t, mod).raise_if_failed(ValidationError)
    p = mod.p
    f = la.compose(p, la.kron(p, la.inverse(t.beta, p), la.identity(mod.hopf.dim)), t.x.coaction, t.beta)
    bad = Calculus.of(mod).descent_cocycle_failure(f)
    if bad is not None:
        raise InternalConsistencyError(f"pulled-back coaction fails {bad[0]}")
    return f


def is_hopf_morphism(h, src: HopfModule, dst: HopfModule) -> bool:
    p = src.p
    lin = np.array_equal(la.matmul(h, src.action, p), la.compose(p, dst.action, la.kron(p, h, la.identity(src.s.dim))))
    co = np.array_equal(la.compose(p, la.kron(p, h, la.identity(src.hopf.dim)), src.coaction), la.matmul(dst.coaction, h, p))
    return lin and co


def equivalence_witness(t: Torsor, u: Torsor, aut: AutGroup):
    """Index of ``f`` with ``beta_t f beta_u^-1: X_u -> X_t`` a Hopf-module map, or ``None``."""
    p = aut.p
    binv = la.inverse(u.beta, p)
    for i, f in enumerate(aut):
        if is_hopf_morphism(la.compose(p, t.beta, f, binv), u.x, t.x):
            return i
    return None


def torsor_classes(mod: HopfModule, cap: int = DEFAULT_CAP) -> ValidationReport:
    """Classify the torsors ``U(F)``, ``F`` in C1, and compare with D1."""
    aut = aut_s(mod, cap)
    cs = c1(mod, cap)
    dq = d1(mod, cap)
    rep = ValidationReport(f"torsors on {mod.name}")
    tors = [torsor_u(f, mod) for f in cs.cocycles]
    rep.add_flag("V o U is the identity on C1", all(np.array_equal(torsor_v(t, mod), f) for t, f in zip(tors, cs.cocycles)))
    n = len(tors)
    rel = [[equivalence_witness(tors[i], tors[j], aut) is not None for j in range(n)] for i in range(n)]
    reflexive = all(rel[i][i] for i in range(n))
    symmetric = all(rel[i][j] == rel[j][i] for i in range(n) for j in range(n))
    transitive = all(not (rel[i][j] and rel[j][k]) or rel[i][k] for i in range(n) for j in range(n) for k in range(n))
    rep.add_flag("equivalence is reflexive", reflexive)
    rep.add_flag("equivalence is symmetric", symmetric)
    rep.add_flag("equivalence is transitive", transitive)
    classes: list[list[int]] = []
    for i in range(n):
        for cl in classes:
            if rel[cl[0]][i]:
                cl.append(i)
                break
        else:
            classes.append([i])
    d_orbit = dq.orbit_of
    same = all(len({d_orbit[i] for i in cl}) == 1 for cl in classes)
    rep.add_flag("torsor classes are the D1 classes", same and len(classes) == len(dq.classes), [len(classes), len(dq.classes)])
    dist = tors[cs.distinguished]
    moved = [i for i, f in enumerate(aut) if equivalence_witness(Torsor(dist.x, f), dist, aut) is None]
    rep.add_flag("(M, Delta_M, beta) is trivial for every beta", not moved, moved[:1])
    rep.data.update({"c1": len(cs), "torsors": n, "classes": len(classes), "d1": len(dq.classes)})
    return rep
