"""Group actions on extended modules and non-abelian group cohomology.

For ``H = k^G`` a descent cocycle ``F`` is the same as a twisted action
``gamma`` of ``G`` on ``M``; dividing by the canonical action gives a
group 1-cocycle with values in ``Aut_S(M)``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .algebra import ValidationReport
from .cohomology import DEFAULT_CAP, AutGroup, Calculus, aut_s, c1, d0_set, h1, quotient
from .comodule import HopfModule
from .errors import (
    ContractError,
    EnumerationBudgetExceeded,
    InternalConsistencyError,
    UnsupportedInput,
)
from .groups import GaloisAction, GroupTable, action_from_coaction, check_group_action, coaction_matrix


def _group(mod: HopfModule) -> GroupTable:
    g = mod.hopf.group
    if g is None:
        raise UnsupportedInput("Hopf algebra is not tagged as a group dual")
    return g


def canonical_action(mod: HopfModule) -> GaloisAction:
    """``g(n (x) s) = n (x) g(s)`` on an extended module ``S^r``."""
    g = _group(mod)
    if mod.extended_rank is None:
        raise ContractError("the canonical group action needs an extended module")
    act_s = action_from_coaction(mod.s)
    gam = tuple(la.kron(mod.p, la.identity(mod.extended_rank), act_s[h]) for h in range(g.order))
    n = g.order
    for h in range(n):
        if not np.array_equal(gam[h], mod.coaction[h::n, :]):
            raise InternalConsistencyError("coaction of the extended module disagrees with the canonical action")
    return GaloisAction(g, gam)


def conjugation_action(mod: HopfModule, aut: AutGroup) -> list[list[int]]:
    """``perm[g][i]`` is the index of ``g(f_i) = g o f_i o g^-1``; action laws are verified."""
    g = _group(mod)
    gam = canonical_action(mod)
    p = mod.p
    perms = []
    for h in range(g.order):
        inv = gam[g.inv(h)]
        row = []
        for f in aut:
            j = aut.index_of(la.compose(p, gam[h], f, inv))
            if j is None:
                raise InternalConsistencyError("conjugate of an automorphism is not S-linear")
            row.append(j)
        perms.append(row)
    ident = list(range(len(aut)))
    if perms[g.identity] != ident:
        raise InternalConsistencyError("identity acts nontrivially by conjugation")
    for a in range(g.order):
        for b in range(g.order):
            ab = perms[g.mul(a, b)]
            if any(ab[i] != perms[a][perms[b][i]] for i in ident):
                raise InternalConsistencyError("conjugation is not a group action", witness=(a, b))
    for a in range(g.order):
        for i in range(min(len(aut), 64)):
            for j in range(min(len(aut), 64)):
                if perms[a][aut.compose_index(i, j)] != aut.compose_index(perms[a][i], perms[a][j]):
                    raise InternalConsistencyError("conjugation is not by group automorphisms", witness=(a, i, j))
    return perms


def serre_h0(aut: AutGroup, perms) -> list[int]:
    """Indices of elements fixed by every ``g``."""
    return [i for i in range(len(aut)) if all(row[i] == i for row in perms)]


@dataclass(frozen=True, eq=False)
class GroupCohomology:
    group: GroupTable
    cocycles: list  # tuples of Aut indices, one per group element
    distinguished: int
    classes: list  # lists of cocycle indices
    distinguished_class: int
    candidates: int


def _is_cocycle(alpha, g: GroupTable, aut: AutGroup, perms) -> bool:
    for a in range(g.order):
        for b in range(g.order):
            if alpha[g.mul(a, b)] != aut.compose_index(alpha[a], perms[a][alpha[b]]):
                return False
    return True


def serre_z1(g: GroupTable, aut: AutGroup, perms, cap: int = DEFAULT_CAP) -> list[tuple]:
    """Group 1-cocycles, enumerated over images of a generating set."""
    gens = g.generators()
    need = len(aut) ** len(gens)
    if need > cap:
        raise EnumerationBudgetExceeded("Z1(G, Aut_S(M))", need, cap)
    out = []
    for images in np.ndindex(*([len(aut)] * len(gens))):
        alpha = {g.identity: 0}
        frontier = [g.identity]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for s, img in zip(gens, images):
                    y = g.mul(x, s)
                    val = aut.compose_index(alpha[x], perms[x][img])
                    if y not in alpha:
                        alpha[y] = val
                        nxt.append(y)
                    elif alpha[y] != val:
                        ok = False
                        break
                if not ok:
                    break
            frontier = nxt
        if not ok or len(alpha) != g.order:
            continue
        tup = tuple(alpha[h] for h in range(g.order))
        if _is_cocycle(tup, g, aut, perms):
            out.append(tup)
    return sorted(out, key=lambda t: tuple(la.lex_tuple(aut[i]) for i in t))


def serre_act(alpha, a: int, g: GroupTable, aut: AutGroup, perms) -> tuple:
    """``(alpha <- a)(g) = a^-1 alpha(g) g(a)``."""
    ainv = aut.inverse_index(a)
    return tuple(aut.compose_index(ainv, aut.compose_index(alpha[h], perms[h][a])) for h in range(g.order))


def serre_z1_h1(g: GroupTable, aut: AutGroup, perms, cap: int = DEFAULT_CAP) -> GroupCohomology:
    cocycles = serre_z1(g, aut, perms, cap)
    index = {c: i for i, c in enumerate(cocycles)}
    trivial = tuple([0] * g.order)
    if trivial not in index:
        raise InternalConsistencyError("constant cocycle missing")
    seen: set[int] = set()
    classes = []
    for i, c in enumerate(cocycles):
        if i in seen:
            continue
        orbit = set()
        for a in range(len(aut)):
            j = index.get(serre_act(c, a, g, aut, perms))
            if j is None:
                raise InternalConsistencyError("group action leaves the cocycle set")
            orbit.add(j)
        seen |= orbit
        classes.append(sorted(orbit))
    dist = index[trivial]
    dclass = next(k for k, cl in enumerate(classes) if dist in cl)
    return GroupCohomology(g, cocycles, dist, classes, dclass, len(aut) ** len(g.generators()))


def serre_from_descent(f, mod: HopfModule, aut: AutGroup) -> tuple:
    """Group cocycle ``g -> gamma_F(g) o g^-1`` of a descent cocycle, as Aut indices."""
    g = _group(mod)
    p, n = mod.p, g.order
    gam0 = canonical_action(mod)
    gamma = GaloisAction(g, tuple(f[h::n, :].copy() for h in range(n)))
    bad = check_group_action(gamma, p)
    if bad:
        raise InternalConsistencyError(f"descent cocycle does not give a group action: {bad[0]}")
    s_act = action_from_coaction(mod.s)
    for h in range(n):
        lhs = la.matmul(gamma[h], mod.action, p)
        rhs = la.compose(p, mod.action, la.kron(p, gamma[h], s_act[h]))
        if not np.array_equal(lhs, rhs):
            raise InternalConsistencyError(f"twisted action of {h} is not semilinear")
    alpha = []
    for h in range(n):
        j = aut.index_of(la.matmul(gamma[h], gam0[g.inv(h)], p))
        if j is None:
            raise InternalConsistencyError(f"value at {h} is not an S-linear automorphism")
        alpha.append(j)
    return tuple(alpha)


def descent_from_serre(alpha, mod: HopfModule, aut: AutGroup) -> np.ndarray:
    g = _group(mod)
    gam0 = canonical_action(mod)
    f = coaction_matrix([la.matmul(aut[alpha[h]], gam0[h], mod.p) for h in range(g.order)], mod.p)
    bad = Calculus.of(mod).descent_cocycle_failure(f)
    if bad is not None:
        raise InternalConsistencyError(f"group cocycle gives a coaction failing {bad[0]}")
    return f


def verify_group_correspondence(mod: HopfModule, cap: int = DEFAULT_CAP) -> ValidationReport:
    """Compare descent cohomology of ``k^G`` with group cohomology in ``Aut_S(M)``."""
    g = _group(mod)
    rep = ValidationReport(f"descent vs group cohomology on {mod.name}")
    aut = aut_s(mod, cap)
    perms = conjugation_action(mod, aut)
    d0 = d0_set(mod, aut)
    fixed = serre_h0(aut, perms)
    rep.add_flag("D0 equals invariant automorphisms", [la.key(x) for x in d0] == [la.key(aut[i]) for i in fixed], [len(d0), len(fixed)])

    cs = c1(mod, cap)
    gc = serre_z1_h1(g, aut, perms, cap)
    gidx = {c: i for i, c in enumerate(gc.cocycles)}
    images = [serre_from_descent(f, mod, aut) for f in cs.cocycles]
    hits = [gidx.get(a) for a in images]
    rep.add_flag("descent cocycles map into group cocycles", None not in hits)
    rep.add_flag("correspondence is bijective", sorted(h for h in hits if h is not None) == list(range(len(gc.cocycles))), [len(cs), len(gc.cocycles)])
    back = all(np.array_equal(descent_from_serre(a, mod, aut), f) for a, f in zip(images, cs.cocycles))
    rep.add_flag("descent -> group -> descent is the identity", back)
    fwd = all(serre_from_descent(descent_from_serre(a, mod, aut), mod, aut) == a for a in gc.cocycles)
    rep.add_flag("group -> descent -> group is the identity", fwd)
    rep.add_flag("distinguished points correspond", hits[cs.distinguished] == gc.distinguished)

    dq = quotient(cs, aut, mod)
    calc = Calculus.of(mod)
    equiv = True
    for orb in dq.classes:
        f = cs.cocycles[orb.representative]
        a = images[orb.representative]
        for gi in range(len(aut)):
            moved = calc.descent_act(f, aut[gi], aut.inverse(gi))
            if serre_from_descent(moved, mod, aut) != serre_act(a, gi, g, aut, perms):
                equiv = False
                break
    rep.add_flag("correspondence is equivariant", equiv)
    gclass = {i: k for k, cl in enumerate(gc.classes) for i in cl}
    orbit_ok = len(dq.classes) == len(gc.classes) and all(
        len({gclass[hits[i]] for i in orb.members}) == 1 and len(gc.classes[gclass[hits[orb.members[0]]]]) == len(orb.members)
        for orb in dq.classes
    )
    rep.add_flag("classes correspond", orbit_ok, [len(dq.classes), len(gc.classes)])
    hq = h1(mod, cap)
    rep.add_flag("Hopf and group H1 have equal size", len(hq.classes) == len(gc.classes), [len(hq.classes), len(gc.classes)])
    rep.data.update(
        {
            "aut": aut.order,
            "d0": d0.order,
            "group_h0": len(fixed),
            "c1": len(cs),
            "group_z1": len(gc.cocycles),
            "d1": len(dq.classes),
            "group_h1": len(gc.classes),
            "h1": len(hq.classes),
        }
    )
    return rep
