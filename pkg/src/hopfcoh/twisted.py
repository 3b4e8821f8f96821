"""Twisted forms of a free module, their descent cocycles, and Hilbert 90 checks."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .algebra import ValidationReport
from .cohomology import DEFAULT_CAP, Calculus, aut_s, c1, d1, h1
from .comodule import (
    CoinvariantAlgebra,
    ComoduleAlgebra,
    HopfModule,
    QuotientTensor,
    RModule,
    coinvariants,
    extended_identification,
    extended_module,
    free_r_module,
    galois_map,
    is_hopf_galois,
    tensor_over_r,
)
from .errors import ContractError, EnumerationBudgetExceeded, InternalConsistencyError, TheoremViolation


def _ring(mod: HopfModule) -> CoinvariantAlgebra:
    ring = mod._cache.get("ring")
    if ring is None:
        ring = coinvariants(mod.s)
        mod._cache["ring"] = ring
    return ring


def module_over_r(mod: HopfModule) -> RModule:
    """``M`` with ``R`` acting through its embedding in ``S``."""
    ring = _ring(mod)
    return RModule(ring, la.compose(mod.p, mod.action, la.kron(mod.p, la.identity(mod.dim), ring.embedding)))


def coinvariants_of_cocycle(f, mod: HopfModule) -> RModule:
    """``{m : F(m) = m (x) 1}`` with the restricted ``R``-action."""
    p = mod.p
    ring = _ring(mod)
    calc = Calculus.of(mod)
    emb = la.column_space(la.nullspace((f - calc.unit(1)) % p, p), p)
    moved = la.compose(p, mod.action, la.kron(p, emb, ring.embedding))
    try:
        act = la.coordinates(emb, moved, p) if emb.shape[1] else np.zeros((0, 0), dtype=np.int64)
    except ContractError as exc:
        raise InternalConsistencyError("coinvariants of a descent cocycle are not an R-submodule") from exc
    return RModule(ring, act.reshape(emb.shape[1], emb.shape[1] * ring.dim), embedding=emb)


@dataclass(frozen=True, eq=False)
class TwistedForm:
    """``phi: N (x)_R S -> M`` with the quotient presentation of the source."""

    n: RModule
    phi: np.ndarray
    qt: QuotientTensor


def phi_f(f, mod: HopfModule, n: RModule | None = None) -> TwistedForm:
    """``N_F (x)_R S -> M``, ``n (x) s -> n s``; bijectivity and S-linearity are checked."""
    p = mod.p
    n = n if n is not None else coinvariants_of_cocycle(f, mod)
    qt = tensor_over_r(n, mod.s)
    full = la.compose(p, mod.action, la.kron(p, n.embedding, la.identity(mod.s.dim)))
    if la.compose(p, full, qt.relations).any():
        raise InternalConsistencyError("multiplication map is not balanced over R")
    phi = la.matmul(full, qt.section, p)
    if not la.is_invertible(phi, p):
        raise TheoremViolation(f"multiplication map from the coinvariants has shape {phi.shape} and is not bijective")
    if not np.array_equal(la.matmul(phi, qt.s_action, p), la.compose(p, mod.action, la.kron(p, phi, la.identity(mod.s.dim)))):
        raise InternalConsistencyError("multiplication map is not S-linear")
    return TwistedForm(n, phi, qt)


def t_tilde(f, mod: HopfModule) -> TwistedForm:
    return phi_f(f, mod)


def distinguished_form(mod: HopfModule) -> TwistedForm:
    """``(N_0, id)`` for an extended module, with ``N_0 = R^r``."""
    if mod.extended_rank is None:
        raise ContractError("the distinguished twisted form needs an extended module")
    ring = _ring(mod)
    iso, qt = extended_identification(mod.extended_rank, mod.s, ring)
    return TwistedForm(free_r_module(ring, mod.extended_rank), iso, qt)


def lifted_coaction(form: TwistedForm, s: ComoduleAlgebra) -> np.ndarray:
    """``id_N (x) Delta_S`` on ``N (x)_R S``."""
    p, qt = s.p, form.qt
    n = s.hopf.dim
    return la.compose(p, la.kron(p, qt.projection, la.identity(n)), la.kron(p, la.identity(qt.left_dim), s.coaction), qt.section)


def d_tilde(form: TwistedForm, mod: HopfModule) -> np.ndarray:
    """``(phi (x) id_H) o (id_N (x) Delta_S) o phi^-1``; membership in C1 is re-verified."""
    p, n = mod.p, mod.hopf.dim
    f = la.compose(p, la.kron(p, form.phi, la.identity(n)), lifted_coaction(form, mod.s), la.inverse(form.phi, p))
    bad = Calculus.of(mod).descent_cocycle_failure(f)
    if bad is not None:
        raise InternalConsistencyError(f"transported coaction fails {bad[0]}", witness=bad[1])
    return f


def twist_witness(form: TwistedForm, mod: HopfModule) -> np.ndarray:
    """``theta: N -> N_{F_N}``, ``n -> phi(n (x) 1)``, as a matrix in the coinvariant basis."""
    p = mod.p
    f = d_tilde(form, mod)
    target = coinvariants_of_cocycle(f, mod)
    s_unit = mod.s.eta
    images = la.compose(p, form.phi, form.qt.projection, la.kron(p, la.identity(form.n.dim), s_unit))
    try:
        theta = la.coordinates(target.embedding, images, p)
    except ContractError as exc:
        raise TheoremViolation("phi(n (x) 1) is not coinvariant") from exc
    if not la.is_invertible(theta, p):
        raise TheoremViolation("phi(- (x) 1) is not a bijection onto the coinvariants")
    r = form.n.ring.dim
    if not np.array_equal(la.matmul(theta, form.n.action, p), la.compose(p, target.action, la.kron(p, theta, la.identity(r)))):
        raise TheoremViolation("phi(- (x) 1) is not R-linear")
    return theta


def cipolla_descent(f, mod: HopfModule):
    """The descent datum ``d: M -> M (x)_R S`` of a descent cocycle.

    Returns ``(d, quotient presentation of M (x)_R S, embedding of N_d)``.
    """
    p, s = mod.p, mod.s
    m, n, dim = s.dim, s.hopf.dim, mod.dim
    ring = _ring(mod)
    gamma, qss = galois_map(s, ring)
    if not la.is_invertible(gamma, p):
        raise ContractError("Galois map is not invertible; the extension is not Hopf-Galois")
    lift = la.compose(p, qss.section, la.inverse(gamma, p), la.kron(p, s.eta, la.identity(n)))
    qm = tensor_over_r(module_over_r(mod), s)
    d = la.compose(p, qm.projection, la.kron(p, mod.action, la.identity(m)), la.kron(p, la.identity(dim), lift), f)
    rho = la.compose(p, la.kron(p, mod.action, la.identity(n)), la.kron(p, la.identity(dim), s.coaction), qm.section)
    if la.compose(p, la.kron(p, mod.action, la.identity(n)), la.kron(p, la.identity(dim), s.coaction), qm.relations).any():
        raise InternalConsistencyError("m (x) s -> m Delta_S(s) is not balanced over R")
    nd = la.column_space(la.nullspace((la.matmul(rho, d, p) - Calculus.of(mod).unit(1)) % p, p), p)
    return d, qm, nd


def check_cipolla(f, mod: HopfModule) -> None:
    _, _, nd = cipolla_descent(f, mod)
    nf = coinvariants_of_cocycle(f, mod).embedding
    if not la.same_span(nd, nf, mod.p):
        raise TheoremViolation("coinvariants of the descent datum differ from the coinvariants of the cocycle")


def r_module_iso(a: RModule, b: RModule, cap: int = DEFAULT_CAP):
    """An invertible R-linear ``a -> b`` (lex-first in the Hom basis), or ``None``."""
    p = a.p
    if a.dim != b.dim:
        return None
    e, r = a.dim, a.ring.dim
    if e == 0:
        return np.zeros((0, 0), dtype=np.int64)

    def resid(x):
        return (la.matmul(x, a.action, p) - la.compose(p, b.action, la.kron(p, x, la.identity(r)))) % p

    sys_, _ = la.linear_system(resid, (e, e), p)
    basis = la.nullspace(sys_, p).T.reshape(-1, e, e)
    k = basis.shape[0]
    if p**k > cap:
        raise EnumerationBudgetExceeded("Hom_R(N, N')", p**k, cap)
    if k == 0:
        return None
    for c in itertools.product(range(p), repeat=k):
        x = np.tensordot(np.array(c, dtype=np.int64), basis, axes=1) % p
        if la.is_invertible(x, p):
            return x
    return None


@dataclass(frozen=True, eq=False)
class TwistClasses:
    forms: list  # one TwistedForm per D1 class
    classes: list  # lists of indices into ``forms``
    distinguished: int


def twist_classes(s: ComoduleAlgebra, rank: int, cap: int = DEFAULT_CAP):
    """Twisted forms of ``R^rank`` grouped by R-module isomorphism; returns ``(classes, report)``."""
    ok, gal = is_hopf_galois(s, cap)
    if not ok:
        raise ContractError("twisted forms need a Hopf-Galois extension")
    mod = extended_module(rank, s, name=f"R^{rank} (x) S")
    p = s.p
    rep = ValidationReport(f"twisted forms of R^{rank}")
    aut = aut_s(mod, cap)
    cs = c1(mod, cap)
    dq = d1(mod, cap)
    hq = h1(mod, cap)
    calc = Calculus.of(mod)

    # d_tilde o t_tilde = id on every enumerated cocycle, and the Cipolla coinvariants agree
    roundtrip, cipolla = [], []
    forms_all = []
    for i, f in enumerate(cs.cocycles):
        form = t_tilde(f, mod)
        forms_all.append(form)
        if not np.array_equal(d_tilde(form, mod), f):
            roundtrip.append(i)
        _, _, nd = cipolla_descent(f, mod)
        if not la.same_span(nd, form.n.embedding, p):
            cipolla.append(i)
    rep.add_flag("cocycle -> twisted form -> cocycle is the identity", not roundtrip, roundtrip[:1])
    rep.add_flag("multiplication maps from coinvariants are bijective", len(forms_all) == len(cs))
    rep.add_flag("descent datum coinvariants equal cocycle coinvariants", not cipolla, cipolla[:1])

    # twisted form -> cocycle -> twisted form keeps the isomorphism class, with witness theta
    base = distinguished_form(mod)
    rep.add_flag("distinguished twisted form gives the coaction of M", np.array_equal(d_tilde(base, mod), mod.coaction))
    witnesses = [twist_witness(frm, mod) for frm in [base] + forms_all]
    rep.add_flag("twisted form -> cocycle -> twisted form preserves the class", all(w is not None for w in witnesses))

    # cohomologous cocycles have R-isomorphic coinvariants: N_{F <- f} = f^-1 (N_F)
    moved_ok = True
    for orb in dq.classes:
        rep_emb = forms_all[orb.representative].n.embedding
        for j, gi in orb.transversal.items():
            img = la.matmul(aut.inverse(gi), rep_emb, p)
            if not la.same_span(img, forms_all[j].n.embedding, p):
                moved_ok = False
    rep.add_flag("cohomologous cocycles have isomorphic coinvariants", moved_ok)

    reps = [forms_all[o.representative] for o in dq.classes]
    classes: list[list[int]] = []
    for i, frm in enumerate(reps):
        for cl in classes:
            if r_module_iso(reps[cl[0]].n, frm.n, cap) is not None:
                cl.append(i)
                break
        else:
            classes.append([i])
    dist = next(k for k, cl in enumerate(classes) if dq.distinguished_class in cl)
    base_iso = r_module_iso(base.n, reps[dq.distinguished_class].n, cap)
    rep.add_flag("distinguished class contains (N0, id)", base_iso is not None)
    rep.add_flag("|Twist| = |D1|", len(classes) == len(dq.classes), [len(classes), len(dq.classes)])
    rep.add_flag("|Twist| = |H1|", len(classes) == len(hq.classes), [len(classes), len(hq.classes)])
    rep.data.update({"rank": rank, "aut": aut.order, "c1": len(cs), "d1": len(dq.classes), "h1": len(hq.classes), "twist": len(classes)})
    return TwistClasses(reps, classes, dist), rep


def hilbert90(s: ComoduleAlgebra, n: int, cap: int = DEFAULT_CAP) -> ValidationReport:
    """``H1(H, L^n)`` is a single point for a Hopf-Galois field extension ``L/K``."""
    mod = extended_module(n, s, name=f"L^{n}")
    rep = ValidationReport(f"H1(H, L^{n})")
    hq = h1(mod, cap)
    rep.add_flag("H1 is trivial", len(hq.classes) == 1, [len(hq.classes)])
    rep.data.update({"n": n, "aut": hq.aut_order, "z1": len(hq.cocycles), "h1": len(hq.classes)})
    return rep


__all__ = [
    "TwistClasses",
    "TwistedForm",
    "check_cipolla",
    "cipolla_descent",
    "coinvariants_of_cocycle",
    "d_tilde",
    "distinguished_form",
    "hilbert90",
    "phi_f",
    "r_module_iso",
    "t_tilde",
    "twist_classes",
    "twist_witness",
]
