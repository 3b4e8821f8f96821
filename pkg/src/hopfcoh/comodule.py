"""Comodule algebras, coinvariants, Hopf modules and tensor products over R."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg as la
from .algebra import Algebra, HopfAlgebra, ValidationReport, check_algebra, tensor_algebra_mult
from .errors import InternalConsistencyError, StructureError, ValidationError


@dataclass(frozen=True, eq=False)
class ComoduleAlgebra:
    algebra: Algebra
    hopf: HopfAlgebra
    coaction: np.ndarray

    def __post_init__(self):
        if self.algebra.p != self.hopf.p:
            raise StructureError("algebra and Hopf algebra live over different fields")
        object.__setattr__(self, "coaction", la.mat(self.coaction, self.p))
        shape = (self.dim * self.hopf.dim, self.dim)
        if self.coaction.shape != shape:
            raise StructureError(f"coaction has shape {self.coaction.shape}, expected {shape}")

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def mult(self) -> np.ndarray:
        return self.algebra.mult

    @property
    def eta(self) -> np.ndarray:
        return self.algebra.eta


def check_comodule_algebra(s: ComoduleAlgebra) -> ValidationReport:
    p, m, h = s.p, s.dim, s.hopf
    n = h.dim
    rep = ValidationReport("comodule algebra")
    rep.extend(check_algebra(s.algebra), "algebra: ")
    dl = s.coaction
    rep.add("coaction coassociative", la.compose(p, la.kron(p, dl, la.identity(n)), dl), la.compose(p, la.kron(p, la.identity(m), h.comult), dl))
    rep.add("coaction counital", la.compose(p, la.kron(p, la.identity(m), h.counit), dl), la.identity(m))
    rep.add(
        "coaction multiplicative",
        la.compose(p, dl, s.mult),
        la.compose(p, tensor_algebra_mult(s.mult, m, h.mult, n, p), la.kron(p, dl, dl)),
    )
    rep.add("coaction unital", la.compose(p, dl, s.eta), la.kron(p, s.eta, h.eta))
    return rep


@dataclass(frozen=True, eq=False)
class CoinvariantAlgebra:
    """Subalgebra ``R`` of ``S`` with its embedding (columns span ``R`` inside ``S``)."""

    embedding: np.ndarray
    algebra: Algebra

    @property
    def dim(self) -> int:
        return self.embedding.shape[1]

    @property
    def p(self) -> int:
        return self.algebra.p


def coinvariants(s: ComoduleAlgebra) -> CoinvariantAlgebra:
    p, m = s.p, s.dim
    diff = (s.coaction - la.kron(p, la.identity(m), s.hopf.eta)) % p
    emb = la.column_space(la.nullspace(diff, p), p)
    r = emb.shape[1]
    if not la.in_span(emb, s.eta, p):
        raise InternalConsistencyError("unit of S is not coinvariant")
    prods = la.compose(p, s.mult, la.kron(p, emb, emb))
    try:
        mult = la.coordinates(emb, prods, p)
    except Exception as exc:
        raise InternalConsistencyError("coinvariants are not closed under multiplication") from exc
    unit = la.coordinates(emb, s.eta, p).reshape(-1)
    return CoinvariantAlgebra(emb, Algebra(p, mult.reshape(r, r * r), unit))


@dataclass(frozen=True, eq=False)
class RModule:
    """Right module over a coinvariant algebra; ``action`` is ``dim x (dim * r)``.

    ``embedding`` optionally records how the module sits inside an ambient space.
    """

    ring: CoinvariantAlgebra
    action: np.ndarray
    embedding: np.ndarray | None = None

    @property
    def dim(self) -> int:
        return self.action.shape[0]

    @property
    def p(self) -> int:
        return self.ring.p


def check_r_module(n: RModule) -> ValidationReport:
    p, e, r = n.p, n.dim, n.ring.dim
    a, ra = n.action, n.ring.algebra
    rep = ValidationReport("R-module")
    rep.add("R-action associative", la.compose(p, a, la.kron(p, a, la.identity(r))), la.compose(p, a, la.kron(p, la.identity(e), ra.mult)))
    rep.add("R-action unital", la.compose(p, a, la.kron(p, la.identity(e), ra.eta)), la.identity(e))
    return rep


def free_r_module(ring: CoinvariantAlgebra, rank: int) -> RModule:
    return RModule(ring, la.kron(ring.p, la.identity(rank), ring.algebra.mult))


def s_as_r_module(s: ComoduleAlgebra, ring: CoinvariantAlgebra) -> RModule:
    """``S`` with ``R`` acting by right multiplication."""
    return RModule(ring, la.compose(s.p, s.mult, la.kron(s.p, la.identity(s.dim), ring.embedding)))


@dataclass(frozen=True, eq=False)
class QuotientTensor:
    """Presentation of ``N (x)_R S`` as a quotient of ``N (x)_k S``.

    ``relations`` spans the kernel of ``projection``; ``projection @ section`` is
    the identity and ``s_action`` is the induced right ``S``-action.
    """

    left_dim: int
    right_dim: int
    relations: np.ndarray
    projection: np.ndarray
    section: np.ndarray
    s_action: np.ndarray

    @property
    def dim(self) -> int:
        return self.projection.shape[0]


def tensor_over_r(n: RModule, s: ComoduleAlgebra) -> QuotientTensor:
    check_r_module(n).raise_if_failed(ValidationError)
    p, e, m, r = s.p, n.dim, s.dim, n.ring.dim
    # columns: (n r) (x) t - n (x) (r t) for all basis triples n, r, t
    rel = (
        la.kron(p, n.action, la.identity(m))
        - la.kron(p, la.identity(e), la.compose(p, s.mult, la.kron(p, n.ring.embedding, la.identity(m))))
    ) % p
    left = la.nullspace(rel.T, p).T
    proj, piv = la.rref(left, p)
    q = len(piv)
    proj = proj[:q].copy()
    section = np.zeros((e * m, q), dtype=np.int64)
    for i, c in enumerate(piv):
        section[c, i] = 1
    action = la.compose(p, proj, la.kron(p, la.identity(e), s.mult), la.kron(p, section, la.identity(m)))
    return QuotientTensor(e, m, rel, proj, section, action)


def galois_map(s: ComoduleAlgebra, ring: CoinvariantAlgebra | None = None):
    """``s (x) t -> s t_0 (x) t_1`` on ``S (x)_R S``; returns ``(matrix, quotient)``."""
    ring = ring if ring is not None else coinvariants(s)
    p, m, n = s.p, s.dim, s.hopf.dim
    qt = tensor_over_r(s_as_r_module(s, ring), s)
    full = la.compose(p, la.kron(p, s.mult, la.identity(n)), la.kron(p, la.identity(m), s.coaction))
    if la.compose(p, full, qt.relations).any():
        raise InternalConsistencyError("Galois map is not balanced over the coinvariants")
    return la.compose(p, full, qt.section), qt


def _is_field(ring: CoinvariantAlgebra, cap: int) -> bool | None:
    """Decide whether ``R`` is a field by scanning its elements; ``None`` if too large."""
    p, r = ring.p, ring.dim
    if p**r > cap:
        return None
    if not ring.algebra.is_commutative():
        return False
    for idx in range(1, p**r):
        x = np.array([(idx // p**k) % p for k in range(r)], dtype=np.int64)
        if not la.is_invertible(ring.algebra.left_mult(x), p):
            return False
    return True


def free_r_basis(s: ComoduleAlgebra, ring: CoinvariantAlgebra):
    """Greedy search for ``s_1, ..., s_t`` with ``S = s_1 R (+) ... (+) s_t R`` freely."""
    p, m, r = s.p, s.dim, ring.dim
    chosen: list[int] = []
    span = np.zeros((m, 0), dtype=np.int64)
    for k in range(m):
        e = np.zeros((m, 1), dtype=np.int64)
        e[k, 0] = 1
        block = la.compose(p, s.mult, la.kron(p, e, ring.embedding))
        cand = np.hstack([span, block])
        if la.rank(cand, p) == span.shape[1] + r:
            chosen.append(k)
            span = cand
    if span.shape[1] == m:
        return chosen
    return None


def is_hopf_galois(s: ComoduleAlgebra, cap: int = 1 << 20):
    """Bijectivity of the Galois map plus the flatness policy; returns ``(ok, report)``."""
    ring = coinvariants(s)
    gamma, _ = galois_map(s, ring)
    rep = ValidationReport("Hopf-Galois extension")
    rep.add_flag("Galois map bijective", la.is_invertible(gamma, s.p), witness=list(gamma.shape))
    if ring.dim == 1:
        rep.add_flag("flatness: coinvariants are the ground field", True)
    elif _is_field(ring, cap):
        rep.add_flag("flatness: coinvariants form a field", True)
    else:
        basis = free_r_basis(s, ring)
        rep.add_flag("flatness: S is free over the coinvariants", basis is not None, witness=basis)
    return rep.ok, rep


@dataclass(frozen=True, eq=False)
class HopfModule:
    """Right ``S``-module with compatible ``H``-coaction.

    ``action`` is ``d x (d*m)``, ``coaction`` is ``(d*n) x d``. ``extended_rank``
    is set when the module is ``R^r (x)_R S = S^r`` with the canonical coaction.
    """

    s: ComoduleAlgebra
    action: np.ndarray
    coaction: np.ndarray
    extended_rank: int | None = None
    name: str = "M"
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        p = self.s.p
        object.__setattr__(self, "action", la.mat(self.action, p))
        object.__setattr__(self, "coaction", la.mat(self.coaction, p))
        d = self.action.shape[0]
        if self.action.shape != (d, d * self.s.dim):
            raise StructureError(f"action has shape {self.action.shape}, expected {(d, d * self.s.dim)}")
        if self.coaction.shape != (d * self.hopf.dim, d):
            raise StructureError(f"coaction has shape {self.coaction.shape}, expected {(d * self.hopf.dim, d)}")

    @property
    def p(self) -> int:
        return self.s.p

    @property
    def dim(self) -> int:
        return self.action.shape[0]

    @property
    def hopf(self) -> HopfAlgebra:
        return self.s.hopf


def twisted_linearity_residual(f, action, s: ComoduleAlgebra):
    """``F(ms) - F(m) Delta_S(s)`` as a matrix on ``M (x) S``; zero iff ``F`` is twisted linear."""
    p, m, n = s.p, s.dim, s.hopf.dim
    d = action.shape[0]
    lhs = la.compose(p, f, action)
    rhs = la.compose(
        p,
        la.kron(p, action, s.hopf.mult),
        la.kron(p, la.identity(d), la.flip(n, m), la.identity(n)),
        la.kron(p, f, s.coaction),
    )
    return (lhs - rhs) % p


def check_hopf_module(mod: HopfModule) -> ValidationReport:
    s, p, d = mod.s, mod.p, mod.dim
    n = mod.hopf.dim
    a, dl = mod.action, mod.coaction
    i = la.identity(d)
    rep = ValidationReport(f"Hopf module {mod.name}")
    rep.add("S-action associative", la.compose(p, a, la.kron(p, a, la.identity(s.dim))), la.compose(p, a, la.kron(p, i, s.mult)))
    rep.add("S-action unital", la.compose(p, a, la.kron(p, i, s.eta)), i)
    rep.add("coaction coassociative", la.compose(p, la.kron(p, dl, la.identity(n)), dl), la.compose(p, la.kron(p, i, mod.hopf.comult), dl))
    rep.add("coaction counital", la.compose(p, la.kron(p, i, mod.hopf.counit), dl), i)
    rep.add("coaction compatible with action", twisted_linearity_residual(dl, a, s), np.zeros((d * n, d * s.dim), dtype=np.int64))
    return rep


def extended_module(rank: int, s: ComoduleAlgebra, name: str = "M") -> HopfModule:
    """``R^rank (x)_R S``, identified with ``S^rank`` (block ``i`` is the ``i``-th copy)."""
    p = s.p
    mod = HopfModule(s, la.kron(p, la.identity(rank), s.mult), la.kron(p, la.identity(rank), s.coaction), extended_rank=rank, name=name)
    rep = check_hopf_module(mod)
    if not rep.ok:
        raise InternalConsistencyError(f"extended module fails {rep.failures()[0].name}")
    return mod


def extended_identification(rank: int, s: ComoduleAlgebra, ring: CoinvariantAlgebra):
    """Isomorphism ``R^rank (x)_R S -> S^rank`` (on the quotient) and its quotient presentation."""
    p, m = s.p, s.dim
    n0 = free_r_module(ring, rank)
    qt = tensor_over_r(n0, s)
    # (e_i r) (x) t -> copy i of (r t)
    emb = la.kron(p, la.identity(rank), la.compose(p, s.mult, la.kron(p, ring.embedding, la.identity(m))))
    iso = la.compose(p, emb, qt.section)
    if not la.is_invertible(iso, p):
        raise InternalConsistencyError("canonical identification of the extended module is not bijective")
    return iso, qt
