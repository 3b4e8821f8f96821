"""Finite-dimensional algebras and Hopf algebras given by structure constants."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

import numpy as np

from . import linalg as la
from .errors import StructureError, ValidationError

if TYPE_CHECKING:
    from .groups import GroupTable


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    witness: Any = None

    def as_dict(self):
        out = {"name": self.name, "ok": bool(self.ok)}
        if not self.ok:
            out["witness"] = _jsonable(self.witness)
        return out


def _jsonable(w):
    if isinstance(w, dict):
        return {str(k): _jsonable(v) for k, v in w.items()}
    if isinstance(w, np.ndarray):
        return w.tolist()
    if isinstance(w, (tuple, list)):
        return [_jsonable(x) for x in w]
    if isinstance(w, np.integer):
        return int(w)
    return w


@dataclass
class ValidationReport:
    subject: str
    checks: list[Check] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, lhs, rhs) -> Check:
        """Record the identity ``lhs == rhs``; the witness is the first differing entry."""
        w = la.first_difference(lhs, rhs)
        c = Check(name, w is None, w)
        self.checks.append(c)
        return c

    def add_flag(self, name: str, ok: bool, witness=None) -> Check:
        c = Check(name, bool(ok), witness)
        self.checks.append(c)
        return c

    def extend(self, other: "ValidationReport", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.witness))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def raise_if_failed(self, exc=ValidationError):
        bad = self.failures()
        if bad:
            first = bad[0]
            raise exc(f"{self.subject}: {first.name} fails at {first.witness}", witness=first.witness)
        return self

    def as_dict(self):
        out = {"subject": self.subject, "ok": self.ok, "checks": [c.as_dict() for c in self.checks]}
        if self.data:
            out["data"] = _jsonable(self.data)
        return out


@dataclass(frozen=True, eq=False)
class Algebra:
    """Unital associative algebra of dimension ``dim`` over F_p.

    ``mult`` is ``dim x dim^2``: column ``i*dim + j`` holds the coordinates of
    ``e_i e_j``. ``unit`` holds the coordinates of 1.
    """

    p: int
    mult: np.ndarray
    unit: np.ndarray

    def __post_init__(self):
        la.PrimeField(self.p)
        object.__setattr__(self, "mult", la.mat(self.mult, self.p))
        object.__setattr__(self, "unit", la.mat(self.unit, self.p).reshape(-1))
        n = self.unit.shape[0]
        if self.mult.shape != (n, n * n):
            raise StructureError(f"multiplication has shape {self.mult.shape}, expected {(n, n * n)}")

    @property
    def dim(self) -> int:
        return self.unit.shape[0]

    @property
    def eta(self) -> np.ndarray:
        """Unit map ``k -> A`` as a ``dim x 1`` matrix."""
        return self.unit.reshape(-1, 1)

    def product(self, x, y) -> np.ndarray:
        return la.matmul(self.mult, la.kron(self.p, np.reshape(x, (-1, 1)), np.reshape(y, (-1, 1))), self.p).reshape(-1)

    def left_mult(self, x) -> np.ndarray:
        """Matrix of ``y -> x y``."""
        return la.matmul(self.mult, la.kron(self.p, np.reshape(x, (-1, 1)), la.identity(self.dim)), self.p)

    def right_mult(self, x) -> np.ndarray:
        """Matrix of ``y -> y x``."""
        return la.matmul(self.mult, la.kron(self.p, la.identity(self.dim), np.reshape(x, (-1, 1))), self.p)

    def is_commutative(self) -> bool:
        n = self.dim
        return np.array_equal(self.mult, la.matmul(self.mult, la.flip(n, n), self.p))


def check_algebra(a: Algebra, name: str = "algebra") -> ValidationReport:
    p, n = a.p, a.dim
    i = la.identity(n)
    rep = ValidationReport(name)
    rep.add("associativity", la.compose(p, a.mult, la.kron(p, a.mult, i)), la.compose(p, a.mult, la.kron(p, i, a.mult)))
    rep.add("left unit", la.compose(p, a.mult, la.kron(p, a.eta, i)), i)
    rep.add("right unit", la.compose(p, a.mult, la.kron(p, i, a.eta)), i)
    return rep


def tensor_algebra_mult(a_mult, a_dim, b_mult, b_dim, p):
    """Multiplication of ``A (x) B`` with componentwise product."""
    middle = la.kron(p, la.identity(a_dim), la.flip(b_dim, a_dim), la.identity(b_dim))
    return la.compose(p, la.kron(p, a_mult, b_mult), middle)


@dataclass(frozen=True, eq=False)
class HopfAlgebra:
    algebra: Algebra
    comult: np.ndarray
    counit: np.ndarray
    antipode: np.ndarray
    group: "GroupTable | None" = None

    def __post_init__(self):
        p, n = self.algebra.p, self.algebra.dim
        object.__setattr__(self, "comult", la.mat(self.comult, p))
        object.__setattr__(self, "counit", la.mat(self.counit, p).reshape(1, -1))
        object.__setattr__(self, "antipode", la.mat(self.antipode, p))
        for label, m, shape in (
            ("comultiplication", self.comult, (n * n, n)),
            ("counit", self.counit, (1, n)),
            ("antipode", self.antipode, (n, n)),
        ):
            if m.shape != shape:
                raise StructureError(f"{label} has shape {m.shape}, expected {shape}")

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

    @property
    def unit(self) -> np.ndarray:
        return self.algebra.unit


def check_hopf(h: HopfAlgebra) -> ValidationReport:
    """Evaluate every Hopf algebra axiom as an identity of composite maps."""
    p, n = h.p, h.dim
    i = la.identity(n)
    mu, eta, delta, eps, sigma = h.mult, h.eta, h.comult, h.counit, h.antipode
    one = la.identity(1)
    rep = check_algebra(h.algebra, "hopf algebra")
    rep.add("coassociativity", la.compose(p, la.kron(p, delta, i), delta), la.compose(p, la.kron(p, i, delta), delta))
    rep.add("left counit", la.compose(p, la.kron(p, eps, i), delta), i)
    rep.add("right counit", la.compose(p, la.kron(p, i, eps), delta), i)
    rep.add(
        "comultiplication is multiplicative",
        la.compose(p, delta, mu),
        la.compose(p, tensor_algebra_mult(mu, n, mu, n, p), la.kron(p, delta, delta)),
    )
    rep.add("comultiplication is unital", la.compose(p, delta, eta), la.kron(p, eta, eta))
    rep.add("counit is multiplicative", la.compose(p, eps, mu), la.kron(p, eps, eps))
    rep.add("counit is unital", la.compose(p, eps, eta), one)
    rep.add("left antipode", la.compose(p, mu, la.kron(p, sigma, i), delta), la.compose(p, eta, eps))
    rep.add("right antipode", la.compose(p, mu, la.kron(p, i, sigma), delta), la.compose(p, eta, eps))
    # consequences of the axioms; cheap independent cross-checks
    t = la.flip(n, n)
    rep.add("antipode is anti-multiplicative", la.compose(p, sigma, mu), la.compose(p, mu, la.kron(p, sigma, sigma), t))
    rep.add("antipode is unital", la.compose(p, sigma, eta), eta)
    rep.add("antipode is anti-comultiplicative", la.compose(p, delta, sigma), la.compose(p, la.kron(p, sigma, sigma), t, delta))
    rep.add("antipode is counital", la.compose(p, eps, sigma), eps)
    rep.add_flag("antipode is bijective", la.is_invertible(sigma, p))
    unit_map = la.compose(p, eta, eps)
    rep.add("convolution unit on the left", la.compose(p, mu, la.kron(p, unit_map, i), delta), i)
    rep.add("convolution unit on the right", la.compose(p, mu, la.kron(p, i, unit_map), delta), i)
    for side, place in (("left", lambda x: la.kron(p, x, i)), ("right", lambda x: la.kron(p, i, x))):
        sol = la.solve_affine_conditions(
            [lambda x, place=place: (la.compose(p, mu, place(x), delta) - unit_map) % p], (n, n), p
        )
        unique = sol.consistent and sol.dimension == 0
        rep.add_flag(
            f"antipode is the unique {side} convolution inverse",
            unique and np.array_equal(sol.particular.reshape(n, n), sigma),
        )
    s2 = la.matmul(sigma, sigma, p)
    rep.add("squared antipode is multiplicative", la.compose(p, s2, mu), la.compose(p, mu, la.kron(p, s2, s2)))
    rep.add("squared antipode is comultiplicative", la.compose(p, delta, s2), la.compose(p, la.kron(p, s2, s2), delta))
    rep.add("squared antipode is unital", la.compose(p, s2, eta), eta)
    rep.add("squared antipode is counital", la.compose(p, eps, s2), eps)
    if h.algebra.is_commutative() or np.array_equal(la.matmul(t, delta, p), delta):
        rep.add("antipode is an involution (commutative or cocommutative case)", s2, i)
    return rep


def trivial_hopf(p: int) -> HopfAlgebra:
    """The ground field as a one-dimensional Hopf algebra."""
    one = [[1]]
    return HopfAlgebra(Algebra(p, one, [1]), one, one, one)
