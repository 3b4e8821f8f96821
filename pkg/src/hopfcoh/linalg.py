"""Exact linear algebra over prime fields.

Linear maps are int64 ndarrays of shape ``(cod_dim, dom_dim)`` whose column
``j`` is the image of the ``j``-th basis vector, so ``g o f`` is ``g @ f``.
Tensor products use the row-major basis order of :func:`tensor_index`, which
coincides with ``numpy.kron``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce

import numpy as np

from ._backend import kernels
from .errors import ContractError, StructureError

MAX_PRIME = 2**31 - 1


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or not 2 <= self.p <= MAX_PRIME:
            raise ContractError(f"modulus must be an integer in [2, 2^31-1], got {self.p!r}")
        if not is_prime(int(self.p)):
            raise ContractError(f"{self.p} is not prime")

    def __call__(self, x) -> int:
        return int(x) % self.p

    def inv(self, x) -> int:
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(x, -1, self.p)

    def elements(self):
        return range(self.p)


def mat(a, p: int, shape=None) -> np.ndarray:
    """Coerce to a reduced int64 matrix (entries in ``[0, p)``)."""
    out = np.array(a, dtype=object if _needs_object(a) else np.int64)
    out = (out % p).astype(np.int64)
    if shape is not None:
        out = out.reshape(shape)
    return out


def _needs_object(a) -> bool:
    try:
        np.asarray(a, dtype=np.int64)
        return False
    except OverflowError:
        return True


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a, b, p: int) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise StructureError(f"cannot compose {a.shape} after {b.shape}")
    if a.size == 0 or b.size == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    return kernels.matmul_mod(a, b, p)


def compose(p: int, *maps) -> np.ndarray:
    """``compose(p, f, g, h) = f o g o h``."""
    return reduce(lambda x, y: matmul(x, y, p), maps)


def kron(p: int, *maps) -> np.ndarray:
    """Left-associated tensor product of linear maps."""
    out = reduce(np.kron, [np.asarray(m, dtype=np.int64) for m in maps])
    return out % p


def tensor_index(i: int, j: int, inner_dim: int) -> int:
    if inner_dim <= 0 or not 0 <= j < inner_dim or i < 0:
        raise ContractError(f"index ({i}, {j}) out of range for inner dimension {inner_dim}")
    return i * inner_dim + j


def tensor_map(f, g, p: int) -> np.ndarray:
    return kron(p, f, g)


def flip(dim_a: int, dim_b: int) -> np.ndarray:
    """Permutation ``A (x) B -> B (x) A``, ``a (x) b -> b (x) a``."""
    out = np.zeros((dim_a * dim_b, dim_a * dim_b), dtype=np.int64)
    for a, b in itertools.product(range(dim_a), range(dim_b)):
        out[b * dim_a + a, a * dim_b + b] = 1
    return out


def permutation_matrix(perm) -> np.ndarray:
    """Matrix sending basis vector ``i`` to ``perm[i]``."""
    n = len(perm)
    out = np.zeros((n, n), dtype=np.int64)
    out[list(perm), list(range(n))] = 1
    return out


def rref(a, p: int):
    a = np.asarray(a, dtype=np.int64)
    if a.shape[0] == 0 or a.shape[1] == 0:
        return a.copy() % p, []
    r, piv = kernels.rref_mod(a, p)
    return r, list(piv)


def rank(a, p: int) -> int:
    return len(rref(a, p)[1])


def is_invertible(a, p: int) -> bool:
    a = np.asarray(a)
    return a.shape[0] == a.shape[1] and rank(a, p) == a.shape[0]


def inverse(a, p: int) -> np.ndarray:
    n = a.shape[0]
    if a.shape != (n, n):
        raise StructureError(f"cannot invert a {a.shape} matrix")
    r, piv = rref(np.hstack([a, identity(n)]), p)
    if piv[:n] != list(range(n)) or len(piv) < n:
        raise ContractError("matrix is singular")
    return r[:, n:].copy()


def nullspace(a, p: int) -> np.ndarray:
    """Basis of the kernel as columns, shape ``(dom_dim, k)``."""
    a = np.asarray(a, dtype=np.int64)
    cols = a.shape[1]
    r, piv = rref(a, p)
    free = [c for c in range(cols) if c not in set(piv)]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        basis[f, k] = 1
        for row, pc in enumerate(piv):
            basis[pc, k] = (-r[row, f]) % p
    return basis


def column_space(a, p: int) -> np.ndarray:
    """A basis (columns) of the span of the columns of ``a``, in reduced form."""
    a = np.asarray(a, dtype=np.int64)
    r, piv = rref(a.T, p)
    return r[: len(piv)].T.copy()


def same_span(a, b, p: int) -> bool:
    ra = column_space(a, p)
    rb = column_space(b, p)
    return ra.shape == rb.shape and np.array_equal(ra, rb)


def in_span(basis, v, p: int) -> bool:
    return rank(np.column_stack([basis, v]), p) == rank(basis, p)


def coordinates(basis, vecs, p: int) -> np.ndarray:
    """Solve ``basis @ X = vecs`` for a basis with independent columns."""
    k = basis.shape[1]
    aug = np.hstack([basis, vecs])
    r, piv = rref(aug, p)
    if piv[:k] != list(range(k)) or any(c >= k for c in piv):
        raise ContractError("vectors are not in the span of the basis")
    return r[:k, k:].copy()


@dataclass(frozen=True)
class AffineSolutionSet:
    """``None`` particular solution means the system is inconsistent."""

    particular: np.ndarray | None
    kernel: np.ndarray  # columns
    p: int

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def dimension(self) -> int:
        return self.kernel.shape[1]

    @property
    def size(self) -> int:
        return self.p**self.dimension if self.consistent else 0

    def points(self):
        if not self.consistent:
            return
        k = self.dimension
        for coeffs in itertools.product(range(self.p), repeat=k):
            yield (self.particular + self.kernel @ np.array(coeffs, dtype=np.int64)) % self.p

    def contains(self, x) -> bool:
        if not self.consistent:
            return False
        diff = (np.asarray(x) - self.particular) % self.p
        return in_span(self.kernel, diff, self.p)


def solve_linear(system, rhs, p: int) -> AffineSolutionSet:
    system = np.asarray(system, dtype=np.int64) % p
    rhs = np.asarray(rhs, dtype=np.int64).reshape(-1) % p
    rows, cols = system.shape
    if rhs.shape[0] != rows:
        raise StructureError(f"rhs length {rhs.shape[0]} does not match {rows} equations")
    kern = nullspace(system, p)
    if rows == 0:
        return AffineSolutionSet(np.zeros(cols, dtype=np.int64), kern, p)
    r, piv = rref(np.column_stack([system, rhs]), p)
    if cols in piv:
        return AffineSolutionSet(None, kern, p)
    x = np.zeros(cols, dtype=np.int64)
    for row, pc in enumerate(piv):
        x[pc] = r[row, cols]
    return AffineSolutionSet(x, kern, p)


def linear_system(fn, shape, p: int):
    """Matrix form of an affine map on matrices of ``shape``.

    Returns ``(A, b)`` with ``vec(fn(X)) = A vec(X) + b``; ``vec`` is row-major.
    """
    zero = np.zeros(shape, dtype=np.int64)
    b = np.asarray(fn(zero), dtype=np.int64).reshape(-1) % p
    n = shape[0] * shape[1]
    cols = []
    for k in range(n):
        e = np.zeros(n, dtype=np.int64)
        e[k] = 1
        cols.append((np.asarray(fn(e.reshape(shape)), dtype=np.int64).reshape(-1) - b) % p)
    a = np.column_stack(cols) if cols else np.zeros((b.shape[0], 0), dtype=np.int64)
    return a, b


def solve_affine_conditions(conditions, shape, p: int) -> AffineSolutionSet:
    """Solutions ``X`` (flattened row-major) of ``cond(X) = 0`` for every affine ``cond``."""
    blocks = [linear_system(c, shape, p) for c in conditions]
    a = np.vstack([blk[0] for blk in blocks])
    b = np.concatenate([blk[1] for blk in blocks])
    return solve_linear(a, (-b) % p, p)


def first_difference(a, b):
    """Lexicographically first index where two equal-shape arrays differ, or ``None``."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        return ("shape", tuple(a.shape), tuple(b.shape))
    diff = np.argwhere(a != b)
    if diff.size == 0:
        return None
    return tuple(int(x) for x in diff[0])


def key(a) -> bytes:
    a = np.ascontiguousarray(a, dtype=np.int64)
    return a.tobytes() + bytes(str(a.shape), "ascii")


def lex_tuple(a) -> tuple:
    return tuple(int(x) for x in np.asarray(a).reshape(-1))
