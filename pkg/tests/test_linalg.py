import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcoh import linalg as la
from hopfcoh.errors import ContractError, StructureError


def test_is_prime_small():
    assert [n for n in range(30) if la.is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert la.is_prime(la.MAX_PRIME)


def test_prime_field_rejects_composite():
    with pytest.raises(ContractError):
        la.PrimeField(4)


def test_field_inverse():
    f = la.PrimeField(7)
    assert all((x * f.inv(x)) % 7 == 1 for x in range(1, 7))


def test_tensor_index_is_row_major():
    assert la.tensor_index(1, 2, 3) == 5
    assert la.tensor_index(0, 0, 4) == 0


def test_kron_matches_basis_tensor():
    a = np.array([[1, 2], [0, 1]])
    b = np.array([[0, 1], [1, 1]])
    k = la.kron(5, a, b)
    for i, j in itertools.product(range(2), repeat=2):
        e = np.zeros(4, dtype=np.int64)
        e[la.tensor_index(i, j, 2)] = 1
        assert np.array_equal(k @ e % 5, np.kron(a[:, i], b[:, j]) % 5)


def test_flip_swaps_factors():
    t = la.flip(2, 3)
    for i, j in itertools.product(range(2), range(3)):
        e = np.zeros(6, dtype=np.int64)
        e[la.tensor_index(i, j, 3)] = 1
        assert np.argmax(t @ e) == la.tensor_index(j, i, 2)


def test_flip_is_inverse_of_reverse_flip():
    assert np.array_equal(la.flip(3, 2) @ la.flip(2, 3), np.eye(6, dtype=np.int64))


def test_inverse_and_rank():
    a = np.array([[1, 1], [0, 1]])
    assert np.array_equal(la.matmul(a, la.inverse(a, 2), 2), np.eye(2, dtype=np.int64))
    assert la.rank(np.array([[1, 1], [1, 1]]), 3) == 1
    assert not la.is_invertible(np.array([[1, 1], [1, 1]]), 3)


def test_solve_linear_inconsistent():
    sol = la.solve_linear(np.array([[1, 1], [1, 1]]), np.array([0, 1]), 2)
    assert not sol.consistent
    assert sol.size == 0


def test_solve_linear_rejects_bad_rhs():
    with pytest.raises(StructureError):
        la.solve_linear(np.eye(2, dtype=np.int64), np.array([1, 2, 3]), 5)


@pytest.mark.parametrize("seed", range(20))
def test_solve_linear_against_enumeration(seed):
    rng = np.random.default_rng(seed)
    p = 2
    rows, cols = rng.integers(1, 5), rng.integers(1, 7)
    a = rng.integers(0, p, (rows, cols))
    b = rng.integers(0, p, rows)
    sol = la.solve_linear(a, b, p)
    brute = {tuple(x) for x in itertools.product(range(p), repeat=int(cols)) if not ((a @ np.array(x) - b) % p).any()}
    got = {tuple(int(v) for v in x) for x in sol.points()}
    assert got == brute
    assert sol.size == len(brute)


def test_affine_contains():
    sol = la.solve_linear(np.array([[1, 2, 0]]), np.array([1]), 3)
    assert sol.contains(np.array([1, 0, 2]))
    assert not sol.contains(np.array([0, 0, 0]))


def test_coordinates_requires_span():
    basis = np.array([[1], [0]])
    with pytest.raises(ContractError):
        la.coordinates(basis, np.array([[0], [1]]), 5)


def test_first_difference():
    assert la.first_difference(np.zeros((2, 2)), np.zeros((2, 2))) is None
    b = np.zeros((2, 2))
    b[1, 0] = 1
    assert la.first_difference(np.zeros((2, 2)), b) == (1, 0)
    assert la.first_difference(np.zeros(2), np.zeros(3))[0] == "shape"


def test_large_prime_products_exact():
    p = la.MAX_PRIME
    a = np.full((3, 3), p - 1, dtype=np.int64)
    expect = (3 * (p - 1) ** 2) % p
    assert (la.matmul(a, a, p) == expect).all()


mats = st.integers(1, 3).flatmap(
    lambda r: st.integers(1, 3).flatmap(
        lambda c: st.lists(st.integers(0, 4), min_size=r * c, max_size=r * c).map(lambda v: np.array(v).reshape(r, c))
    )
)


@settings(max_examples=60, deadline=None)
@given(mats, mats, mats, mats)
def test_kron_is_functorial(a, b, c, d):
    p = 5
    if a.shape[1] != c.shape[0] or b.shape[1] != d.shape[0]:
        c = np.ones((a.shape[1], c.shape[1]), dtype=np.int64)
        d = np.ones((b.shape[1], d.shape[1]), dtype=np.int64)
    lhs = la.matmul(la.kron(p, a, b), la.kron(p, c, d), p)
    rhs = la.kron(p, la.matmul(a, c, p), la.matmul(b, d, p))
    assert np.array_equal(lhs, rhs)


@settings(max_examples=60, deadline=None)
@given(mats, mats)
def test_flip_conjugates_tensor_products(a, b):
    p = 5
    lhs = la.matmul(la.flip(a.shape[0], b.shape[0]), la.kron(p, a, b), p)
    rhs = la.matmul(la.kron(p, b, a), la.flip(a.shape[1], b.shape[1]), p)
    assert np.array_equal(lhs, rhs)


@settings(max_examples=60, deadline=None)
@given(mats, st.sampled_from([2, 3, 5, 7]))
def test_nullspace_is_kernel_of_full_dimension(a, p):
    k = la.nullspace(a, p)
    assert not la.matmul(a, k, p).any()
    assert k.shape[1] == a.shape[1] - la.rank(a, p)
