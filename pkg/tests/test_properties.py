"""Invariants checked on random inputs drawn by hypothesis."""
import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcoh import cohomology as co
from hopfcoh import galois
from hopfcoh import linalg as la
from hopfcoh.fixtures import fix1

MOD = fix1().module("M2")
CALC = co.Calculus.of(MOD)
AUT = co.aut_s(MOD)
Z1 = co.z1(MOD)
C1 = co.c1(MOD)
W1 = co.w_s_basis(MOD, 1)
HACT = co.action_table(MOD, AUT, "hopf")
DACT = co.action_table(MOD, AUT, "descent")

aut_idx = st.integers(0, AUT.order - 1)
z_idx = st.integers(0, len(Z1) - 1)
c_idx = st.integers(0, len(C1) - 1)
coeffs = st.lists(st.integers(0, 1), min_size=W1.shape[0], max_size=W1.shape[0])


def _cochain(c):
    return np.tensordot(np.array(c, dtype=np.int64), W1, axes=1) % 2


@settings(max_examples=40, deadline=None)
@given(z_idx, aut_idx, aut_idx)
def test_hopf_action_is_right_action(i, a, b):
    x = Z1.cocycles[i]
    ab = AUT.compose_index(a, b)
    assert np.array_equal(HACT(HACT(x, a), b), HACT(x, ab))


@settings(max_examples=40, deadline=None)
@given(c_idx, aut_idx, aut_idx)
def test_descent_action_is_right_action(i, a, b):
    f = C1.cocycles[i]
    ab = AUT.compose_index(a, b)
    assert np.array_equal(DACT(DACT(f, a), b), DACT(f, ab))


@settings(max_examples=40, deadline=None)
@given(z_idx, aut_idx)
def test_actions_preserve_cocycles(i, a):
    assert CALC.hopf_cocycle_failure(HACT(Z1.cocycles[i], a)) is None
    assert CALC.descent_cocycle_failure(DACT(C1.cocycles[i], a)) is None


@settings(max_examples=40, deadline=None)
@given(z_idx, aut_idx)
def test_comparison_is_equivariant(i, a):
    x = Z1.cocycles[i]
    assert np.array_equal(CALC.kappa(HACT(x, a)), DACT(CALC.kappa(x), a))


@settings(max_examples=60, deadline=None)
@given(coeffs)
def test_comparison_round_trip_on_s_linear_cochains(c):
    x = _cochain(c)
    assert np.array_equal(CALC.kappa_inverse(CALC.kappa(x)), x)
    assert not CALC.twisted_residual(CALC.kappa(x)).any()


@settings(max_examples=40, deadline=None)
@given(coeffs, coeffs, coeffs)
def test_product_associative_with_unit(a, b, c):
    x, y, z = _cochain(a), _cochain(b), _cochain(c)
    assert np.array_equal(CALC.cdot(CALC.cdot(x, y, 1), z, 1), CALC.cdot(x, CALC.cdot(y, z, 1), 1))
    u = CALC.unit(1)
    assert np.array_equal(CALC.cdot(u, x, 1), x) and np.array_equal(CALC.cdot(x, u, 1), x)


@settings(max_examples=40, deadline=None)
@given(coeffs, coeffs)
def test_differentials_multiplicative(a, b):
    x, y = _cochain(a), _cochain(b)
    for i in range(3):
        assert np.array_equal(CALC.diff(i, CALC.cdot(x, y, 1), 1), CALC.cdot(CALC.diff(i, x, 1), CALC.diff(i, y, 1), 2))


@settings(max_examples=30, deadline=None)
@given(c_idx, aut_idx)
def test_group_dictionary_equivariant(i, a):
    perms = galois.conjugation_action(MOD, AUT)
    f = C1.cocycles[i]
    alpha = galois.serre_from_descent(f, MOD, AUT)
    moved = galois.serre_from_descent(DACT(f, a), MOD, AUT)
    assert moved == galois.serre_act(alpha, a, MOD.hopf.group, AUT, perms)


@settings(max_examples=60, deadline=None)
@given(aut_idx, aut_idx)
def test_aut_group_closed(a, b):
    k = AUT.compose_index(a, b)
    assert np.array_equal(AUT[k], la.matmul(AUT[a], AUT[b], 2))
    assert AUT.compose_index(a, AUT.inverse_index(a)) == 0
