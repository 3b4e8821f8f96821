import numpy as np
import pytest

import oracles
from hopfcoh import linalg as la
from hopfcoh.algebra import Algebra, HopfAlgebra, check_algebra, check_hopf, trivial_hopf
from hopfcoh.errors import StructureError, ValidationError
from hopfcoh.groups import (
    GroupTable,
    action_from_coaction,
    build_group_dual,
    check_group_action,
    coaction_matrix,
    cyclic_group,
    symmetric_group,
)
from hopfcoh.fixtures import fix1, finite_field, polynomial_algebra


def test_trivial_hopf_passes():
    assert check_hopf(trivial_hopf(3)).ok


def test_check_hopf_has_at_least_24_identities():
    assert len(check_hopf(build_group_dual(cyclic_group(2), 2)).checks) >= 24


@pytest.mark.parametrize("g", [cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group(3)], ids=lambda g: g.name)
@pytest.mark.parametrize("p", [2, 3, 5])
def test_group_duals_pass(g, p):
    rep = check_hopf(build_group_dual(g, p))
    assert rep.ok, rep.failures()


def test_group_dual_basis_structure():
    g = symmetric_group(3)
    h = build_group_dual(g, 5)
    n = g.order
    for a in range(n):
        col = h.comult[:, a]
        pairs = {(i // n, i % n) for i in np.nonzero(col)[0]}
        assert pairs == {(x, y) for x in range(n) for y in range(n) if g.mul(x, y) == a}
    assert h.counit[0, g.identity] == 1 and h.counit.sum() == 1


@pytest.mark.parametrize("entry", [(0, 0), (0, 1), (1, 0), (1, 1)])
def test_mutated_antipode_fails_both_checkers(entry):
    h = build_group_dual(cyclic_group(2), 3)
    s = h.antipode.copy()
    s[entry] = (s[entry] + 1) % 3
    bad = HopfAlgebra(h.algebra, h.comult, h.counit, s)
    assert not check_hopf(bad).ok
    assert oracles.hopf_axiom_failures(bad)


def test_failure_witness_is_first_difference():
    h = build_group_dual(cyclic_group(3), 2)
    bad = HopfAlgebra(h.algebra, h.comult, h.counit, la.identity(3))
    fail = {c.name: c for c in check_hopf(bad).failures()}
    assert "left antipode" in fail
    assert isinstance(fail["left antipode"].witness, tuple)


def test_structure_shapes_enforced():
    with pytest.raises(StructureError):
        Algebra(2, np.zeros((2, 3)), [1, 0])
    h = build_group_dual(cyclic_group(2), 2)
    with pytest.raises(StructureError):
        HopfAlgebra(h.algebra, h.comult, h.counit, np.eye(3, dtype=np.int64))


def test_polynomial_algebra_f4():
    a = polynomial_algebra(2, (1, 1))  # x^2 + x + 1
    assert check_algebra(a).ok
    x = np.array([0, 1])
    assert np.array_equal(a.product(x, x), np.array([1, 1]))


@pytest.mark.parametrize("p,deg", [(2, 2), (3, 2), (2, 3)])
def test_finite_field_is_commutative(p, deg):
    a = finite_field(p, deg)
    assert a.is_commutative() and check_algebra(a).ok


def test_group_table_rejects_nonassociative():
    t = np.array([[0, 1, 2], [1, 0, 0], [2, 0, 1]])
    with pytest.raises(ValidationError):
        GroupTable(t)


def test_group_generators_and_inverse():
    g = symmetric_group(3)
    assert len(g.closure(g.generators())) == 6
    assert all(g.mul(a, g.inv(a)) == g.identity for a in range(6))
    assert not g.is_abelian() and cyclic_group(4).is_abelian()


def test_frobenius_action_round_trip():
    s = fix1().s
    act = action_from_coaction(s)
    assert check_group_action(act, 2) == []
    assert np.array_equal(coaction_matrix(list(act.gamma), 2), s.coaction)
