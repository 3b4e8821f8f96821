import numpy as np
import pytest

from frozen import COUNTS, GROUP_COUNTS
from hopfcoh import cohomology as co
from hopfcoh import galois
from hopfcoh.comodule import extended_module
from hopfcoh.errors import ContractError, UnsupportedInput
from hopfcoh.fixtures import BUILDERS, fix1, self_coacting
from hopfcoh.algebra import trivial_hopf


def test_group_z1_fix1_matches_oracle():
    mod = fix1().module("M")
    aut = co.aut_s(mod)
    perms = galois.conjugation_action(mod, aut)
    gc = galois.serre_z1_h1(mod.hopf.group, aut, perms)
    assert len(gc.cocycles) == COUNTS[("fix1", "M")]["group_z1"]
    assert len(gc.classes) == 1


def test_group_z1_fix1_rank2_matches_oracle():
    mod = fix1().module("M2")
    aut = co.aut_s(mod)
    perms = galois.conjugation_action(mod, aut)
    assert len(galois.serre_z1(mod.hopf.group, aut, perms)) == GROUP_COUNTS[("fix1", "M2")]["group_z1"]


@pytest.mark.parametrize("key", [("fix1", "M"), ("fix1", "M2"), ("kg_self", "M"), ("f9_over_f3", "M")])
def test_descent_group_correspondence(key):
    rep = galois.verify_group_correspondence(BUILDERS[key[0]]().module(key[1]))
    assert rep.ok, rep.failures()
    assert rep.data["c1"] == rep.data["group_z1"]
    assert rep.data["d0"] == rep.data["group_h0"]


def test_round_trip_dictionaries():
    mod = fix1().module("M")
    aut = co.aut_s(mod)
    for f in co.c1(mod).cocycles:
        alpha = galois.serre_from_descent(f, mod, aut)
        assert np.array_equal(galois.descent_from_serre(alpha, mod, aut), f)


def test_canonical_action_is_distinguished_cocycle():
    mod = fix1().module("M")
    aut = co.aut_s(mod)
    cs = co.c1(mod)
    assert galois.serre_from_descent(cs.cocycles[cs.distinguished], mod, aut) == (0, 0)


def test_requires_group_tag():
    h = trivial_hopf(2)
    mod = extended_module(1, self_coacting(h))
    with pytest.raises(UnsupportedInput):
        galois.canonical_action(mod)


def test_requires_extended_module():
    from hopfcoh.comodule import HopfModule

    m = fix1().module("M")
    plain = HopfModule(m.s, m.action, m.coaction)
    with pytest.raises(ContractError):
        galois.canonical_action(plain)
