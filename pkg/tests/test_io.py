import json
from pathlib import Path

import pytest

from hopfcoh import io as hio
from hopfcoh.errors import InstanceParseError, SchemaError, ValidationError
from hopfcoh.fixtures import BUILDERS

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "src" / "hopfcoh" / "data"
FIXTURES = ROOT / "fixtures"


@pytest.mark.parametrize("name", sorted(BUILDERS))
def test_bundled_matches_builder(name):
    assert hio.digest(hio.load_bundled(name)) == hio.digest(BUILDERS[name]())


@pytest.mark.parametrize("name", sorted(BUILDERS))
def test_fixture_copy_identical(name):
    assert (FIXTURES / f"{name}.json").read_bytes() == (DATA / f"{name}.json").read_bytes()


@pytest.mark.parametrize("name", sorted(BUILDERS))
@pytest.mark.parametrize("explicit", [False, True])
def test_round_trip(name, explicit):
    inst = BUILDERS[name]()
    text = hio.serialize(inst, explicit)
    back = hio.instance_from_dict(hio.parse_instance(text))
    assert hio.serialize(back, explicit) == text
    assert hio.digest(back) == hio.digest(inst)


def test_serialization_is_deterministic():
    a = hio.serialize(BUILDERS["fix1"](), True)
    b = hio.serialize(BUILDERS["fix1"](), True)
    assert a == b
    assert json.loads(a)["convention"] == hio.CONVENTION


def _doc():
    return json.loads((FIXTURES / "fix1.json").read_text())


def test_parse_error():
    with pytest.raises(InstanceParseError):
        hio.parse_instance("{not json")


def test_schema_errors():
    doc = _doc()
    doc["unexpected"] = 1
    with pytest.raises(SchemaError):
        hio.instance_from_dict(doc)
    doc = _doc()
    doc["field"]["p"] = 4
    with pytest.raises(SchemaError):
        hio.instance_from_dict(doc)
    doc = _doc()
    doc["convention"] = "other/0"
    with pytest.raises(SchemaError):
        hio.instance_from_dict(doc)


def test_shape_error_is_validation():
    doc = _doc()
    doc["hopf"]["antipode"] = [[1, 0]]
    with pytest.raises(ValidationError):
        hio.instance_from_dict(doc)


def test_mutated_mult_rejected():
    doc = _doc()
    doc["hopf"]["mult"][0][0] ^= 1
    with pytest.raises(ValidationError):
        hio.instance_from_dict(doc)


def test_module_without_coaction_defaults_to_trivial():
    doc = _doc()
    doc["modules"] = {"T": {"dim": 2, "action": doc["modules"]["M"]["action"]}}
    # S with the trivial coaction is not compatible with the Frobenius coaction on S
    with pytest.raises(ValidationError):
        hio.instance_from_dict(doc)


def test_module_requires_comodule_algebra():
    doc = _doc()
    del doc["comodule_algebra"]
    with pytest.raises(SchemaError):
        hio.instance_from_dict(doc)


def test_unreadable_file(tmp_path):
    with pytest.raises(InstanceParseError):
        hio.load_instance(tmp_path / "missing.json")
