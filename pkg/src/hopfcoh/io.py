"""Instance files: JSON schema, loading with validation, canonical serialization."""
from __future__ import annotations

import hashlib
import json
from importlib import resources
from pathlib import Path

import jsonschema
import numpy as np

from . import linalg as la
from .algebra import Algebra, HopfAlgebra, check_hopf
from .cohomology import DEFAULT_CAP
from .comodule import ComoduleAlgebra, HopfModule, check_comodule_algebra, check_hopf_module, extended_module
from .errors import HopfcohError, InstanceParseError, SchemaError, ValidationError
from .fixtures import Instance
from .groups import GroupTable, build_group_dual

CONVENTION = "hopfcoh/1"

_matrix = {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}}
_vector = {"type": "array", "items": {"type": "integer"}}
_cayley = {"type": "object", "required": ["cayley"], "properties": {"cayley": _matrix}, "additionalProperties": False}

SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["convention", "field", "hopf"],
    "additionalProperties": False,
    "properties": {
        "convention": {"const": CONVENTION},
        "name": {"type": "string"},
        "field": {
            "type": "object",
            "required": ["p"],
            "additionalProperties": False,
            "properties": {"p": {"type": "integer", "minimum": 2, "maximum": la.MAX_PRIME}},
        },
        "hopf": {
            "oneOf": [
                {
                    "type": "object",
                    "required": ["group_dual"],
                    "additionalProperties": False,
                    "properties": {"group_dual": _cayley},
                },
                {
                    "type": "object",
                    "required": ["dim", "mult", "unit", "comult", "counit", "antipode"],
                    "additionalProperties": False,
                    "properties": {
                        "dim": {"type": "integer", "minimum": 1},
                        "mult": _matrix,
                        "unit": _vector,
                        "comult": _matrix,
                        "counit": _vector,
                        "antipode": _matrix,
                        "group": _cayley,
                    },
                },
            ]
        },
        "comodule_algebra": {
            "type": "object",
            "required": ["dim", "mult", "unit", "coaction"],
            "additionalProperties": False,
            "properties": {"dim": {"type": "integer", "minimum": 1}, "mult": _matrix, "unit": _vector, "coaction": _matrix},
        },
        "modules": {
            "type": "object",
            "additionalProperties": {
                "oneOf": [
                    {
                        "type": "object",
                        "required": ["extended_rank"],
                        "additionalProperties": False,
                        "properties": {"extended_rank": {"type": "integer", "minimum": 0}},
                    },
                    {
                        "type": "object",
                        "required": ["dim", "action"],
                        "additionalProperties": False,
                        "properties": {
                            "dim": {"type": "integer", "minimum": 0},
                            "action": _matrix,
                            "coaction": _matrix,
                            "extended_rank": {"type": "integer", "minimum": 0},
                        },
                    },
                ]
            },
        },
        "budgets": {
            "type": "object",
            "additionalProperties": False,
            "properties": {"cap": {"type": "integer", "minimum": 1}},
        },
    },
}


def _arr(x, p, shape, label):
    """Integer array of exactly ``shape``, reduced mod ``p``."""
    try:
        a = np.array(x, dtype=object)
    except ValueError:
        a = None
    if a is not None and a.size == 0 and 0 in shape:
        return np.zeros(shape, dtype=np.int64)
    if a is None or a.shape != tuple(shape):
        got = "ragged" if a is None else list(a.shape)
        raise ValidationError(f"{label}: expected shape {list(shape)}, got {got}", witness=[label])
    return (a % p).astype(np.int64)


def parse_instance(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceParseError(f"instance is not valid JSON: {exc}") from exc


def validate_schema(doc) -> None:
    err = jsonschema.exceptions.best_match(jsonschema.Draft7Validator(SCHEMA).iter_errors(doc))
    if err is not None:
        path = "/".join(str(x) for x in err.absolute_path) or "<root>"
        raise SchemaError(f"{path}: {err.message}", witness=[path])
    if not la.is_prime(doc["field"]["p"]):
        raise SchemaError(f"field/p: {doc['field']['p']} is not prime", witness=["field/p"])


def instance_from_dict(doc) -> Instance:
    validate_schema(doc)
    p = doc["field"]["p"]
    hd = doc["hopf"]
    if "group_dual" in hd:
        hopf = build_group_dual(GroupTable(np.array(hd["group_dual"]["cayley"])), p)
    else:
        n = hd["dim"]
        group = GroupTable(np.array(hd["group"]["cayley"])) if "group" in hd else None
        hopf = HopfAlgebra(
            Algebra(p, _arr(hd["mult"], p, (n, n * n), "hopf/mult"), _arr(hd["unit"], p, (n,), "hopf/unit")),
            _arr(hd["comult"], p, (n * n, n), "hopf/comult"),
            _arr(hd["counit"], p, (n,), "hopf/counit"),
            _arr(hd["antipode"], p, (n, n), "hopf/antipode"),
            group=group,
        )
    check_hopf(hopf).raise_if_failed()
    if hopf.group is not None and "group_dual" not in hd:
        ref = build_group_dual(hopf.group, p)
        for label in ("mult", "unit", "comult", "counit", "antipode"):
            w = la.first_difference(getattr(hopf, label), getattr(ref, label))
            if w is not None:
                raise ValidationError(f"hopf/{label} differs from the dual of the tagged group at {w}", witness=list(w))
    s = None
    if "comodule_algebra" in doc:
        cd = doc["comodule_algebra"]
        m = cd["dim"]
        alg = Algebra(p, _arr(cd["mult"], p, (m, m * m), "comodule_algebra/mult"), _arr(cd["unit"], p, (m,), "comodule_algebra/unit"))
        s = ComoduleAlgebra(alg, hopf, _arr(cd["coaction"], p, (m * hopf.dim, m), "comodule_algebra/coaction"))
        check_comodule_algebra(s).raise_if_failed()
    modules = {}
    for name, md in sorted(doc.get("modules", {}).items()):
        if s is None:
            raise SchemaError("modules require a comodule_algebra", witness=["modules"])
        if set(md) == {"extended_rank"}:
            modules[name] = extended_module(md["extended_rank"], s, name=name)
            continue
        d = md["dim"]
        action = _arr(md["action"], p, (d, d * s.dim), f"modules/{name}/action")
        if "coaction" in md:
            coaction = _arr(md["coaction"], p, (d * hopf.dim, d), f"modules/{name}/coaction")
        else:
            coaction = la.kron(p, la.identity(d), hopf.eta)
        mod = HopfModule(s, action, coaction, extended_rank=md.get("extended_rank"), name=name)
        check_hopf_module(mod).raise_if_failed()
        if mod.extended_rank is not None:
            ref = extended_module(mod.extended_rank, s)
            for label in ("action", "coaction"):
                w = la.first_difference(getattr(mod, label), getattr(ref, label))
                if w is not None:
                    raise ValidationError(f"modules/{name}/{label} is not the extended module structure (at {w})", witness=list(w))
        modules[name] = mod
    cap = doc.get("budgets", {}).get("cap", DEFAULT_CAP)
    return Instance(hopf, s, modules, cap=cap, name=doc.get("name", ""))


def load_instance(path) -> Instance:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InstanceParseError(f"cannot read {path}: {exc}") from exc
    return instance_from_dict(parse_instance(text))


def load_bundled(name: str) -> Instance:
    text = resources.files("hopfcoh").joinpath("data", f"{name}.json").read_text()
    return instance_from_dict(parse_instance(text))


def _rows(a) -> list:
    return np.asarray(a, dtype=np.int64).tolist()


def instance_to_dict(inst: Instance, explicit: bool = False) -> dict:
    """Canonical document; ``explicit`` writes every structure map out in full."""
    h = inst.hopf
    doc: dict = {"convention": CONVENTION}
    if inst.name:
        doc["name"] = inst.name
    doc["field"] = {"p": h.p}
    if h.group is not None and not explicit:
        doc["hopf"] = {"group_dual": {"cayley": _rows(h.group.cayley)}}
    else:
        doc["hopf"] = {
            "dim": h.dim,
            "mult": _rows(h.mult),
            "unit": _rows(h.unit),
            "comult": _rows(h.comult),
            "counit": _rows(h.counit.reshape(-1)),
            "antipode": _rows(h.antipode),
        }
        if h.group is not None:
            doc["hopf"]["group"] = {"cayley": _rows(h.group.cayley)}
    if inst.s is not None:
        s = inst.s
        doc["comodule_algebra"] = {"dim": s.dim, "mult": _rows(s.mult), "unit": _rows(s.algebra.unit), "coaction": _rows(s.coaction)}
    if inst.modules:
        mods = {}
        for name, mod in sorted(inst.modules.items()):
            if mod.extended_rank is not None and not explicit:
                mods[name] = {"extended_rank": mod.extended_rank}
            else:
                entry = {"dim": mod.dim, "action": _rows(mod.action), "coaction": _rows(mod.coaction)}
                if mod.extended_rank is not None:
                    entry["extended_rank"] = mod.extended_rank
                mods[name] = entry
        doc["modules"] = mods
    doc["budgets"] = {"cap": inst.cap}
    return doc


def dumps(obj, indent: int = 2) -> str:
    """JSON with sorted keys, one matrix row per line."""

    def fmt(x, level):
        pad = " " * (indent * level)
        inner = " " * (indent * (level + 1))
        if isinstance(x, dict):
            if not x:
                return "{}"
            items = [f"{inner}{json.dumps(str(k))}: {fmt(v, level + 1)}" for k, v in sorted(x.items())]
            return "{\n" + ",\n".join(items) + "\n" + pad + "}"
        if isinstance(x, list):
            if all(not isinstance(v, (list, dict)) for v in x):
                return json.dumps(x, separators=(", ", ": "))
            return "[\n" + ",\n".join(inner + fmt(v, level + 1) for v in x) + "\n" + pad + "]"
        return json.dumps(x)

    return fmt(obj, 0) + "\n"


def serialize(inst: Instance, explicit: bool = False) -> str:
    return dumps(instance_to_dict(inst, explicit))


def digest(inst: Instance) -> str:
    body = json.dumps(instance_to_dict(inst, explicit=True), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(body.encode()).hexdigest()


__all__ = [
    "CONVENTION",
    "HopfcohError",
    "SCHEMA",
    "digest",
    "dumps",
    "instance_from_dict",
    "instance_to_dict",
    "load_bundled",
    "load_instance",
    "parse_instance",
    "serialize",
    "validate_schema",
]
