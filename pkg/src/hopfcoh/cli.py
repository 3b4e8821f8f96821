"""Command-line interface: ``hopfcoh <command> --input FILE [options]``.

Exit codes: 0 pass, 2 schema or usage error, 3 invalid structure, 4 theorem
violation or internal inconsistency, 5 enumeration budget exceeded, 6 the
input is not JSON.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

import numpy as np

from . import cohomology as co
from . import galois, torsors, twisted
from . import io as hio
from . import linalg as la
from ._backend import BACKEND
from .algebra import ValidationReport, _jsonable, check_hopf
from .comodule import check_comodule_algebra, check_hopf_module, coinvariants, is_hopf_galois
from .errors import ContractError, HopfcohError

MAX_LISTED = 64

EXIT_OK, EXIT_SCHEMA, EXIT_VALIDATION, EXIT_THEOREM, EXIT_BUDGET, EXIT_PARSE = 0, 2, 3, 4, 5, 6


def _mats(xs):
    return [np.asarray(x).tolist() for x in xs] if len(xs) <= MAX_LISTED else None


def _checks(*reports: ValidationReport):
    out = []
    for r in reports:
        for c in r.as_dict()["checks"]:
            out.append({"subject": r.subject, **c})
    return out


class Outcome:
    def __init__(self, reports=(), cardinalities=None, extra=None):
        self.reports = list(reports)
        self.cardinalities = cardinalities or {}
        self.extra = extra or {}

    @property
    def ok(self):
        return all(r.ok for r in self.reports)


def cmd_check(inst, args):
    reps = [check_hopf(inst.hopf)]
    card = {"hopf_dim": inst.hopf.dim}
    if inst.s is not None:
        reps.append(check_comodule_algebra(inst.s))
        ring = coinvariants(inst.s)
        ok, gal = is_hopf_galois(inst.s, args.cap)
        gal.subject = "Hopf-Galois extension (informational)"
        card.update({"comodule_algebra_dim": inst.s.dim, "coinvariants_dim": ring.dim, "hopf_galois": ok})
        extra = {"hopf_galois": gal.as_dict()}
    else:
        extra = {}
    for name, mod in sorted(inst.modules.items()):
        reps.append(check_hopf_module(mod))
        card[f"module_dim.{name}"] = mod.dim
    return Outcome(reps, card, extra)


def _group_outcome(inst, args, which):
    mod = inst.module(args.module)
    aut = co.aut_s(mod, args.cap)
    sub = co.h0(mod, aut) if which == "h0" else co.d0_set(mod, aut)
    return Outcome([], {"aut": aut.order, which: sub.order}, {"elements": _mats(list(sub))})


def cmd_h0(inst, args):
    return _group_outcome(inst, args, "h0")


def cmd_d0(inst, args):
    return _group_outcome(inst, args, "d0")


def _cocycle_outcome(inst, args, kind):
    mod = inst.module(args.module)
    cs = co.z1(mod, args.cap) if kind == "z1" else co.c1(mod, args.cap)
    return Outcome(
        [],
        {kind: len(cs), "affine_dimension": cs.affine_dimension},
        {"distinguished": cs.distinguished, "cocycles": _mats(cs.cocycles)},
    )


def cmd_z1(inst, args):
    return _cocycle_outcome(inst, args, "z1")


def cmd_c1(inst, args):
    return _cocycle_outcome(inst, args, "c1")


def _quotient_outcome(inst, args, kind):
    mod = inst.module(args.module)
    q = co.h1(mod, args.cap) if kind == "h1" else co.d1(mod, args.cap)
    d = q.as_dict()
    card = {"aut": q.aut_order, "z1" if kind == "h1" else "c1": d["cocycles"], kind: d["classes"]}
    return Outcome([], card, {"distinguished_class": d["distinguished_class"], "orbit_sizes": d["orbit_sizes"], "representatives": d["representatives"]})


def cmd_h1(inst, args):
    return _quotient_outcome(inst, args, "h1")


def cmd_d1(inst, args):
    return _quotient_outcome(inst, args, "d1")


def cmd_verify(inst, args):
    mod = inst.module(args.module)
    if args.what == "kappa":
        rep = co.verify_comparison(mod, args.cap)
    elif args.what == "serre":
        rep = galois.verify_group_correspondence(mod, args.cap)
    else:
        rep = co.precosimplicial_check(mod, samples=args.samples)
    return Outcome([rep], dict(rep.data))


def cmd_twist(inst, args):
    rank = args.rank
    if rank is None:
        rank = inst.module(args.module).extended_rank if args.module else 1
    if rank is None:
        raise ContractError(f"module {args.module!r} is not an extended module; pass --rank")
    _, rep = twisted.twist_classes(_need_s(inst), rank, args.cap)
    return Outcome([rep], dict(rep.data))


def cmd_torsors(inst, args):
    rep = torsors.torsor_classes(inst.module(args.module), args.cap)
    return Outcome([rep], dict(rep.data))


def cmd_hilbert90(inst, args):
    rep = twisted.hilbert90(_need_s(inst), args.n, args.cap)
    return Outcome([rep], dict(rep.data))


def cmd_cipolla(inst, args):
    mod = inst.module(args.module)
    cs = co.c1(mod, args.cap)
    rep = ValidationReport(f"descent data on {mod.name}")
    for i, f in enumerate(cs.cocycles):
        form = twisted.phi_f(f, mod)
        _, _, nd = twisted.cipolla_descent(f, mod)
        rep.add_flag(f"cocycle {i}: multiplication map bijective", form.phi.shape[0] == form.phi.shape[1])
        rep.add_flag(f"cocycle {i}: descent datum coinvariants equal cocycle coinvariants", la.same_span(nd, form.n.embedding, mod.p))
    return Outcome([rep], {"c1": len(cs)})


def _need_s(inst):
    if inst.s is None:
        raise ContractError("instance has no comodule_algebra")
    return inst.s


COMMANDS = {
    "check": cmd_check,
    "h0": cmd_h0,
    "h1": cmd_h1,
    "d0": cmd_d0,
    "d1": cmd_d1,
    "z1": cmd_z1,
    "c1": cmd_c1,
    "verify": cmd_verify,
    "twist": cmd_twist,
    "torsors": cmd_torsors,
    "hilbert90": cmd_hilbert90,
    "cipolla": cmd_cipolla,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hopfcoh", description="Hopf and descent cohomology of Hopf modules over prime fields.")
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--input", required=True, help="instance JSON file")
    shared.add_argument("--module", default=None, help="module name (default: first module)")
    shared.add_argument("--cap", type=int, default=None, help="enumeration budget (overrides the instance)")
    shared.add_argument("--output", default=None, help="also write the JSON report here")
    shared.add_argument("--format", choices=["json", "text"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[shared])
        if name == "verify":
            sp.add_argument("what", choices=["kappa", "serre", "cosimplicial"])
            sp.add_argument("--samples", type=int, default=64)
        elif name == "twist":
            sp.add_argument("--rank", type=int, default=None)
        elif name == "hilbert90":
            sp.add_argument("-n", type=int, default=1)
    return parser


def _echo(args) -> dict:
    out = {"command": args.command}
    for key in ("what", "module", "rank", "n", "samples"):
        val = getattr(args, key, None)
        if val is not None:
            out[key] = val
    return out


def run(argv) -> tuple[int, dict]:
    """Execute one command; returns ``(exit code, report body)``."""
    args = build_parser().parse_args(argv)
    body: dict = {"invocation": _echo(args)}
    try:
        inst = hio.load_instance(args.input)
        # every computation runs over the prime field itself, never a more general ring
        body["instance"] = {"name": inst.name, "sha256": hio.digest(inst), "ground_field": f"F_{inst.p}"}
        if args.cap is None:
            args.cap = inst.cap
        body["invocation"]["cap"] = args.cap
        outcome = COMMANDS[args.command](inst, args)
    except HopfcohError as exc:
        code = exc.exit_code
        err = {"kind": exc.kind, "message": str(exc)}
        if exc.witness is not None:
            err["witness"] = _jsonable(exc.witness)
        for attr in ("required", "cap"):
            if hasattr(exc, attr):
                err[attr] = getattr(exc, attr)
        body.update({"status": "error", "exit_code": code, "error": err})
        return code, body
    code = EXIT_OK if outcome.ok else EXIT_THEOREM
    body.update(
        {
            "status": "pass" if outcome.ok else "fail",
            "exit_code": code,
            "checks": _checks(*outcome.reports),
            "cardinalities": outcome.cardinalities,
        }
    )
    if outcome.extra:
        body["details"] = outcome.extra
    return code, body


def flatten(obj, prefix="") -> list[str]:
    """``path = value`` lines; lists of scalars and matrices stay inline."""
    if isinstance(obj, dict):
        lines = []
        for k in sorted(obj):
            lines += flatten(obj[k], f"{prefix}.{k}" if prefix else str(k))
        return lines
    if isinstance(obj, list) and any(isinstance(x, dict) for x in obj):
        lines = []
        for i, x in enumerate(obj):
            lines += flatten(x, f"{prefix}.{i}")
        return lines
    return [f"{prefix} = {json.dumps(obj, separators=(',', ':'))}"]


def render(body: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(body, sort_keys=True, indent=1) + "\n"
    return "\n".join(flatten(body)) + "\n"


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    start = time.perf_counter()
    code, body = run(argv)
    elapsed = time.perf_counter() - start
    args = build_parser().parse_args(argv)
    sys.stdout.write(render(body, args.format))
    if args.output:
        canon = json.dumps(body, sort_keys=True, separators=(",", ":"))
        envelope = {
            "body": body,
            "body_sha256": hashlib.sha256(canon.encode()).hexdigest(),
            "timing": {"seconds": round(elapsed, 6), "backend": BACKEND},
        }
        with open(args.output, "w") as fh:
            fh.write(json.dumps(envelope, sort_keys=True, indent=1) + "\n")
    return code


__all__ = ["COMMANDS", "build_parser", "main", "run"]

if __name__ == "__main__":
    raise SystemExit(main())
