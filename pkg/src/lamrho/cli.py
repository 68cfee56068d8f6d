"""Command-line front end.

Inputs are built-in names, file paths, or inline JSON (anything starting
with '{' or '['). Exit status: 0 on success or verified, 1 on a
verification failure (the witness is printed), 2 on usage or input
errors. Commands that randomise accept --seed and are reproducible given
it; repeated runs with identical arguments produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import serialize
from .actions import builtin_system
from .category import free_monoid_system, free_semigroup_system
from .errors import (
    InputFormatError,
    LamrhoError,
    NotACongruenceError,
    SearchCapError,
)
from .groupwreath import corollary_demo, verify_wreath_iso, wreathize
from .product import product_table
from .semigroup import (
    CATALOG,
    FiniteSemigroup,
    divides,
    find_isomorphism,
    quotient,
    validate_table,
)
from .serialize import BUILTIN_SYSTEM_NAMES
from .system import LrSystem, enumerate_systems, validate_axioms

DEFAULT_ENUM_LIMIT = 100


def _looks_inline(text: str) -> bool:
    t = text.lstrip()
    return t.startswith("{") or t.startswith("[")


def _inline_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError("<inline>", "<json>", str(exc)) from None


def resolve_semigroup(spec: str) -> FiniteSemigroup:
    if spec in CATALOG:
        return CATALOG[spec]
    if _looks_inline(spec):
        return serialize.semigroup_from_dict(_inline_json(spec), where="<inline>")
    return serialize.load_semigroup(spec)


def resolve_system(spec: str) -> LrSystem:
    if spec in BUILTIN_SYSTEM_NAMES:
        return builtin_system(BUILTIN_SYSTEM_NAMES[spec])
    if _looks_inline(spec):
        return serialize.system_from_dict(_inline_json(spec), where="<inline>")
    return serialize.load_system(spec)


def resolve_action(spec: str):
    if _looks_inline(spec):
        return serialize.action_from_dict(_inline_json(spec), where="<inline>")
    return serialize.load_action(spec)


def _parse_sizes(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InputFormatError("<args>", "--sizes", "expected integers like 2,1") from None


def render_table(sg: FiniteSemigroup) -> str:
    names = [sg.name_of(i) for i in sg.elements()]
    width = max(len(n) for n in names + ["*"]) + 2
    lines = ["".join(s.rjust(width) for s in ["*"] + names)]
    for i in sg.elements():
        row = [names[i]] + [names[sg.mul(i, j)] for j in sg.elements()]
        lines.append("".join(s.rjust(width) for s in row))
    return "\n".join(lines)


def _emit(args, text_render, json_obj) -> None:
    if args.format == "json":
        print(json.dumps(json_obj, indent=2))
    else:
        print(text_render() if callable(text_render) else text_render)
    if args.out:
        serialize.dump_json(json_obj, args.out)


# ---------------------------------------------------------------------------
# Command handlers (each returns the exit status)


def _cmd_validate(args) -> int:
    if not (args.base or args.system or args.action):
        raise InputFormatError("<args>", "--base/--system/--action", "nothing to validate")
    status = 0
    if args.base:
        sg = resolve_semigroup(args.base)
        validate_table([list(r) for r in sg.table], sg.names)
        print(f"semigroup ok: {sg.size} elements")
    if args.system:
        system = resolve_system(args.system)
        validate_axioms(system)
        print(
            "system ok: base size "
            f"{system.base.size}, index sizes {list(system.index_sizes)}"
        )
    if args.action:
        action = resolve_action(args.action)
        print(f"action ok: carrier {action.carrier} over base {action.base.size}")
    return status


def _cmd_product(args) -> int:
    spec = args.base or args.system
    if not spec:
        raise InputFormatError("<args>", "--base", "a system is required")
    if not args.h:
        raise InputFormatError("<args>", "--h", "a coefficient semigroup is required")
    system = validate_axioms(resolve_system(spec))
    h = resolve_semigroup(args.h)
    validate_table([list(r) for r in h.table], h.names)
    table = product_table(h, system, cap=args.cap)
    _emit(args, lambda: render_table(table), serialize.semigroup_to_dict(table))
    return 0


def _cmd_quotient(args) -> int:
    if not args.base:
        raise InputFormatError("<args>", "--base", "a semigroup is required")
    if not args.partition:
        raise InputFormatError("<args>", "--partition", "a partition is required")
    sg = resolve_semigroup(args.base)
    validate_table([list(r) for r in sg.table], sg.names)
    if _looks_inline(args.partition):
        raw = _inline_json(args.partition)
    else:
        raw = serialize._load_json(args.partition)
    part = serialize.partition_from_obj(raw, sg.size)
    q = quotient(sg, part)
    _emit(args, lambda: render_table(q), serialize.semigroup_to_dict(q))
    return 0


def _cmd_iso(args) -> int:
    if not (args.base and args.h):
        raise InputFormatError("<args>", "--base/--h", "two semigroups are required")
    a = resolve_semigroup(args.base)
    b = resolve_semigroup(args.h)
    iso = find_isomorphism(a, b, cap=args.cap if args.cap else 32)
    if iso is None:
        print("absent: no isomorphism")
        return 1
    _emit(args, f"isomorphic via {list(iso.map)}", {"iso": list(iso.map)})
    return 0


def _cmd_divides(args) -> int:
    if not (args.base and args.h):
        raise InputFormatError(
            "<args>", "--base/--h", "need the ambient (--base) and candidate (--h)"
        )
    s = resolve_semigroup(args.base)
    t = resolve_semigroup(args.h)
    kwargs = {}
    if args.cap:
        kwargs["congruence_cap"] = args.cap
    try:
        witness = divides(t, s, quotient_only=args.quotient_only, **kwargs)
    except SearchCapError as exc:
        print(f"inconclusive: {exc}")
        return 1
    if witness is None:
        print("absent: no division witness")
        return 1
    payload = {
        "sub_generators": list(witness.sub_generators)
        if witness.sub_generators is not None
        else None,
        "sub_elements": list(witness.sub_elements),
        "partition": [list(c) for c in witness.ambient_classes()],
        "iso": list(witness.iso.map),
    }
    _emit(
        args,
        lambda: "divides: quotient witness with classes "
        + ", ".join("{" + ",".join(map(str, c)) + "}" for c in witness.ambient_classes()),
        payload,
    )
    return 0


def _cmd_examples(args) -> int:
    if args.base:
        sg = resolve_semigroup(args.base)
        _emit(args, lambda: render_table(sg), serialize.semigroup_to_dict(sg))
        return 0
    if args.system:
        system = resolve_system(args.system)
        _emit(
            args,
            lambda: f"system over base of size {system.base.size}, "
            f"index sizes {list(system.index_sizes)}",
            serialize.system_to_dict(system),
        )
        return 0
    names = {
        "semigroups": sorted(CATALOG),
        "systems": sorted(BUILTIN_SYSTEM_NAMES),
    }
    _emit(
        args,
        lambda: "built-in semigroups: "
        + ", ".join(names["semigroups"])
        + "\nbuilt-in systems: "
        + ", ".join(names["systems"]),
        names,
    )
    return 0


def _cmd_free(args) -> int:
    if args.system:
        if _looks_inline(args.system):
            raw = _inline_json(args.system)
        else:
            raw = serialize._load_json(args.system)
        shared = raw.get("shared_size")
        if shared is None:
            raise InputFormatError("<free spec>", "shared_size", "missing")
        free = free_monoid_system(
            shared, raw.get("lambda", []), raw.get("rho", []), args.bound
        )
    elif args.sizes:
        free = free_semigroup_system(_parse_sizes(args.sizes), args.bound)
    else:
        raise InputFormatError("<args>", "--sizes/--system", "nothing to build")
    report = free.check_axioms()
    payload = {
        "mode": "monoid" if free.unit else "semigroup",
        "bound": free.bound,
        "words": len(free.words),
        "fiber_sizes": {
            "".join(map(str, w)) or "eps": free.fiber_size(w) for w in free.words
        },
        "axiom_instances_checked": report.instances,
        "axioms_ok": report.ok,
    }
    if free.unit:
        payload["unital_on_truncated"] = free.unital_on_truncated()
    _emit(
        args,
        lambda: "\n".join(
            [
                f"{payload['mode']} mode, bound {free.bound}: {payload['words']} words",
                f"axiom instances checked (within bound): {report.instances}",
                f"axioms ok: {report.ok}"
                + (
                    f"\nunital on truncated domain: {payload['unital_on_truncated']}"
                    if free.unit
                    else ""
                ),
            ]
        ),
        payload,
    )
    return 0 if report.ok else 1


def _cmd_wreathize(args) -> int:
    if not args.system:
        raise InputFormatError("<args>", "--system", "a system is required")
    system = validate_axioms(resolve_system(args.system))
    action, arrow = wreathize(system)
    report = verify_wreath_iso(resolve_semigroup("z2"), system, cap=args.cap)
    payload = {
        "action": serialize.right_action_to_dict(action),
        "transformation": serialize.transformation_to_dict(arrow),
        "product_is_group": report.product_is_group,
        "search_iso_found": report.search_iso_found,
        "construction_iso_ok": report.construction_iso_ok,
    }
    _emit(
        args,
        lambda: "\n".join(
            [
                f"derived action on {action.carrier} points",
                "index maps through the unit fiber: isomorphism ok",
                f"wreath check over z2: group={report.product_is_group} "
                f"search={report.search_iso_found} explicit={report.construction_iso_ok}",
            ]
        ),
        payload,
    )
    return 0 if bool(report) else 1


def _cmd_corollary(args) -> int:
    report = corollary_demo()
    _emit(args, report.render_text, report.to_json_dict())
    return 0


def _cmd_enumerate(args) -> int:
    if not args.base:
        raise InputFormatError("<args>", "--base", "a base semigroup is required")
    if not args.sizes:
        raise InputFormatError("<args>", "--sizes", "index sizes are required")
    base = resolve_semigroup(args.base)
    validate_table([list(r) for r in base.table], base.names)
    sizes = _parse_sizes(args.sizes)
    limit = args.cap if args.cap else DEFAULT_ENUM_LIMIT
    found = []
    for system in enumerate_systems(base, sizes, limit=limit, seed=args.seed):
        found.append(system)
        if args.format == "json":
            print(json.dumps(serialize.system_to_dict(system)))
        else:
            lam = {f"{a},{b}": list(system.lam_map(a, b))
                   for a in base.elements() for b in base.elements()}
            rho = {f"{a},{b}": list(system.rho_map(a, b))
                   for a in base.elements() for b in base.elements()}
            print(f"system {len(found)}: lambda={lam} rho={rho}")
    if args.format != "json":
        print(f"total: {len(found)} system(s), limit {limit}")
    if args.out:
        serialize.dump_json(
            [serialize.system_to_dict(s) for s in found], args.out
        )
    return 0


_HANDLERS = {
    "validate": _cmd_validate,
    "product": _cmd_product,
    "quotient": _cmd_quotient,
    "iso": _cmd_iso,
    "divides": _cmd_divides,
    "examples": _cmd_examples,
    "free": _cmd_free,
    "wreathize": _cmd_wreathize,
    "corollary": _cmd_corollary,
    "enumerate": _cmd_enumerate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lamrho",
        description="finite semigroup and index-map system workbench",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    specs = {
        "validate": "validate a semigroup table, system or action",
        "product": "multiply a coefficient semigroup over a system",
        "quotient": "quotient a semigroup by a congruence",
        "iso": "search for an isomorphism between two semigroups",
        "divides": "search for a division witness (--h divides --base)",
        "examples": "list or dump built-in semigroups and systems",
        "free": "build a bounded free system and check it",
        "wreathize": "derive the action form of a unital group system",
        "corollary": "verify the two worked decomposition witnesses",
        "enumerate": "stream systems over a base with given fiber sizes",
    }
    for name, help_text in specs.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--base", help="semigroup (or system, for product)")
        p.add_argument("--h", help="coefficient or candidate semigroup")
        p.add_argument("--system", help="index-map system")
        p.add_argument("--action", help="action document")
        p.add_argument("--partition", help="partition (path or inline JSON)")
        p.add_argument("--bound", type=int, default=3, help="word length bound")
        p.add_argument("--seed", type=int, default=None, help="random seed")
        p.add_argument("--cap", type=int, default=None, help="size or search cap")
        p.add_argument("--sizes", help="comma-separated fiber sizes")
        p.add_argument(
            "--quotient-only",
            action="store_true",
            dest="quotient_only",
            help="restrict division search to quotients of the ambient semigroup",
        )
        p.add_argument(
            "--format", choices=("pretty", "json"), default="pretty"
        )
        p.add_argument("--out", help="write the JSON artifact to this path")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.cap is None and args.command in ("product", "wreathize"):
        args.cap = 10**6
    try:
        return _HANDLERS[args.command](args)
    except InputFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except NotACongruenceError as exc:
        print(f"not verified: {exc}", file=sys.stderr)
        return 1
    except LamrhoError as exc:
        print(f"not verified: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
