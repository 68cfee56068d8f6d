"""JSON file formats for semigroups, systems, actions and arrows.

All documents are UTF-8 JSON. Tables are row-major with zero-based
element indices; system map keys are "a,b" pair strings. A system's base
may be inlined, given as a built-in name, or given as a path resolved
relative to the containing file.
"""

from __future__ import annotations

import json
import os

from .actions import RightAction, TwoSidedAction
from .errors import InputFormatError, LamrhoError
from .category import Transformation
from .semigroup import CATALOG, FiniteSemigroup, Partition
from .system import LrSystem

BUILTIN_SYSTEM_NAMES = {
    "flipflop_system": "flip_flop",
    "lzero_system": "left_zero",
    "nonsemidirect_system": "non_semidirect",
}


def _require(obj, field, where, types=None):
    if field not in obj:
        raise InputFormatError(where, field, "missing")
    value = obj[field]
    if types is not None and not isinstance(value, types):
        raise InputFormatError(
            where, field, f"expected {types}, got {type(value).__name__}"
        )
    return value


def _int_matrix(value, field, where):
    if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
        raise InputFormatError(where, field, "expected a list of lists")
    for r in value:
        for v in r:
            if not isinstance(v, int):
                raise InputFormatError(where, field, f"non-integer entry {v!r}")
    return value


def semigroup_to_dict(sg: FiniteSemigroup) -> dict:
    out = {"size": sg.size, "table": [list(r) for r in sg.table]}
    if sg.names is not None:
        out["names"] = list(sg.names)
    return out


def semigroup_from_dict(obj, where="<memory>") -> FiniteSemigroup:
    size = _require(obj, "size", where, int)
    table = _int_matrix(_require(obj, "table", where, list), "table", where)
    names = obj.get("names")
    if names is not None and (
        not isinstance(names, list) or not all(isinstance(s, str) for s in names)
    ):
        raise InputFormatError(where, "names", "expected a list of strings")
    try:
        sg = FiniteSemigroup.from_rows(table, names)
    except LamrhoError as exc:
        raise InputFormatError(where, "table", str(exc)) from exc
    if sg.size != size:
        raise InputFormatError(where, "size", f"{size} does not match the table")
    return sg


def _pair_maps_to_dict(system: LrSystem, which: str) -> dict:
    n = system.base.size
    out = {}
    for a in range(n):
        for b in range(n):
            seq = system.lam_map(a, b) if which == "lambda" else system.rho_map(a, b)
            out[f"{a},{b}"] = list(seq)
    return out


def system_to_dict(system: LrSystem) -> dict:
    return {
        "base": semigroup_to_dict(system.base),
        "index_sizes": list(system.index_sizes),
        "lambda": _pair_maps_to_dict(system, "lambda"),
        "rho": _pair_maps_to_dict(system, "rho"),
    }


def _resolve_base(value, where, base_dir):
    if isinstance(value, dict):
        return semigroup_from_dict(value, where=f"{where}#base")
    if isinstance(value, str):
        if value in CATALOG:
            return CATALOG[value]
        path = value
        if base_dir and not os.path.isabs(path):
            path = os.path.join(base_dir, path)
        return load_semigroup(path)
    raise InputFormatError(where, "base", "expected an object, name or path")


def _pair_maps_from_dict(obj, field, n, where) -> dict:
    raw = _require(obj, field, where, dict)
    out = {}
    for key, seq in raw.items():
        try:
            a_str, b_str = key.split(",")
            a, b = int(a_str), int(b_str)
        except ValueError:
            raise InputFormatError(
                where, f"{field}[{key}]", "key must look like 'a,b'"
            ) from None
        if not (0 <= a < n and 0 <= b < n):
            raise InputFormatError(where, f"{field}[{key}]", "pair out of range")
        if not isinstance(seq, list) or not all(isinstance(v, int) for v in seq):
            raise InputFormatError(
                where, f"{field}[{key}]", "expected a list of integers"
            )
        out[(a, b)] = tuple(seq)
    for a in range(n):
        for b in range(n):
            if (a, b) not in out:
                raise InputFormatError(where, f"{field}[{a},{b}]", "missing")
    return out


def system_from_dict(obj, where="<memory>", base_dir=None) -> LrSystem:
    base = _resolve_base(_require(obj, "base", where), where, base_dir)
    sizes = _require(obj, "index_sizes", where, list)
    if len(sizes) != base.size or not all(
        isinstance(k, int) and k >= 0 for k in sizes
    ):
        raise InputFormatError(
            where, "index_sizes", "need one non-negative size per base element"
        )
    lam = _pair_maps_from_dict(obj, "lambda", base.size, where)
    rho = _pair_maps_from_dict(obj, "rho", base.size, where)
    try:
        return LrSystem.from_maps(base, sizes, lam, rho)
    except LamrhoError as exc:
        raise InputFormatError(where, "lambda/rho", str(exc)) from exc


def right_action_to_dict(action: RightAction) -> dict:
    return {
        "carrier": action.carrier,
        "base": semigroup_to_dict(action.base),
        "act": [list(r) for r in action.act],
    }


def right_action_from_dict(obj, where="<memory>", base_dir=None) -> RightAction:
    base = _resolve_base(_require(obj, "base", where), where, base_dir)
    carrier = _require(obj, "carrier", where, int)
    act = _int_matrix(_require(obj, "act", where, list), "act", where)
    # law violations propagate as ActionLawError: a well-formed but
    # invalid action is a verification failure, not a malformed file
    return RightAction(base, carrier, tuple(tuple(r) for r in act))


def two_sided_action_to_dict(action: TwoSidedAction) -> dict:
    return {
        "carrier": action.carrier,
        "base": semigroup_to_dict(action.base),
        "left": [list(r) for r in action.left],
        "right": [list(r) for r in action.right],
    }


def two_sided_action_from_dict(obj, where="<memory>", base_dir=None) -> TwoSidedAction:
    base = _resolve_base(_require(obj, "base", where), where, base_dir)
    carrier = _require(obj, "carrier", where, int)
    left = _int_matrix(_require(obj, "left", where, list), "left", where)
    right = _int_matrix(_require(obj, "right", where, list), "right", where)
    return TwoSidedAction(
        base,
        carrier,
        tuple(tuple(r) for r in left),
        tuple(tuple(r) for r in right),
    )


def action_from_dict(obj, where="<memory>", base_dir=None):
    """Dispatch on the fields present: 'act' for one-sided actions,
    'left'/'right' for two-sided ones."""
    if "act" in obj:
        return right_action_from_dict(obj, where, base_dir)
    if "left" in obj and "right" in obj:
        return two_sided_action_from_dict(obj, where, base_dir)
    raise InputFormatError(where, "act", "missing (or give 'left' and 'right')")


def transformation_to_dict(tr: Transformation) -> dict:
    return {
        "h": list(tr.h.map),
        "t": {str(a): list(tr.maps[a]) for a in tr.target.base.elements()},
    }


def transformation_from_dict(
    obj, source: LrSystem, target: LrSystem, where="<memory>"
) -> Transformation:
    from .semigroup import Homomorphism

    h_map = _require(obj, "h", where, list)
    raw_t = _require(obj, "t", where, dict)
    maps = []
    for a in target.base.elements():
        key = str(a)
        if key not in raw_t:
            raise InputFormatError(where, f"t[{key}]", "missing")
        maps.append(tuple(raw_t[key]))
    try:
        h = Homomorphism(target.base, source.base, tuple(h_map))
        return Transformation(source, target, h, tuple(maps))
    except LamrhoError as exc:
        raise InputFormatError(where, "h/t", str(exc)) from exc


def partition_from_obj(obj, size, where="<memory>") -> Partition:
    if isinstance(obj, dict):
        obj = _require(obj, "classes", where, list)
    if not isinstance(obj, list):
        raise InputFormatError(where, "classes", "expected a list of lists")
    try:
        return Partition.from_classes(size, [list(c) for c in obj])
    except LamrhoError as exc:
        raise InputFormatError(where, "classes", str(exc)) from exc


# ---------------------------------------------------------------------------
# File plumbing


def _load_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputFormatError(path, "<file>", "no such file") from None
    except json.JSONDecodeError as exc:
        raise InputFormatError(path, "<json>", str(exc)) from None


def load_semigroup(path: str) -> FiniteSemigroup:
    return semigroup_from_dict(_load_json(path), where=path)


def load_system(path: str) -> LrSystem:
    return system_from_dict(
        _load_json(path), where=path, base_dir=os.path.dirname(path)
    )


def load_action(path: str):
    return action_from_dict(
        _load_json(path), where=path, base_dir=os.path.dirname(path)
    )


def dump_json(obj, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")
