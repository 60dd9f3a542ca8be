"""JSON file formats for groups, actions, cocycles and cleft objects.

All paths inside a file are resolved relative to the file that mentions
them, so input bundles are relocatable.  Dumps are deterministic (sorted
keys, canonical entry order).
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .cleft import CleftObject, validate_cleft
from .cochains import Cochain
from .groups import FiniteGroup, GroupAction, Subgroup, load_group, validate_action


class InputError(ValueError):
    """Malformed or inconsistent input files."""


def _read_json(path) -> dict:
    path = Path(path)
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError as e:
        raise InputError(f"no such file: {path}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"invalid JSON in {path}: {e}") from e


def _resolve(base: Path, ref: str) -> Path:
    return (Path(base).parent / ref).resolve()


def load_group_file(path) -> FiniteGroup:
    doc = _read_json(path)
    try:
        table = doc["table"]
    except KeyError as e:
        raise InputError(f"group file {path} missing 'table'") from e
    if "order" in doc and len(table) != doc["order"]:
        raise InputError(f"group file {path}: order does not match table size")
    try:
        return load_group(table)
    except ValueError as e:
        raise InputError(f"group file {path}: {e}") from e


def load_action_file(path) -> GroupAction:
    doc = _read_json(path)
    try:
        acting = load_group_file(_resolve(path, doc["acting"]))
        target = load_group_file(_resolve(path, doc["target"]))
        perm = doc["perm"]
    except KeyError as e:
        raise InputError(f"action file {path} missing {e}") from e
    try:
        return validate_action(acting, target, perm)
    except ValueError as e:
        raise InputError(f"action file {path}: {e}") from e


def load_cocycle_file(path, group: FiniteGroup | None = None) -> Cochain:
    doc = _read_json(path)
    try:
        degree = int(doc["degree"])
        modulus = int(doc["modulus"])
        entries = doc["entries"]
    except KeyError as e:
        raise InputError(f"cocycle file {path} missing {e}") from e
    if group is None:
        if "group" not in doc:
            raise InputError(f"cocycle file {path} has no group reference")
        group = load_group_file(_resolve(path, doc["group"]))
    values = np.zeros((group.order,) * degree, dtype=int)
    for entry in entries:
        if len(entry) != degree + 1:
            raise InputError(f"cocycle file {path}: bad entry {entry}")
        *idx, e = entry
        if any(i < 0 or i >= group.order for i in idx):
            raise InputError(f"cocycle file {path}: index out of range in {entry}")
        values[tuple(idx)] = int(e) % modulus
    try:
        return Cochain(group, degree, modulus, values)
    except ValueError as e:
        raise InputError(f"cocycle file {path}: {e}") from e


def load_cleft_file(path) -> CleftObject:
    """Cleft-object bundle: {"action": path, "omega": path,
    "gamma_modulus": M, "theta_modulus": M, "gamma": nested list,
    "theta": nested list}."""
    doc = _read_json(path)
    try:
        action = load_action_file(_resolve(path, doc["action"]))
        omega = load_cocycle_file(_resolve(path, doc["omega"]), group=action.target)
        gamma = np.asarray(doc["gamma"], dtype=int)
        theta = np.asarray(doc["theta"], dtype=int)
        gm = int(doc["gamma_modulus"])
        tm = int(doc["theta_modulus"])
    except KeyError as e:
        raise InputError(f"cleft file {path} missing {e}") from e
    return validate_cleft(action, gamma, theta, omega, gamma_modulus=gm, theta_modulus=tm)


def dump_group(G: FiniteGroup, path) -> None:
    doc = {"order": G.order, "table": G.table.tolist()}
    _write_json(doc, path)


def dump_cocycle(c: Cochain, path, group_ref: str) -> None:
    entries = [
        [*(int(i) for i in idx), int(c.values[tuple(idx)])]
        for idx in np.ndindex(c.values.shape)
        if c.values[tuple(idx)]
    ]
    doc = {
        "group": group_ref,
        "degree": c.degree,
        "modulus": c.modulus,
        "entries": entries,
    }
    _write_json(doc, path)


def _write_json(doc, path) -> None:
    with open(path, "w") as fh:
        json.dump(doc, fh, sort_keys=True, indent=1)
        fh.write("\n")


def parse_subgroup(G: FiniteGroup, text: str) -> Subgroup:
    """Comma-separated element indices; the identity is added implicitly."""
    try:
        members = {int(tok) for tok in text.split(",") if tok.strip() != ""}
    except ValueError as e:
        raise InputError(f"bad subgroup spec {text!r}") from e
    members.add(0)
    if any(m < 0 or m >= G.order for m in members):
        raise InputError(f"subgroup spec {text!r} has out-of-range elements")
    try:
        return Subgroup(G, tuple(sorted(members)))
    except ValueError as e:
        raise InputError(f"subgroup spec {text!r}: {e}") from e


def to_json_text(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"
