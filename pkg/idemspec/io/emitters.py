"""
JSON, YAML and DOT renderings of finite objects and reports.

``to_data`` turns any supported object into plain lists and dicts with a fixed key order, so the
JSON written for the same object is always byte-identical.
"""

from __future__ import annotations

import json
from functools import singledispatch
from typing import Any

import yaml

from idemspec.algebra.modules import FinModule
from idemspec.algebra.order import FinCIM
from idemspec.algebra.semiring import FinSemiring
from idemspec.algebra.structure import Verdict
from idemspec.errors import FormatError
from idemspec.io.types import CheckResult, VerificationReport
from idemspec.schemes.algebras import FinMonoid, FinRing
from idemspec.schemes.scheme import AScheme
from idemspec.topology.space import FinTop


def _table(table, names):
    return [[names[v] for v in row] for row in table]


@singledispatch
def to_data(obj: Any):
    if isinstance(obj, (str, int, float, bool)) or obj is None:
        return obj
    if isinstance(obj, dict):
        return {str(k): to_data(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_data(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(to_data(v) for v in obj)
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    raise FormatError(f"cannot serialize a {type(obj).__name__}")


@to_data.register
def _(obj: FinCIM):
    return {
        "kind": "cim",
        "elements": list(obj.names),
        "bottom": obj.names[obj.bottom],
        "top": obj.names[obj.top],
        "join": _table(obj.join, obj.names),
    }


@to_data.register
def _(obj: FinSemiring):
    return {
        "kind": "semiring",
        "elements": list(obj.names),
        "zero": obj.names[obj.zero],
        "one": obj.names[obj.one],
        "idealic": obj.is_idealic,
        "add": _table(obj.add.join, obj.names),
        "mul": _table(obj.mul, obj.names),
    }


@to_data.register
def _(obj: FinModule):
    return {
        "kind": "module",
        "ring": list(obj.ring.names),
        "elements": list(obj.names),
        "zero": obj.names[obj.zero],
        "add": _table(obj.carrier.join, obj.names),
        "action": _table(obj.action, obj.names),
    }


@to_data.register
def _(obj: FinTop):
    return {
        "kind": "top",
        "points": list(obj.points),
        "closed": [[obj.points[x] for x in sorted(c)] for c in obj.closed_sets],
    }


@to_data.register
def _(obj: FinMonoid):
    return {
        "kind": "monoid",
        "elements": list(obj.names),
        "one": obj.names[obj.one],
        "mul": _table(obj.mul, obj.names),
    }


@to_data.register
def _(obj: FinRing):
    return {
        "kind": "ring",
        "elements": list(obj.names),
        "add": _table(obj.add, obj.names),
        "mul": _table(obj.mul, obj.names),
    }


@to_data.register
def _(obj: Verdict):
    return {"ok": obj.ok, "law": obj.law, "witness": [str(w) for w in obj.witness]}


@to_data.register
def _(obj: CheckResult):
    return obj.to_dict()


@to_data.register
def _(obj: VerificationReport):
    return obj.to_dict()


@to_data.register
def _(obj: AScheme):
    space = obj.space
    return {
        "kind": "scheme",
        "type": obj.algebra_type.kind.value,
        "points": list(space.points),
        "sheafified": obj.sheafified,
        "sections": [
            {
                "closed": [space.points[x] for x in sorted(obj.closed_sets[z])],
                "size": obj.sections(z).n,
                "algebra": to_data(obj.sections(z)),
            }
            for z in range(obj.lattice.n)
        ],
    }


def to_json(obj: Any) -> str:
    return json.dumps(to_data(obj), indent=2, ensure_ascii=False)


def to_yaml(obj: Any) -> str:
    return yaml.safe_dump(to_data(obj), sort_keys=False, allow_unicode=True)


def _quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(obj: Any, name: str = "G") -> str:
    """Cover edges from lower to upper element; for spaces ``x -> y`` when ``x`` lies in the closure of ``y``."""
    if isinstance(obj, FinSemiring):
        obj = obj.add
    if isinstance(obj, FinCIM):
        labels = obj.names
        edges = obj.covers
    elif isinstance(obj, FinTop):
        labels = obj.points
        order = obj.specialization
        edges = tuple(
            (x, y)
            for x in range(obj.n)
            for y in range(obj.n)
            if x != y
            and order[x, y]
            and not any(order[x, z] and order[z, y] for z in range(obj.n) if z not in (x, y))
        )
    else:
        raise FormatError(f"no DOT rendering for a {type(obj).__name__}")
    lines = [f"digraph {_quote(name)} {{"]
    lines += [f"  {_quote(label)};" for label in labels]
    lines += [f"  {_quote(labels[a])} -> {_quote(labels[b])};" for a, b in edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
