"""Deterministic JSON for presentations, complexes and reports."""

from __future__ import annotations

import json
from typing import Any, Mapping

from .abelian import FiniteAbelianGroup
from .exactring import from_json as ring_from_json
from .exactring import to_json as ring_to_json
from .groupcat.presentation import CategoryPresentation

FORMAT = "gctqft/1"


class InputError(ValueError):
    """Malformed input file; the message says where."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def presentation_to_json(p: CategoryPresentation) -> dict:
    return {
        "format": FORMAT,
        "kind": "presentation",
        "orders": list(p.group.orders),
        "level": p.level,
        "sigma_diag": [ring_to_json(s) for s in p.sigma_diag],
        "sigma_off": {f"{i},{j}": ring_to_json(v) for (i, j), v in p.sigma_off.items()},
    }


def presentation_from_json(obj: Mapping) -> CategoryPresentation:
    try:
        orders = tuple(int(n) for n in obj["orders"])
        level = int(obj["level"])
        diag = tuple(ring_from_json(s) for s in obj["sigma_diag"])
        off = {}
        for key, v in obj.get("sigma_off", {}).items():
            i, j = (int(t) for t in key.split(","))
            off[(i, j)] = ring_from_json(v)
    except KeyError as exc:
        raise InputError(f"presentation is missing field {exc}") from None
    except (TypeError, ValueError, AttributeError) as exc:
        raise InputError(f"malformed presentation: {exc}") from None
    try:
        return CategoryPresentation(FiniteAbelianGroup(orders), level, diag, off)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def parse_json(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
