"""Command-line front end.

Every command prints a JSON report (or writes it with --output).  Exit
status is 0 on success, 1 when a checked property fails, 2 on bad input or
a refused enumeration.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Any, Callable

from . import corpus as corpus_mod
from .abelian import FiniteAbelianGroup
from .barcohomology import EnumerationTooLarge, classify_braided, classify_symmetric
from .cellular import ComplexError, CWComplex, HomologyPresentation
from .groupcat import check_all, check_order_conditions, is_symmetric, normalizability_report
from .serialization import FORMAT, InputError, dumps, parse_json, presentation_from_json, presentation_to_json
from .tqft import (
    BordismData,
    GluingDatum,
    check_modularity_criterion,
    compose_check,
    glue_compare,
    induced_hom,
    induced_hom_explicit,
    state_space,
)


def _group(text: str) -> FiniteAbelianGroup:
    try:
        orders = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise InputError(f"--group expects comma-separated orders like 2,3, got {text!r}") from None
    if any(n < 1 for n in orders):
        raise InputError(f"--group orders must be positive, got {text!r}")
    return FiniteAbelianGroup(orders)


def _read(path: str) -> tuple[Any, str]:
    p = Path(path)
    if p.is_file():
        return parse_json(p.read_text(encoding="utf-8"), path), path
    # fall back to the bundled corpus: "corpus/interval.json" or "interval"
    name = p.name if p.name.endswith(".json") else p.name + ".json"
    for rel in corpus_mod.bundled_files():
        if rel.endswith("/" + name):
            return parse_json(corpus_mod.read_text(rel), rel), rel
    raise InputError(f"{path}: no such file (and no bundled corpus entry named {name})")


def _complex(path: str) -> CWComplex:
    obj, src = _read(path)
    try:
        return CWComplex.from_json(obj)
    except ComplexError as exc:
        raise InputError(f"{src}: {exc}") from None


def _pair(X: CWComplex, text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(f"--pair expects SPACE,SUBSPACE, got {text!r}")
    try:
        return X.named(parts[0]), X.named(parts[1])
    except ComplexError as exc:
        raise InputError(str(exc)) from None


def _homology_json(H: HomologyPresentation) -> dict:
    return {
        "group": list(H.group.orders),
        "order": H.order,
        "description": H.describe(),
        "cells": H.cells,
        "generators": [[list(map(int, row)) for row in g] for g in H.generators],
    }


# --- commands ---------------------------------------------------------------


def cmd_check_category(args) -> dict:
    obj, _ = _read(args.file)
    p = presentation_from_json(obj)
    order = check_order_conditions(p)
    checks = check_all(p)
    out = {
        "presentation": presentation_to_json(p),
        "order_conditions": {"valid": order.valid, "violations": order.violations},
        "checks": {r.name: {"ok": r.ok, "witness": r.witness} for r in checks},
        "symmetric": is_symmetric(p),
    }
    out["ok"] = order.valid and all(checks)
    return out


def cmd_anomaly(args) -> dict:
    obj, _ = _read(args.file)
    p = presentation_from_json(obj)
    order = check_order_conditions(p)
    if not order:
        raise InputError("presentation violates the order conditions: " + "; ".join(order.violations))
    report = normalizability_report(p)
    return {"presentation": presentation_to_json(p), "anomaly": report.to_json(), "ok": True}


def cmd_classify(args) -> dict:
    G = _group(args.group)
    fn = classify_symmetric if args.symmetric else classify_braided
    result = fn(G, args.level, args.mode)
    return {
        "group": list(G.orders),
        "level": args.level,
        "mode": result.mode,
        "symmetric_only": args.symmetric,
        "quotient_invariants": list(result.invariants),
        "count": len(result),
        "classes": [presentation_to_json(c.presentation) for c in result.classes],
        "ok": True,
    }


def cmd_homology(args) -> dict:
    X = _complex(args.file)
    Y, A = _pair(X, args.pair)
    H = HomologyPresentation(Y, A, args.dim, _group(args.group))
    return {"homology": _homology_json(H), "ok": True}


def cmd_state_space(args) -> dict:
    X = _complex(args.file)
    Y, W = _pair(X, args.pair)
    S = state_space(Y, W, args.dim, _group(args.group), args.level)
    return {
        "homology": _homology_json(S.homology),
        "rank": S.rank,
        "basis": [list(y) for y in S.basis],
        "ok": True,
    }


def _bordism(args, X: CWComplex, obj: dict) -> BordismData:
    G = _group(args.group)
    if args.bordism:
        specs = {b["name"]: b for b in obj.get("bordisms", [])}
        if args.bordism not in specs:
            raise InputError(f"no bordism named {args.bordism!r}; known: {sorted(specs)}")
        spec = specs[args.bordism]
        names = (spec.get("X", "all"), spec["Y0"], spec["Y1"])
    else:
        names = (args.X, args.Y0, args.Y1)
    try:
        return BordismData(X.named(names[0]), X.named(names[1]), X.named(names[2]), args.dim, G, args.level)
    except ComplexError as exc:
        raise InputError(str(exc)) from None


def cmd_induced_map(args) -> dict:
    obj, _ = _read(args.file)
    X = CWComplex.from_json(obj)
    b = _bordism(args, X, obj)
    out: dict = {}
    maps = {}
    if args.oracle in ("count", "both"):
        maps["count"] = induced_hom(b)
    if args.oracle in ("explicit", "both"):
        maps["explicit"] = induced_hom_explicit(b)
    for k, m in maps.items():
        out[k] = m.to_json()
    out["ok"] = True
    if args.oracle == "both":
        agree = maps["count"] == maps["explicit"]
        out["oracles_agree"] = agree
        out["ok"] = agree
    return out


def cmd_compose_check(args) -> dict:
    obj, _ = _read(args.file)
    X = CWComplex.from_json(obj)
    comps = {c["name"]: c for c in obj.get("compositions", [])}
    if args.composition not in comps:
        raise InputError(f"no composition named {args.composition!r}; known: {sorted(comps)}")
    c = comps[args.composition]
    G = _group(args.group)
    N = X.named
    first = BordismData(N(c["X1"]), N(c["Y0"]), N(c["Y1"]), args.dim, G, args.level)
    second = BordismData(N(c["X2"]), N(c["Y1"]), N(c["Y2"]), args.dim, G, args.level)
    glued = BordismData(N(c["X1"]) | N(c["X2"]), N(c["Y0"]), N(c["Y2"]), args.dim, G, args.level)
    r = compose_check(first, second, glued)
    out = r.to_json()
    out["ok"] = r.joint_criterion and r.equal
    return out


def cmd_modularity_check(args) -> dict:
    obj, src = _read(args.file)
    if args.dim is not None:
        obj = dict(obj, n=args.dim)
    try:
        d = GluingDatum.from_json(obj)
    except ComplexError as exc:
        raise InputError(f"{src}: {exc}") from None
    G = _group(args.group)
    r = glue_compare(d, G)
    out = r.to_json()
    out["criterion_holds"] = check_modularity_criterion(d, G)
    out["ok"] = r.iso
    return out


def cmd_corpus(args) -> dict:
    files = corpus_mod.bundled_files()
    if args.write:
        root = Path(args.write)
        for rel in files:
            target = root / rel
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(corpus_mod.read_text(rel), encoding="utf-8")
    out: dict = {"files": files, "ok": True}
    if args.show:
        obj, rel = _read(args.show)
        out["content"] = obj
    return out


COMMANDS: dict[str, Callable] = {
    "check-category": cmd_check_category,
    "classify": cmd_classify,
    "homology": cmd_homology,
    "state-space": cmd_state_space,
    "induced-map": cmd_induced_map,
    "compose-check": cmd_compose_check,
    "modularity-check": cmd_modularity_check,
    "anomaly": cmd_anomaly,
    "corpus": cmd_corpus,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gctqft", description=__doc__.splitlines()[0])
    parser.add_argument("--output", help="write the JSON report here instead of stdout")
    parser.add_argument("--timing", action="store_true", help="include wall-clock time in the report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-category", help="order conditions, pentagon, hexagons and balance")
    p.add_argument("file")
    p = sub.add_parser("anomaly", help="Gauss sums and normalizability")
    p.add_argument("file")

    p = sub.add_parser("classify", help="braided structures on a finite abelian group up to equivalence")
    p.add_argument("--group", required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--mode", choices=["full", "presentation"], default="full")
    p.add_argument("--symmetric", action="store_true", help="keep only symmetric classes")

    for name, helptext in (("homology", "relative homology of a named pair"), ("state-space", "basis of the state space")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        p.add_argument("--pair", required=True, help="SPACE,SUBSPACE by subcomplex name")
        p.add_argument("--dim", type=int, required=True)
        p.add_argument("--group", required=True)
        if name == "state-space":
            p.add_argument("--level", type=int, default=4)

    p = sub.add_parser("induced-map", help="matrix of the induced homomorphism")
    p.add_argument("file")
    p.add_argument("--bordism", help="name of a bordism listed in the file")
    p.add_argument("--X", default="all")
    p.add_argument("--Y0", default="empty")
    p.add_argument("--Y1", default="empty")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--level", type=int, default=4)
    p.add_argument("--oracle", choices=["count", "explicit", "both"], default="count")

    p = sub.add_parser("compose-check", help="composition criterion and glued-versus-composite maps")
    p.add_argument("file")
    p.add_argument("--composition", required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--group", required=True)
    p.add_argument("--level", type=int, default=4)

    p = sub.add_parser("modularity-check", help="algebraic versus geometric gluing")
    p.add_argument("file")
    p.add_argument("--group", required=True)
    p.add_argument("--dim", type=int, help="override the theory dimension in the file")

    p = sub.add_parser("corpus", help="list, show or export the bundled examples")
    p.add_argument("--write", metavar="DIR", help="copy every bundled file into DIR")
    p.add_argument("--show", metavar="NAME", help="include one file's content in the report")
    return parser


def run(argv: list[str] | None = None) -> tuple[int, dict, argparse.Namespace]:
    args = build_parser().parse_args(argv)
    report: dict = {"format": FORMAT, "command": args.command, "args": _echo(args)}
    start = time.perf_counter()
    try:
        result = COMMANDS[args.command](args)
        ok = result.pop("ok", True)
        report["result"] = result
        report["ok"] = ok
        code = 0 if ok else 1
    except (InputError, ComplexError, ValueError) as exc:
        report["error"] = str(exc)
        code = 2
    except EnumerationTooLarge as exc:
        report["error"] = str(exc)
        code = 2
    if args.timing:
        report["seconds"] = round(time.perf_counter() - start, 3)
    return code, report, args


def _echo(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "output", "timing")}


def main(argv: list[str] | None = None) -> int:
    code, report, args = run(argv)
    text = dumps(report)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if "error" in report:
        print(f"gctqft: error: {report['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
