"""Bundled example complexes, gluing data and category presentations.

The JSON files under ``data/`` are generated by :func:`build_all` and
checked against it by the test suite, so the builders here are the single
description of every example.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterator, Mapping

from .cellular import CWComplex
from .groupcat.presentation import CategoryPresentation, from_exponents
from .serialization import dumps, presentation_to_json
from .tqft import BordismData, GluingDatum


def build(name: str, cells: Mapping[int, list[str]], bd: Mapping[str, Mapping[str, int]], subs=None) -> CWComplex:
    """Complex from boundaries written cell by cell: bd[cell] = {face: coefficient}."""
    mats = {}
    for d in range(1, max(cells) + 1):
        rows, cols = cells.get(d - 1, []), cells.get(d, [])
        mats[d] = [[bd.get(c, {}).get(r, 0) for c in cols] for r in rows]
    return CWComplex(cells, mats, subs or {}, name=name)


@dataclass
class CorpusComplex:
    """A complex together with the bordisms and compositions it hosts."""

    complex: CWComplex
    bordisms: list[dict] = field(default_factory=list)
    compositions: list[dict] = field(default_factory=list)

    @property
    def name(self) -> str:
        return self.complex.name

    def to_json(self) -> dict:
        out = self.complex.to_json()
        out["kind"] = "complex"
        out["bordisms"] = self.bordisms
        out["compositions"] = self.compositions
        return out

    @classmethod
    def from_json(cls, obj: Mapping) -> "CorpusComplex":
        return cls(CWComplex.from_json(obj), list(obj.get("bordisms", [])), list(obj.get("compositions", [])))

    def bordism(self, spec: Mapping, n: int, G, level: int = 4) -> BordismData:
        X = self.complex
        return BordismData(
            X.named(spec.get("X", "all")), X.named(spec["Y0"]), X.named(spec["Y1"]), n, G, level,
            name=f"{self.name}:{spec['name']}",
        )


def _b(name: str, y0: str, y1: str, x: str = "all") -> dict:
    return {"name": name, "X": x, "Y0": y0, "Y1": y1}


def _c(name: str, x1: str, x2: str, y0: str, y1: str, y2: str) -> dict:
    return {"name": name, "X1": x1, "X2": x2, "Y0": y0, "Y1": y1, "Y2": y2}


def complexes() -> list[CorpusComplex]:
    out = []
    point = build("point", {0: ["p"]}, {}, {"pt": ["p"]})
    out.append(CorpusComplex(point, [_b("closed", "empty", "empty")]))

    interval = build(
        "interval", {0: ["s", "e"], 1: ["i"]}, {"i": {"e": 1, "s": -1}},
        {"I": ["s", "e", "i"], "dI": ["s", "e"], "start": ["s"], "end": ["e"]},
    )
    out.append(CorpusComplex(interval, [
        _b("start-to-end", "start", "end"),
        _b("birth-of-boundary", "empty", "dI"),
        _b("death-of-boundary", "dI", "empty"),
    ]))

    circle = build("circle", {0: ["p"], 1: ["c"]}, {}, {"pt": ["p"], "S1": ["p", "c"]})
    out.append(CorpusComplex(
        circle,
        [_b("closed", "empty", "empty"), _b("empty-to-circle", "empty", "all"), _b("circle-to-empty", "all", "empty")],
        [_c("circle-through-itself", "all", "all", "empty", "all", "empty")],
    ))

    circle2 = build(
        "circle-two-arcs", {0: ["p", "q"], 1: ["u", "l"]},
        {"u": {"q": 1, "p": -1}, "l": {"p": 1, "q": -1}},
        {"upper": ["p", "q", "u"], "lower": ["p", "q", "l"], "pts": ["p", "q"]},
    )
    out.append(CorpusComplex(circle2, [_b("upper-to-lower", "upper", "lower"), _b("points-to-empty", "pts", "empty")]))

    disk = build("disk", {0: ["p"], 1: ["c"], 2: ["f"]}, {"f": {"c": 1}}, {"S1": ["p", "c"]})
    out.append(CorpusComplex(disk, [
        _b("cap", "S1", "empty"), _b("cup", "empty", "S1"), _b("closed", "empty", "empty"),
    ]))

    disk2 = build(
        "disk-two-arcs", {0: ["p", "q"], 1: ["u", "l"], 2: ["f"]},
        {"u": {"q": 1, "p": -1}, "l": {"p": 1, "q": -1}, "f": {"u": 1, "l": 1}},
        {"upper": ["p", "q", "u"], "lower": ["p", "q", "l"], "pts": ["p", "q"], "S1": ["p", "q", "u", "l"]},
    )
    out.append(CorpusComplex(disk2, [_b("upper-to-lower", "upper", "lower"), _b("cap", "S1", "empty")]))

    sphere = build(
        "sphere", {0: ["p"], 1: ["c"], 2: ["u", "d"]}, {"u": {"c": 1}, "d": {"c": 1}},
        {"equator": ["p", "c"], "north": ["p", "c", "u"], "south": ["p", "c", "d"]},
    )
    out.append(CorpusComplex(
        sphere,
        [
            _b("closed", "empty", "empty"),
            _b("north-to-south", "north", "south"),
            _b("cup", "empty", "equator", "north"),
            _b("cap", "equator", "empty", "south"),
        ],
        [_c("cup-then-cap", "north", "south", "empty", "equator", "empty")],
    ))

    torus = build(
        "torus", {0: ["p"], 1: ["a", "b"], 2: ["f"]}, {"f": {}},
        {"wedge": ["p", "a", "b"], "A": ["p", "a"], "B": ["p", "b"]},
    )
    out.append(CorpusComplex(torus, [_b("closed", "empty", "empty"), _b("A-to-B", "A", "B"), _b("wedge-to-empty", "wedge", "empty")]))

    c3 = build(
        "c3", {0: ["v", "e1", "e2", "e3"], 1: ["k1", "k2", "k3"]},
        {f"k{i}": {"v": 1, f"e{i}": -1} for i in (1, 2, 3)},
        {"ends": ["e1", "e2", "e3"], "in": ["e1", "e2"], "out": ["e3"]},
    )
    out.append(CorpusComplex(c3, [_b("merge", "in", "out"), _b("ends-to-empty", "ends", "empty")]))

    bigon = build(
        "bigon", {0: ["p", "q"], 1: ["b", "t"], 2: ["f"]},
        {"b": {"q": 1, "p": -1}, "t": {"q": 1, "p": -1}, "f": {"b": 1, "t": -1}},
        {"bottom": ["p", "q", "b"], "top": ["p", "q", "t"], "corners": ["p", "q"]},
    )
    out.append(CorpusComplex(bigon, [_b("bottom-to-top", "bottom", "top")]))

    square = build(
        "square", {0: ["v00", "v10", "v01", "v11"], 1: ["bot", "top", "left", "right"], 2: ["f"]},
        {
            "bot": {"v10": 1, "v00": -1}, "top": {"v11": 1, "v01": -1},
            "left": {"v01": 1, "v00": -1}, "right": {"v11": 1, "v10": -1},
            "f": {"bot": 1, "right": 1, "top": -1, "left": -1},
        },
        {
            "bottom": ["v00", "v10", "bot"], "top": ["v01", "v11", "top"],
            "cup": ["v00", "v10", "v01", "v11", "bot", "left", "right"],
        },
    )
    out.append(CorpusComplex(square, [_b("bottom-to-top", "bottom", "top"), _b("cup-to-top", "cup", "top")]))

    annulus = build(
        "annulus", {0: ["p0", "p1"], 1: ["c0", "c1", "s"], 2: ["f"]},
        {"s": {"p1": 1, "p0": -1}, "f": {"c0": 1, "c1": -1}},
        {"inner": ["p0", "c0"], "outer": ["p1", "c1"]},
    )
    out.append(CorpusComplex(annulus, [_b("inner-to-outer", "inner", "outer"), _b("closed", "empty", "empty")]))

    stacked = build(
        "stacked-bigons", {0: ["p", "q"], 1: ["b", "m", "t"], 2: ["f1", "f2"]},
        {
            "b": {"q": 1, "p": -1}, "m": {"q": 1, "p": -1}, "t": {"q": 1, "p": -1},
            "f1": {"b": 1, "m": -1}, "f2": {"m": 1, "t": -1},
        },
        {
            "X1": ["p", "q", "b", "m", "f1"], "X2": ["p", "q", "m", "t", "f2"],
            "Yb": ["p", "q", "b"], "Ym": ["p", "q", "m"], "Yt": ["p", "q", "t"],
        },
    )
    out.append(CorpusComplex(
        stacked,
        [_b("lower", "Yb", "Ym", "X1"), _b("upper", "Ym", "Yt", "X2"), _b("both", "Yb", "Yt")],
        [_c("stack", "X1", "X2", "Yb", "Ym", "Yt")],
    ))

    two_intervals = build(
        "interval-chain", {0: ["a", "b", "c"], 1: ["i1", "i2"]},
        {"i1": {"b": 1, "a": -1}, "i2": {"c": 1, "b": -1}},
        {"X1": ["a", "b", "i1"], "X2": ["b", "c", "i2"], "A": ["a"], "B": ["b"], "C": ["c"]},
    )
    out.append(CorpusComplex(
        two_intervals,
        [_b("first", "A", "B", "X1"), _b("second", "B", "C", "X2"), _b("whole", "A", "C")],
        [_c("chain", "X1", "X2", "A", "B", "C")],
    ))

    annuli = build(
        "annulus-stack", {0: ["p0", "p1", "p2"], 1: ["c0", "c1", "c2", "s1", "s2"], 2: ["f1", "f2"]},
        {
            "s1": {"p1": 1, "p0": -1}, "s2": {"p2": 1, "p1": -1},
            "f1": {"c0": 1, "c1": -1}, "f2": {"c1": 1, "c2": -1},
        },
        {
            "X1": ["p0", "p1", "c0", "c1", "s1", "f1"], "X2": ["p1", "p2", "c1", "c2", "s2", "f2"],
            "C0": ["p0", "c0"], "C1": ["p1", "c1"], "C2": ["p2", "c2"],
        },
    )
    out.append(CorpusComplex(
        annuli,
        [_b("first", "C0", "C1", "X1"), _b("second", "C1", "C2", "X2"), _b("whole", "C0", "C2")],
        [_c("stack", "X1", "X2", "C0", "C1", "C2")],
    ))

    tree = build(
        "c3-with-leg", {0: ["v", "e1", "e2", "e3", "x"], 1: ["k1", "k2", "k3", "j"]},
        {**{f"k{i}": {"v": 1, f"e{i}": -1} for i in (1, 2, 3)}, "j": {"x": 1, "e3": -1}},
        {
            "X1": ["v", "e1", "e2", "e3", "k1", "k2", "k3"], "X2": ["e3", "x", "j"],
            "in": ["e1", "e2"], "mid": ["e3"], "out": ["x"],
        },
    )
    out.append(CorpusComplex(
        tree,
        [_b("merge", "in", "mid", "X1"), _b("leg", "mid", "out", "X2"), _b("whole", "in", "out")],
        [_c("merge-then-leg", "X1", "X2", "in", "mid", "out")],
    ))

    union = build(
        "bigon-and-circle", {0: ["p", "q", "r"], 1: ["b", "t", "c"], 2: ["f"]},
        {"b": {"q": 1, "p": -1}, "t": {"q": 1, "p": -1}, "f": {"b": 1, "t": -1}},
        {
            "A": ["p", "q", "b", "t", "f"], "B": ["r", "c"],
            "A0": ["p", "q", "b"], "A1": ["p", "q", "t"],
            "Y0": ["p", "q", "b"], "Y1": ["p", "q", "t", "r", "c"],
        },
    )
    out.append(CorpusComplex(union, [
        _b("bigon", "A0", "A1", "A"), _b("circle", "empty", "B", "B"), _b("union", "Y0", "Y1"),
    ]))

    union2 = build(
        "two-intervals", {0: ["a0", "a1", "b0", "b1"], 1: ["i", "j"]},
        {"i": {"a1": 1, "a0": -1}, "j": {"b1": 1, "b0": -1}},
        {
            "A": ["a0", "a1", "i"], "B": ["b0", "b1", "j"],
            "A0": ["a0"], "A1": ["a1"], "B0": ["b0"], "B1": ["b1"],
            "Y0": ["a0", "b0"], "Y1": ["a1", "b1"],
        },
    )
    out.append(CorpusComplex(union2, [
        _b("first", "A0", "A1", "A"), _b("second", "B0", "B1", "B"), _b("union", "Y0", "Y1"),
    ]))
    return out


# tensor checks: (complex, union bordism, [piece bordisms])
DISJOINT_UNIONS = [
    ("bigon-and-circle", "union", ["bigon", "circle"]),
    ("two-intervals", "union", ["first", "second"]),
]


def gluings() -> list[dict]:
    """Gluing data in JSON form, each tagged with the expected comparison outcome."""
    interval = build(
        "interval", {0: ["s", "e"], 1: ["i"]}, {"i": {"e": 1, "s": -1}},
        {"W1": ["s"], "W2": ["e"], "V": []},
    )
    circle = build("circle", {0: ["p"], 1: ["c"]}, {}, {"W": ["p"], "V": []})
    to_circle = {"s": "p", "e": "p", "i": "c"}

    pair = build(
        "two-intervals", {0: ["a0", "a1", "b0", "b1"], 1: ["i", "j"]},
        {"i": {"a1": 1, "a0": -1}, "j": {"b1": 1, "b0": -1}},
        {"W1": ["a1"], "W2": ["b0"], "V": ["a0", "b1"]},
    )
    joined = build(
        "interval-chain", {0: ["x0", "m", "x1"], 1: ["i", "j"]},
        {"i": {"m": 1, "x0": -1}, "j": {"x1": 1, "m": -1}},
        {"W": ["m"], "V": ["x0", "x1"]},
    )
    to_chain = {"a0": "x0", "a1": "m", "b0": "m", "b1": "x1", "i": "i", "j": "j"}

    ends = ["e1", "e2", "e3", "f1", "f2", "f3"]
    two_c3 = build(
        "two-c3", {0: ["v", "w"] + ends, 1: ["k1", "k2", "k3", "l1", "l2", "l3"]},
        {**{f"k{i}": {"v": 1, f"e{i}": -1} for i in (1, 2, 3)},
         **{f"l{i}": {"w": 1, f"f{i}": -1} for i in (1, 2, 3)}},
        {"W1": ["e3"], "W2": ["f3"], "V": ["e1", "e2", "f1", "f2"]},
    )
    c3_tree = build(
        "c3-tree", {0: ["v", "w", "e1", "e2", "f1", "f2", "m"], 1: ["k1", "k2", "k3", "l1", "l2", "l3"]},
        {**{f"k{i}": {"v": 1, f"e{i}": -1} for i in (1, 2)}, "k3": {"v": 1, "m": -1},
         **{f"l{i}": {"w": 1, f"f{i}": -1} for i in (1, 2)}, "l3": {"w": 1, "m": -1}},
        {"W": ["m"], "V": ["e1", "e2", "f1", "f2"]},
    )
    to_tree = {c: c for c in two_c3.all_cells()}
    to_tree.update({"e3": "m", "f3": "m"})

    def datum(name, piece, glued, q, n, expect):
        return {
            "format": "gctqft/1", "kind": "gluing", "name": name, "n": n, "expect_iso": expect,
            "piece": piece.to_json(), "glued": glued.to_json(),
            "map": {c: [t, 1] for c, t in q.items()},
        }

    return [
        datum("interval-to-circle-n0", interval, circle, to_circle, 0, False),
        datum("interval-to-circle-n1", interval, circle, to_circle, 1, True),
        datum("two-intervals-n1", pair, joined, to_chain, 1, True),
        datum("two-intervals-n0", pair, joined, to_chain, 0, True),
        datum("two-c3-n1", two_c3, c3_tree, to_tree, 1, True),
    ]


def categories() -> dict[str, CategoryPresentation]:
    out = {
        "z2_sigma_1": from_exponents((2,), (0,)),
        "z2_sigma_i": from_exponents((2,), (1,)),
        "z2_sigma_minus1": from_exponents((2,), (2,)),
        "z2_sigma_minus_i": from_exponents((2,), (3,)),
    }
    for e in (0, 2, 4):
        out[f"z3_sigma_zeta6_{e}"] = from_exponents((3,), (e,))
    for e in range(8):
        out[f"z4_sigma_zeta8_{e}"] = from_exponents((4,), (e,))
    out["z2xz2_trivial"] = from_exponents((2, 2), (0, 0), {(1, 0): 0})
    out["z2xz2_mixed"] = from_exponents((2, 2), (1, 2), {(1, 0): 2})
    out["z2xz2_toric"] = from_exponents((2, 2), (0, 0), {(1, 0): 2})
    return out


# --- files ----------------------------------------------------------------


def build_all() -> dict[str, dict]:
    """Relative path -> JSON object for every bundled file."""
    files = {}
    for c in complexes():
        files[f"complexes/{c.name}.json"] = c.to_json()
    for g in gluings():
        files[f"gluings/{g['name']}.json"] = g
    for name, p in categories().items():
        files[f"categories/{name}.json"] = presentation_to_json(p)
    return files


def data_root():
    return resources.files("gctqft") / "data"


def bundled_files() -> list[str]:
    root = data_root()
    out = []
    for sub in ("complexes", "gluings", "categories"):
        d = root / sub
        if d.is_dir():
            out += sorted(f"{sub}/{p.name}" for p in d.iterdir() if p.name.endswith(".json"))
    return out


def read_text(rel: str) -> str:
    return (data_root() / rel).read_text(encoding="utf-8")


def load(rel: str) -> dict:
    return json.loads(read_text(rel))


def load_complexes() -> Iterator[CorpusComplex]:
    for rel in bundled_files():
        if rel.startswith("complexes/"):
            yield CorpusComplex.from_json(load(rel))


def load_gluings() -> Iterator[tuple[dict, GluingDatum]]:
    for rel in bundled_files():
        if rel.startswith("gluings/"):
            obj = load(rel)
            yield obj, GluingDatum.from_json(obj)


def write_all(root: Path) -> list[Path]:
    written = []
    for rel, obj in build_all().items():
        path = root / rel
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dumps(obj), encoding="utf-8")
        written.append(path)
    return written


if __name__ == "__main__":
    here = Path(__file__).parent / "data"
    for p in write_all(here):
        print(p.relative_to(here))
