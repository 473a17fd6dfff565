"""JSON forms of quivers, orbits, representations and pipeline results."""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping

from . import polyengine
from .collapsing import QuiverClassResult
from .quiverkit import (
    Quiver,
    QuiverError,
    RootOrder,
    dimvec,
    multiplicities_from_json,
    multiplicities_to_json,
    parse_root_key,
)
from .repkit import Representation, RepresentationError
from .rootsys import DynkinDiagram


class InputError(ValueError):
    """Malformed user input other than an invalid quiver."""


def load_json_arg(arg: str) -> Any:
    """Inline JSON if the argument looks like JSON, otherwise a file path."""
    text = arg.strip()
    if text[:1] in "{[":
        return json.loads(text)
    return json.loads(Path(arg).read_text())


def _label(x):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise QuiverError(f"not a Dynkin quiver: vertex label {x!r} must be an int or string")
    return x


def quiver_from_json(data: Mapping) -> Quiver:
    """Accepts ``{"vertices": [...], "arrows": [{"tail":..,"head":..}]}`` or ``{"series":"D","rank":4}``.

    The series form orients every standard edge from the smaller label to the larger.
    """
    if "series" in data and "arrows" not in data:
        try:
            diag = DynkinDiagram.standard(str(data["series"]), int(data["rank"]))
        except ValueError as exc:
            raise QuiverError(f"not a Dynkin quiver: {exc}") from exc
        arrows = sorted(tuple(sorted(e)) for e in diag.edges)
        return Quiver(diag.labels, tuple(arrows))
    try:
        arrows = [(_label(a["tail"]), _label(a["head"])) for a in data["arrows"]]
    except (KeyError, TypeError) as exc:
        raise QuiverError(f"not a Dynkin quiver: malformed arrow list ({exc})") from exc
    vertices = data.get("vertices")
    if vertices is not None:
        vertices = [_label(v) for v in vertices]
        if len(set(vertices)) != len(vertices):
            raise QuiverError("not a Dynkin quiver: repeated vertex label")
        missing = {v for a in arrows for v in a} - set(vertices)
        if missing:
            raise QuiverError(f"not a Dynkin quiver: arrows use undeclared vertices {sorted(map(str, missing))}")
    return Quiver.from_arrows(arrows, vertices)


def quiver_to_json(q: Quiver) -> dict:
    return {"vertices": list(q.vertices), "arrows": [{"tail": t, "head": h} for t, h in q.arrows]}


def dims_from_arg(q: Quiver, arg: str | Mapping | list) -> tuple[int, ...]:
    """``"2,3,2"`` in vertex order, a JSON list, or a JSON object keyed by vertex label."""
    if isinstance(arg, str):
        text = arg.strip()
        if text[:1] in "{[":
            arg = json.loads(text)
        else:
            try:
                arg = [int(x) for x in text.split(",") if x.strip()]
            except ValueError as exc:
                raise InputError(f"bad dimension vector {text!r}") from exc
    if isinstance(arg, Mapping):
        by_str = {str(k): v for k, v in arg.items()}
        if set(by_str) != {str(v) for v in q.vertices}:
            raise InputError("dimension vector must be defined on exactly the vertex set")
        arg = [by_str[str(v)] for v in q.vertices]
    try:
        return dimvec(q, arg)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def orbit_from_arg(ro: RootOrder, arg: str | Mapping | list) -> tuple[int, ...]:
    """Root-keyed object such as ``{"110": 2}`` or a list of N multiplicities in beta order."""
    if isinstance(arg, str):
        text = arg.strip()
        arg = json.loads(text) if text[:1] in "{[" else [int(x) for x in text.split(",")]
    if isinstance(arg, Mapping):
        try:
            return multiplicities_from_json(ro, arg)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    m = tuple(int(x) for x in arg)
    if len(m) != len(ro) or any(x < 0 for x in m):
        raise InputError(f"expected {len(ro)} nonnegative multiplicities")
    return m


def orbit_to_json(ro: RootOrder, m) -> dict:
    return multiplicities_to_json(ro, m)


def root_from_key(key: str, n: int):
    return parse_root_key(key, n)


# --- representations ---------------------------------------------------------------


def _fraction(x) -> Fraction:
    try:
        return Fraction(str(x))
    except (ValueError, ZeroDivisionError) as exc:
        raise RepresentationError(f"bad matrix entry {x!r}") from exc


def representation_from_json(q: Quiver, data: Mapping) -> Representation:
    """``{"dims": [...] | {...}, "maps": [{"tail":..,"head":..,"matrix":[["1","3/2"],...]}]}``."""
    try:
        dims = dims_from_arg(q, data["dims"])
    except (KeyError, InputError) as exc:
        raise RepresentationError(f"bad dimension vector: {exc}") from exc
    given = {}
    for entry in data.get("maps", []):
        key = (entry["tail"], entry["head"])
        if key not in q.arrows:
            raise RepresentationError(f"arrow {key[0]}->{key[1]} is not in the quiver")
        given[key] = entry["matrix"]
    mats = []
    for t, h in q.arrows:
        r, c = dims[q.index(t)], dims[q.index(h)]
        raw = given.get((t, h))
        if raw is None:
            mats.append([[0] * c for _ in range(r)])
            continue
        if len(raw) != r or any(len(row) != c for row in raw):
            raise RepresentationError(f"arrow {t}->{h} needs a {r}x{c} matrix")
        mats.append([[_fraction(x) for x in row] for row in raw])
    return Representation.from_matrices(q, dims, mats)


def representation_to_json(rep: Representation) -> dict:
    q = rep.quiver
    return {
        "dims": list(rep.dims),
        "maps": [
            {"tail": t, "head": h, "matrix": [[str(x) for x in row] for row in mat]}
            for (t, h), mat in zip(q.arrows, rep.maps)
        ],
    }


# --- results -------------------------------------------------------------------------


def result_to_json(res: QuiverClassResult) -> dict:
    return {
        "multidegree": polyengine.to_json(res.multidegree),
        "kpolynomial": None if res.kpolynomial is None else polyengine.to_json(res.kpolynomial),
        "codim": res.codim,
        "operators_applied": res.operators_applied,
        "certified": res.certified,
        "warnings": list(res.warnings),
    }


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)
