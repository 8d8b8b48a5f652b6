"""Scenario files: JSON documents describing one verification input.

Every document has a ``kind`` and kind-specific keys.  Rationals are JSON
integers or strings ``"p/q"``; floats are rejected.  Matrices are arrays of
row arrays.  Unknown keys are schema errors, so a document either loads
completely or not at all.

Kinds and their keys (``?`` marks optional keys)::

    matrix     matrix, m?, n?, inner?
    chain      maps | (matrix, length)
    category   objects, arrows, cocycles, object?, alphas?
    cocycle    maps, objects?, arrows?
    lift       inclusions, projections, small_maps
    functor    source, target, object_map, arrow_map, transports?, cocycles, natural?
    algebra    dim, mult, obstruction
    bialgebra  dim, mult, comult, obstruction, unit?, counit?, antipode?
    module     algebra, module_dim, action, module_obstruction
    tqft       labels, generators, cycle
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import ParseError, RationalFormatError, SchemaError
from .linalg import Matrix, format_fraction, to_fraction

KINDS = ("matrix", "chain", "category", "cocycle", "lift", "functor", "algebra", "bialgebra", "module", "tqft")


@dataclass(frozen=True)
class Scenario:
    kind: str
    payload: dict


# -- primitive readers -------------------------------------------------------------


def _rational(value, key: str) -> Fraction:
    if isinstance(value, float):
        raise RationalFormatError(f"{key}: floats are not allowed, write {value!r} as a string \"p/q\"")
    try:
        return to_fraction(value)
    except RationalFormatError as exc:
        raise RationalFormatError(f"{key}: {exc}") from None


def _matrix(value, key: str) -> Matrix:
    if not isinstance(value, list) or not value or not all(isinstance(r, list) for r in value):
        raise SchemaError("expected a non-empty array of row arrays", key)
    width = len(value[0])
    if width == 0 or any(len(r) != width for r in value):
        raise SchemaError("rows must be non-empty and of equal length", key)
    return Matrix([[_rational(x, f"{key}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(value)])


def _vector(value, key: str) -> list[Fraction]:
    if not isinstance(value, list) or not value:
        raise SchemaError("expected a non-empty array", key)
    return [_rational(x, f"{key}[{i}]") for i, x in enumerate(value)]


def _int(value, key: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise SchemaError(f"expected an integer >= {minimum}", key)
    return value


def _str(value, key: str) -> str:
    if not isinstance(value, str) or not value:
        raise SchemaError("expected a non-empty string", key)
    return value


def _list(value, key: str, nonempty: bool = True) -> list:
    if not isinstance(value, list) or (nonempty and not value):
        raise SchemaError("expected a non-empty array" if nonempty else "expected an array", key)
    return value


def _dict(value, key: str) -> dict:
    if not isinstance(value, dict):
        raise SchemaError("expected an object", key)
    return value


def _keys(doc: dict, key: str, required: set[str], optional: set[str] = frozenset()) -> None:
    for k in required:
        if k not in doc:
            raise SchemaError("missing required key", f"{key}.{k}" if key else k)
    for k in doc:
        if k not in required and k not in optional:
            raise SchemaError("unknown key", f"{key}.{k}" if key else k)


def _matrices(value, key: str) -> list[Matrix]:
    return [_matrix(m, f"{key}[{i}]") for i, m in enumerate(_list(value, key))]


# -- per-kind normalizers ----------------------------------------------------------


def _category(doc, key: str) -> dict:
    doc = _dict(doc, key)
    objects = {_str(k, f"{key}.objects"): _int(v, f"{key}.objects.{k}") for k, v in _dict(doc["objects"], f"{key}.objects").items()}
    arrows = {}
    for name, a in _dict(doc["arrows"], f"{key}.arrows").items():
        k = f"{key}.arrows.{name}"
        a = _dict(a, k)
        _keys(a, k, {"source", "target", "matrix"})
        src, tgt = _str(a["source"], f"{k}.source"), _str(a["target"], f"{k}.target")
        for end, ek in ((src, "source"), (tgt, "target")):
            if end not in objects:
                raise SchemaError(f"undeclared object {end!r}", f"{k}.{ek}")
        arrows[name] = {"source": src, "target": tgt, "matrix": _matrix(a["matrix"], f"{k}.matrix")}
    return {"objects": objects, "arrows": arrows}


def _cocycle_names(value, key: str, arrows: dict) -> list[list[str]]:
    out = []
    for i, c in enumerate(_list(value, key)):
        names = [_str(a, f"{key}[{i}]") for a in _list(c, f"{key}[{i}]")]
        for a in names:
            if a not in arrows:
                raise SchemaError(f"undeclared arrow {a!r}", f"{key}[{i}]")
        out.append(names)
    return out


def _norm_matrix(doc) -> dict:
    _keys(doc, "", {"matrix"}, {"m", "n", "inner"})
    out = {"matrix": _matrix(doc["matrix"], "matrix")}
    f = out["matrix"]
    for k, amb in (("m", f.ncols), ("n", f.nrows)):
        if k in doc:
            vecs = [_vector(v, f"{k}[{i}]") for i, v in enumerate(_list(doc[k], k, nonempty=False))]
            if any(len(v) != amb for v in vecs):
                raise SchemaError(f"basis vectors must have length {amb}", k)
            out[k] = vecs
    if "inner" in doc:
        out["inner"] = _matrix(doc["inner"], "inner")
    return out


def _norm_chain(doc) -> dict:
    if "maps" in doc:
        _keys(doc, "", {"maps"})
        return {"maps": _matrices(doc["maps"], "maps")}
    _keys(doc, "", {"matrix", "length"})
    return {"matrix": _matrix(doc["matrix"], "matrix"), "length": _int(doc["length"], "length", 1)}


def _norm_category(doc) -> dict:
    _keys(doc, "", {"objects", "arrows", "cocycles"}, {"object", "alphas"})
    out = _category({"objects": doc["objects"], "arrows": doc["arrows"]}, "")
    out = {"objects": out["objects"], "arrows": out["arrows"]}
    out["cocycles"] = _cocycle_names(doc["cocycles"], "cocycles", out["arrows"])
    if "object" in doc:
        obj = _str(doc["object"], "object")
        if obj not in out["objects"]:
            raise SchemaError(f"undeclared object {obj!r}", "object")
        out["object"] = obj
    if "alphas" in doc:
        out["alphas"] = _matrices(doc["alphas"], "alphas")
    return out


def _norm_cocycle(doc) -> dict:
    _keys(doc, "", {"maps"}, {"objects", "arrows"})
    out = {"maps": _matrices(doc["maps"], "maps")}
    for k in ("objects", "arrows"):
        if k in doc:
            names = [_str(x, k) for x in _list(doc[k], k)]
            if len(names) != len(out["maps"]):
                raise SchemaError("needs one name per map", k)
            out[k] = names
    return out


def _norm_lift(doc) -> dict:
    _keys(doc, "", {"inclusions", "projections", "small_maps"})
    return {k: _matrices(doc[k], k) for k in ("inclusions", "projections", "small_maps")}


def _functor_maps(doc, key: str, src: dict, dst: dict) -> dict:
    out = {}
    omap = {}
    for k, v in _dict(doc["object_map"], f"{key}object_map").items():
        if k not in src["objects"]:
            raise SchemaError(f"undeclared source object {k!r}", f"{key}object_map")
        if v not in dst["objects"]:
            raise SchemaError(f"undeclared target object {v!r}", f"{key}object_map.{k}")
        omap[k] = v
    amap = {}
    for k, v in _dict(doc["arrow_map"], f"{key}arrow_map").items():
        if k not in src["arrows"]:
            raise SchemaError(f"undeclared source arrow {k!r}", f"{key}arrow_map")
        if v not in dst["arrows"]:
            raise SchemaError(f"undeclared target arrow {v!r}", f"{key}arrow_map.{k}")
        amap[k] = v
    out["object_map"], out["arrow_map"] = omap, amap
    if "transports" in doc:
        out["transports"] = {}
        for k, v in _dict(doc["transports"], f"{key}transports").items():
            if k not in src["objects"]:
                raise SchemaError(f"undeclared source object {k!r}", f"{key}transports")
            out["transports"][k] = _matrix(v, f"{key}transports.{k}")
    return out


def _norm_functor(doc) -> dict:
    _keys(doc, "", {"source", "target", "object_map", "arrow_map", "cocycles"}, {"transports", "natural"})
    src, dst = _category(doc["source"], "source"), _category(doc["target"], "target")
    _keys(doc["source"], "source", {"objects", "arrows"})
    _keys(doc["target"], "target", {"objects", "arrows"})
    out = {"source": src, "target": dst}
    out.update(_functor_maps(doc, "", src, dst))
    out["cocycles"] = _cocycle_names(doc["cocycles"], "cocycles", src["arrows"])
    if "natural" in doc:
        nat = _dict(doc["natural"], "natural")
        _keys(nat, "natural", {"object_map", "arrow_map", "components"}, {"transports"})
        other = _functor_maps(nat, "natural.", src, dst)
        other["components"] = {}
        for k, v in _dict(nat["components"], "natural.components").items():
            if k not in src["objects"]:
                raise SchemaError(f"undeclared source object {k!r}", "natural.components")
            other["components"][k] = _matrix(v, f"natural.components.{k}")
        out["natural"] = other
    return out


def _norm_algebra_fields(doc, key: str) -> dict:
    k = f"{key}." if key else ""
    return {
        "dim": _int(doc["dim"], f"{k}dim", 1),
        "mult": _matrix(doc["mult"], f"{k}mult"),
        "obstruction": _matrix(doc["obstruction"], f"{k}obstruction"),
    }


def _norm_algebra(doc) -> dict:
    _keys(doc, "", {"dim", "mult", "obstruction"})
    return _norm_algebra_fields(doc, "")


def _norm_bialgebra(doc) -> dict:
    _keys(doc, "", {"dim", "mult", "comult", "obstruction"}, {"unit", "counit", "antipode"})
    out = _norm_algebra_fields(doc, "")
    out["comult"] = _matrix(doc["comult"], "comult")
    for k in ("unit", "counit"):
        if k in doc:
            out[k] = _vector(doc[k], k)
    if "antipode" in doc:
        out["antipode"] = _matrix(doc["antipode"], "antipode")
    return out


def _norm_module(doc) -> dict:
    _keys(doc, "", {"algebra", "module_dim", "action", "module_obstruction"})
    alg = _dict(doc["algebra"], "algebra")
    _keys(alg, "algebra", {"dim", "mult", "obstruction"})
    return {
        "algebra": _norm_algebra_fields(alg, "algebra"),
        "module_dim": _int(doc["module_dim"], "module_dim", 1),
        "action": _matrix(doc["action"], "action"),
        "module_obstruction": _matrix(doc["module_obstruction"], "module_obstruction"),
    }


def _boundary(value, key: str, labels: dict) -> list[str]:
    out = []
    for i, c in enumerate(_list(value, key, nonempty=False)):
        c = _str(c, f"{key}[{i}]")
        if c.rstrip("+-") not in labels:
            raise SchemaError(f"undeclared label {c!r}", f"{key}[{i}]")
        out.append(c)
    return out


def _norm_tqft(doc) -> dict:
    _keys(doc, "", {"labels", "generators", "cycle"})
    labels = {_str(k, "labels"): _int(v, f"labels.{k}", 1) for k, v in _dict(doc["labels"], "labels").items()}
    gens = {}
    for tag, g in _dict(doc["generators"], "generators").items():
        k = f"generators.{tag}"
        g = _dict(g, k)
        _keys(g, k, {"in", "out"}, {"opposite", "cylinder", "map"})
        entry = {"in": _boundary(g["in"], f"{k}.in", labels), "out": _boundary(g["out"], f"{k}.out", labels)}
        if "opposite" in g:
            entry["opposite"] = _str(g["opposite"], f"{k}.opposite")
        if "cylinder" in g:
            if not isinstance(g["cylinder"], bool):
                raise SchemaError("expected a boolean", f"{k}.cylinder")
            entry["cylinder"] = g["cylinder"]
        if "map" in g:
            entry["map"] = _matrix(g["map"], f"{k}.map")
        gens[tag] = entry
    for tag, g in gens.items():
        if "opposite" in g and g["opposite"] not in gens:
            raise SchemaError(f"undeclared generator {g['opposite']!r}", f"generators.{tag}.opposite")
    cycle = []
    for i, item in enumerate(_list(doc["cycle"], "cycle")):
        k = f"cycle[{i}]"
        item = _dict(item, k)
        _keys(item, k, {"word"}, {"in", "out"})
        word = [_str(t, f"{k}.word") for t in _list(item["word"], f"{k}.word", nonempty=False)]
        for t in word:
            if t not in gens:
                raise SchemaError(f"undeclared generator {t!r}", f"{k}.word")
        entry = {"word": word}
        for b in ("in", "out"):
            if b in item:
                entry[b] = _boundary(item[b], f"{k}.{b}", labels)
        cycle.append(entry)
    return {"labels": labels, "generators": gens, "cycle": cycle}


_NORMALIZERS = {
    "matrix": _norm_matrix,
    "chain": _norm_chain,
    "category": _norm_category,
    "cocycle": _norm_cocycle,
    "lift": _norm_lift,
    "functor": _norm_functor,
    "algebra": _norm_algebra,
    "bialgebra": _norm_bialgebra,
    "module": _norm_module,
    "tqft": _norm_tqft,
}


def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise SchemaError("duplicate key", k)
        out[k] = v
    return out


def parse_scenario(text: str) -> Scenario:
    try:
        doc = json.loads(text, object_pairs_hook=_no_duplicates)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise SchemaError(f"expected one of {', '.join(KINDS)}", "kind")
    body = {k: v for k, v in doc.items() if k != "kind"}
    return Scenario(kind, _NORMALIZERS[kind](body))


def load_scenario(path: str | Path) -> Scenario:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_scenario(text)


def _plain(value) -> Any:
    if isinstance(value, Matrix):
        return value.to_lists()
    if isinstance(value, Fraction):
        return format_fraction(value)
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_plain(v) for v in value]
    return value


def dump_scenario(s: Scenario) -> str:
    doc = {"kind": s.kind}
    doc.update(_plain(s.payload))
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
