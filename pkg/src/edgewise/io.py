"""Canonical file formats.

Every format is JSON with sorted keys, two-space indentation, and a
trailing newline; saving a loaded canonical file reproduces it byte for
byte.  Unknown top-level fields are rejected so that typos fail loudly
instead of being ignored.
"""

from __future__ import annotations

import json
import os
import tempfile

from .cat import FinCategory, PartialMonoid
from .checks import CheckEntry, CheckReport
from .errors import InputError
from .groupoid import FinGroupoid, Functor, TruncatedSGpd
from .sset import TruncatedSSet

__all__ = [
    "canonical_json",
    "save_sset",
    "load_sset",
    "save_category",
    "load_category",
    "save_groupoid",
    "load_groupoid",
    "save_partial_monoid",
    "load_partial_monoid",
    "save_sgpd",
    "load_sgpd",
    "save_report",
    "load_report",
    "report_header",
    "detect_format",
    "load_any",
    "write_text",
]


def canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _parse(text: str):
    try:
        data = json.loads(text)
    except (json.JSONDecodeError, TypeError) as exc:
        raise InputError(f"not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise InputError("top level must be an object")
    return data


def _require_keys(data: dict, keys, what: str):
    got, want = set(data), set(keys)
    if got - want:
        raise InputError(
            f"{what} file has unknown fields {sorted(got - want)}")
    if want - got:
        raise InputError(
            f"{what} file is missing fields {sorted(want - got)}")


def _index_key(n: int, i: int) -> str:
    return f"{n},{i}"


def _parse_index(key: str, what: str):
    parts = key.split(",")
    try:
        n, i = (int(p) for p in parts)
    except ValueError:
        raise InputError(f"bad {what} index key {key!r}") from None
    return n, i


def _string_table(value, what: str) -> dict:
    if not isinstance(value, dict):
        raise InputError(f"{what} must be an object")
    for k, v in value.items():
        if not isinstance(k, str) or not isinstance(v, str):
            raise InputError(f"{what} entry {k!r}: {v!r} is not str -> str")
    return dict(value)


# -- simplicial sets --------------------------------------------------------


def save_sset(X: TruncatedSSet) -> str:
    return canonical_json({
        "truncation": X.truncation,
        "levels": [list(X.level(n)) for n in range(X.truncation + 1)],
        "face": {_index_key(*k): dict(v) for k, v in X.face.items()},
        "degeneracy": {_index_key(*k): dict(v)
                       for k, v in X.degeneracy.items()},
    })


def load_sset(text: str, name: str = "") -> TruncatedSSet:
    data = _parse(text)
    _require_keys(data, ("truncation", "levels", "face", "degeneracy"),
                  "simplicial set")
    if not isinstance(data["levels"], list) or \
            not all(isinstance(lv, list) for lv in data["levels"]):
        raise InputError("levels must be an array of arrays")
    face = {_parse_index(k, "face"): _string_table(v, f"face {k}")
            for k, v in data["face"].items()}
    degeneracy = {
        _parse_index(k, "degeneracy"): _string_table(v, f"degeneracy {k}")
        for k, v in data["degeneracy"].items()}
    return TruncatedSSet(data["truncation"], data["levels"], face,
                         degeneracy, name=name)


# -- categories, groupoids, partial monoids ---------------------------------


def _category_doc(A: FinCategory) -> dict:
    return {
        "objects": list(A.objects),
        "morphisms": [{"id": f, "src": A.src[f], "tgt": A.tgt[f]}
                      for f in A.morphisms],
        "identity": dict(A.identity),
        "compose": {f"{g},{f}": h for (g, f), h in A.compose.items()},
    }


def _category_parts(data: dict):
    if not isinstance(data["morphisms"], list):
        raise InputError("morphisms must be an array")
    morphisms, src, tgt = [], {}, {}
    for row in data["morphisms"]:
        if not isinstance(row, dict) or set(row) != {"id", "src", "tgt"}:
            raise InputError(f"bad morphism record {row!r}")
        morphisms.append(row["id"])
        src[row["id"]] = row["src"]
        tgt[row["id"]] = row["tgt"]
    compose = {}
    for key, h in _string_table(data["compose"], "compose").items():
        g, f = _parse_pair(key, "compose")
        compose[(g, f)] = h
    identity = _string_table(data["identity"], "identity")
    return data["objects"], morphisms, src, tgt, identity, compose


def _parse_pair(key: str, what: str):
    parts = key.split(",")
    if len(parts) != 2:
        raise InputError(f"bad {what} key {key!r}")
    return parts[0], parts[1]


def save_category(A: FinCategory) -> str:
    return canonical_json(_category_doc(A))


def load_category(text: str, name: str = "") -> FinCategory:
    data = _parse(text)
    _require_keys(data, ("objects", "morphisms", "identity", "compose"),
                  "category")
    return FinCategory(*_category_parts(data), name=name)


def save_groupoid(G: FinGroupoid) -> str:
    doc = _category_doc(G)
    doc["inverse"] = dict(G.inverse)
    return canonical_json(doc)


def load_groupoid(text: str, name: str = "") -> FinGroupoid:
    data = _parse(text)
    _require_keys(data, ("objects", "morphisms", "identity", "compose",
                         "inverse"), "groupoid")
    inverse = _string_table(data["inverse"], "inverse")
    return FinGroupoid(*_category_parts(data), name=name, inverse=inverse)


def save_partial_monoid(M: PartialMonoid) -> str:
    return canonical_json({
        "elements": list(M.elements),
        "unit": M.unit,
        "product": {f"{a},{b}": c for (a, b), c in M.product.items()},
    })


def load_partial_monoid(text: str, name: str = "") -> PartialMonoid:
    data = _parse(text)
    _require_keys(data, ("elements", "unit", "product"), "partial monoid")
    product = {_parse_pair(k, "product"): c
               for k, c in _string_table(data["product"],
                                         "product").items()}
    return PartialMonoid(data["elements"], data["unit"], product, name=name)


# -- simplicial groupoids ---------------------------------------------------


def _groupoid_block(G: FinGroupoid) -> dict:
    doc = _category_doc(G)
    doc["inverse"] = dict(G.inverse)
    return doc


def _functor_doc(F: Functor) -> dict:
    return {"on_objects": dict(F.on_objects),
            "on_morphisms": dict(F.on_morphisms)}


def save_sgpd(Y: TruncatedSGpd) -> str:
    return canonical_json({
        "truncation": Y.truncation,
        "levels": [_groupoid_block(Y.levels[n])
                   for n in range(Y.truncation + 1)],
        "face": {_index_key(*k): _functor_doc(v)
                 for k, v in Y.face.items()},
        "degeneracy": {_index_key(*k): _functor_doc(v)
                       for k, v in Y.degeneracy.items()},
    })


def load_sgpd(text: str, name: str = "") -> TruncatedSGpd:
    data = _parse(text)
    _require_keys(data, ("truncation", "levels", "face", "degeneracy"),
                  "simplicial groupoid")
    truncation = data["truncation"]
    if not isinstance(truncation, int) or truncation < 0:
        raise InputError(f"bad truncation {truncation!r}")
    if not isinstance(data["levels"], list) or \
            len(data["levels"]) != truncation + 1:
        raise InputError("levels must list one groupoid per level")
    levels = []
    for n, block in enumerate(data["levels"]):
        if not isinstance(block, dict):
            raise InputError(f"level {n} is not a groupoid block")
        _require_keys(block, ("objects", "morphisms", "identity", "compose",
                              "inverse"), f"level {n}")
        inverse = _string_table(block["inverse"], "inverse")
        levels.append(FinGroupoid(*_category_parts(block),
                                  name=f"level{n}", inverse=inverse))

    def functor(key, doc, delta, what):
        n, i = _parse_index(key, what)
        lo, hi = (1, truncation) if delta < 0 else (0, truncation - 1)
        if not (lo <= n <= hi and 0 <= i <= n):
            raise InputError(f"{what} index {key!r} out of range")
        if not isinstance(doc, dict) or \
                set(doc) != {"on_objects", "on_morphisms"}:
            raise InputError(f"bad functor record at {what} {key!r}")
        return (n, i), Functor(
            levels[n], levels[n + delta],
            _string_table(doc["on_objects"], "on_objects"),
            _string_table(doc["on_morphisms"], "on_morphisms"),
            name=f"{what}({n},{i})")

    face = dict(functor(k, v, -1, "face") for k, v in data["face"].items())
    degeneracy = dict(functor(k, v, +1, "degeneracy")
                      for k, v in data["degeneracy"].items())
    return TruncatedSGpd(truncation, tuple(levels), face, degeneracy,
                         name=name)


# -- reports ----------------------------------------------------------------


def _tuplify(value):
    if isinstance(value, list):
        return tuple(_tuplify(v) for v in value)
    return value


def save_report(report: CheckReport, header: dict | None = None) -> str:
    doc = {
        "subject": report.subject,
        "semantics": report.semantics,
        "entries": [{
            "kind": e.kind,
            "indices": list(e.indices),
            "domain_size": e.domain_size,
            "codomain_size": e.codomain_size,
            "verdict": e.verdict,
            "witness": e.witness,
        } for e in report.entries],
        "summary": report.summary,
    }
    if header is not None:
        return canonical_json({"header": header, "report": doc})
    return canonical_json(doc)


def load_report(text: str) -> CheckReport:
    data = _parse(text)
    if set(data) == {"header", "report"}:
        data = data["report"]
        if not isinstance(data, dict):
            raise InputError("report payload must be an object")
    _require_keys(data, ("subject", "semantics", "entries", "summary"),
                  "report")
    entries = []
    for e in data["entries"]:
        if not isinstance(e, dict) or set(e) != {
                "kind", "indices", "domain_size", "codomain_size",
                "verdict", "witness"}:
            raise InputError(f"bad report entry {e!r}")
        entries.append(CheckEntry(
            e["kind"], _tuplify(e["indices"]), e["domain_size"],
            e["codomain_size"], e["verdict"], _tuplify(e["witness"])))
    return CheckReport(data["subject"], data["semantics"], tuple(entries),
                       dict(data["summary"]))


def report_header(text: str) -> dict | None:
    data = _parse(text)
    if set(data) == {"header", "report"}:
        return data["header"]
    return None


# -- detection and atomic output --------------------------------------------

_FORMATS = {
    frozenset(("truncation", "levels", "face", "degeneracy")): "sset",
    frozenset(("objects", "morphisms", "identity", "compose")): "category",
    frozenset(("objects", "morphisms", "identity", "compose",
               "inverse")): "groupoid",
    frozenset(("elements", "unit", "product")): "partial_monoid",
    frozenset(("subject", "semantics", "entries", "summary")): "report",
    frozenset(("header", "report")): "report",
}


def detect_format(text: str) -> str:
    """Classify a file by its exact top-level field set."""
    data = _parse(text)
    kind = _FORMATS.get(frozenset(data))
    if kind is None:
        raise InputError(f"unrecognized field set {sorted(data)}")
    if kind == "sset":
        lv = data["levels"]
        if isinstance(lv, list) and lv and isinstance(lv[0], dict):
            return "sgpd"
    return kind


_LOADERS = {
    "sset": load_sset,
    "sgpd": load_sgpd,
    "category": load_category,
    "groupoid": load_groupoid,
    "partial_monoid": load_partial_monoid,
}


def load_any(text: str, name: str = ""):
    """Detect and load; returns (kind, value)."""
    kind = detect_format(text)
    if kind == "report":
        return kind, load_report(text)
    return kind, _LOADERS[kind](text, name=name)


def write_text(path: str, text: str) -> None:
    """Write atomically: the target never holds a partial file."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
