"""JSON documents for spaces, lattices and posets."""

from __future__ import annotations

import json
from typing import Any

from .core import FinSpace, points_of, validate_space
from .errors import NotDistributive, SchemaError
from .frames import FiniteLattice, build_lattice, validate_frame

KINDS = ("space", "lattice", "poset")


def _require(doc: dict, key: str, path: str):
    if key not in doc:
        raise SchemaError(f"missing key {key!r}", f"{path}.{key}")
    return doc[key]


def _nat(value: Any, path: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise SchemaError("expected a non-negative integer", path)
    return value


def _pairs(value: Any, size: int, path: str) -> list:
    if not isinstance(value, list):
        raise SchemaError("expected a list of pairs", path)
    out = []
    for k, pair in enumerate(value):
        p = f"{path}[{k}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise SchemaError("expected a pair [i, j]", p)
        i, j = (_nat(x, f"{p}[{t}]") for t, x in enumerate(pair))
        if i >= size or j >= size:
            raise SchemaError(f"index out of range 0..{size - 1}", p)
        out.append((i, j))
    return out


def parse_document(doc: Any):
    """Validate a decoded JSON document and build the object it describes.

    Spaces come back as :class:`FinSpace`, lattices as
    :class:`FiniteLattice` (a :class:`FiniteFrame` when distributive) and
    posets as :class:`~mtkit.completions.FinPoset`.
    """
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object", "$")
    kind = _require(doc, "kind", "$")
    if kind not in KINDS:
        raise SchemaError(f"unknown kind {kind!r}", "$.kind")
    if kind == "space":
        n = _nat(_require(doc, "points", "$"), "$.points")
        opens = _require(doc, "opens", "$")
        if not isinstance(opens, list):
            raise SchemaError("expected a list of open sets", "$.opens")
        masks = []
        for k, u in enumerate(opens):
            if not isinstance(u, list):
                raise SchemaError("expected a list of point indices", f"$.opens[{k}]")
            mask = 0
            for t, x in enumerate(u):
                x = _nat(x, f"$.opens[{k}][{t}]")
                if x >= n:
                    raise SchemaError(f"point index out of range 0..{n - 1}", f"$.opens[{k}][{t}]")
                mask |= 1 << x
            masks.append(mask)
        return validate_space(n, masks)
    m = _nat(_require(doc, "elements", "$"), "$.elements")
    pairs = _pairs(_require(doc, "leq", "$"), m, "$.leq")
    if kind == "poset":
        from .completions import validate_poset
        return validate_poset(m, pairs)
    up = [1 << i for i in range(m)]
    for i, j in pairs:
        up[i] |= 1 << j
    L = build_lattice(m, up)
    try:
        return validate_frame(L)
    except NotDistributive:
        return L


def loads(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg}", "$") from None
    return parse_document(doc)


def load(path: str):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def space_document(M: FinSpace) -> dict:
    return {"kind": "space", "points": M.n,
            "opens": [list(points_of(u)) for u in sorted(M.opens)]}


def lattice_document(L: FiniteLattice) -> dict:
    return {"kind": "lattice", "elements": L.m,
            "leq": [list(p) for p in sorted(L.leq_pairs())]}


def poset_document(P) -> dict:
    return {"kind": "poset", "elements": P.m,
            "leq": [[i, j] for i in range(P.m) for j in range(P.m) if P.leq(i, j)]}


def serialize(obj) -> dict:
    from .completions import FinPoset
    if isinstance(obj, FinSpace):
        return space_document(obj)
    if isinstance(obj, FiniteLattice):
        return lattice_document(obj)
    if isinstance(obj, FinPoset):
        return poset_document(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(serialize(obj), sort_keys=True)


def io_roundtrip(doc: Any):
    """Parse, serialize and parse again; the canonical forms must agree."""
    first = parse_document(doc)
    canon = serialize(first)
    second = parse_document(canon)
    if serialize(second) != canon:
        raise AssertionError("roundtrip changed the canonical form")
    return second
