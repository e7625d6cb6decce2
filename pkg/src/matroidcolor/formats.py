"""JSON encodings for hypergraphs, complexes, matroids and exact values.

Elements are 0-based indices below ``n``.  Connectivity values encode
infinity as the string ``"inf"`` and fractions as ``"num/den"``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

from . import matroid as mt
from .bitset import elements, full, mask_of
from .complex import SimplicialComplex
from .errors import DomainError
from .homology import INF, Eta
from .hypergraph import Hypergraph


def _elements_below(n: int, sets: Any, what: str) -> list[int]:
    if not isinstance(sets, list):
        raise DomainError(f"{what} must be a list of lists")
    out = []
    for s in sets:
        if not isinstance(s, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in s):
            raise DomainError(f"{what} must be a list of lists of ints")
        if any(not 0 <= v < n for v in s):
            raise DomainError(f"{what} entry {s} has an element outside 0..{n - 1}")
        out.append(mask_of(s))
    return out


def _size(data: dict, key: str = "n") -> int:
    n = data.get(key)
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"field {key!r} must be a non-negative int")
    return n


def hypergraph_from_json(data: dict) -> Hypergraph:
    n = _size(data)
    vertices = mask_of(data["vertices"]) if "vertices" in data else full(n)
    if vertices & ~full(n):
        raise DomainError("vertices must lie below n")
    return Hypergraph(vertices, _elements_below(n, data.get("edges", []), "edges"))


def hypergraph_to_json(h: Hypergraph) -> dict:
    n = h.vertices.bit_length()
    out: dict[str, Any] = {"n": n, "edges": [elements(e) for e in h.edges]}
    if h.vertices != full(n):
        out["vertices"] = elements(h.vertices)
    return out


def complex_from_json(data: dict) -> SimplicialComplex:
    n = _size(data)
    ground = mask_of(data["ground"]) if "ground" in data else full(n)
    if data.get("facets") is None:
        return SimplicialComplex.void(ground)
    facets = _elements_below(n, data["facets"], "facets")
    if any(f & ~ground for f in facets):
        raise DomainError("facets must lie inside the ground set")
    return SimplicialComplex(ground, facets)


def complex_to_json(c: SimplicialComplex) -> dict:
    n = c.ground.bit_length()
    out: dict[str, Any] = {"n": n, "facets": None if c.is_void else [elements(f) for f in c.facets]}
    if c.ground != full(n):
        out["ground"] = elements(c.ground)
    return out


def matroid_from_json(data: dict) -> mt.Matroid:
    kind = data.get("type")
    if kind == "uniform":
        return mt.uniform(_size(data), _size(data, "k"))
    if kind == "partition":
        parts = data.get("parts")
        if not isinstance(parts, list):
            raise DomainError("partition needs 'parts'")
        n = sum(len(p) for p in parts)
        return mt.partition(_elements_below(n, parts, "parts"), list(data.get("capacities", [])))
    if kind == "graphic":
        edges = data.get("edges")
        if not isinstance(edges, list) or any(not isinstance(e, list) or len(e) != 2 for e in edges):
            raise DomainError("graphic needs 'edges' as [u, v] pairs")
        return mt.graphic(_size(data, "vertices"), [tuple(e) for e in edges])
    if kind == "transversal":
        n = _size(data)
        return mt.transversal(n, _elements_below(n, data.get("family", []), "family"))
    if kind == "circuits":
        n = _size(data)
        return mt.from_circuits(n, _elements_below(n, data.get("circuits", []), "circuits"))
    if kind == "independent":
        n = _size(data)
        return mt.from_independent_sets(n, _elements_below(n, data.get("sets", []), "sets"))
    raise DomainError(f"unknown matroid type {kind!r}")


def matroid_to_json(m: mt.Matroid) -> dict:
    """Circuit form; round-trips any loopless matroid on ``0..n-1``."""
    n = m.ground.bit_length()
    if m.ground != full(n):
        raise DomainError("only matroids on 0..n-1 can be written")
    return {"type": "circuits", "n": n, "circuits": [elements(c) for c in m.circuits]}


def load_json(path: Union[str, Path]) -> Any:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise DomainError(f"{path}: invalid JSON ({exc})") from exc


def load_object(path: Union[str, Path]) -> Union[Hypergraph, SimplicialComplex, mt.Matroid]:
    """Dispatch on shape: ``type`` means matroid, ``facets`` complex, ``edges`` hypergraph."""
    data = load_json(path)
    if not isinstance(data, dict):
        raise DomainError(f"{path}: expected a JSON object")
    if "type" in data:
        return matroid_from_json(data)
    if "facets" in data:
        return complex_from_json(data)
    if "edges" in data:
        return hypergraph_from_json(data)
    raise DomainError(f"{path}: cannot tell what this object is")


def eta_to_json(e: Eta) -> Union[int, str]:
    return "inf" if e == INF else int(e)


def eta_from_json(v: Union[int, str]) -> Eta:
    return INF if v == "inf" else int(v)


def fraction_to_json(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def fraction_from_json(s: str) -> Fraction:
    return Fraction(s)


def to_jsonable(value: Any) -> Any:
    """Best-effort conversion of report values for JSON output."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, float) and value == INF:
        return "inf"
    if isinstance(value, Fraction):
        return fraction_to_json(value)
    if isinstance(value, (int, float)):
        return value
    if isinstance(value, mt.Matroid):
        return matroid_to_json(value)
    if isinstance(value, SimplicialComplex):
        return complex_to_json(value)
    if isinstance(value, Hypergraph):
        return hypergraph_to_json(value)
    if hasattr(value, "to_json"):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "__dataclass_fields__"):
        return {k: to_jsonable(getattr(value, k)) for k in value.__dataclass_fields__}
    return repr(value)


def dumps(value: Any) -> str:
    return json.dumps(to_jsonable(value), sort_keys=True)

