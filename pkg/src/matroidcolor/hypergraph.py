"""Finite hypergraphs and the vertex/edge operators used by the bound engine.

A hypergraph is a vertex mask together with a set of edge masks.  All
operators are literal: contraction may produce nested edges and nothing is
minimalized here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .bitset import elements, fmt, is_subset, lex_key, mask_of, maximal, submasks
from .errors import DomainError, NotFoundError


@dataclass(frozen=True)
class Hypergraph:
    vertices: int
    edges: tuple[int, ...]

    def __init__(self, vertices: int, edges: Iterable[int] = ()):
        edges = tuple(sorted(set(edges), key=lex_key))
        for e in edges:
            if not is_subset(e, vertices):
                raise DomainError(f"edge {fmt(e)} is not inside the vertex set {fmt(vertices)}")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_lists(cls, vertices: Iterable[int], edges: Iterable[Iterable[int]]) -> "Hypergraph":
        return cls(mask_of(vertices), [mask_of(e) for e in edges])

    def __repr__(self) -> str:
        return f"Hypergraph({fmt(self.vertices)}, [{', '.join(fmt(e) for e in self.edges)}])"

    def is_independent(self, s: int) -> bool:
        return not any(e & ~s == 0 for e in self.edges)

    def minimal_edges(self) -> list[int]:
        """Edges that contain no other edge."""
        return [e for e in self.edges if not any(f != e and f & ~e == 0 for f in self.edges)]


def _check_inside(h: Hypergraph, x: int) -> None:
    if not is_subset(x, h.vertices):
        raise DomainError(f"{fmt(x)} is not a subset of the vertex set {fmt(h.vertices)}")


def delete_edge(h: Hypergraph, e: int) -> Hypergraph:
    """H - e."""
    if e not in h.edges:
        raise NotFoundError(f"{fmt(e)} is not an edge")
    return Hypergraph(h.vertices, [f for f in h.edges if f != e])


def restrict(h: Hypergraph, x: int) -> Hypergraph:
    """H[X]: vertex set X, edges contained in X."""
    _check_inside(h, x)
    return Hypergraph(x, [e for e in h.edges if e & ~x == 0])


def contract(h: Hypergraph, x: int) -> Hypergraph:
    """H / X: edges e - X for every edge not inside X."""
    _check_inside(h, x)
    return Hypergraph(h.vertices & ~x, [e & ~x for e in h.edges if e & ~x])


def delete_vertices(h: Hypergraph, x: int) -> Hypergraph:
    """H \\ X: drop X and every edge meeting it."""
    _check_inside(h, x)
    return Hypergraph(h.vertices & ~x, [e for e in h.edges if not e & x])


def sim(h: Hypergraph, x: int) -> Hypergraph:
    """H ~ X: like ``delete_vertices`` but the vertex set is kept."""
    _check_inside(h, x)
    return Hypergraph(h.vertices, [e for e in h.edges if not e & x])


def independent_sets(h: Hypergraph) -> list[int]:
    return [s for s in submasks(h.vertices) if h.is_independent(s)]


def independence_complex(h: Hypergraph):
    """The complex of edge-free vertex subsets, stored by its facets."""
    from .complex import SimplicialComplex

    if 0 in h.edges:
        return SimplicialComplex.void(h.vertices)
    return SimplicialComplex(h.vertices, maximal(independent_sets(h)))


@dataclass(frozen=True)
class CircuitViolation:
    kind: str  # "empty-edge" | "nested-pair" | "elimination-failure"
    edges: tuple[int, ...]
    u: Optional[int] = None
    v: Optional[int] = None

    def __str__(self) -> str:
        s = f"{self.kind} on {', '.join(fmt(e) for e in self.edges)}"
        if self.u is not None:
            s += f" (u={self.u}, v={self.v})"
        return s

    def to_json(self) -> dict:
        return {"kind": self.kind, "edges": [elements(e) for e in self.edges], "u": self.u, "v": self.v}


def check_circuit_axioms(h: Hypergraph) -> Optional[CircuitViolation]:
    """Return ``None`` if the edges form a circuit family, else the first violation."""
    edges = h.edges
    if 0 in edges:
        return CircuitViolation("empty-edge", (0,))
    for c1 in edges:
        for c2 in edges:
            if c1 != c2 and c1 & ~c2 == 0:
                return CircuitViolation("nested-pair", (c1, c2))
    for c1 in edges:
        for c2 in edges:
            if c1 == c2:
                continue
            for u in elements(c1 & c2):
                allowed = (c1 | c2) & ~(1 << u)
                for v in elements(c1 & ~c2):
                    if not any(c3 >> v & 1 and c3 & ~allowed == 0 for c3 in edges):
                        return CircuitViolation("elimination-failure", (c1, c2), u, v)
    return None

