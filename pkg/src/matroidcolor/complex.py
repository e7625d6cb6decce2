"""Abstract simplicial complexes stored by their facets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .bitset import elements, fmt, is_subset, lex_key, maximal, size, submasks
from .errors import DomainError


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed family over ``ground``.

    ``facets`` is the canonical form.  An empty facet tuple is the void
    complex (no faces at all); ``(0,)`` is the complex whose only face is
    the empty set.
    """

    ground: int
    facets: tuple[int, ...]

    def __init__(self, ground: int, facets: Iterable[int]):
        facets = list(facets)
        for f in facets:
            if not is_subset(f, ground):
                raise DomainError(f"facet {fmt(f)} is not inside the ground set {fmt(ground)}")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "facets", tuple(maximal(facets)))

    @classmethod
    def void(cls, ground: int = 0) -> "SimplicialComplex":
        return cls(ground, [])

    @classmethod
    def simplex(cls, ground: int) -> "SimplicialComplex":
        return cls(ground, [ground])

    @classmethod
    def from_faces(cls, ground: int, faces: Iterable[int]) -> "SimplicialComplex":
        """Build from an explicit face family, which must be downward closed."""
        faces = set(faces)
        c = cls(ground, faces)
        if c.faces != frozenset(faces):
            raise DomainError("face family is not downward closed")
        return c

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> int:
        """Dimension; -1 for {∅} and (by convention here) -2 for the void complex."""
        if not self.facets:
            return -2
        return max(size(f) for f in self.facets) - 1

    @cached_property
    def faces(self) -> frozenset[int]:
        out: set[int] = set()
        for f in self.facets:
            if f in out:
                continue
            out.update(submasks(f))
        return frozenset(out)

    def faces_by_size(self) -> list[list[int]]:
        """Faces grouped by cardinality, each group sorted lexicographically."""
        if self.is_void:
            return []
        groups: list[list[int]] = [[] for _ in range(self.dim + 2)]
        for f in self.faces:
            groups[size(f)].append(f)
        for g in groups:
            g.sort(key=lex_key)
        return groups

    def vertices(self) -> int:
        """Union of all faces."""
        u = 0
        for f in self.facets:
            u |= f
        return u

    def covers_ground(self) -> bool:
        return self.vertices() == self.ground

    def __contains__(self, s: int) -> bool:
        return any(s & ~f == 0 for f in self.facets)

    def __repr__(self) -> str:
        if self.is_void:
            return f"SimplicialComplex({fmt(self.ground)}, void)"
        return f"SimplicialComplex({fmt(self.ground)}, [{', '.join(fmt(f) for f in self.facets)}])"


def contains(c: SimplicialComplex, s: int) -> bool:
    if not is_subset(s, c.ground):
        raise DomainError(f"{fmt(s)} is not inside the ground set")
    return s in c


def circ(c: SimplicialComplex) -> list[int]:
    """Minimal non-faces: sets outside ``c`` all of whose one-smaller subsets are faces."""
    if c.is_void:
        raise DomainError("circ of the void complex is undefined")
    faces = c.faces
    out = []
    # a minimal non-face is a face plus one element
    candidates = {f | (1 << v) for f in faces for v in elements(c.ground & ~f)}
    for e in candidates:
        if e in faces:
            continue
        if all(e & ~(1 << x) in faces for x in elements(e)):
            out.append(e)
    return sorted(out, key=lex_key)


def duality_roundtrip(c: SimplicialComplex) -> bool:
    """Whether the independence complex of (ground, circ(c)) is ``c`` again."""
    from .hypergraph import Hypergraph, independence_complex

    if not c.covers_ground():
        raise DomainError("some ground element lies in no face")
    return independence_complex(Hypergraph(c.ground, circ(c))) == c


def join(c: SimplicialComplex, d: SimplicialComplex) -> SimplicialComplex:
    if c.ground & d.ground:
        raise DomainError("join needs disjoint ground sets")
    return SimplicialComplex(c.ground | d.ground, [f | g for f in c.facets for g in d.facets])


def _same_ground(c: SimplicialComplex, d: SimplicialComplex) -> None:
    if c.ground != d.ground:
        raise DomainError(f"ground sets differ: {fmt(c.ground)} vs {fmt(d.ground)}")


def union(c: SimplicialComplex, d: SimplicialComplex) -> SimplicialComplex:
    _same_ground(c, d)
    return SimplicialComplex(c.ground, c.facets + d.facets)


def intersection(c: SimplicialComplex, d: SimplicialComplex) -> SimplicialComplex:
    _same_ground(c, d)
    return SimplicialComplex(c.ground, [f & g for f in c.facets for g in d.facets])


def restrict_complex(c: SimplicialComplex, s: int) -> SimplicialComplex:
    """The induced subcomplex on ``s``."""
    if s == 0:
        raise DomainError("restriction to the empty set")
    if not is_subset(s, c.ground):
        raise DomainError(f"{fmt(s)} is not inside the ground set")
    return SimplicialComplex(s, [f & s for f in c.facets])


def cone(c: SimplicialComplex, apex: int) -> SimplicialComplex:
    return join(SimplicialComplex.simplex(1 << apex), c)
