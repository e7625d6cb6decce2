"""Matroids given by an independence oracle, with lazily derived circuits,
bases and rank.

Minors are taken on the circuit representation ``(ground, circuits)`` using
the literal hypergraph operators, so they may acquire loops even though the
public constructors refuse them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Optional, Sequence

from . import hypergraph as hg
from .bitset import elements, fmt, full, lex_key, mask_of, maximal, minimal, size, sort_sets, submasks
from .complex import SimplicialComplex
from .errors import DomainError, InvalidCircuitsError, LoopNotSupportedError, NotAMatroidError, ResourceError

AXIOM_CHECK_LIMIT = 10


class Matroid:
    def __init__(self, ground: int, is_independent: Callable[[int], bool], name: str = ""):
        self.ground = ground
        self._oracle = is_independent
        self.name = name

    @classmethod
    def from_circuit_family(cls, ground: int, circuits: Iterable[int], name: str = "") -> "Matroid":
        """Independent sets are the sets containing no member of ``circuits``.

        No validation; callers that accept user input go through
        :func:`from_circuits`.
        """
        circuits = tuple(minimal(circuits))
        m = cls(ground, lambda s: not any(c & ~s == 0 for c in circuits), name)
        m.__dict__["circuits"] = circuits
        return m

    def __repr__(self) -> str:
        label = self.name or "Matroid"
        return f"<{label} on {fmt(self.ground)}>"

    def is_independent(self, s: int) -> bool:
        if s & ~self.ground:
            raise DomainError(f"{fmt(s)} is not inside the ground set")
        return s in self.independent_sets

    @property
    def n(self) -> int:
        return size(self.ground)

    @cached_property
    def independent_sets(self) -> frozenset[int]:
        # grow level by level; downward closure means only extensions of
        # independent sets need testing
        found = {0} if self._oracle(0) else set()
        level = set(found)
        ground = elements(self.ground)
        while level:
            nxt = set()
            for s in level:
                for v in ground:
                    t = s | (1 << v)
                    if t != s and t not in nxt and t not in found and self._oracle(t):
                        nxt.add(t)
            found |= nxt
            level = nxt
        return frozenset(found)

    @cached_property
    def circuits(self) -> tuple[int, ...]:
        indep = self.independent_sets
        cands = {s | (1 << v) for s in indep for v in elements(self.ground & ~s)}
        out = [c for c in cands if c not in indep and all(c & ~(1 << x) in indep for x in elements(c))]
        return tuple(sort_sets(out))

    @cached_property
    def greedy_bases(self) -> dict[int, int]:
        """For every subset X of the ground, the greedy basis of X (ascending order)."""
        table = {0: 0}
        indep = self.independent_sets
        for x in sorted(submasks(self.ground)):
            if x == 0:
                continue
            top = 1 << (x.bit_length() - 1)
            b = table[x & ~top]
            table[x] = b | top if (b | top) in indep else b
        return table

    def rank(self, x: Optional[int] = None) -> int:
        if x is None:
            x = self.ground
        if x & ~self.ground:
            raise DomainError(f"{fmt(x)} is not inside the ground set")
        return size(self.greedy_bases[x])

    @cached_property
    def bases(self) -> tuple[int, ...]:
        r = self.rank()
        return tuple(sort_sets(s for s in self.independent_sets if size(s) == r))

    @cached_property
    def complex(self) -> SimplicialComplex:
        return SimplicialComplex(self.ground, self.bases)

    @property
    def loops(self) -> int:
        return mask_of(v for v in elements(self.ground) if not (1 << v) in self.independent_sets)

    def circuit_hypergraph(self) -> hg.Hypergraph:
        return hg.Hypergraph(self.ground, self.circuits)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.ground == other.ground and self.independent_sets == other.independent_sets

    def __hash__(self) -> int:
        return hash((self.ground, self.bases))


def _reject_loops(m: Matroid) -> Matroid:
    if m.loops:
        raise LoopNotSupportedError(f"elements {elements(m.loops)} are loops")
    return m


def from_circuits(n: int, circuits: Iterable[Iterable[int]] | Iterable[int]) -> Matroid:
    """The matroid on ``range(n)`` with exactly the given circuits."""
    masks = [c if isinstance(c, int) else mask_of(c) for c in circuits]
    h = hg.Hypergraph(full(n), masks)
    violation = hg.check_circuit_axioms(h)
    if violation is not None:
        raise InvalidCircuitsError(violation)
    if any(size(c) == 1 for c in h.edges):
        raise LoopNotSupportedError("singleton circuit")
    return Matroid.from_circuit_family(full(n), h.edges, "circuits")


def uniform(n: int, k: int) -> Matroid:
    if not 0 <= k <= n:
        raise DomainError(f"uniform matroid needs 0 <= k <= n, got k={k}, n={n}")
    return _reject_loops(Matroid(full(n), lambda s: size(s) <= k, f"U({k},{n})"))


def free(n: int) -> Matroid:
    return uniform(n, n)


def partition(parts: Sequence[Iterable[int]], capacities: Sequence[int]) -> Matroid:
    part_masks = [p if isinstance(p, int) else mask_of(p) for p in parts]
    if len(part_masks) != len(capacities):
        raise DomainError("one capacity per part is required")
    ground = 0
    for p in part_masks:
        if p & ground:
            raise DomainError("parts overlap")
        ground |= p
    if ground != full(ground.bit_length()):
        raise DomainError("parts must cover 0..n-1")
    if any(c < 1 for c in capacities):
        raise DomainError("capacities must be at least 1")
    pairs = list(zip(part_masks, capacities))
    return Matroid(ground, lambda s: all(size(s & p) <= c for p, c in pairs), "partition")


def graphic(num_vertices: int, edges: Sequence[tuple[int, int]]) -> Matroid:
    """Cycle matroid of a multigraph; element ``i`` is ``edges[i]``."""
    for u, v in edges:
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise DomainError(f"edge ({u}, {v}) uses an unknown vertex")

    def acyclic(s: int) -> bool:
        parent = list(range(num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in elements(s):
            a, b = find(edges[i][0]), find(edges[i][1])
            if a == b:
                return False
            parent[a] = b
        return True

    return _reject_loops(Matroid(full(len(edges)), acyclic, "graphic"))


def transversal(n: int, family: Sequence[Iterable[int]]) -> Matroid:
    """Partial transversals of ``family``: sets matchable to distinct members."""
    sets = [a if isinstance(a, int) else mask_of(a) for a in family]
    if any(a & ~full(n) for a in sets):
        raise DomainError("family members must lie in 0..n-1")

    def matchable(s: int) -> bool:
        owner: dict[int, int] = {}  # member index -> element

        def augment(v: int, seen: set[int]) -> bool:
            for i, a in enumerate(sets):
                if a >> v & 1 and i not in seen:
                    seen.add(i)
                    if i not in owner or augment(owner[i], seen):
                        owner[i] = v
                        return True
            return False

        return all(augment(v, set()) for v in elements(s))

    return _reject_loops(Matroid(full(n), matchable, "transversal"))


@dataclass(frozen=True)
class AxiomCounterexample:
    kind: str  # "empty-missing" | "augmentation"
    s: int = 0
    t: int = 0

    def __str__(self) -> str:
        if self.kind == "empty-missing":
            return "the empty set is not independent"
        return f"{self.kind}: S={fmt(self.s)}, T={fmt(self.t)}"


def verify_matroid_axioms(c: SimplicialComplex) -> Optional[AxiomCounterexample]:
    """Exhaustive augmentation check; returns the first failing (S, T) or None."""
    if size(c.ground) > AXIOM_CHECK_LIMIT:
        raise ResourceError(f"axiom check limited to {AXIOM_CHECK_LIMIT} elements")
    if c.is_void:
        return AxiomCounterexample("empty-missing")
    faces = sorted(c.faces, key=lex_key)
    face_set = c.faces
    for s in faces:
        for t in faces:
            if size(s) < size(t) and not any(s | (1 << v) in face_set for v in elements(t & ~s)):
                return AxiomCounterexample("augmentation", s, t)
    return None


def from_independent_sets(n: int, family: Iterable[Iterable[int]] | Iterable[int]) -> Matroid:
    """Matroid whose independent sets are the downward closure of ``family``."""
    masks = [s if isinstance(s, int) else mask_of(s) for s in family]
    c = SimplicialComplex(full(n), masks)
    bad = verify_matroid_axioms(c)
    if bad is not None:
        raise NotAMatroidError(bad)
    faces = c.faces
    return _reject_loops(Matroid(full(n), lambda s: s in faces, "independent"))


def _check_inside(m: Matroid, x: int) -> None:
    if x & ~m.ground:
        raise DomainError(f"{fmt(x)} is not inside the ground set {fmt(m.ground)}")


def minor_restrict(m: Matroid, x: int) -> Matroid:
    """M[X]."""
    _check_inside(m, x)
    h = hg.restrict(m.circuit_hypergraph(), x)
    return Matroid.from_circuit_family(h.vertices, h.edges, f"{m.name}[{fmt(x)}]")


def minor_contract(m: Matroid, x: int) -> Matroid:
    """M / X; the contracted circuit family is minimalized."""
    _check_inside(m, x)
    h = hg.contract(m.circuit_hypergraph(), x)
    return Matroid.from_circuit_family(h.vertices, h.edges, f"{m.name}/{fmt(x)}")


def minor_sim(m: Matroid, x: int) -> Matroid:
    """M ~ X: every circuit meeting X is dropped, the ground is kept."""
    _check_inside(m, x)
    h = hg.sim(m.circuit_hypergraph(), x)
    return Matroid.from_circuit_family(h.vertices, h.edges, f"{m.name}~{fmt(x)}")


def sim_element(m: Matroid, v: int) -> Matroid:
    return minor_sim(m, 1 << v)


def bases(m: Matroid) -> list[int]:
    return list(m.bases)


def rank(m: Matroid, x: int) -> int:
    return m.rank(x)


def intersection_complex(*matroids: Matroid) -> SimplicialComplex:
    """Common independent sets of all the matroids, as a complex."""
    ground = matroids[0].ground
    for m in matroids[1:]:
        if m.ground != ground:
            raise DomainError("matroids live on different ground sets")
    common = set(matroids[0].independent_sets)
    for m in matroids[1:]:
        common &= m.independent_sets
    return SimplicialComplex(ground, maximal(common))


def common_independent_sets(m: Matroid, n: Matroid) -> list[int]:
    if m.ground != n.ground:
        raise DomainError("matroids live on different ground sets")
    return sort_sets(m.independent_sets & n.independent_sets)


def is_subset_matroid(m: Matroid, other: Matroid) -> bool:
    """Whether every independent set of ``m`` is independent in ``other``."""
    return m.ground == other.ground and all(s in other.independent_sets for s in m.bases)

