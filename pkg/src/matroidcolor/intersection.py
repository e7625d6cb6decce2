"""Maximum common independent set by augmenting paths, with a min-max certificate."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .bitset import elements, fmt, size
from .errors import DomainError
from .matroid import Matroid


@dataclass(frozen=True)
class IntersectionCertificate:
    """``common`` is independent in both matroids and
    ``|common| = rank_M(v1) + rank_N(v2)`` for the bipartition ``(v1, v2)``."""

    common: int
    v1: int
    v2: int

    @property
    def size(self) -> int:
        return size(self.common)

    def check(self, m: Matroid, n: Matroid) -> bool:
        return (
            self.v1 | self.v2 == m.ground
            and not self.v1 & self.v2
            and m.is_independent(self.common)
            and n.is_independent(self.common)
            and size(self.common & self.v1) == m.rank(self.v1)
            and size(self.common & self.v2) == n.rank(self.v2)
            and self.size == m.rank(self.v1) + n.rank(self.v2)
        )

    def to_json(self) -> dict:
        return {"I": elements(self.common), "V1": elements(self.v1), "V2": elements(self.v2), "size": self.size}


def _exchange_graph(m: Matroid, n: Matroid, cur: int) -> dict[int, list[int]]:
    """Arcs y -> x when I - y + x is M-independent, x -> y when it is N-independent."""
    inside = elements(cur)
    outside = elements(m.ground & ~cur)
    arcs: dict[int, list[int]] = {v: [] for v in elements(m.ground)}
    for y in inside:
        base = cur & ~(1 << y)
        for x in outside:
            swapped = base | (1 << x)
            if m.is_independent(swapped):
                arcs[y].append(x)
            if n.is_independent(swapped):
                arcs[x].append(y)
    for v in arcs:
        arcs[v].sort()
    return arcs


def max_common_independent(m: Matroid, n: Matroid) -> IntersectionCertificate:
    if m.ground != n.ground:
        raise DomainError(f"ground sets differ: {fmt(m.ground)} vs {fmt(n.ground)}")
    cur = 0
    while True:
        outside = elements(m.ground & ~cur)
        sources = [x for x in outside if m.is_independent(cur | 1 << x)]
        sinks = {x for x in outside if n.is_independent(cur | 1 << x)}
        arcs = _exchange_graph(m, n, cur)
        # BFS from all sources at once gives a shortest path; lowest index wins ties
        parent = {x: None for x in sources}
        queue = deque(sources)
        end = None
        while queue:
            u = queue.popleft()
            if u in sinks:
                end = u
                break
            for w in arcs[u]:
                if w not in parent:
                    parent[w] = u
                    queue.append(w)
        if end is None:
            reached = 0
            for v in parent:
                reached |= 1 << v
            return IntersectionCertificate(cur, m.ground & ~reached, reached)
        u = end
        while u is not None:
            cur ^= 1 << u
            u = parent[u]


def nu11(m: Matroid, n: Matroid) -> int:
    return max_common_independent(m, n).size
