"""Chromatic and list-chromatic numbers of complexes.

The list-chromatic search never enumerates raw color lists.  A list
assignment only matters through its *color classes* ``V_c = {v : c in L_v}``:
it is colorable iff the ground can be covered by picking, for each color,
one face inside its class.  So an assignment up to renaming colors is a
multiset of vertex sets in which every vertex lies in exactly ``k`` sets.
A vertex owning a color nobody else has can always take it, so it is
enough to check, for every nonempty S, the multisets on S whose classes all
have at least two vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import ceil
from typing import Optional, Sequence

from .bitset import elements, fmt, lex_key, maximal, size, submasks
from .complex import SimplicialComplex
from .errors import DomainError, NoColoringError, ResourceError, TheoremViolation
from .matroid import Matroid, intersection_complex

LIST_GROUND_LIMIT = 6
LIST_K_LIMIT = 3


@dataclass(frozen=True)
class Coloring:
    classes: tuple[int, ...]

    @property
    def assignment(self) -> dict[int, int]:
        return {v: i for i, cls in enumerate(self.classes) for v in elements(cls)}

    def is_valid_for(self, c: SimplicialComplex) -> bool:
        union = 0
        for cls in self.classes:
            if cls & union or cls not in c:
                return False
            union |= cls
        return union == c.ground


def _min_cover(ground: int, facets: tuple[int, ...]) -> list[int]:
    """Fewest facets covering ``ground``; branch on the lowest uncovered element."""
    memo: dict[int, Optional[list[int]]] = {0: []}
    by_element = {v: [f for f in facets if f >> v & 1] for v in elements(ground)}

    def best(rest: int) -> Optional[list[int]]:
        if rest in memo:
            return memo[rest]
        low = (rest & -rest).bit_length() - 1
        answer = None
        for f in by_element[low]:
            sub = best(rest & ~f)
            if sub is not None and (answer is None or len(sub) + 1 < len(answer)):
                answer = [f] + sub
        memo[rest] = answer
        return answer

    return best(ground)


def chi(c: SimplicialComplex) -> tuple[int, Coloring]:
    """Minimum number of faces covering the ground, with a partition witness."""
    if not c.covers_ground():
        raise NoColoringError(f"elements {elements(c.ground & ~c.vertices())} lie in no face")
    if c.ground == 0:
        return 0, Coloring(())
    cover = _min_cover(c.ground, c.facets)
    classes, seen = [], 0
    for f in cover:
        classes.append(f & ~seen)
        seen |= f
    return len(cover), Coloring(tuple(classes))


def chi_matroid(m: Matroid) -> int:
    """max over nonempty X of ceil(|X| / rank(X))."""
    if m.loops:
        raise DomainError(f"matroid has loops {elements(m.loops)}")
    return max((ceil(size(x) / m.rank(x)) for x in submasks(m.ground) if x), default=0)


@lru_cache(maxsize=None)
def _regular_families(m: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Multisets of subsets of range(m), each of size >= 2, covering every element exactly k times."""
    rem = [k] * m
    chosen: list[int] = []
    out: list[tuple[int, ...]] = []
    cands_by_min = [
        [t for t in sorted(range(1 << m), key=lex_key) if size(t) >= 2 and (t & -t) == 1 << v] for v in range(m)
    ]

    def live_mask() -> int:
        return sum(1 << v for v in range(m) if rem[v] > 0)

    def step() -> None:
        live = live_mask()
        if not live:
            out.append(tuple(chosen))
            return
        u = (live & -live).bit_length() - 1
        pick(cands_by_min[u], 0, rem[u])

    def pick(cands: list[int], start: int, left: int) -> None:
        if left == 0:
            step()
            return
        live = live_mask()
        for j in range(start, len(cands)):
            t = cands[j]
            if t & ~live:
                continue
            for v in elements(t):
                rem[v] -= 1
            chosen.append(t)
            pick(cands, j, left - 1)
            chosen.pop()
            for v in elements(t):
                rem[v] += 1

    step()
    return tuple(out)


def _deposit_table(s: int) -> list[int]:
    """Relative mask over positions of ``s`` -> absolute mask."""
    verts = elements(s)
    table = [0] * (1 << len(verts))
    for x in range(1, len(table)):
        low = (x & -x).bit_length() - 1
        table[x] = table[x & (x - 1)] | 1 << verts[low]
    return table


def _list_colorable(ground: int, classes: Sequence[int], options: dict[int, list[int]]) -> bool:
    def go(covered: int, used: int) -> bool:
        rest = ground & ~covered
        if not rest:
            return True
        low = rest & -rest
        for i, cls in enumerate(classes):
            if used >> i & 1 or not cls & low:
                continue
            for f in options[cls]:
                if f & low and go(covered | f, used | 1 << i):
                    return True
        return False

    return go(0, 0)


@dataclass
class ListAssignment:
    lists: dict[int, frozenset[int]]

    def to_json(self) -> dict:
        return {str(v): sorted(cs) for v, cs in sorted(self.lists.items())}


def _as_list_assignment(ground: int, s: int, classes: list[int], k: int) -> ListAssignment:
    # vertices outside s get private colors
    lists = {v: frozenset(i for i, cls in enumerate(classes) if cls >> v & 1) for v in elements(s)}
    fresh = len(classes)
    for v in elements(ground & ~s):
        lists[v] = frozenset(range(fresh, fresh + k))
        fresh += k
    return ListAssignment(lists)


def find_bad_assignment(c: SimplicialComplex, k: int) -> Optional[ListAssignment]:
    """A k-list assignment admitting no proper choice, or None if c is k-choosable."""
    options: dict[int, list[int]] = {}
    for s in sorted((t for t in submasks(c.ground) if t), key=lambda t: (size(t), lex_key(t))):
        table = _deposit_table(s)
        for rel in _regular_families(size(s), k):
            classes = [table[x] for x in rel]
            for cls in classes:
                if cls not in options:
                    options[cls] = maximal(f & cls for f in c.facets)
            if not _list_colorable(s, classes, options):
                return _as_list_assignment(c.ground, s, classes, k)
    return None


@dataclass
class ChiListResult:
    value: Optional[int]  # None means "greater than k_max"
    k_max: int
    blocking: Optional[ListAssignment] = None  # defeats k = value - 1 (or k_max)

    def __str__(self) -> str:
        return str(self.value) if self.value is not None else f">{self.k_max}"


def chi_list(
    c: SimplicialComplex,
    k_max: int,
    ground_limit: int = LIST_GROUND_LIMIT,
    k_limit: int = LIST_K_LIMIT,
) -> ChiListResult:
    """Least k <= k_max such that every k-list assignment has a proper choice."""
    if size(c.ground) > ground_limit:
        raise ResourceError(f"chi_list limited to {ground_limit} ground elements")
    if k_max > k_limit:
        raise ResourceError(f"chi_list limited to k_max <= {k_limit}")
    if not c.covers_ground():
        raise NoColoringError(f"elements {elements(c.ground & ~c.vertices())} lie in no face")
    blocking = None
    if c.ground == 0:
        return ChiListResult(0, k_max)
    for k in range(1, k_max + 1):
        bad = find_bad_assignment(c, k)
        if bad is None:
            return ChiListResult(k, k_max, blocking)
        blocking = bad
    return ChiListResult(None, k_max, blocking)


@dataclass
class ChiSumReport:
    chi_m: int
    chi_n: int
    chi_intersection: int
    chi_list_intersection: Optional[int]
    witness: Coloring = field(repr=False)

    @property
    def bound(self) -> int:
        return self.chi_m + self.chi_n

    @property
    def slack(self) -> int:
        return self.bound - self.chi_intersection


def check_chi_sum(
    m: Matroid,
    n: Matroid,
    ground_limit: int = LIST_GROUND_LIMIT,
    k_limit: int = LIST_K_LIMIT,
) -> ChiSumReport:
    """chi(M & N) <= chi(M) + chi(N), plus the list version when within limits."""
    if m.ground != n.ground:
        raise DomainError(f"ground sets differ: {fmt(m.ground)} vs {fmt(n.ground)}")
    inter = intersection_complex(m, n)
    chi_m, _ = chi(m.complex)
    chi_n, _ = chi(n.complex)
    chi_mn, witness = chi(inter)
    bound = chi_m + chi_n
    chi_l = None
    if size(m.ground) <= ground_limit:
        # a value found below the search cap already settles the inequality
        res = chi_list(inter, min(bound, k_limit), ground_limit, k_limit)
        if res.value is None and bound <= k_limit:
            raise TheoremViolation(
                f"list chromatic number exceeds chi(M)+chi(N)={bound}", {"M": m, "N": n, "blocking": res.blocking}
            )
        chi_l = res.value
    rep = ChiSumReport(chi_m, chi_n, chi_mn, chi_l, witness)
    if chi_mn > bound:
        raise TheoremViolation(f"chi(M&N)={chi_mn} exceeds {bound}", {"M": m, "N": n})
    return rep
