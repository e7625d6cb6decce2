"""The packing parameter nu_{p,q}(M, N) and its witnesses.

Only the multiplicity vector of a tuple of independent sets matters, and a
nonnegative integer vector x is the multiplicity vector of k independent
sets of M exactly when x(X) <= k * rank_M(X) for every X.  Given the
p sets on one side with multiplicity vector a, no q sets on the other side
can beat ``min_X  a(V - X) + q * rank_N(X)`` (split the sum over X and its
complement).  ``nu_pq`` enumerates base multisets on the cheaper side,
takes that bound, and then builds explicit sets meeting it, so every
returned value comes with a certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import comb
from typing import Optional, Sequence

import numpy as np

from .bitset import elements, fmt, size
from .errors import DomainError, ResourceError, TheoremViolation
from .intersection import nu11
from .matroid import Matroid

NU_BUDGET = 10**7
_CHUNK = 2048


def multiplicity(v: int, sets: Sequence[int]) -> int:
    """Number of the given sets containing ``v``."""
    return sum(1 for s in sets if s >> v & 1)


def objective(a_sets: Sequence[int], b_sets: Sequence[int], ground: int) -> int:
    return sum(min(multiplicity(v, a_sets), multiplicity(v, b_sets)) for v in elements(ground))


class _Packing:
    """Rank data of one matroid in position coordinates 0..k-1."""

    def __init__(self, m: Matroid):
        self.matroid = m
        self.elems = elements(m.ground)
        k = len(self.elems)
        self.k = k
        idx = np.arange(1 << k)
        self.incidence = ((idx[None, :] >> np.arange(k)[:, None]) & 1).astype(np.int64)
        self.ranks = np.array([m.rank(self.to_mask_bits(x)) for x in range(1 << k)], dtype=np.int64)

    def to_mask_bits(self, x: int) -> int:
        out = 0
        for i, e in enumerate(self.elems):
            if x >> i & 1:
                out |= 1 << e
        return out

    def vector(self, sets: Sequence[int]) -> np.ndarray:
        return np.array([multiplicity(e, sets) for e in self.elems], dtype=np.int64)

    def feasible(self, vecs: np.ndarray, copies: int) -> np.ndarray:
        """Which rows are multiplicity vectors of ``copies`` independent sets."""
        out = np.empty(len(vecs), dtype=bool)
        for lo in range(0, len(vecs), _CHUNK):
            part = vecs[lo : lo + _CHUNK]
            out[lo : lo + _CHUNK] = (part >= 0).all(axis=1) & (part @ self.incidence <= copies * self.ranks).all(axis=1)
        return out

    def best_against(self, vecs: np.ndarray, copies: int) -> np.ndarray:
        """For each row a: max sum_v min(a_v, b_v) over b from ``copies`` independent sets."""
        out = np.empty(len(vecs), dtype=np.int64)
        for lo in range(0, len(vecs), _CHUNK):
            part = vecs[lo : lo + _CHUNK]
            bound = part.sum(axis=1)[:, None] - part @ self.incidence + copies * self.ranks[None, :]
            out[lo : lo + _CHUNK] = bound.min(axis=1)
        return out

    def fill_below(self, cap: np.ndarray, copies: int) -> np.ndarray:
        """A maximal vector c <= cap that is feasible; greedy is optimal here."""
        c = np.zeros(self.k, dtype=np.int64)
        for i in range(self.k):
            for t in range(int(cap[i]), 0, -1):
                c[i] = t
                if self.feasible(c[None, :], copies)[0]:
                    break
                c[i] = 0
        return c

    def decompose(self, vec: np.ndarray, copies: int) -> Optional[list[int]]:
        """Split ``vec`` into ``copies`` independent sets (element masks), or None."""
        if copies == 0:
            return [] if not vec.any() else None
        must = sum(1 << i for i in range(self.k) if vec[i] == copies)
        allowed = sum(1 << i for i in range(self.k) if vec[i] > 0)
        cands = sorted(
            (x for x in range(1 << self.k) if x & must == must and x & ~allowed == 0),
            key=lambda x: (-size(x), x),
        )
        for x in cands:
            if not self.matroid.is_independent(self.to_mask_bits(x)):
                continue
            rest = vec - self.incidence[:, x]
            if copies > 1 and not self.feasible(rest[None, :], copies - 1)[0]:
                continue
            tail = self.decompose(rest, copies - 1)
            if tail is not None:
                return [self.to_mask_bits(x)] + tail
        return None


@dataclass
class NuResult:
    value: int
    a_sets: list[int]
    b_sets: list[int]

    def check(self, m: Matroid, n: Matroid) -> bool:
        return (
            all(m.is_independent(s) for s in self.a_sets)
            and all(n.is_independent(s) for s in self.b_sets)
            and objective(self.a_sets, self.b_sets, m.ground) == self.value
        )

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "A": [elements(s) for s in self.a_sets],
            "B": [elements(s) for s in self.b_sets],
        }


def _same_ground(m: Matroid, n: Matroid) -> None:
    if m.ground != n.ground:
        raise DomainError(f"ground sets differ: {fmt(m.ground)} vs {fmt(n.ground)}")


def _check_pq(p: int, q: int) -> None:
    if p < 1 or q < 1:
        raise DomainError("p and q must be positive")


def _multiset_count(m: Matroid, p: int) -> int:
    return comb(len(m.bases) + p - 1, p)


def nu_pq(m: Matroid, n: Matroid, p: int, q: int, budget: int = NU_BUDGET) -> NuResult:
    _same_ground(m, n)
    _check_pq(p, q)
    swap = _multiset_count(n, q) < _multiset_count(m, p)
    if swap:
        m, n, p, q = n, m, q, p
    count = _multiset_count(m, p)
    if count * (1 << m.n) > budget:
        raise ResourceError(f"nu enumeration needs {count} multisets x {1 << m.n} subsets > budget {budget}")
    pm, pn = _Packing(m), _Packing(n)
    tuples = list(combinations_with_replacement(m.bases, p))
    vecs = np.array([pm.vector(t) for t in tuples], dtype=np.int64).reshape(len(tuples), pm.k)
    scores = pn.best_against(vecs, q)
    best = int(np.argmax(scores))
    a_sets = list(tuples[best])
    c = pn.fill_below(vecs[best], q)
    b_sets = pn.decompose(c, q)
    if b_sets is None or int(c.sum()) != int(scores[best]):
        raise TheoremViolation("could not realise the packing bound", {"M": m, "N": n, "p": p, "q": q})
    res = NuResult(int(scores[best]), a_sets, b_sets)
    if swap:
        res = NuResult(res.value, res.b_sets, res.a_sets)
    return res


def _achievable_vectors(sets: Sequence[int], copies: int, elems: list[int]) -> np.ndarray:
    vecs = {tuple(multiplicity(e, t) for e in elems) for t in combinations_with_replacement(sets, copies)}
    return np.array(sorted(vecs), dtype=np.int64).reshape(len(vecs), len(elems))


def nu_pq_bruteforce(m: Matroid, n: Matroid, p: int, q: int, bases_only: bool = False) -> int:
    """Direct maximum over tuples of independent sets (or of bases) on both sides."""
    _same_ground(m, n)
    _check_pq(p, q)
    elems = elements(m.ground)
    pool_m = m.bases if bases_only else sorted(m.independent_sets)
    pool_n = n.bases if bases_only else sorted(n.independent_sets)
    va = _achievable_vectors(pool_m, p, elems)
    vb = _achievable_vectors(pool_n, q, elems)
    best = 0
    for row in va:
        best = max(best, int(np.minimum(row[None, :], vb).sum(axis=1).max()))
    return best


def equalize(res: NuResult, ground: int) -> NuResult:
    """Trim surplus memberships so every element has equal multiplicity on both sides."""
    a, b = list(res.a_sets), list(res.b_sets)
    for v in elements(ground):
        bit = 1 << v
        for sets, other in ((a, b), (b, a)):
            surplus = multiplicity(v, sets) - multiplicity(v, other)
            for i in reversed(range(len(sets))):
                if surplus <= 0:
                    break
                if sets[i] & bit:
                    sets[i] &= ~bit
                    surplus -= 1
    return NuResult(res.value, a, b)


def equalized_witness(m: Matroid, n: Matroid, p: int, q: int) -> NuResult:
    res = equalize(nu_pq(m, n, p, q), m.ground)
    total_a = sum(size(s) for s in res.a_sets)
    total_b = sum(size(s) for s in res.b_sets)
    if not total_a == total_b == res.value or not res.check(m, n):
        raise TheoremViolation("equalized witness has unequal totals", {"M": m, "N": n, "p": p, "q": q})
    return res


@dataclass
class MonotoneReport:
    smaller: int
    larger: int

    @property
    def holds(self) -> bool:
        return self.smaller <= self.larger


def _complex_inside(m: Matroid, other: Matroid) -> bool:
    return m.ground == other.ground and m.independent_sets <= other.independent_sets


def check_monotone(m, n, m2, n2, p, q, p2, q2) -> MonotoneReport:
    if not (p <= p2 and q <= q2 and _complex_inside(m, m2) and _complex_inside(n, n2)):
        raise DomainError("monotonicity check needs p<=p', q<=q', M inside M', N inside N'")
    rep = MonotoneReport(nu_pq(m, n, p, q).value, nu_pq(m2, n2, p2, q2).value)
    if not rep.holds:
        raise TheoremViolation(f"nu is not monotone here: {rep}", {"M": m, "N": n, "M'": m2, "N'": n2})
    return rep


@dataclass
class NuqqReport:
    nu11: int
    nuqq: int
    q: int

    @property
    def bound(self) -> int:
        return -(-self.nuqq // self.q)

    @property
    def holds(self) -> bool:
        return self.nu11 >= self.bound

    @property
    def slack(self) -> int:
        return self.nu11 - self.bound


def check_nuqq_bound(m: Matroid, n: Matroid, q: int) -> NuqqReport:
    """nu_{1,1} >= ceil(nu_{q,q} / q)."""
    rep = NuqqReport(nu11(m, n), nu_pq(m, n, q, q).value, q)
    if not rep.holds:
        raise TheoremViolation(f"nu11 bound fails: {rep}", {"M": m, "N": n, "q": q})
    return rep


@dataclass
class DanglingWitness:
    x_sets: list[int]
    y_sets: list[int]
    z: int

    def check(self, m: Matroid, n: Matroid, p: int, q: int, nu_value: int) -> bool:
        return (
            len(self.x_sets) == p
            and len(self.y_sets) == q
            and all(m.is_independent(s) for s in self.x_sets)
            and all(n.is_independent(s) for s in self.y_sets)
            and all(
                multiplicity(v, self.x_sets) == multiplicity(v, self.y_sets)
                for v in elements(m.ground)
                if v != self.z
            )
            and multiplicity(self.z, self.x_sets) == p
            and sum(size(s) for s in self.y_sets) == nu_value
        )

    def to_json(self) -> dict:
        return {"X": [elements(s) for s in self.x_sets], "Y": [elements(s) for s in self.y_sets], "z": self.z}


def dangling_witness(m: Matroid, n: Matroid, p: int, q: int, budget: int = NU_BUDGET) -> DanglingWitness:
    """Sets X_1..X_p of M, Y_1..Y_q of N and an element z such that the two
    sides agree off z, every X_i contains z, and the Y side has total size
    nu_{p,q}."""
    _same_ground(m, n)
    _check_pq(p, q)
    if p > q:
        raise DomainError("dangling witness needs p <= q")
    if nu11(m, n) == 0:
        raise DomainError("dangling witness needs a nonempty common independent set")
    target = nu_pq(m, n, p, q, budget).value
    pm, pn = _Packing(m), _Packing(n)
    k = pm.k
    if (p + 1) ** (k - 1) * (q + 1) > budget:
        raise ResourceError("dangling witness search exceeds the budget")
    for zi, z in enumerate(pm.elems):
        ranges = [range(q + 1) if i == zi else range(p + 1) for i in range(k)]
        ys = np.array(list(product(*ranges)), dtype=np.int64).reshape(-1, k)
        ys = ys[ys.sum(axis=1) == target]
        if not len(ys):
            continue
        xs = ys.copy()
        xs[:, zi] = p
        ok = pn.feasible(ys, q) & pm.feasible(xs, p)
        for row in np.flatnonzero(ok):
            x_sets = pm.decompose(xs[row], p)
            y_sets = pn.decompose(ys[row], q)
            if x_sets is not None and y_sets is not None:
                return DanglingWitness(x_sets, y_sets, z)
    raise TheoremViolation("no dangling witness exists", {"M": m, "N": n, "p": p, "q": q})
