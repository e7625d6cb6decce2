"""Exact reduced simplicial homology, connectivity and the ratio parameter.

Connectivity values are plain ints with ``math.inf`` standing for "all
reduced homology vanishes"; Python's int/float/Fraction comparisons and
``inf + 1 == inf`` give the absorbing arithmetic for free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .bitset import elements, size, submasks
from .complex import SimplicialComplex, intersection, join, restrict_complex, union
from .errors import DomainError, ResourceError, TheoremViolation

INF = math.inf
Eta = Union[int, float]

FACE_BUDGET = 1 << 20
DELTA_ETA_LIMIT = 16


@dataclass(frozen=True)
class Field:
    """Coefficient field: the rationals (``p is None``) or GF(p)."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and (self.p < 2 or any(self.p % d == 0 for d in range(2, math.isqrt(self.p) + 1))):
            raise DomainError(f"{self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "Field":
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls()
        if t.startswith("gf"):
            try:
                return cls(int(t[2:]))
            except ValueError:
                pass
        raise DomainError(f"unknown field {text!r}; use q, gf2 or gf<p>")

    def __str__(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"


Q = Field()
GF2 = Field(2)


def _faces_by_size(c: SimplicialComplex, budget: int) -> list[list[int]]:
    bound = sum(1 << size(f) for f in c.facets)
    if bound > budget and len(c.faces) > budget:
        raise ResourceError(f"complex has more than {budget} faces")
    return c.faces_by_size()


def _boundary(rows_faces: list[int], cols_faces: list[int], p: Optional[int]) -> list[list[int]]:
    index = {f: i for i, f in enumerate(rows_faces)}
    mat = [[0] * len(cols_faces) for _ in rows_faces]
    for j, f in enumerate(cols_faces):
        for pos, v in enumerate(elements(f)):
            sign = -1 if pos % 2 else 1
            mat[index[f & ~(1 << v)]][j] = sign % p if p else sign
    return mat


def boundary_matrix(c: SimplicialComplex, k: int, field: Field = Q) -> tuple[list[int], list[int], list[list[int]]]:
    """The augmented boundary map from k-faces to (k-1)-faces.

    Returns ``(row_faces, col_faces, matrix)``; faces are sorted and the
    sign of removing the i-th smallest vertex is ``(-1)**i``.
    """
    if c.is_void or not -1 <= k <= c.dim + 1:
        raise DomainError(f"boundary index {k} out of range for a complex of dimension {c.dim}")
    groups = c.faces_by_size()
    cols = groups[k + 1] if k + 1 < len(groups) else []
    rows = groups[k] if k >= 0 else []
    return rows, cols, _boundary(rows, cols, field.p)


def _rank_bareiss(mat: list[list[int]]) -> int:
    m = [list(r) for r in mat if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank, prev = 0, 1
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        pv = prow[col]
        for i in range(rank + 1, len(m)):
            row = m[i]
            a = row[col]
            for j in range(col + 1, ncols):
                row[j] = (pv * row[j] - a * prow[j]) // prev
            row[col] = 0
        prev = pv
        rank += 1
        if rank == len(m):
            break
    return rank


def _rank_mod(mat: list[list[int]], p: int) -> int:
    m = [[x % p for x in r] for r in mat]
    m = [r for r in m if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        inv = pow(prow[col], -1, p)
        for i in range(rank + 1, len(m)):
            row = m[i]
            a = row[col]
            if a:
                f = a * inv % p
                for j in range(col, ncols):
                    row[j] = (row[j] - f * prow[j]) % p
        rank += 1
        if rank == len(m):
            break
    return rank


def matrix_rank(mat: list[list[int]], field: Field = Q) -> int:
    return _rank_bareiss(mat) if field.p is None else _rank_mod(mat, field.p)


def _betti_iter(c: SimplicialComplex, field: Field, budget: int):
    """Yield reduced Betti numbers from degree -1 upwards."""
    if c.is_void:
        return
    groups = _faces_by_size(c, budget)
    top = len(groups) - 1
    ranks: dict[int, int] = {0: 0, top + 1: 0}

    def r(d):
        if d not in ranks:
            ranks[d] = matrix_rank(_boundary(groups[d - 1], groups[d], field.p), field)
        return ranks[d]

    for d in range(top + 1):
        yield len(groups[d]) - r(d) - r(d + 1)


def reduced_betti(c: SimplicialComplex, field: Field = Q, budget: int = FACE_BUDGET) -> list[int]:
    """Entry ``i`` is the reduced Betti number in degree ``i - 1``; empty for the void complex."""
    return list(_betti_iter(c, field, budget))


def eta(c: SimplicialComplex, field: Field = Q, budget: int = FACE_BUDGET) -> Eta:
    """Least k with nonvanishing reduced homology in degree k - 1."""
    if c.is_void:
        return 0
    for k, b in enumerate(_betti_iter(c, field, budget)):
        if b:
            return k
    return INF


def reduced_euler_characteristic(c: SimplicialComplex) -> int:
    """Sum over faces F (including the empty face) of (-1)^(|F|-1)."""
    return sum(1 if size(f) % 2 else -1 for f in c.faces)


def delta_eta(c: SimplicialComplex, field: Field = Q, limit: int = DELTA_ETA_LIMIT) -> Fraction:
    """Max over nonempty S of |S| / eta(C[S]), with |S| / inf = 0."""
    if not c.covers_ground():
        raise DomainError("some ground element lies in no face")
    if size(c.ground) > limit:
        raise ResourceError(f"delta_eta limited to {limit} ground elements")
    best = Fraction(0)
    for s in submasks(c.ground):
        if s == 0:
            continue
        e = eta(restrict_complex(c, s), field)
        if e != INF:
            best = max(best, Fraction(size(s), e))
    return best


def _slack(lhs: Eta, rhs: Eta) -> Eta:
    return 0 if lhs == rhs else lhs - rhs


@dataclass
class JoinReport:
    eta_join: Eta
    eta_c: Eta
    eta_d: Eta

    @property
    def bound(self) -> Eta:
        return self.eta_c + self.eta_d

    @property
    def holds(self) -> bool:
        return self.eta_join >= self.bound

    @property
    def slack(self) -> Eta:
        return _slack(self.eta_join, self.bound)


def check_join_superadditivity(c: SimplicialComplex, d: SimplicialComplex, field: Field = Q) -> JoinReport:
    # void * simplex is void, so eta 0 >= 0 + inf would fail; the inequality is about nonempty complexes
    if c.is_void or d.is_void:
        raise DomainError("join superadditivity needs non-void complexes")
    rep = JoinReport(eta(join(c, d), field), eta(c, field), eta(d, field))
    if not rep.holds:
        raise TheoremViolation(f"join superadditivity fails: {rep}", {"c": c, "d": d})
    return rep


@dataclass
class MayerVietorisReport:
    eta_a: Eta
    eta_b: Eta
    eta_union: Eta
    eta_intersection: Eta

    def sides(self) -> list[tuple[Eta, Eta]]:
        """(lhs, rhs) of the three inequalities, in order."""
        a, b, u, i = self.eta_a, self.eta_b, self.eta_union, self.eta_intersection
        return [
            (u, min(a, b, i + 1)),
            (i, min(a, b, u - 1)),
            (a, min(u, i)),
        ]

    @property
    def holds(self) -> list[bool]:
        return [lhs >= rhs for lhs, rhs in self.sides()]

    @property
    def tight(self) -> list[bool]:
        return [lhs == rhs for lhs, rhs in self.sides()]


def check_mayer_vietoris(a: SimplicialComplex, b: SimplicialComplex, field: Field = Q) -> MayerVietorisReport:
    rep = MayerVietorisReport(eta(a, field), eta(b, field), eta(union(a, b), field), eta(intersection(a, b), field))
    if not all(rep.holds):
        raise TheoremViolation(f"union/intersection inequality fails: {rep}", {"a": a, "b": b})
    return rep
