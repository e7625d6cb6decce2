"""Deletion/contraction lower bounds on connectivity and the checks built on them.

``game_value`` is the best bound obtainable by repeatedly applying the two
one-step inequalities

    eta(I(H)) >= min(eta(I(H \\ v)), eta(I(H / v)) + 1)          ({v} not an edge)
    eta(I(H)) >= min(eta(I(H - e)), eta(I(H / e)) + |e| - 1)     (e minimal)

with the base cases fixed by the complexes they describe.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import ceil, factorial, prod
from typing import Optional, Sequence

from . import hypergraph as hg
from .bitset import elements, fmt, full, size
from .coloring import LIST_GROUND_LIMIT, LIST_K_LIMIT, chi, chi_list
from .errors import ClaimViolation, DomainError, ResourceError, TheoremViolation
from .homology import INF, Eta, Field, Q, delta_eta, eta
from .matroid import Matroid, intersection_complex, minor_contract, sim_element
from .nu import nu_pq

log = logging.getLogger(__name__)

GAME_LIMIT = 12
_EXHAUSTIVE_LABELINGS = 720


def _canonical_from_lists(k: int, edges: list[int]) -> tuple[int, tuple[int, ...]]:
    # colour refinement, then brute force over orderings inside colour cells
    inc = [[e for e in edges if e >> i & 1] for i in range(k)]
    color = [(len(inc[i]), tuple(sorted(size(e) for e in inc[i]))) for i in range(k)]
    while True:
        ranks = {c: r for r, c in enumerate(sorted(set(color)))}
        color = [ranks[c] for c in color]
        refined = [
            (color[i], tuple(sorted(tuple(sorted(color[j] for j in elements(e) if j != i)) for e in inc[i])))
            for i in range(k)
        ]
        if len(set(refined)) == len(set(color)):
            break
        color = refined
    cells: dict[int, list[int]] = {}
    for i in range(k):
        cells.setdefault(color[i], []).append(i)
    ordered = [cells[c] for c in sorted(cells)]

    def encode(order: list[int]) -> tuple[int, ...]:
        label = {v: pos for pos, v in enumerate(order)}
        out = []
        for e in edges:
            m = 0
            for v in elements(e):
                m |= 1 << label[v]
            out.append(m)
        return tuple(sorted(out))

    if prod(factorial(len(c)) for c in ordered) <= _EXHAUSTIVE_LABELINGS:
        best = min(encode([v for part in choice for v in part]) for choice in product(*(permutations(c) for c in ordered)))
    else:
        # still a faithful relabelling, so memoization stays sound
        best = encode([v for c in ordered for v in c])
    return k, best


def canonical_form(h: hg.Hypergraph) -> tuple[int, tuple[int, ...]]:
    """Relabel vertices to 0..k-1 canonically (exact up to a labeling budget)."""
    verts = elements(h.vertices)
    pos = {v: i for i, v in enumerate(verts)}
    edges = []
    for e in h.edges:
        m = 0
        for v in elements(e):
            m |= 1 << pos[v]
        edges.append(m)
    return _canonical_from_lists(len(verts), edges)


@dataclass(frozen=True)
class GameMove:
    kind: str  # "vertex" | "edge"
    target: int  # vertex index or edge mask

    @property
    def bonus(self) -> int:
        return 1 if self.kind == "vertex" else size(self.target) - 1

    def __str__(self) -> str:
        return f"vertex {self.target}" if self.kind == "vertex" else f"edge {fmt(self.target)}"


def admissible_moves(h: hg.Hypergraph) -> list[GameMove]:
    moves = [GameMove("vertex", v) for v in elements(h.vertices) if (1 << v) not in h.edges]
    moves += [GameMove("edge", e) for e in h.minimal_edges()]
    return moves


def apply_move(h: hg.Hypergraph, move: GameMove) -> tuple[hg.Hypergraph, hg.Hypergraph]:
    """(delete side, contract side)."""
    if move.kind == "vertex":
        x = 1 << move.target
        return hg.delete_vertices(h, x), hg.contract(h, x)
    return hg.delete_edge(h, move.target), hg.contract(h, move.target)


def _base_value(h: hg.Hypergraph) -> Optional[Eta]:
    if 0 in h.edges:
        return 0
    if not h.edges:
        return INF if h.vertices else 0
    return None


@lru_cache(maxsize=None)
def _value(key: tuple[int, tuple[int, ...]]) -> Eta:
    k, edges = key
    h = hg.Hypergraph(full(k), edges)
    base = _base_value(h)
    if base is not None:
        return base
    best: Eta = -1
    for move in admissible_moves(h):
        d, c = apply_move(h, move)
        cand = min(_value(canonical_form(d)), _value(canonical_form(c)) + move.bonus)
        if cand > best:
            best = cand
            if best == INF:
                break
    return best


def game_value(h: hg.Hypergraph, limit: int = GAME_LIMIT) -> Eta:
    """Best lower bound on eta(I(h)) certified by deletion/contraction moves."""
    if size(h.vertices) > limit:
        raise ResourceError(f"game limited to {limit} vertices")
    return _value(canonical_form(h))


@dataclass
class DerivationNode:
    hypergraph: hg.Hypergraph
    value: Eta
    move: Optional[GameMove] = None
    delete: Optional["DerivationNode"] = None
    contract: Optional["DerivationNode"] = None

    @property
    def fingerprint(self) -> str:
        k, edges = canonical_form(self.hypergraph)
        return f"{k}:" + ",".join(fmt(e) for e in edges)

    def to_json(self) -> dict:
        from .formats import eta_to_json

        out = {
            "vertices": elements(self.hypergraph.vertices),
            "edges": [elements(e) for e in self.hypergraph.edges],
            "fingerprint": self.fingerprint,
            "value": eta_to_json(self.value),
        }
        if self.move is not None:
            out["move"] = {"kind": self.move.kind, "target": self.move.target if self.move.kind == "vertex" else elements(self.move.target), "bonus": self.move.bonus}
            out["delete"] = self.delete.to_json()
            out["contract"] = self.contract.to_json()
        return out


def game_derivation(h: hg.Hypergraph, limit: int = GAME_LIMIT) -> DerivationNode:
    """The optimal derivation tree, in the hypergraph's own labels."""
    value = game_value(h, limit)
    if _base_value(h) is not None:
        return DerivationNode(h, value)
    for move in admissible_moves(h):
        d, c = apply_move(h, move)
        if min(game_value(d), game_value(c) + move.bonus) == value:
            return DerivationNode(h, value, move, game_derivation(d, limit), game_derivation(c, limit))
    raise AssertionError("no move attains the memoized value")


@dataclass
class StepReport:
    eta: Eta
    eta_delete: Eta
    eta_contract: Eta
    bonus: int

    @property
    def bound(self) -> Eta:
        return min(self.eta_delete, self.eta_contract + self.bonus)

    @property
    def holds(self) -> bool:
        return self.eta >= self.bound


def check_move(h: hg.Hypergraph, move: GameMove, field_: Field = Q) -> StepReport:
    """Verify one deletion/contraction inequality by direct homology."""
    if move not in admissible_moves(h):
        raise DomainError(f"{move} is not admissible")
    d, c = apply_move(h, move)
    rep = StepReport(
        eta(hg.independence_complex(h), field_),
        eta(hg.independence_complex(d), field_),
        eta(hg.independence_complex(c), field_),
        move.bonus,
    )
    if not rep.holds:
        raise TheoremViolation(f"{move} step fails on {h}: {rep}", {"H": h})
    return rep


def _same_ground(matroids: Sequence[Matroid]) -> None:
    if not matroids:
        raise DomainError("need at least one matroid")
    if any(m.ground != matroids[0].ground for m in matroids):
        raise DomainError("matroids live on different ground sets")


def qualifying_circuits(matroids: Sequence[Matroid], v: int) -> list[int]:
    """Circuits of the first matroid through v that are independent in all the others."""
    first, rest = matroids[0], matroids[1:]
    return [c for c in first.circuits if c >> v & 1 and all(m.is_independent(c) for m in rest)]


@dataclass
class BranchOutcome:
    kind: str  # "sim" | "contract"
    eta_intersection: Eta
    bound: Eta
    circuit: Optional[int] = None
    sim_bound: Eta = 0
    contract_bounds: list[tuple[int, Eta]] = field(default_factory=list)

    @property
    def bonus(self) -> int:
        return size(self.circuit) - 1 if self.circuit is not None else 0


def coloop_or_contract(matroids: Sequence[Matroid], v: int, field_: Field = Q) -> BranchOutcome:
    """Find the branch certifying a lower bound on eta of the intersection at ``v``."""
    _same_ground(matroids)
    if not matroids[0].ground >> v & 1:
        raise DomainError(f"{v} is not in the ground set")
    first, rest = matroids[0], list(matroids[1:])
    whole = eta(intersection_complex(*matroids), field_)
    sim_bound = eta(intersection_complex(sim_element(first, v), *rest), field_)
    contract_bounds = []
    for c in qualifying_circuits(matroids, v):
        minors = [minor_contract(m, c) for m in matroids]
        contract_bounds.append((c, eta(intersection_complex(*minors), field_) + size(c) - 1))
    if whole >= sim_bound:
        return BranchOutcome("sim", whole, sim_bound, None, sim_bound, contract_bounds)
    for c, bound in contract_bounds:
        if whole >= bound:
            return BranchOutcome("contract", whole, bound, c, sim_bound, contract_bounds)
    log.error("no branch verifies at v=%s for %s", v, matroids)
    raise TheoremViolation(f"no branch verifies at v={v}", {"matroids": list(matroids), "v": v})


@dataclass
class ClaimReport:
    circuits: list[int]
    eq1: bool
    eq2: list[bool]
    eq3: list[bool]
    eq4: list[bool]

    @property
    def holds(self) -> bool:
        return self.eq1 and all(self.eq2) and all(self.eq3) and all(self.eq4)


def check_claim_equalities(matroids: Sequence[Matroid], v: int) -> ClaimReport:
    """Face-set equalities behind the branch theorem, checked literally."""
    _same_ground(matroids)
    ground = matroids[0].ground
    parts = [m.circuit_hypergraph() for m in matroids]
    union = hg.Hypergraph(ground, [e for h in parts for e in h.edges])
    circuits = qualifying_circuits(matroids, v)

    pruned = union
    for c in circuits:
        pruned = hg.delete_edge(pruned, c)
    eq1 = hg.independence_complex(pruned) == intersection_complex(sim_element(matroids[0], v), *matroids[1:])

    eq2, eq3, eq4 = [], [], []
    partial = union
    for c in circuits:
        contracted = hg.independence_complex(hg.contract(union, c))
        eq2.append(hg.independence_complex(hg.contract(partial, c)) == contracted)
        eq3.append(contracted == intersection_complex(*(minor_contract(m, c) for m in matroids)))
        pieces = hg.Hypergraph(ground & ~c, [e for h in parts for e in hg.contract(h, c).edges])
        eq4.append(
            pieces == hg.contract(union, c) and hg.independence_complex(pieces) == contracted
        )
        partial = hg.delete_edge(partial, c)
    rep = ClaimReport(circuits, eq1, eq2, eq3, eq4)
    if not rep.holds:
        raise ClaimViolation(f"claim equalities fail at v={v}: {rep}", {"matroids": list(matroids), "v": v})
    return rep


@dataclass
class EtaNuReport:
    eta: Eta
    nu: int
    p: int
    q: int

    @property
    def bound(self) -> Fraction:
        return Fraction(self.nu, self.p + self.q)

    @property
    def holds(self) -> bool:
        return self.eta >= self.bound

    @property
    def tight(self) -> bool:
        return self.eta == self.bound

    @property
    def slack(self):
        return INF if self.eta == INF else self.eta - self.bound


def check_eta_nu_bound(m: Matroid, n: Matroid, p: int, q: int, field_: Field = Q) -> EtaNuReport:
    """eta(M & N) >= nu_{p,q}(M, N) / (p + q), compared exactly."""
    rep = EtaNuReport(eta(intersection_complex(m, n), field_), nu_pq(m, n, p, q).value, p, q)
    if not rep.holds:
        raise TheoremViolation(f"eta-nu bound fails: {rep}", {"M": m, "N": n, "p": p, "q": q})
    return rep


@dataclass
class DeltaEtaReport:
    delta_eta: Fraction
    chi_m: int
    chi_n: int
    chi_list: Optional[int]

    @property
    def bound(self) -> int:
        return self.chi_m + self.chi_n

    @property
    def list_bound(self) -> int:
        # a full simplex has delta_eta = 0 but still needs one color
        return max(1, ceil(self.delta_eta))

    @property
    def holds(self) -> bool:
        ok = self.delta_eta <= self.bound
        return ok and (self.chi_list is None or self.chi_list <= self.list_bound)

    @property
    def tight(self) -> bool:
        return self.delta_eta == self.bound


def check_delta_eta_bound(
    m: Matroid,
    n: Matroid,
    field_: Field = Q,
    ground_limit: int = LIST_GROUND_LIMIT,
    k_limit: int = LIST_K_LIMIT,
) -> DeltaEtaReport:
    inter = intersection_complex(m, n)
    d = delta_eta(inter, field_)
    chi_m, _ = chi(m.complex)
    chi_n, _ = chi(n.complex)
    chi_l = None
    k = max(1, ceil(d))
    if size(m.ground) <= ground_limit and m.ground:
        chi_l = chi_list(inter, min(k, k_limit), ground_limit, k_limit).value
        if chi_l is None and k <= k_limit:
            chi_l = k + 1  # recorded as "more than the bound"
    rep = DeltaEtaReport(d, chi_m, chi_n, chi_l)
    if not rep.holds:
        raise TheoremViolation(f"delta-eta bound fails: {rep}", {"M": m, "N": n})
    return rep
