"""Seeded instance generators, the default corpus and the verification suites.

Every suite is a pair (case source, case check).  A case is a name plus a
dict of inputs; checks return the values they computed and whether the
inequality held.  A failing case stops the suite and is written out as a
JSON bundle that :func:`replay` can rerun on its own.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from pathlib import Path
from typing import Any, Callable, Iterator, Optional

from . import hypergraph as hg
from . import matroid as mt
from .bitset import elements, full, maximal, size, submasks
from .bound_engine import (
    check_claim_equalities,
    check_delta_eta_bound,
    check_eta_nu_bound,
    coloop_or_contract,
    game_value,
)
from .coloring import chi, chi_matroid, check_chi_sum
from .complex import SimplicialComplex, circ, cone, duality_roundtrip, join
from .errors import DomainError, TheoremViolation
from .formats import (
    complex_from_json,
    complex_to_json,
    dumps,
    hypergraph_from_json,
    hypergraph_to_json,
    matroid_from_json,
    matroid_to_json,
    to_jsonable,
)
from .homology import GF2, INF, Field, Q, check_join_superadditivity, check_mayer_vietoris, delta_eta, eta
from .homology import reduced_betti, reduced_euler_characteristic
from .intersection import nu11
from .matroid import Matroid, intersection_complex
from .nu import NU_BUDGET, check_monotone, check_nuqq_bound, dangling_witness, equalized_witness, multiplicity, nu_pq

log = logging.getLogger(__name__)

PQ_PAIRS = ((1, 1), (1, 2), (2, 2), (1, 3), (2, 3))
MATROID_KINDS = ("uniform", "partition", "graphic", "transversal")


# --- the tightness family ---------------------------------------------------


@dataclass(frozen=True)
class TightnessInstance:
    m: Matroid
    n: Matroid
    edges: tuple[tuple[int, int], ...]  # element i is edges[i], vertices 1..4


def tightness_example(p: int, q: int) -> TightnessInstance:
    """The 4-cycle 1-2-3-4 with 12 and 34 repeated p times, 23 and 41 repeated q times.

    M bounds the number of chosen edges at vertices 1 and 3, N at 2 and 4,
    so common independent sets are exactly the matchings.
    """
    if p < 1 or q < 1:
        raise DomainError("p and q must be at least 1")
    edges = ((1, 2),) * p + ((2, 3),) * q + ((3, 4),) * p + ((4, 1),) * q

    def star(v: int) -> list[int]:
        return [i for i, e in enumerate(edges) if v in e]

    m = mt.partition([star(1), star(3)], [1, 1])
    n = mt.partition([star(2), star(4)], [1, 1])
    return TightnessInstance(m, n, edges)


def matching_complex(edges: tuple[tuple[int, int], ...]) -> SimplicialComplex:
    """Sets of pairwise disjoint edges, computed straight from the multigraph."""
    ground = full(len(edges))
    faces = [
        s
        for s in submasks(ground)
        if all(not set(edges[i]) & set(edges[j]) for i in elements(s) for j in elements(s) if i < j)
    ]
    return SimplicialComplex(ground, maximal(faces))


# --- random generators ------------------------------------------------------


def _rng(seed: Any) -> random.Random:
    return random.Random(str(seed))


def random_matroid(seed: Any, n: int, kind: str = "mix") -> Matroid:
    """A loopless matroid on 0..n-1 from one of the standard families."""
    if n < 0:
        raise DomainError("n must be non-negative")
    rng = _rng(seed)
    if kind == "mix":
        kind = rng.choice(MATROID_KINDS)
    if kind == "free":
        return mt.free(n)
    if kind == "uniform":
        return mt.uniform(n, rng.randint(1, n) if n else 0)
    if kind == "partition":
        order = list(range(n))
        rng.shuffle(order)
        cuts = sorted(rng.sample(range(1, n), rng.randint(0, n - 1))) if n > 1 else []
        parts = [order[a:b] for a, b in zip([0] + cuts, cuts + [n])] if n else []
        return mt.partition(parts, [rng.randint(1, len(part)) for part in parts])
    if kind == "graphic":
        nv = rng.randint(2, max(2, n))
        edges = [tuple(rng.sample(range(nv), 2)) for _ in range(n)]
        return mt.graphic(nv, edges)
    if kind == "transversal":
        family = [sum(1 << v for v in range(n) if rng.random() < 0.4) for _ in range(rng.randint(1, max(1, n)))]
        covered = 0
        for a in family:
            covered |= a
        family[0] |= full(n) & ~covered  # no loops
        return mt.transversal(n, family)
    raise DomainError(f"unknown matroid kind {kind!r}")


def random_complex(seed: Any, n: int, density: float = 0.5, cover: bool = True) -> SimplicialComplex:
    """Downward closure of a few random facets; each facet keeps each element with probability ``density``."""
    if not 0 <= density <= 1:
        raise DomainError("density must lie in [0, 1]")
    rng = _rng(seed)
    ground = full(n)
    facets = []
    for _ in range(rng.randint(1, n + 1)):
        facets.append(sum(1 << v for v in range(n) if rng.random() < density))
    if cover:
        covered = 0
        for f in facets:
            covered |= f
        facets += [1 << v for v in elements(ground & ~covered)]
    return SimplicialComplex(ground, facets)


def random_hypergraph(seed: Any, n: int, m: int, arity: int = 3) -> hg.Hypergraph:
    """``m`` random edges with sizes drawn from 1..arity (duplicates collapse)."""
    rng = _rng(seed)
    arity = min(arity, n)
    edges = [sum(1 << v for v in rng.sample(range(n), rng.randint(1, arity))) for _ in range(m)] if arity else []
    return hg.Hypergraph(full(n), edges)


def shift_complex(c: SimplicialComplex, k: int) -> SimplicialComplex:
    if c.is_void:
        return SimplicialComplex.void(c.ground << k)
    return SimplicialComplex(c.ground << k, [f << k for f in c.facets])


# --- corpus -----------------------------------------------------------------


@dataclass
class Entry:
    name: str
    value: Any
    provenance: dict

    @property
    def n(self) -> int:
        v = self.value
        if isinstance(v, tuple):
            v = v[0]
        if isinstance(v, Matroid):
            return v.n
        if isinstance(v, SimplicialComplex):
            return v.ground.bit_length()
        return v.vertices.bit_length()


@dataclass
class Corpus:
    pairs: list[Entry]
    complexes: list[Entry]
    complex_pairs: list[Entry]
    join_pairs: list[Entry]
    hypergraphs: list[Entry]

    def matroids(self) -> list[Entry]:
        out = []
        for e in self.pairs:
            out.append(Entry(e.name + "/M", e.value[0], e.provenance))
            out.append(Entry(e.name + "/N", e.value[1], e.provenance))
        return out


def _curated_pairs() -> list[Entry]:
    t11, t21, t12 = tightness_example(1, 1), tightness_example(2, 1), tightness_example(1, 2)
    cases = [
        ("free3-free3", mt.free(3), mt.free(3)),
        ("U12-U12", mt.uniform(2, 1), mt.uniform(2, 1)),
        ("U23-free3", mt.uniform(3, 2), mt.free(3)),
        ("U14-free4", mt.uniform(4, 1), mt.free(4)),
        ("U24-U24", mt.uniform(4, 2), mt.uniform(4, 2)),
        ("blown-C4-1-1", t11.m, t11.n),
        ("blown-C4-2-1", t21.m, t21.n),
        ("blown-C4-1-2", t12.m, t12.n),
        ("triangle-U23", mt.graphic(3, [(0, 1), (1, 2), (2, 0)]), mt.uniform(3, 2)),
        ("part32-free5", mt.partition([[0, 1, 2], [3, 4]], [1, 1]), mt.free(5)),
        ("K4-U36", mt.graphic(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]), mt.uniform(6, 3)),
    ]
    return [Entry(name, (m, n), {"constructor": "curated"}) for name, m, n in cases]


def _curated_complexes() -> list[Entry]:
    cases = [
        ("simplex3", SimplicialComplex.simplex(0b111)),
        ("hollow-triangle", SimplicialComplex(0b111, [0b011, 0b110, 0b101])),
        ("two-edges", SimplicialComplex(0b1111, [0b0011, 0b1100])),
        ("empty-face", SimplicialComplex(0, [0])),
        ("points2", SimplicialComplex(0b11, [0b01, 0b10])),
    ]
    return [Entry(name, c, {"constructor": "curated"}) for name, c in cases]


@lru_cache(maxsize=8)
def build_corpus(
    seed: int = 0,
    pairs: int = 200,
    complexes: int = 120,
    complex_pairs: int = 500,
    hypergraphs: int = 300,
) -> Corpus:
    """Curated instances plus seeded random ones; sizes cycle so every n is represented."""
    pair_entries = _curated_pairs()
    for i in range(pairs):
        n = 1 + i % 7
        kinds = (_rng(f"{seed}:kinds:{i}").choice(MATROID_KINDS), _rng(f"{seed}:kinds2:{i}").choice(MATROID_KINDS))
        m = random_matroid(f"{seed}:pair:{i}:M", n, kinds[0])
        nn = random_matroid(f"{seed}:pair:{i}:N", n, kinds[1])
        prov = {"constructor": "random_matroid", "seed": seed, "index": i, "kinds": list(kinds), "n": n}
        pair_entries.append(Entry(f"pair-{i}", (m, nn), prov))

    cx = _curated_complexes()
    for i in range(complexes):
        n, density = 1 + i % 7, (0.3, 0.5, 0.7)[i % 3]
        cx.append(Entry(f"complex-{i}", random_complex(f"{seed}:cx:{i}", n, density), {"seed": seed, "index": i}))

    cp = []
    for i in range(complex_pairs):
        n, density = 1 + i % 7, (0.3, 0.5, 0.7)[i % 3]
        a = random_complex(f"{seed}:mv:{i}:A", n, density, cover=False)
        b = random_complex(f"{seed}:mv:{i}:B", n, density, cover=False)
        cp.append(Entry(f"cpair-{i}", (a, b), {"seed": seed, "index": i, "n": n}))

    jp = []
    for i in range(complex_pairs):
        rng = _rng(f"{seed}:join:{i}")
        n1 = rng.randint(0, 4)
        n2 = rng.randint(0, 7 - n1)
        a = random_complex(f"{seed}:join:{i}:A", n1, rng.choice((0.3, 0.6)), cover=False)
        b = random_complex(f"{seed}:join:{i}:B", n2, rng.choice((0.3, 0.6)), cover=False)
        jp.append(Entry(f"jpair-{i}", (a, shift_complex(b, n1)), {"seed": seed, "index": i}))

    hs = []
    for i in range(hypergraphs):
        rng = _rng(f"{seed}:hg:{i}")
        n = 1 + i % 8
        h = random_hypergraph(f"{seed}:hg:{i}:H", n, rng.randint(0, n + 2), rng.randint(1, 4))
        hs.append(Entry(f"hypergraph-{i}", h, {"seed": seed, "index": i}))
    return Corpus(pair_entries, cx, cp, jp, hs)


# --- cases, outcomes and reports -----------------------------------------------


@dataclass
class Case:
    case_id: str
    inputs: dict[str, Any]


@dataclass
class Outcome:
    values: dict[str, Any]
    ok: bool = True
    slack: Any = None
    tight: Optional[bool] = None


@dataclass
class CaseResult:
    case_id: str
    values: dict[str, Any]
    slack: Any = None
    tight: Optional[bool] = None

    def to_json(self) -> dict:
        return {"case": self.case_id, "values": to_jsonable(self.values), "slack": to_jsonable(self.slack), "tight": self.tight}


@dataclass
class SuiteConfig:
    seed: int = 0
    random_cases: int = 0
    use_corpus: bool = True
    nmax: Optional[int] = None
    list_nmax: int = 5
    list_kmax: int = 4
    field: Field = Q
    budget: int = NU_BUDGET
    pmax: int = 3
    qmax: int = 3
    pq: Optional[tuple[tuple[int, int], ...]] = None
    vertex: Optional[int] = None
    allow_large: bool = False
    bundle_dir: Optional[Path] = None

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "random_cases": self.random_cases,
            "nmax": self.nmax,
            "list_nmax": self.list_nmax,
            "list_kmax": self.list_kmax,
            "field": str(self.field),
            "budget": self.budget,
            "pmax": self.pmax,
            "qmax": self.qmax,
            "pq": [list(x) for x in self.pq] if self.pq else None,
            "vertex": self.vertex,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SuiteConfig":
        f = data.get("field", "Q")
        return cls(
            seed=data.get("seed", 0),
            random_cases=data.get("random_cases", 0),
            nmax=data.get("nmax"),
            list_nmax=data.get("list_nmax", 5),
            list_kmax=data.get("list_kmax", 4),
            field=Q if f == "Q" else Field(int(f[3:-1])),
            budget=data.get("budget", NU_BUDGET),
            pmax=data.get("pmax", 3),
            qmax=data.get("qmax", 3),
            pq=tuple(tuple(x) for x in data["pq"]) if data.get("pq") else None,
            vertex=data.get("vertex"),
        )


@dataclass
class VerificationReport:
    suite: str
    seed: int
    cases: list[CaseResult] = field(default_factory=list)
    failures: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def tight_count(self) -> int:
        return sum(1 for c in self.cases if c.tight)

    def json_lines(self) -> list[str]:
        lines = [dumps(c.to_json()) for c in self.cases]
        lines += [dumps({"failure": f}) for f in self.failures]
        lines.append(dumps(self.summary_json()))
        return lines

    def summary_json(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "cases": len(self.cases),
            "tight": self.tight_count,
            "failures": len(self.failures),
            "passed": self.passed,
            "wall_time": round(self.wall_time, 3),
        }

    def summary(self) -> str:
        s = self.summary_json()
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {s['suite']:<16} cases={s['cases']:<5} tight={s['tight']:<5} failures={s['failures']}  {s['wall_time']:.1f}s"


# --- suite checks -----------------------------------------------------------


def _sets(masks) -> list[list[int]]:
    return [elements(s) for s in masks]


def _check_duality(inp: dict, cfg: SuiteConfig) -> Outcome:
    if "matroid" in inp:
        m = inp["matroid"]
        circuits_ok = circ(m.complex) == list(m.circuits)
        ok = duality_roundtrip(m.complex) and circuits_ok
        return Outcome({"circuits": _sets(m.circuits), "roundtrip": ok}, ok)
    c = inp["complex"]
    ok = duality_roundtrip(c)
    return Outcome({"facets": len(c.facets), "circuits": len(circ(c)), "roundtrip": ok}, ok)


def _disjoint_pairs(v: int, seed: Any, limit: int = 729) -> list[tuple[int, int]]:
    k = size(v)
    verts = elements(v)
    if 3**k <= limit:
        labels = product(range(3), repeat=k)
    else:
        rng = _rng(seed)
        labels = [[rng.randrange(3) for _ in range(k)] for _ in range(limit)]
    out = []
    for lab in labels:
        x = sum(1 << verts[i] for i, t in enumerate(lab) if t == 1)
        y = sum(1 << verts[i] for i, t in enumerate(lab) if t == 2)
        out.append((x, y))
    return out


def _check_operators(inp: dict, cfg: SuiteConfig) -> Outcome:
    if "matroid" in inp:
        return _check_minors(inp["matroid"])
    h = inp["hypergraph"]
    v = h.vertices
    bad = []
    for x in submasks(v):
        if hg.restrict(h, x) != hg.delete_vertices(h, v & ~x):
            bad.append(("restrict", elements(x)))
        s = hg.sim(h, x)
        if s.edges != hg.delete_vertices(h, x).edges or hg.restrict(s, v & ~x) != hg.delete_vertices(h, x):
            bad.append(("sim", elements(x)))
    for x, y in _disjoint_pairs(v, (cfg.seed, h.edges)):
        if hg.contract(hg.contract(h, x), y) != hg.contract(h, x | y):
            bad.append(("contract", elements(x), elements(y)))
    c = hg.independence_complex(h)
    if not c.is_void:
        faces = c.faces
        if any(f & ~(1 << u) not in faces for f in faces for u in elements(f)):
            bad.append(("not-closed",))
        singles = [u for u in elements(v) if (1 << u) not in h.edges]
        if any((1 << u) not in faces for u in singles):
            bad.append(("uncovered",))
    return Outcome({"vertices": size(v), "edges": len(h.edges), "violations": bad[:5]}, not bad)


def _check_minors(m: Matroid) -> Outcome:
    h = m.circuit_hypergraph()
    bad = []
    for x in submasks(m.ground):
        if list(mt.minor_contract(m, x).circuits) != hg.contract(h, x).minimal_edges():
            bad.append(("contract", elements(x)))
        if list(mt.minor_restrict(m, x).circuits) != hg.restrict(h, x).minimal_edges():
            bad.append(("restrict", elements(x)))
        if size(x) <= 1:
            if mt.verify_matroid_axioms(mt.minor_contract(m, x).complex) is not None:
                bad.append(("contract-not-matroid", elements(x)))
    for v in elements(m.ground):
        s = mt.sim_element(m, v)
        rest = mt.minor_restrict(m, m.ground & ~(1 << v))
        if s.complex != join(SimplicialComplex.simplex(1 << v), rest.complex):
            bad.append(("sim-join", v))
        if any(not f >> v & 1 for f in s.complex.facets):
            bad.append(("sim-facets", v))
    return Outcome({"n": m.n, "violations": bad[:5]}, not bad)


def _check_axioms(inp: dict, cfg: SuiteConfig) -> Outcome:
    m = inp["matroid"]
    problems = []
    violation = hg.check_circuit_axioms(m.circuit_hypergraph())
    if violation is not None:
        problems.append(("circuits", violation.to_json()))
    counter = mt.verify_matroid_axioms(m.complex)
    if counter is not None:
        problems.append(("independence", str(counter)))
    if len({size(b) for b in m.bases}) > 1:
        problems.append(("bases",))
    if circ(m.complex) != list(m.circuits):
        problems.append(("circ",))
    ground = m.ground
    rank = m.greedy_bases
    subsets = list(submasks(ground))
    r = {x: size(rank[x]) for x in subsets}
    for x in subsets:
        for y in subsets:
            if x & ~y == 0 and r[x] > r[y]:
                problems.append(("monotone", elements(x), elements(y)))
                break
            if r[x | y] + r[x & y] > r[x] + r[y]:
                problems.append(("submodular", elements(x), elements(y)))
                break
        if problems:
            break
    return Outcome({"n": m.n, "rank": m.rank(), "bases": len(m.bases), "problems": problems}, not problems)


def _check_homology_basics(inp: dict, cfg: SuiteConfig) -> Outcome:
    c = inp["complex"]
    betti = reduced_betti(c, cfg.field)
    alt = sum(b if i % 2 == 0 else -b for i, b in enumerate(betti))
    # entry i is degree i - 1, so the alternating sum starts with a minus sign
    euler_ok = reduced_euler_characteristic(c) == -alt
    cone_ok = c.is_void or eta(cone(c, c.ground.bit_length()), cfg.field) == INF
    e_q, e_2 = eta(c, Q), eta(c, GF2)
    values = {"betti": betti, "eta_Q": e_q, "eta_GF2": e_2, "field_sensitive": e_q != e_2}
    return Outcome(values, euler_ok and cone_ok)


def _check_join(inp: dict, cfg: SuiteConfig) -> Outcome:
    rep = check_join_superadditivity(inp["A"], inp["B"], cfg.field)
    return Outcome({"eta_join": rep.eta_join, "eta_A": rep.eta_c, "eta_B": rep.eta_d}, rep.holds, rep.slack, rep.slack == 0)


def _check_mv(inp: dict, cfg: SuiteConfig) -> Outcome:
    rep = check_mayer_vietoris(inp["A"], inp["B"], cfg.field)
    values = {"eta_A": rep.eta_a, "eta_B": rep.eta_b, "eta_union": rep.eta_union, "eta_intersection": rep.eta_intersection}
    values["tight"] = rep.tight
    return Outcome(values, all(rep.holds), None, any(rep.tight))


def _check_game(inp: dict, cfg: SuiteConfig) -> Outcome:
    h = inp["hypergraph"]
    g = game_value(h)
    e = eta(hg.independence_complex(h), cfg.field)
    slack = 0 if g == e else e - g
    if g > e:
        raise TheoremViolation(f"game value {g} exceeds eta {e}", {"H": h})
    return Outcome({"game": g, "eta": e}, True, slack, g == e)


def _vertices(matroids: list[Matroid], cfg: SuiteConfig) -> list[int]:
    if cfg.vertex is not None:
        return [cfg.vertex]
    return elements(matroids[0].ground)


def _check_coloop(inp: dict, cfg: SuiteConfig) -> Outcome:
    ms = inp["matroids"]
    branches = {}
    for v in _vertices(ms, cfg):
        out = coloop_or_contract(ms, v, cfg.field)
        branches[v] = {"kind": out.kind, "eta": out.eta_intersection, "bound": out.bound}
        if out.circuit is not None:
            branches[v]["circuit"] = elements(out.circuit)
    return Outcome({"branches": branches})


def _check_claim(inp: dict, cfg: SuiteConfig) -> Outcome:
    ms = inp["matroids"]
    counts = {}
    for v in _vertices(ms, cfg):
        rep = check_claim_equalities(ms, v)
        counts[v] = len(rep.circuits)
    return Outcome({"qualifying_circuits": counts})


def _pq_list(cfg: SuiteConfig) -> tuple[tuple[int, int], ...]:
    return cfg.pq or PQ_PAIRS


def _check_nu_observations(inp: dict, cfg: SuiteConfig) -> Outcome:
    m, n = inp["M"], inp["N"]
    base = nu11(m, n)
    problems = []
    if nu_pq(m, n, 1, 1, cfg.budget).value != base:
        problems.append("nu11")
    values: dict[str, Any] = {"nu11": base}
    for p, q in _pq_list(cfg):
        w = equalized_witness(m, n, p, q)
        values[f"nu{p}{q}"] = w.value
        if any(multiplicity(v, w.a_sets) != multiplicity(v, w.b_sets) for v in elements(m.ground)):
            problems.append(f"equalize-{p}{q}")
        if w.value > max(p, q) * base:
            problems.append(f"q-bound-{p}{q}")
    check_monotone(m, n, m, n, 1, 1, 2, 2)
    free = mt.free(m.n)
    check_monotone(m, n, free, n, 1, 1, 1, 1)
    values["problems"] = problems
    return Outcome(values, not problems)


def _check_nuqq(inp: dict, cfg: SuiteConfig) -> Outcome:
    m, n = inp["M"], inp["N"]
    values, slacks = {}, []
    for q in (2, 3):
        rep = check_nuqq_bound(m, n, q)
        values[f"q={q}"] = {"nu11": rep.nu11, "nuqq": rep.nuqq, "bound": rep.bound}
        slacks.append(rep.slack)
    return Outcome(values, True, min(slacks), min(slacks) == 0)


def _check_dangling(inp: dict, cfg: SuiteConfig) -> Outcome:
    m, n = inp["M"], inp["N"]
    if nu11(m, n) == 0:
        return Outcome({"skipped": "nu11 = 0"})
    values = {}
    for p in range(1, cfg.pmax + 1):
        for q in range(p, cfg.qmax + 1):
            w = dangling_witness(m, n, p, q, cfg.budget)
            target = nu_pq(m, n, p, q, cfg.budget).value
            if not w.check(m, n, p, q, target):
                raise TheoremViolation(f"invalid dangling witness for p={p}, q={q}", {"M": m, "N": n})
            values[f"{p},{q}"] = w.to_json()
    return Outcome(values)


def _check_eta_nu(inp: dict, cfg: SuiteConfig) -> Outcome:
    m, n = inp["M"], inp["N"]
    values, tight, slacks = {}, False, []
    for p, q in _pq_list(cfg):
        rep = check_eta_nu_bound(m, n, p, q, cfg.field)
        values[f"{p},{q}"] = {"eta": rep.eta, "nu": rep.nu, "bound": rep.bound}
        tight = tight or rep.tight
        slacks.append(rep.slack)
    return Outcome(values, True, min(slacks), tight)


def _check_chi_sum(inp: dict, cfg: SuiteConfig) -> Outcome:
    m, n = inp["M"], inp["N"]
    rep = check_chi_sum(m, n, cfg.list_nmax, cfg.list_kmax)
    fast_ok = chi_matroid(m) == rep.chi_m and chi_matroid(n) == rep.chi_n
    values = {"chi_M": rep.chi_m, "chi_N": rep.chi_n, "chi_MN": rep.chi_intersection, "chi_list_MN": rep.chi_list_intersection}
    return Outcome(values, fast_ok, rep.slack, rep.slack == 0)


def _check_delta_eta(inp: dict, cfg: SuiteConfig) -> Outcome:
    m, n = inp["M"], inp["N"]
    rep = check_delta_eta_bound(m, n, cfg.field, cfg.list_nmax, cfg.list_kmax)
    values = {"delta_eta": rep.delta_eta, "chi_M": rep.chi_m, "chi_N": rep.chi_n, "chi_list_MN": rep.chi_list}
    return Outcome(values, rep.holds, rep.bound - rep.delta_eta, rep.tight)


@dataclass
class TightnessReport:
    p: int
    q: int
    chi_m: int
    chi_n: int
    eta: Any
    delta_eta: Fraction
    matching: bool

    @property
    def holds(self) -> bool:
        k = self.p + self.q
        return (
            self.chi_m == self.chi_n == k
            and self.eta == 1
            and self.delta_eta == 2 * k == self.chi_m + self.chi_n
            and self.matching
        )


def check_tightness(p: int, q: int, field_: Field = Q) -> TightnessReport:
    t = tightness_example(p, q)
    inter = intersection_complex(t.m, t.n)
    rep = TightnessReport(
        p,
        q,
        chi(t.m.complex)[0],
        chi(t.n.complex)[0],
        eta(inter, field_),
        delta_eta(inter, field_),
        inter == matching_complex(t.edges),
    )
    if not rep.holds:
        raise TheoremViolation(f"tightness example p={p}, q={q} is not tight: {rep}", {"p": p, "q": q})
    return rep


def _check_tightness(inp: dict, cfg: SuiteConfig) -> Outcome:
    rep = check_tightness(inp["p"], inp["q"], cfg.field)
    values = {"chi_M": rep.chi_m, "chi_N": rep.chi_n, "eta": rep.eta, "delta_eta": rep.delta_eta}
    return Outcome(values, rep.holds, 0, True)


# --- suite registry ---------------------------------------------------------


@dataclass(frozen=True)
class Suite:
    source: str  # which corpus list feeds it
    nmax: int
    check: Callable[[dict, SuiteConfig], Outcome]


SUITES: dict[str, Suite] = {
    "duality": Suite("complexes+matroids", 7, _check_duality),
    "operators": Suite("hypergraphs+matroids", 8, _check_operators),
    "axioms": Suite("matroids", 7, _check_axioms),
    "homology-basics": Suite("complexes", 7, _check_homology_basics),
    "join": Suite("join_pairs", 7, _check_join),
    "mayer-vietoris": Suite("complex_pairs", 7, _check_mv),
    "game-soundness": Suite("hypergraphs", 8, _check_game),
    "coloop": Suite("matroid_lists", 6, _check_coloop),
    "claim": Suite("matroid_lists", 6, _check_claim),
    "nu-observations": Suite("pairs", 7, _check_nu_observations),
    "nuqq": Suite("pairs", 7, _check_nuqq),
    "dangling": Suite("pairs", 7, _check_dangling),
    "eta-nu": Suite("pairs", 7, _check_eta_nu),
    "chi-sum": Suite("pairs", 7, _check_chi_sum),
    "delta-eta": Suite("pairs", 7, _check_delta_eta),
    "tightness": Suite("params", 12, _check_tightness),
}


def _corpus_cases(source: str, corpus: Corpus, cfg: SuiteConfig) -> Iterator[Case]:
    if source == "params":
        for p in range(1, cfg.pmax + 1):
            for q in range(1, cfg.qmax + 1):
                yield Case(f"p={p},q={q}", {"p": p, "q": q})
        return
    for part in source.split("+"):
        if part == "complexes":
            for e in corpus.complexes:
                yield Case(e.name, {"complex": e.value})
        elif part == "matroids":
            for e in corpus.matroids():
                yield Case(e.name, {"matroid": e.value})
        elif part == "hypergraphs":
            for e in corpus.hypergraphs:
                yield Case(e.name, {"hypergraph": e.value})
        elif part in ("complex_pairs", "join_pairs"):
            for e in getattr(corpus, part):
                yield Case(e.name, {"A": e.value[0], "B": e.value[1]})
        elif part == "pairs":
            for e in corpus.pairs:
                yield Case(e.name, {"M": e.value[0], "N": e.value[1]})
        elif part == "matroid_lists":
            for e in corpus.pairs:
                yield Case(e.name, {"matroids": list(e.value)})


def _random_cases(name: str, source: str, cfg: SuiteConfig, nmax: int) -> Iterator[Case]:
    if source == "params":
        return
    kind = source.split("+")[0]
    for i in range(cfg.random_cases):
        tag = f"{cfg.seed}:{name}:{i}"
        n = _rng(tag).randint(1, nmax)
        cid = f"random-{i}"
        if kind == "complexes":
            yield Case(cid, {"complex": random_complex(tag, n, _rng(tag + "d").choice((0.3, 0.5, 0.7)))})
        elif kind == "matroids":
            yield Case(cid, {"matroid": random_matroid(tag, n)})
        elif kind == "hypergraphs":
            rng = _rng(tag + "h")
            yield Case(cid, {"hypergraph": random_hypergraph(tag, n, rng.randint(0, n + 2), rng.randint(1, 4))})
        elif kind == "complex_pairs":
            yield Case(cid, {"A": random_complex(tag + "A", n, 0.5, False), "B": random_complex(tag + "B", n, 0.5, False)})
        elif kind == "join_pairs":
            n1 = _rng(tag + "j").randint(0, n)
            a = random_complex(tag + "A", n1, 0.5, False)
            b = random_complex(tag + "B", n - n1, 0.5, False)
            yield Case(cid, {"A": a, "B": shift_complex(b, n1)})
        elif kind == "pairs":
            yield Case(cid, {"M": random_matroid(tag + "M", n), "N": random_matroid(tag + "N", n)})
        elif kind == "matroid_lists":
            yield Case(cid, {"matroids": [random_matroid(tag + "M", n), random_matroid(tag + "N", n)]})


def _case_n(case: Case) -> int:
    sizes = []
    for v in case.inputs.values():
        for x in v if isinstance(v, list) else [v]:
            if isinstance(x, Matroid):
                sizes.append(x.n)
            elif isinstance(x, SimplicialComplex):
                sizes.append(x.ground.bit_length())
            elif isinstance(x, hg.Hypergraph):
                sizes.append(x.vertices.bit_length())
    return max(sizes, default=0)


# --- bundles ----------------------------------------------------------------


def encode_value(value: Any) -> dict:
    if isinstance(value, Matroid):
        return {"matroid": matroid_to_json(value)}
    if isinstance(value, SimplicialComplex):
        return {"complex": complex_to_json(value)}
    if isinstance(value, hg.Hypergraph):
        return {"hypergraph": hypergraph_to_json(value)}
    if isinstance(value, list):
        return {"list": [encode_value(v) for v in value]}
    return {"value": value}


def decode_value(data: dict) -> Any:
    if "matroid" in data:
        return matroid_from_json(data["matroid"])
    if "complex" in data:
        return complex_from_json(data["complex"])
    if "hypergraph" in data:
        return hypergraph_from_json(data["hypergraph"])
    if "list" in data:
        return [decode_value(v) for v in data["list"]]
    return data["value"]


def make_bundle(suite: str, case: Case, cfg: SuiteConfig, message: str) -> dict:
    return {
        "suite": suite,
        "case": case.case_id,
        "inputs": {k: encode_value(v) for k, v in case.inputs.items()},
        "config": cfg.to_json(),
        "error": message,
    }


def _write_bundle(bundle: dict, directory: Path) -> Path:
    directory.mkdir(parents=True, exist_ok=True)
    safe = "".join(ch if ch.isalnum() or ch in "-_" else "_" for ch in bundle["case"])
    path = directory / f"{bundle['suite']}-{safe}.json"
    path.write_text(dumps(bundle) + "\n", encoding="utf-8")
    return path


# --- running ----------------------------------------------------------------


def run_cases(name: str, cases: Iterator[Case], cfg: SuiteConfig) -> VerificationReport:
    suite = SUITES[name]
    report = VerificationReport(name, cfg.seed)
    start = time.perf_counter()
    for case in cases:
        try:
            out = suite.check(case.inputs, cfg)
            message = None if out.ok else f"check failed: {to_jsonable(out.values)}"
        except TheoremViolation as exc:
            out, message = None, f"{type(exc).__name__}: {exc}"
        if message is not None:
            bundle = make_bundle(name, case, cfg, message)
            if cfg.bundle_dir is not None:
                bundle["path"] = str(_write_bundle(bundle, Path(cfg.bundle_dir)))
            log.error("suite %s failed on %s: %s", name, case.case_id, message)
            report.failures.append(bundle)
            break
        report.cases.append(CaseResult(case.case_id, out.values, out.slack, out.tight))
    report.cases.sort(key=lambda c: c.case_id)
    report.wall_time = time.perf_counter() - start
    return report


def run_suite(name: str, config: Optional[SuiteConfig] = None, corpus: Optional[Corpus] = None) -> VerificationReport:
    """Run one named suite over the corpus plus ``config.random_cases`` random instances."""
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    cfg = config or SuiteConfig()
    suite = SUITES[name]
    nmax = cfg.nmax if cfg.nmax is not None else suite.nmax
    if nmax > suite.nmax and not cfg.allow_large:
        raise DomainError(f"suite {name} defaults to n <= {suite.nmax}; pass allow_large to go beyond")
    if (cfg.list_nmax > 5 or cfg.list_kmax > 4) and not cfg.allow_large:
        raise DomainError("list-colouring checks default to n <= 5, k <= 4; pass allow_large to go beyond")

    def cases() -> Iterator[Case]:
        if cfg.use_corpus:
            for case in _corpus_cases(suite.source, corpus or build_corpus(), cfg):
                if suite.source == "params" or _case_n(case) <= nmax:
                    yield case
        yield from _random_cases(name, suite.source, cfg, nmax)

    return run_cases(name, cases(), cfg)


def replay(bundle: dict) -> VerificationReport:
    """Rerun the single case stored in a failure bundle."""
    name = bundle.get("suite")
    if name not in SUITES:
        raise DomainError(f"bundle names unknown suite {name!r}")
    cfg = SuiteConfig.from_json(bundle.get("config", {}))
    case = Case(bundle.get("case", "replay"), {k: decode_value(v) for k, v in bundle["inputs"].items()})
    return run_cases(name, iter([case]), cfg)


def single_case(name: str, inputs: dict, config: Optional[SuiteConfig] = None) -> VerificationReport:
    """Run one suite's check on user-supplied inputs."""
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}")
    return run_cases(name, iter([Case("input", inputs)]), config or SuiteConfig())
