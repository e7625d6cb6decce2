import random
from fractions import Fraction
from math import inf

import pytest

from matroidcolor import hypergraph as hg
from matroidcolor import matroid as mt
from matroidcolor.bitset import full, mask_of
from matroidcolor.bound_engine import (
    GameMove,
    admissible_moves,
    canonical_form,
    check_claim_equalities,
    check_delta_eta_bound,
    check_eta_nu_bound,
    check_move,
    coloop_or_contract,
    game_derivation,
    game_value,
    qualifying_circuits,
)
from matroidcolor.errors import DomainError, ResourceError
from matroidcolor.harness import random_hypergraph, random_matroid, tightness_example
from matroidcolor.homology import eta


def S(*xs):
    return mask_of(xs)


def H(vertices, edges):
    return hg.Hypergraph.from_lists(vertices, edges)


# conflicts between the four edges 12, 23, 34, 41 of the 4-cycle
C4_CONFLICTS = H(range(4), [[0, 1], [1, 2], [2, 3], [0, 3]])


def test_game_examples():
    assert game_value(H(range(3), [[0, 1, 2]])) == 2
    assert game_value(H(range(3), [])) == inf
    assert game_value(H([], [])) == 0
    assert game_value(H(range(2), [[]])) == 0
    v = game_value(C4_CONFLICTS)
    assert v <= 1 == eta(hg.independence_complex(C4_CONFLICTS))


def test_game_limit():
    with pytest.raises(ResourceError):
        game_value(H(range(5), [[0, 1]]), limit=4)


def test_game_is_sound_and_label_invariant():
    rng = random.Random(11)
    for i in range(60):
        n = 1 + i % 7
        h = random_hypergraph(i, n, rng.randint(0, 5))
        value = game_value(h)
        assert value <= eta(hg.independence_complex(h))
        perm = list(range(n))
        rng.shuffle(perm)
        moved = hg.Hypergraph(full(n), [sum(1 << perm[v] for v in range(n) if e >> v & 1) for e in h.edges])
        assert canonical_form(moved) == canonical_form(h)
        assert game_value(moved) == value


def test_admissible_moves():
    h = H(range(3), [[0], [0, 1], [1, 2]])
    moves = admissible_moves(h)
    assert GameMove("vertex", 0) not in moves
    assert GameMove("edge", S(0, 1)) not in moves
    assert GameMove("edge", S(0)) in moves and GameMove("vertex", 2) in moves
    assert GameMove("edge", S(1, 2)).bonus == 1


def test_check_move():
    h = H(range(3), [[0, 1, 2]])
    rep = check_move(h, GameMove("edge", S(0, 1, 2)))
    assert (rep.eta, rep.eta_delete, rep.eta_contract, rep.bonus) == (2, inf, 0, 2)
    with pytest.raises(DomainError):
        check_move(h, GameMove("edge", S(0, 1)))


def test_derivation_tree():
    h = H(range(3), [[0, 1, 2]])
    tree = game_derivation(h)
    assert tree.value == 2
    data = tree.to_json()
    assert data["value"] == 2 and "move" in data
    leaf = game_derivation(H(range(2), [])).to_json()
    assert leaf["value"] == "inf" and "move" not in leaf


def test_coloop_examples():
    rep = coloop_or_contract([mt.free(3)], 0)
    assert rep.kind == "sim" and rep.eta_intersection == rep.bound == inf
    rep = coloop_or_contract([mt.uniform(3, 2), mt.free(3)], 0)
    assert rep.kind == "contract" and rep.circuit == S(0, 1, 2) and rep.bonus == 2
    assert rep.eta_intersection == rep.bound == 2
    inst = tightness_example(1, 1)
    for v in range(4):
        assert coloop_or_contract([inst.m, inst.n], v).eta_intersection >= 1
    with pytest.raises(DomainError):
        coloop_or_contract([mt.free(2)], 3)


def test_claim_examples():
    u23 = mt.uniform(3, 2)
    rep = check_claim_equalities([u23], 0)
    assert rep.holds and rep.circuits == [S(0, 1, 2)]
    rep = check_claim_equalities([mt.free(3), u23], 0)
    assert rep.circuits == [] and rep.eq1
    inst = tightness_example(2, 1)
    for v in range(6):
        assert check_claim_equalities([inst.m, inst.n], v).holds
        assert check_claim_equalities([inst.n, inst.m], v).holds


def test_coloop_and_claim_random():
    for seed in range(30):
        n = 1 + seed % 6
        ms = [random_matroid((seed, i), n) for i in range(1 + seed % 3)]
        for v in range(n):
            coloop_or_contract(ms, v)
            assert check_claim_equalities(ms, v).holds
            for c in qualifying_circuits(ms, v):
                assert c >> v & 1


def test_eta_nu_examples():
    rep = check_eta_nu_bound(mt.free(3), mt.free(3), 1, 1)
    assert rep.eta == inf and rep.bound == Fraction(3, 2) and rep.slack == inf
    inst = tightness_example(1, 1)
    rep = check_eta_nu_bound(inst.m, inst.n, 1, 1)
    assert (rep.eta, rep.nu, rep.bound) == (1, 2, 1) and rep.tight
    for seed in range(30):
        n = 1 + seed % 6
        m, other = random_matroid((seed, 0), n), random_matroid((seed, 1), n)
        for p, q in ((1, 1), (1, 2), (2, 2), (1, 3), (2, 3)):
            assert check_eta_nu_bound(m, other, p, q).holds


def test_delta_eta_examples():
    inst = tightness_example(1, 1)
    rep = check_delta_eta_bound(inst.m, inst.n)
    assert rep.delta_eta == 4 == rep.bound and rep.tight
    assert rep.chi_list == 2
    rep = check_delta_eta_bound(mt.free(3), mt.free(3))
    assert rep.delta_eta == 0 and rep.bound == 2
    assert rep.chi_list == 1 and rep.list_bound == 1
    for seed in range(20):
        n = 1 + seed % 6
        m, other = random_matroid((seed, 0), n), random_matroid((seed, 1), n)
        assert check_delta_eta_bound(m, other).holds
