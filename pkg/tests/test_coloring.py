import pytest

from matroidcolor import matroid as mt
from matroidcolor.bitset import full, mask_of, submasks
from matroidcolor.coloring import Coloring, check_chi_sum, chi, chi_list, chi_matroid, find_bad_assignment
from matroidcolor.complex import SimplicialComplex
from matroidcolor.errors import DomainError, NoColoringError, ResourceError
from matroidcolor.harness import matching_complex, random_complex, random_matroid, tightness_example

import oracles


def S(*xs):
    return mask_of(xs)


def C(ground, facets):
    return SimplicialComplex(mask_of(ground), [mask_of(f) for f in facets])


C4 = matching_complex(tightness_example(1, 1).edges)


def test_chi_examples():
    assert chi(SimplicialComplex.simplex(full(4)))[0] == 1
    k, col = chi(C4)
    assert k == 2
    assert set(col.classes) == {S(0, 2), S(1, 3)}
    part = mt.partition([[0, 1, 2], [3, 4]], [1, 1])
    assert chi(part.complex)[0] == 3
    assert chi(SimplicialComplex(0, [0]))[0] == 0


def test_chi_witness_is_partition():
    for seed in range(40):
        c = random_complex(seed, 1 + seed % 7)
        k, col = chi(c)
        assert len(col.classes) == k
        assert col.is_valid_for(c)
        assert sorted(col.assignment) == list(range(1 + seed % 7))
        assert k == oracles.chi(range(1 + seed % 7), oracles.complex_faces(c))


def test_chi_uncovered():
    with pytest.raises(NoColoringError):
        chi(C([0, 1], [[0]]))


def test_coloring_validity():
    assert not Coloring((S(0, 1), S(1))).is_valid_for(SimplicialComplex.simplex(S(0, 1)))
    assert not Coloring((S(0),)).is_valid_for(SimplicialComplex.simplex(S(0, 1)))


def test_chi_matroid_examples():
    assert chi_matroid(mt.free(4)) == 1
    assert chi_matroid(mt.uniform(4, 2)) == 2
    u24 = mt.uniform(4, 2)
    assert oracles.chi_matroid_cover(range(4), {oracles.bits(s) for s in u24.independent_sets}) == 2
    for p, q in ((1, 1), (2, 1), (2, 3)):
        inst = tightness_example(p, q)
        assert chi_matroid(inst.m) == chi_matroid(inst.n) == p + q
    with pytest.raises(DomainError):
        chi_matroid(mt.minor_contract(mt.from_circuits(3, [[0, 1]]), S(0)))


def test_chi_matroid_matches_cover():
    for seed in range(60):
        m = random_matroid(seed, 1 + seed % 7)
        assert chi_matroid(m) == chi(m.complex)[0]


def test_chi_list_examples():
    assert chi_list(SimplicialComplex.simplex(full(3)), 3).value == 1
    u12 = mt.uniform(2, 1).complex
    res = chi_list(u12, 3)
    assert res.value == 2
    assert {frozenset(v) for v in res.blocking.lists.values()} == {frozenset({0})}
    assert chi_list(C4, 3).value == 2


def test_chi_list_limits():
    with pytest.raises(ResourceError):
        chi_list(SimplicialComplex.simplex(full(7)), 2)
    with pytest.raises(ResourceError):
        chi_list(SimplicialComplex.simplex(full(3)), 4)
    with pytest.raises(NoColoringError):
        chi_list(C([0, 1], [[0]]), 2)
    res = chi_list(C(range(3), [[0], [1], [2]]), 2)
    assert res.value is None and str(res) == ">2"


def _check_blocking(c, k):
    bad = find_bad_assignment(c, k)
    if bad is None:
        return
    assert all(len(cs) == k for cs in bad.lists.values())
    assert not oracles.list_colourable(range(c.ground.bit_length()), oracles.complex_faces(c), bad.lists)


def test_chi_list_against_oracle():
    # the oracle walks every canonical list assignment, so keep n small
    for seed in range(25):
        n = 1 + seed % 4
        c = random_complex(seed, n, density=0.5)
        faces = oracles.complex_faces(c)
        kmax = 3 if n <= 3 else 2
        got = chi_list(c, kmax).value
        assert got == oracles.chi_list(range(n), faces, kmax)
        for k in range(1, kmax + 1):
            _check_blocking(c, k)


def test_chi_list_at_least_chi():
    for seed in range(30):
        c = random_complex(seed, 1 + seed % 5)
        res = chi_list(c, 3)
        if res.value is not None:
            assert chi(c)[0] <= res.value


def test_chi_sum_examples():
    rep = check_chi_sum(mt.free(3), mt.free(3))
    assert (rep.chi_intersection, rep.bound, rep.chi_list_intersection) == (1, 2, 1)
    inst = tightness_example(1, 1)
    rep = check_chi_sum(inst.m, inst.n)
    assert (rep.chi_m, rep.chi_n, rep.chi_intersection) == (2, 2, 2)
    assert rep.chi_list_intersection == 2
    with pytest.raises(DomainError):
        check_chi_sum(mt.free(2), mt.free(3))


def test_chi_sum_random_partition_pairs():
    for seed in range(30):
        n = 2 + seed % 5
        m = random_matroid((seed, "a"), n, "partition")
        other = random_matroid((seed, "b"), n, "partition")
        rep = check_chi_sum(m, other)
        assert rep.chi_intersection <= rep.bound
        if rep.chi_list_intersection is not None:
            assert rep.chi_list_intersection <= rep.bound


def test_chi_monotone_under_restriction():
    for seed in range(20):
        m = random_matroid(seed, 1 + seed % 6)
        whole = chi(m.complex)[0]
        for x in submasks(m.ground):
            if x:
                assert chi(mt.minor_restrict(m, x).complex)[0] <= whole
