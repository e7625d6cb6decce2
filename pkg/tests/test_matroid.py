import pytest

from matroidcolor import hypergraph as hg
from matroidcolor import matroid as mt
from matroidcolor.bitset import full, mask_of, size, submasks
from matroidcolor.complex import SimplicialComplex, join
from matroidcolor.errors import DomainError, InvalidCircuitsError, LoopNotSupportedError, NotAMatroidError
from matroidcolor.harness import tightness_example

import oracles


def S(*xs):
    return mask_of(xs)


def faces(m):
    return set(m.independent_sets)


def test_from_circuits_examples():
    assert faces(mt.from_circuits(3, [[0, 1, 2]])) == faces(mt.uniform(3, 2))
    assert faces(mt.from_circuits(2, [])) == faces(mt.free(2))
    m = mt.from_circuits(4, [[0, 1], [2, 3]])
    assert faces(m) == faces(mt.partition([[0, 1], [2, 3]], [1, 1]))
    assert m.circuits == (S(0, 1), S(2, 3))
    assert mt.verify_matroid_axioms(m.complex) is None


def test_from_circuits_errors():
    with pytest.raises(InvalidCircuitsError) as exc:
        mt.from_circuits(3, [[0, 1], [1, 2]])
    assert exc.value.violation.kind == "elimination-failure"
    with pytest.raises(LoopNotSupportedError):
        mt.from_circuits(2, [[0]])


def test_constructors():
    assert mt.uniform(3, 2).bases == (S(0, 1), S(0, 2), S(1, 2))
    with pytest.raises(DomainError):
        mt.uniform(2, 3)
    with pytest.raises(LoopNotSupportedError):
        mt.uniform(2, 0)
    tri = mt.graphic(3, [(0, 1), (1, 2), (2, 0)])
    assert tri.circuits == (S(0, 1, 2),)
    with pytest.raises(DomainError):
        mt.partition([[0, 1], [1, 2]], [1, 1])
    with pytest.raises(DomainError):
        mt.partition([[0, 1]], [0])


def test_transversal():
    m = mt.transversal(4, [[0, 1], [1, 2], [3]])
    assert m.bases == (S(0, 1, 3), S(0, 2, 3), S(1, 2, 3))
    assert mt.verify_matroid_axioms(m.complex) is None
    with pytest.raises(LoopNotSupportedError):
        mt.transversal(2, [[0]])


def test_tightness_partition_matroid():
    inst = tightness_example(1, 1)
    # edges: 0 = 12, 1 = 23, 2 = 34, 3 = 41; parts of M are stars of 1 and 3
    for s in submasks(full(4)):
        at1 = size(s & S(0, 3))
        at3 = size(s & S(1, 2))
        assert inst.m.is_independent(s) == (at1 <= 1 and at3 <= 1)


def test_from_independent_sets():
    m = mt.from_independent_sets(3, [[0, 1], [0, 2], [1, 2]])
    assert faces(m) == faces(mt.uniform(3, 2))
    with pytest.raises(NotAMatroidError) as exc:
        mt.from_independent_sets(3, [[0, 1], [2]])
    assert exc.value.counterexample.kind == "augmentation"


def test_verify_axioms_examples():
    c = SimplicialComplex(S(0, 1, 2), [S(0, 1), S(2)])
    bad = mt.verify_matroid_axioms(c)
    assert (bad.s, bad.t) == (S(2), S(0, 1))
    assert mt.verify_matroid_axioms(SimplicialComplex.void(S(0))).kind == "empty-missing"


def test_rank_examples():
    assert mt.rank(mt.uniform(3, 2), full(3)) == 2
    assert all(mt.rank(mt.free(4), x) == size(x) for x in submasks(full(4)))
    parts = [S(0, 1, 2), S(3, 4)]
    p = mt.partition(parts, [2, 1])
    indep = {oracles.bits(s) for s in p.independent_sets}
    for x in submasks(full(5)):
        want = sum(min(size(x & part), cap) for part, cap in zip(parts, [2, 1]))
        assert p.rank(x) == want == oracles.rank(indep, oracles.bits(x))
    with pytest.raises(DomainError):
        mt.rank(mt.free(2), S(5))


def test_minor_examples():
    u23 = mt.uniform(3, 2)
    c = mt.minor_contract(u23, S(0))
    assert c.ground == S(1, 2)
    assert c.circuits == (S(1, 2),)
    assert mt.verify_matroid_axioms(c.complex) is None
    assert faces(mt.minor_restrict(u23, u23.ground)) == faces(u23)
    for v in range(3):
        s = mt.sim_element(u23, v)
        assert all(f >> v & 1 for f in s.complex.facets)
        rest = mt.minor_restrict(u23, u23.ground & ~(1 << v))
        assert s.complex == join(SimplicialComplex.simplex(1 << v), rest.complex)


def test_minor_contract_can_create_loops():
    m = mt.from_circuits(4, [[0, 1], [2, 3]])
    c = mt.minor_contract(m, S(0))
    assert c.loops == S(1)


def test_bases_examples():
    assert mt.bases(mt.uniform(2, 1)) == [S(0), S(1)]
    assert mt.bases(mt.free(2)) == [S(0, 1)]
    assert len(mt.bases(mt.uniform(4, 2))) == 6


def test_circuits_roundtrip_on_constructors():
    for m in (mt.uniform(4, 2), mt.graphic(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]), mt.partition([[0, 2], [1, 3, 4]], [1, 2])):
        h = m.circuit_hypergraph()
        assert hg.check_circuit_axioms(h) is None
        assert hg.independence_complex(h) == m.complex
        assert {oracles.bits(e) for e in m.circuits} == oracles.minimal_non_faces(
            range(m.n), {oracles.bits(s) for s in m.independent_sets}
        )


def test_intersection_complex_is_common_independent():
    inst = tightness_example(1, 1)
    inter = mt.intersection_complex(inst.m, inst.n)
    assert inter.facets == (S(0, 2), S(1, 3))
    with pytest.raises(DomainError):
        mt.intersection_complex(mt.free(2), mt.free(3))
