import pytest

from matroidcolor import hypergraph as hg
from matroidcolor.bitset import mask_of
from matroidcolor.complex import SimplicialComplex
from matroidcolor.errors import DomainError, NotFoundError

import oracles


def H(vertices, edges):
    return hg.Hypergraph.from_lists(vertices, edges)


def S(*xs):
    return mask_of(xs)


def test_delete_edge_examples():
    assert hg.delete_edge(H([1, 2], [[1, 2]]), S(1, 2)) == H([1, 2], [])
    assert hg.delete_edge(H([1, 2, 3], [[1, 2], [2, 3]]), S(1, 2)) == H([1, 2, 3], [[2, 3]])
    with pytest.raises(NotFoundError):
        hg.delete_edge(H([1], []), S(1))


def test_restrict_examples():
    h = H([1, 2, 3], [[1, 2], [2, 3]])
    assert hg.restrict(h, S(1, 2)) == H([1, 2], [[1, 2]])
    assert hg.restrict(h, h.vertices) == h
    assert hg.restrict(h, 0) == H([], [])
    with pytest.raises(DomainError):
        hg.restrict(h, S(4))


def test_contract_examples():
    h = H([1, 2, 3], [[1, 2], [2, 3]])
    assert hg.contract(h, S(2)) == H([1, 3], [[1], [3]])
    assert hg.contract(h, 0) == h
    assert hg.contract(H([1, 2], [[1, 2]]), S(1, 2)) == H([], [])


def test_contract_keeps_nested_edges():
    h = H([0, 1, 2], [[0, 1], [0, 1, 2]])
    assert hg.contract(h, S(2)).edges == (S(0, 1),)
    h = H([0, 1, 2, 3], [[0, 1], [1, 2, 3]])
    assert hg.contract(h, S(1)).edges == (S(0), S(2, 3))
    h = H([0, 1, 2], [[0, 1], [0, 2, 1]])
    assert set(hg.contract(h, S(0)).edges) == {S(1), S(1, 2)}


def test_delete_vertices_and_sim_examples():
    h = H([1, 2, 3], [[1, 2], [2, 3]])
    assert hg.delete_vertices(h, S(2)) == H([1, 3], [])
    assert hg.delete_vertices(h, 0) == h
    assert hg.delete_vertices(H([1, 2, 3], [[1, 2], [3]]), S(1)) == H([2, 3], [[3]])
    assert hg.sim(h, S(2)) == H([1, 2, 3], [])
    assert hg.sim(h, 0) == h
    for v in (1, 2, 3):
        x = S(v)
        assert hg.restrict(hg.sim(h, x), h.vertices & ~x) == hg.delete_vertices(h, x)


def test_edges_deduplicated_and_checked():
    assert H([0, 1], [[0, 1], [1, 0]]).edges == (S(0, 1),)
    with pytest.raises(DomainError):
        H([0], [[0, 1]])


def test_independence_complex_examples():
    assert hg.independence_complex(H([1, 2], [[1, 2]])) == SimplicialComplex(S(1, 2), [S(1), S(2)])
    assert hg.independence_complex(H([1, 2, 3], [])) == SimplicialComplex.simplex(S(1, 2, 3))
    assert hg.independence_complex(H([0, 1], [[]])).is_void
    assert hg.independence_complex(H([], [])) == SimplicialComplex(0, [0])


def test_independence_complex_against_oracle():
    h = H(range(5), [[0, 1], [1, 2, 3], [3, 4], [0, 4]])
    got = oracles.complex_faces(hg.independence_complex(h))
    want = oracles.independent_sets(range(5), [[0, 1], [1, 2, 3], [3, 4], [0, 4]])
    assert got == want


def test_circuit_axioms_examples():
    assert hg.check_circuit_axioms(H([1, 2, 3], [[1, 2, 3]])) is None
    v = hg.check_circuit_axioms(H([1, 2], [[1], [1, 2]]))
    assert v.kind == "nested-pair"
    v = hg.check_circuit_axioms(H([1, 2, 3], [[1, 2], [2, 3]]))
    assert (v.kind, v.u, v.v) == ("elimination-failure", 2, 1)
    assert set(v.edges) <= set(H([1, 2, 3], [[1, 2], [2, 3]]).edges)
    assert hg.check_circuit_axioms(H([0], [[]])).kind == "empty-edge"


def test_circuit_axioms_accepts_triangle_pairs():
    # U(1,3): all pairs
    assert hg.check_circuit_axioms(H([0, 1, 2], [[0, 1], [0, 2], [1, 2]])) is None


def test_violation_json():
    v = hg.check_circuit_axioms(H([1, 2, 3], [[1, 2], [2, 3]]))
    assert v.to_json() == {"kind": "elimination-failure", "edges": [[1, 2], [2, 3]], "u": 2, "v": 1}
