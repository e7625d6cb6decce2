import json
from fractions import Fraction
from math import inf

import pytest

from matroidcolor import matroid as mt
from matroidcolor.complex import SimplicialComplex
from matroidcolor.errors import DomainError, InvalidCircuitsError
from matroidcolor.formats import (
    complex_from_json,
    complex_to_json,
    dumps,
    eta_from_json,
    eta_to_json,
    fraction_from_json,
    fraction_to_json,
    hypergraph_from_json,
    hypergraph_to_json,
    load_object,
    matroid_from_json,
    matroid_to_json,
)
from matroidcolor.harness import random_complex, random_hypergraph, random_matroid


def test_hypergraph_roundtrip():
    for seed in range(20):
        h = random_hypergraph(seed, 1 + seed % 6, 3)
        assert hypergraph_from_json(hypergraph_to_json(h)) == h
    h = hypergraph_from_json({"n": 4, "vertices": [1, 3], "edges": [[1]]})
    assert hypergraph_to_json(h) == {"n": 4, "vertices": [1, 3], "edges": [[1]]}


def test_complex_roundtrip_and_void():
    for seed in range(20):
        c = random_complex(seed, 1 + seed % 6)
        assert complex_from_json(complex_to_json(c)) == c
    void = SimplicialComplex.void(0b11)
    assert complex_to_json(void) == {"n": 2, "facets": None}
    assert complex_from_json({"n": 2, "facets": None}).is_void
    assert complex_from_json({"n": 0, "facets": [[]]}) == SimplicialComplex(0, [0])


def test_matroid_kinds():
    assert matroid_from_json({"type": "uniform", "n": 3, "k": 2}).bases == mt.uniform(3, 2).bases
    p = matroid_from_json({"type": "partition", "parts": [[0, 2], [1]], "capacities": [1, 1]})
    assert p.n == 3 and not p.is_independent(0b101)
    g = matroid_from_json({"type": "graphic", "vertices": 3, "edges": [[0, 1], [1, 2], [2, 0]]})
    assert g.circuits == (0b111,)
    c = matroid_from_json({"type": "circuits", "n": 3, "circuits": [[0, 1, 2]]})
    assert c.independent_sets == mt.uniform(3, 2).independent_sets
    t = matroid_from_json({"type": "transversal", "n": 3, "family": [[0, 1], [1, 2]]})
    assert t.independent_sets == mt.uniform(3, 2).independent_sets
    i = matroid_from_json({"type": "independent", "n": 2, "sets": [[0], [1]]})
    assert i.independent_sets == mt.uniform(2, 1).independent_sets


def test_matroid_roundtrip():
    for seed in range(30):
        m = random_matroid(seed, 1 + seed % 7)
        back = matroid_from_json(json.loads(json.dumps(matroid_to_json(m))))
        assert back.independent_sets == m.independent_sets


@pytest.mark.parametrize(
    "data",
    [
        {"type": "uniform", "n": -1, "k": 0},
        {"type": "uniform", "n": True, "k": 0},
        {"type": "what", "n": 2},
        {"type": "circuits", "n": 2, "circuits": [[0, 5]]},
        {"type": "circuits", "n": 2, "circuits": "x"},
        {"type": "graphic", "vertices": 2, "edges": [[0, 1, 1]]},
        {"type": "partition"},
    ],
)
def test_bad_matroids(data):
    with pytest.raises(DomainError):
        matroid_from_json(data)


def test_invalid_circuits_is_domain_error():
    with pytest.raises(InvalidCircuitsError):
        matroid_from_json({"type": "circuits", "n": 3, "circuits": [[0, 1], [1, 2]]})


def test_load_object_dispatch(tmp_path):
    files = {
        "m.json": ({"type": "uniform", "n": 2, "k": 1}, mt.Matroid),
        "c.json": ({"n": 2, "facets": [[0], [1]]}, SimplicialComplex),
    }
    for name, (data, cls) in files.items():
        path = tmp_path / name
        path.write_text(json.dumps(data))
        assert isinstance(load_object(path), cls)
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(DomainError):
        load_object(bad)
    odd = tmp_path / "odd.json"
    odd.write_text('{"n": 1}')
    with pytest.raises(DomainError):
        load_object(odd)


def test_exact_values():
    assert eta_to_json(inf) == "inf" and eta_from_json("inf") == inf
    assert eta_to_json(3) == 3 and eta_from_json(3) == 3
    assert fraction_to_json(Fraction(6, 4)) == "3/2"
    assert fraction_to_json(4) == "4/1"
    assert fraction_from_json("3/2") == Fraction(3, 2)
    assert json.loads(dumps({"x": [Fraction(1, 3), inf]})) == {"x": ["1/3", "inf"]}
