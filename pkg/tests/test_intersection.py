import pytest

from matroidcolor import matroid as mt
from matroidcolor.bitset import full
from matroidcolor.errors import DomainError
from matroidcolor.harness import random_matroid, tightness_example
from matroidcolor.intersection import max_common_independent, nu11

import oracles


def indep(m):
    return {oracles.bits(s) for s in m.independent_sets}


def test_examples():
    m = mt.uniform(4, 2)
    cert = max_common_independent(m, m)
    assert cert.size == 2 and cert.check(m, m)
    inst = tightness_example(1, 1)
    assert nu11(inst.m, inst.n) == 2
    assert max_common_independent(mt.uniform(5, 1), mt.free(5)).size == 1
    assert nu11(mt.free(4), mt.free(4)) == 4
    assert nu11(mt.partition([full(3)], [1]), mt.free(3)) == 1


def test_ground_mismatch():
    with pytest.raises(DomainError):
        nu11(mt.free(2), mt.free(3))


def test_certificate_json():
    cert = max_common_independent(mt.free(2), mt.free(2))
    assert cert.to_json() == {"I": [0, 1], "V1": [0, 1], "V2": [], "size": 2}


def test_against_brute_force_and_min_max():
    for seed in range(120):
        n = 1 + seed % 7
        m = random_matroid((seed, 0), n)
        other = random_matroid((seed, 1), n)
        cert = max_common_independent(m, other)
        assert cert.check(m, other)
        im, io = indep(m), indep(other)
        assert cert.size == oracles.max_common(im, io) == oracles.min_cut(range(n), im, io)
