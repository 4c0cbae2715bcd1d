# -*- coding: utf-8 -*-
#
# This file is part of PyMajority - finite models for majority and Mal'tsev
# conditions
#
#    PyMajority is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    along with this program.  If not, see <http://www.gnu.org/licenses/>

import itertools

import numpy
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import all_relations, least_superset, rel_structures, relation_mask
from pymajority.errors import SignatureError
from pymajority.matrix import difunctional_oracle
from pymajority.relobjects import MAJORITY, MALTSEV, classify, is_majority_object, \
    is_maltsev_object, majority_domain, maltsev_coreflection, maltsev_domain, object_check_array, \
    pattern_value
from pymajority.structures import FiniteSet, Relation, Structure, replay_homomorphism_witness


def binary_structure(n, mask):

    U = FiniteSet(n)
    pairs = list(itertools.product(range(n), repeat=2))
    return Structure(U, {"R": Relation((U, U), [p for i, p in enumerate(pairs) if mask >> i & 1])})


@pytest.mark.parametrize("triple, maltsev, majority", [
    ((0, 0, 1), 1, 0),
    ((1, 0, 0), 1, 0),
    ((0, 1, 0), None, 0),
    ((2, 2, 2), 2, 2),
    ((0, 1, 2), None, None),
])
def test_pattern_value(triple, maltsev, majority):

    assert pattern_value(triple, MALTSEV) == maltsev
    assert pattern_value(triple, MAJORITY) == majority


def test_domains_of_the_counterexample(counterexample):

    domain, f = maltsev_domain(counterexample)
    # (x,x,y) and (y,x,x) over two elements, the constant triples counted once
    assert domain.universe.size == 6
    domain, f = majority_domain(counterexample)
    assert domain.universe.size == 8
    assert f.codomain == counterexample.universe


def test_counterexample(counterexample):

    assert is_maltsev_object(counterexample) == (True, None)
    holds, witness = is_majority_object(counterexample)
    assert not holds
    assert witness.premise_labels == ["((1,0,0),(1,1,0),(0,1,0))"]
    assert witness.conclusion_labels == "(0,1,0)"
    assert witness.conclusion == (0, 1, 0)
    d = witness.to_dict()
    assert d["premise_labels"] == ["((1,0,0),(1,1,0),(0,1,0))"]
    assert d["conclusion_labels"] == "(0,1,0)"
    domain, f = majority_domain(counterexample)
    assert replay_homomorphism_witness(f, domain, counterexample, witness)


def test_classify(counterexample):

    verdict = classify(counterexample)
    assert verdict.is_maltsev_object
    assert not verdict.is_majority_object
    d = verdict.to_dict()
    assert (d["maltsev"], d["majority"]) == (True, False)
    assert list(d["witnesses"]) == ["majority"]


def test_needs_a_single_relation(counterexample):

    U = counterexample.universe
    two = counterexample.with_relation("E", Relation((U, U), [(0, 1)]))
    with pytest.raises(SignatureError):
        is_maltsev_object(two)


def test_empty_relation_is_both():

    X = Structure(FiniteSet(3), {"R": Relation((FiniteSet(3),) * 2)})
    assert classify(X).to_dict()["witnesses"] == {}
    assert object_check_array(X, MAJORITY) and object_check_array(X, MALTSEV)


def test_every_small_binary_relation_is_a_majority_object():

    for mask in range(2 ** 4):
        assert is_majority_object(binary_structure(2, mask))[0]
    for mask in range(2 ** 9):
        assert object_check_array(binary_structure(3, mask), MAJORITY)


def test_binary_majority_objects_at_five_elements():

    rng = numpy.random.default_rng(7)
    for mask in rng.integers(0, 2 ** 25, size=50).tolist():
        assert object_check_array(binary_structure(5, mask), MAJORITY)


def test_binary_maltsev_objects_are_difunctional():

    for mask in range(2 ** 9):
        X = binary_structure(3, mask)
        assert object_check_array(X, MALTSEV) == difunctional_oracle(X.relation("R"))


@pytest.mark.parametrize("mode", ["chaotic", "single"])
def test_coreflection(mode):

    X = binary_structure(2, 0b0111)
    closed = maltsev_coreflection(X, mode=mode)
    assert closed.relation("R") == Relation.full((X.universe,) * 2)
    assert is_maltsev_object(closed)[0]
    assert maltsev_coreflection(closed, mode=mode) == closed


def test_coreflection_mode():

    with pytest.raises(ValueError):
        maltsev_coreflection(binary_structure(2, 1), mode="lazy")


@given(rel_structures(max_size=2))
def test_fast_check_agrees(X):

    assert object_check_array(X, MALTSEV) == is_maltsev_object(X)[0]
    assert object_check_array(X, MAJORITY) == is_majority_object(X)[0]


@given(rel_structures(max_size=2), st.data())
def test_coreflection_laws(X, data):

    closed = maltsev_coreflection(X)
    R, C = X.relation("R"), closed.relation("R")
    assert R.issubset(C)
    assert is_maltsev_object(closed)[0]
    assert maltsev_coreflection(closed) == closed
    assert maltsev_coreflection(X, mode="single") == closed
    universe = list(itertools.product(range(X.universe.size), repeat=R.arity))
    extra = data.draw(st.lists(st.sampled_from(universe), max_size=3))
    bigger = X.with_relation("R", Relation(R.signature, list(R) + extra))
    assert C.issubset(maltsev_coreflection(bigger).relation("R"))


@pytest.mark.parametrize("sizes", [(2, 2, 2), (3, 3), (2, 2)])
def test_coreflection_is_least(sizes):

    U = FiniteSet(sizes[0])
    structures = [(mask, Structure(U, {"R": R})) for mask, R in all_relations(sizes)]
    objects = [mask for mask, X in structures if object_check_array(X, MALTSEV)]
    for mask, X in structures:
        closed = maltsev_coreflection(X).relation("R")
        assert relation_mask(closed, sizes) == least_superset(mask, objects)


def test_coreflection_keeps_a_maltsev_object(counterexample):

    single = Structure.build(2, {"R": (3, [(0, 1, 0)])})
    assert maltsev_coreflection(single) == single
    assert maltsev_coreflection(counterexample) == counterexample
