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

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rel_structures
from pymajority.errors import ElementError, SignatureError, UniverseCapError
from pymajority.libformat import format_structure
from pymajority.relobjects import classify
from pymajority.structures import FiniteMap, FiniteSet, Relation, Structure, compose, \
    converse, coproduct, decode_power, encode_power, inclusion, is_homomorphism, \
    is_relation_reflecting, product_power, projection, replay_homomorphism_witness, restrict


def test_default_labels_are_not_stored():

    assert FiniteSet(2, labels=["0", "1"]) == FiniteSet(2)
    assert FiniteSet(2, labels=["a", "b"]).label(1) == "b"
    assert FiniteSet(2, labels=["a", "b"]).index("b") == 1


def test_finite_set_rejects_bad_input():

    with pytest.raises(ElementError):
        FiniteSet(-1)
    with pytest.raises(ElementError):
        FiniteSet(2, labels=["a", "a"])
    with pytest.raises(ElementError):
        FiniteSet(2, basepoint=2)


def test_power_encoding_puts_coordinate_zero_last():

    assert encode_power((1, 0, 0), 2) == 1
    assert encode_power((0, 1, 1), 2) == 6
    assert decode_power(6, 2, 3) == (0, 1, 1)
    assert decode_power(encode_power((2, 0, 1), 3), 3, 3) == (2, 0, 1)


def test_relation_tuples_are_sorted_and_checked():

    U = FiniteSet(2)
    r = Relation((U, U), [(1, 0), (0, 1), (1, 0)])
    assert r.tuples == ((0, 1), (1, 0))
    assert (1, 0) in r and (1, 1) not in r
    with pytest.raises(ElementError):
        Relation((U, U), [(0, 2)])
    with pytest.raises(SignatureError):
        Relation((U, U), [(0, 1, 1)])


def test_compose_and_converse():

    U = FiniteSet(3)
    r = Relation((U, U), [(0, 1)])
    s = Relation((U, U), [(1, 2), (1, 0)])
    assert compose(r, s).tuples == ((0, 0), (0, 2))
    assert converse(s).tuples == ((0, 1), (2, 1))
    assert compose(r, Relation.diagonal(U)) == r


def test_structure_relation_of(counterexample):

    name, rel = counterexample.relation_of()
    assert name == "R" and len(rel) == 3
    two = counterexample.with_relation("Q", rel)
    with pytest.raises(SignatureError):
        two.relation_of()


def test_homomorphism_witness_is_least(counterexample):

    swap = FiniteMap(counterexample.universe, counterexample.universe, [1, 0])
    holds, witness = is_homomorphism(swap, counterexample, counterexample)
    assert not holds
    assert witness.premises == ((0, 0, 0),)
    assert witness.conclusion == (1, 1, 1)
    assert witness.relation == "R"
    assert replay_homomorphism_witness(swap, counterexample, counterexample, witness)
    identity = FiniteMap.identity(counterexample.universe)
    assert is_homomorphism(identity, counterexample, counterexample) == (True, None)


def test_product_power_projections_are_homomorphisms(counterexample):

    P = product_power(counterexample, 3)
    assert P.universe.size == 8
    assert len(P.relation("R")) == 27
    assert P.universe.label(1) == "(1,0,0)"
    for i in range(3):
        assert is_homomorphism(projection(counterexample, 3, i, P), P, counterexample)[0]


def test_product_power_first_power_keeps_tuples(counterexample):

    P = product_power(counterexample, 1)
    assert P.relation("R").tuples == counterexample.relation("R").tuples


def test_product_power_cap(counterexample):

    with pytest.raises(UniverseCapError):
        product_power(counterexample, 3, max_universe=7)


def test_restrict_to_everything_is_identity(counterexample):

    assert restrict(counterexample, [0, 1]) == counterexample


def test_restrict_reindexes_in_given_order(counterexample):

    sub = restrict(counterexample, [1])
    assert sub.universe.size == 1
    assert sub.universe.label(0) == "1"
    assert len(sub.relation("R")) == 0
    assert is_homomorphism(inclusion(sub, counterexample, [1]), sub, counterexample)[0]


def test_relation_reflecting(counterexample):

    sub = restrict(counterexample, [0])
    m = inclusion(sub, counterexample, [0])
    assert is_relation_reflecting(m, sub, counterexample)[0]
    empty = Structure(sub.universe, {"R": Relation((sub.universe,) * 3)})
    holds, witness = is_relation_reflecting(m, empty, counterexample)
    assert not holds and witness.conclusion == (0, 0, 0)


def test_coproduct(counterexample):

    C = coproduct(counterexample, counterexample)
    assert C.universe.size == 4
    assert C.universe.label(2) == "1:0"
    assert len(C.relation("R")) == 6
    left = FiniteMap(counterexample.universe, C.universe, [0, 1])
    right = FiniteMap(counterexample.universe, C.universe, [2, 3])
    assert is_homomorphism(left, counterexample, C)[0]
    assert is_homomorphism(right, counterexample, C)[0]


def test_finite_map_compose():

    U = FiniteSet(3)
    f = FiniteMap(U, U, [1, 2, 0])
    assert f.compose(f).values == (2, 0, 1)
    assert f.compose(FiniteMap.identity(U)) == f


@given(rel_structures())
def test_relabel_is_an_isomorphism(X):

    n = X.universe.size
    perm = list(reversed(range(n)))
    Y = X.relabel(perm)
    f = FiniteMap(X.universe, Y.universe, perm)
    assert is_homomorphism(f, X, Y)[0]
    assert Y.relabel(perm) == X


@given(st.integers(1, 2).flatmap(lambda k: rel_structures(arity=k)), st.integers(1, 2))
def test_product_power_relation_is_largest(X, n):

    P = product_power(X, n)
    R = P.relation("R")
    maps = [projection(X, n, i, P) for i in range(n)]
    assert all(is_homomorphism(f, P, X)[0] for f in maps)
    for t in itertools.product(range(P.universe.size), repeat=R.arity):
        if t in R:
            continue
        bigger = P.with_relation("R", R.union([t]))
        assert not all(is_homomorphism(f, bigger, X)[0] for f in maps)


@given(rel_structures())
def test_first_power_has_the_same_canonical_form(X):

    P = product_power(X, 1)
    same = Structure(X.universe, {name: Relation((X.universe,) * rel.arity, rel.tuples)
                                  for name, rel in P.relations.items()})
    assert same == X
    assert format_structure(same) == format_structure(X)


@given(rel_structures(), st.data())
def test_restrict_of_restrict(X, data):

    n = X.universe.size
    outer = data.draw(st.permutations(range(n)))[:data.draw(st.integers(0, n))]
    inner = data.draw(st.permutations(outer))[:data.draw(st.integers(0, len(outer)))]
    first = restrict(X, outer)
    assert restrict(first, [outer.index(e) for e in inner]) == restrict(X, inner)


@given(rel_structures(max_size=2), st.data())
def test_classify_is_invariant_under_relabelling(X, data):

    perm = data.draw(st.permutations(range(X.universe.size)))
    before, after = classify(X), classify(X.relabel(perm))
    assert (before.is_maltsev_object, before.is_majority_object) == \
        (after.is_maltsev_object, after.is_majority_object)
    assert sorted(before.witnesses) == sorted(after.witnesses)
