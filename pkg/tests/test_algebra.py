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

from pymajority import settings
from pymajority.algebra import FiniteAlgebra, OperationTable, check_absorption, \
    commutative_majority_search, commutative_witness_chain, has_majority_term, has_maltsev_term, \
    is_commutative_majority, lattice_majority_term, lemma_rows, majority_cells, maltsev_cells, \
    preserves, ring_majority_term, table_from_cells, ternary_term_clone, verify_majority, \
    verify_maltsev
from pymajority.errors import ElementError, NotALatticeWarning, PreconditionError, \
    SignatureError, UnsupportedError
from pymajority.structures import FiniteSet
from pymajority.witness import FOUND, NO, NONE, UNDECIDED, YES

BOOLEAN_MAJORITY = OperationTable.from_function(2, 3, lambda a, b, c: int(a + b + c >= 2))


def chain(n):

    return FiniteAlgebra(n, {
        "join": OperationTable.from_function(n, 2, max),
        "meet": OperationTable.from_function(n, 2, min),
    })


def test_operation_table():

    t = OperationTable(2, 2, [[0, 0], [0, 1]])
    assert t(1, 1) == 1 and t(0, 1) == 0
    assert t.flat() == (0, 0, 0, 1)
    assert t == OperationTable.from_function(2, 2, min)
    assert hash(t) == hash(OperationTable(2, 2, [0, 0, 0, 1]))
    assert not t.values.flags.writeable
    assert OperationTable.projection(3, 3, 2)(0, 1, 2) == 2
    with pytest.raises(ElementError):
        OperationTable(2, 2, [0, 0, 0])
    with pytest.raises(ElementError):
        OperationTable(2, 2, [0, 0, 0, 2])


def test_algebra_operations_are_sorted(algebra):

    assert list(algebra("gf2").operations) == ["add", "mul", "sub"]
    with pytest.raises(SignatureError):
        FiniteAlgebra(3, {"meet": OperationTable.from_function(2, 2, min)})


def test_verify_majority():

    assert verify_majority(BOOLEAN_MAJORITY) == (True, None)
    holds, witness = verify_majority(OperationTable.projection(2, 3, 0))
    assert not holds
    assert witness.assignment == {"equation": 2, "x": 0, "y": 1}
    assert witness.conclusion == (1, 0)
    assert witness.relation == "p(y,x,x) = x"
    with pytest.raises(SignatureError):
        verify_majority(OperationTable.from_function(2, 2, min))


def test_verify_maltsev():

    minority = OperationTable.from_function(2, 3, lambda a, b, c: a ^ b ^ c)
    assert verify_maltsev(minority) == (True, None)
    holds, witness = verify_maltsev(OperationTable.projection(2, 3, 2))
    assert witness.assignment == {"equation": 1, "x": 0, "y": 1}
    assert witness.conclusion == (0, 1)
    holds, witness = verify_maltsev(BOOLEAN_MAJORITY)
    assert not holds
    assert witness.assignment["equation"] == 0


def test_cells():

    forced, free = majority_cells(3)
    assert len(free) == 6 and len(forced) == 21
    assert free[0] == (0, 1, 2)
    forced, free = maltsev_cells(2)
    assert free == [(0, 1, 0), (1, 0, 1)]
    cells = dict(forced)
    cells.update({(0, 1, 0): 1, (1, 0, 1): 0})
    assert table_from_cells(FiniteSet(2), cells) == OperationTable.from_function(
        2, 3, lambda a, b, c: a ^ b ^ c)


@pytest.mark.parametrize("name", ["lattice2", "m3", "n5"])
def test_lattice_term(algebra, name):

    A = algebra(name)
    meet, join = A.operations["meet"], A.operations["join"]
    assert check_absorption(meet, join) == (True, None)
    p = lattice_majority_term(meet, join)
    assert verify_majority(p) == (True, None)


def test_lattice_term_on_a_chain():

    A = chain(3)
    p = lattice_majority_term(A.operations["meet"], A.operations["join"])
    assert p(0, 2, 1) == 1
    assert p == OperationTable.from_function(3, 3, lambda a, b, c: sorted([a, b, c])[1])


def test_lattice_term_warns_on_non_lattice():

    meet = OperationTable.from_function(2, 2, min)
    with pytest.warns(NotALatticeWarning):
        p = lattice_majority_term(meet, meet)
    assert p.arity == 3
    holds, witness = check_absorption(meet, meet)
    assert witness.relation == "x^(xvy) = x"
    assert witness.assignment == {"equation": 0, "x": 1, "y": 0}


@pytest.mark.parametrize("name, n", [("gf2", 2), ("z6ring", 3)])
def test_ring_term(algebra, name, n):

    A = algebra(name)
    p = ring_majority_term(A.operations["add"], A.operations["sub"], A.operations["mul"], n)
    assert verify_majority(p) == (True, None)


def test_ring_term_needs_idempotent_power(algebra):

    A = algebra("z4ring")
    with pytest.raises(PreconditionError) as info:
        ring_majority_term(A.operations["add"], A.operations["sub"], A.operations["mul"], 2)
    assert "x^2 = x fails at x = 2 (gives 0)" in str(info.value)
    with pytest.raises(PreconditionError):
        ring_majority_term(A.operations["add"], A.operations["sub"], A.operations["mul"], 1)


def test_z2_clone(algebra):

    clone = ternary_term_clone(algebra("z2"))
    assert clone.complete
    assert len(clone) == 8
    assert OperationTable.from_function(2, 3, lambda a, b, c: a ^ b ^ c) in clone


def test_semilattice_clone(algebra):

    clone = ternary_term_clone(algebra("semilattice2"))
    assert clone.complete and len(clone) == 7


def test_clone_budget(algebra):

    clone = ternary_term_clone(algebra("lattice2"), budget=3)
    assert not clone.complete and len(clone) == 3
    with pytest.raises(ValueError):
        ternary_term_clone(algebra("lattice2"), budget=2)


def test_clone_with_constant():

    A = FiniteAlgebra(2, {"one": OperationTable(2, 0, [1]),
                          "meet": OperationTable.from_function(2, 2, min)})
    clone = ternary_term_clone(A)
    assert clone.complete
    assert OperationTable.from_function(2, 3, lambda a, b, c: 1) in clone


def test_term_separation(algebra):

    outcome = has_majority_term(algebra("lattice2"))
    assert outcome.status == YES
    assert verify_majority(outcome.table)[0]

    outcome = has_majority_term(algebra("semilattice2"))
    assert (outcome.status, outcome.nodes, outcome.complete) == (NO, 7, True)
    assert has_maltsev_term(algebra("semilattice2")).status == NO

    assert has_majority_term(algebra("z2")).status == NO
    outcome = has_maltsev_term(algebra("z2"))
    assert outcome.status == YES
    assert outcome.table == OperationTable.from_function(2, 3, lambda a, b, c: a ^ b ^ c)


def test_term_budget(algebra):

    outcome = has_majority_term(algebra("lattice2"), budget=3)
    assert outcome.status == UNDECIDED
    assert not outcome.complete
    settings.CLONEBUDGET = 3
    assert has_majority_term(algebra("lattice2")).status == UNDECIDED


def test_preserves(counterexample, structure):

    holds, witness = preserves(BOOLEAN_MAJORITY, counterexample)
    assert not holds
    assert witness.conclusion == (0, 1, 0)
    assert preserves(OperationTable.projection(2, 3, 0), counterexample) == (True, None)
    assert preserves(BOOLEAN_MAJORITY, structure("diagonal"))[0]


def test_boolean_majority_is_not_commutative():

    holds, witness = is_commutative_majority(BOOLEAN_MAJORITY)
    assert not holds
    assert witness.premises == lemma_rows(0, 1) == ((0, 0, 1), (0, 1, 1), (1, 0, 1))
    assert witness.conclusion == (1, 0)
    assert witness.relation == "commutativity"
    chain_values = [v for _, v in commutative_witness_chain(BOOLEAN_MAJORITY, 0, 1)]
    assert chain_values == [0, 0, 1, 1]


def test_witness_chain_replays():

    p = BOOLEAN_MAJORITY
    steps = commutative_witness_chain(p, 0, 1)
    assert steps[0][1] == 0 and steps[-1][1] == 1
    # the two middle steps are the two sides of commutativity on lemma_rows
    rows = lemma_rows(0, 1)
    assert steps[2][1] == p(*[p(*r) for r in rows])
    assert steps[1][1] == p(*[p(*c) for c in zip(*rows)])


def test_commutativity_needs_a_majority_table():

    with pytest.raises(PreconditionError):
        is_commutative_majority(OperationTable.projection(2, 3, 0))


def test_trivial_algebra_is_commutative():

    outcome = commutative_majority_search(1)
    assert outcome.status == FOUND and outcome.nodes == 1


@pytest.mark.parametrize("n, candidates", [(2, 1), (3, 729)])
def test_no_commutative_majority(n, candidates):

    outcome = commutative_majority_search(n)
    assert outcome.status == NONE
    assert outcome.nodes == candidates


def test_commutative_search_cap():

    with pytest.raises(UnsupportedError):
        commutative_majority_search(4)
    with pytest.raises(UnsupportedError):
        commutative_majority_search(0)


@given(st.lists(st.integers(0, 2), min_size=6, max_size=6))
def test_every_majority_table_on_three_elements_fails(choice):

    forced, free = majority_cells(3)
    cells = dict(forced)
    cells.update(zip(free, choice))
    p = table_from_cells(FiniteSet(3), cells)
    holds, witness = is_commutative_majority(p)
    assert not holds
    lhs, rhs = witness.conclusion
    assert lhs != rhs
    a = witness.assignment
    rows = [(a["a1"], a["b1"], a["c1"]), (a["a2"], a["b2"], a["c2"]), (a["a3"], a["b3"], a["c3"])]
    assert p(*[p(*r) for r in rows]) == lhs
    assert p(*[p(*c) for c in zip(*rows)]) == rhs
    assert any(x != y and tuple(rows) == lemma_rows(x, y)
               for x, y in itertools.product(range(3), repeat=2))
