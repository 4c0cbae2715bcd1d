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

# Finite algebras. An operation table of arity r over n elements is a read-only
# numpy array of shape (n,)*r, so p(x,y,z) is p.values[x, y, z] and composing
# tables is fancy indexing: f.values[g, h] is the table of f(g(...), h(...)).

import itertools
import logging as log
import warnings
from types import MappingProxyType

import numpy

from pymajority import settings
from pymajority.errors import ElementError, NotALatticeWarning, PreconditionError, \
    SignatureError, UnsupportedError
from pymajority.structures import FiniteMap, FiniteSet, decode_power, is_homomorphism, \
    product_power
from pymajority.witness import FOUND, IDENTITY_VIOLATION, NO, NONE, UNDECIDED, YES, \
    SearchOutcome, Witness


class OperationTable:

    """A total operation of fixed arity on a finite set"""

    def __init__(self, universe, arity, values):

        """Initializes an OperationTable

        arguments
        universe    --    a FiniteSet, or an int for an unlabelled set
        arity        --    number of arguments (a non-negative int)
        values        --    the n**arity results in row-major order (first
                    argument most significant), flat or nested

        keyword arguments
        None
        """

        if isinstance(universe, int):
            universe = FiniteSet(universe)
        if arity < 0:
            raise ElementError("Error in algebra.OperationTable.__init__: arity should be non-negative")
        n = universe.size
        arr = numpy.array(values, dtype=numpy.int64)
        if arr.size != n ** arity:
            raise ElementError(
                "Error in algebra.OperationTable.__init__: {} values given, expected {}".format(
                    arr.size, n ** arity))
        arr = arr.reshape((n,) * arity)
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            raise ElementError(
                "Error in algebra.OperationTable.__init__: values leave the universe")
        arr.setflags(write=False)
        self.universe = universe
        self.arity = arity
        self.values = arr

    @classmethod
    def from_function(cls, universe, arity, fn):

        if isinstance(universe, int):
            universe = FiniteSet(universe)
        return cls(universe, arity,
                   [fn(*args) for args in itertools.product(range(universe.size), repeat=arity)])

    @classmethod
    def projection(cls, universe, arity, i):

        return cls.from_function(universe, arity, lambda *args: args[i])

    def __call__(self, *args):

        return int(self.values[tuple(args)])

    def flat(self):

        return tuple(int(v) for v in self.values.ravel())

    def __eq__(self, other):

        return isinstance(other, OperationTable) and self.arity == other.arity \
            and self.universe.size == other.universe.size \
            and numpy.array_equal(self.values, other.values)

    def __hash__(self):

        return hash((self.arity, self.universe.size, self.values.tobytes()))

    def __repr__(self):

        return "OperationTable(arity={}, values={})".format(self.arity, list(self.flat()))


class FiniteAlgebra:

    """A finite universe with named operation tables"""

    def __init__(self, universe, operations):

        """Initializes a FiniteAlgebra

        arguments
        universe    --    a FiniteSet, or an int
        operations    --    a dict mapping names to OperationTables over a
                    universe of the same size
        """

        if isinstance(universe, int):
            universe = FiniteSet(universe)
        for name, op in operations.items():
            if op.universe.size != universe.size:
                raise SignatureError(
                    "Error in algebra.FiniteAlgebra.__init__: operation {} is not over the universe".format(name))
        self.universe = universe
        self.operations = MappingProxyType(dict(sorted(operations.items())))

    def __eq__(self, other):

        if self is other:
            return True
        return isinstance(other, FiniteAlgebra) and self.universe == other.universe \
            and dict(self.operations) == dict(other.operations)

    def __hash__(self):

        return hash((self.universe, tuple(self.operations.items())))

    def __repr__(self):

        return "FiniteAlgebra({}, {})".format(
            self.universe.size, {name: op.arity for name, op in self.operations.items()})


# # # # #
# identities

# (text, arguments, expected value), as functions of the index grids x and y
MAJORITY_IDENTITIES = [
    ("p(x,x,y) = x", lambda x, y: (x, x, y), lambda x, y: x),
    ("p(x,y,x) = x", lambda x, y: (x, y, x), lambda x, y: x),
    ("p(y,x,x) = x", lambda x, y: (y, x, x), lambda x, y: x),
]

MALTSEV_IDENTITIES = [
    ("q(x,x,y) = y", lambda x, y: (x, x, y), lambda x, y: y),
    ("q(y,x,x) = y", lambda x, y: (y, x, x), lambda x, y: y),
]


def _check_identities(table, identities, where):

    if table.arity != 3:
        raise SignatureError(
            "Error in algebra.{}: table should be ternary, not of arity {}".format(where, table.arity))
    n = table.universe.size
    x, y = numpy.indices((n, n))
    for eq, (text, args, expected) in enumerate(identities):
        actual = table.values[args(x, y)]
        bad = numpy.argwhere(actual != expected(x, y))
        if len(bad):
            bx, by = (int(v) for v in bad[0])
            return False, Witness(
                IDENTITY_VIOLATION, {"equation": eq, "x": bx, "y": by},
                (int(actual[bx, by]), int(expected(x, y)[bx, by])), relation=text)
    return True, None


def verify_majority(p):
    """Checks p(x,x,y) = p(x,y,x) = p(y,x,x) = x for all x and y

    arguments
    p        --    a ternary OperationTable

    returns
    (holds, witness)    --    witness names the least (equation, x, y)
                that fails; its conclusion is (actual, expected)
    """

    return _check_identities(p, MAJORITY_IDENTITIES, "verify_majority")


def verify_maltsev(q):
    """Checks q(x,x,y) = y and q(y,x,x) = y for all x and y"""

    return _check_identities(q, MALTSEV_IDENTITIES, "verify_maltsev")


def majority_cells(n):
    """Returns the forced cells and the free cells of a majority table

    arguments
    n        --    size of the universe

    returns
    (forced, free)    --    forced maps every triple with a repeated value to
                that value; free lists the all-distinct triples in
                lexicographic order
    """

    forced = {}
    free = []
    for t in itertools.product(range(n), repeat=3):
        a, b, c = t
        if a == b or a == c:
            forced[t] = a
        elif b == c:
            forced[t] = b
        else:
            free.append(t)
    return forced, free


def maltsev_cells(n):
    """Returns the forced cells and the free cells of a Mal'tsev table

    Raises PreconditionError if the two identities pin a cell to different
    values.
    """

    forced = {}
    for x in range(n):
        for y in range(n):
            for t, v in [((x, x, y), y), ((y, x, x), y)]:
                if forced.setdefault(t, v) != v:
                    raise PreconditionError(
                        "Error in algebra.maltsev_cells: identities conflict on {}".format(t))
    free = [t for t in itertools.product(range(n), repeat=3) if t not in forced]
    return forced, free


def table_from_cells(universe, cells):
    """Returns the ternary table holding the value cells[(a,b,c)] at (a,b,c)"""

    n = universe.size
    return OperationTable(universe, 3, [cells[t] for t in itertools.product(range(n), repeat=3)])


# # # # #
# term builders

def check_absorption(meet, join):
    """Checks the absorption laws x^(xvy) = x and xv(x^y) = x

    returns
    (holds, witness)    --    witness holds the least failing (law, x, y)
    """

    n = meet.universe.size
    x, y = numpy.indices((n, n))
    laws = [
        ("x^(xvy) = x", meet.values[x, join.values[x, y]]),
        ("xv(x^y) = x", join.values[x, meet.values[x, y]]),
    ]
    for law, (text, actual) in enumerate(laws):
        bad = numpy.argwhere(actual != x)
        if len(bad):
            bx, by = (int(v) for v in bad[0])
            return False, Witness(
                IDENTITY_VIOLATION, {"equation": law, "x": bx, "y": by},
                (int(actual[bx, by]), bx), relation=text)
    return True, None


def lattice_majority_term(meet, join):
    """Returns the table of (x^y) v (x^z) v (y^z)

    Input that fails absorption is flagged with a NotALatticeWarning; the
    table is returned regardless.

    arguments
    meet        --    a binary OperationTable
    join        --    a binary OperationTable on the same universe

    returns
    p        --    a ternary OperationTable
    """

    if meet.arity != 2 or join.arity != 2:
        raise SignatureError("Error in algebra.lattice_majority_term: meet and join should be binary")
    if meet.universe.size != join.universe.size:
        raise SignatureError("Error in algebra.lattice_majority_term: meet and join differ in universe")
    holds, witness = check_absorption(meet, join)
    if not holds:
        log.warning("lattice_majority_term: %s fails at x=%d y=%d",
                    witness.relation, witness.assignment["x"], witness.assignment["y"])
        warnings.warn(
            "meet/join fail {} at x={}, y={}".format(
                witness.relation, witness.assignment["x"], witness.assignment["y"]),
            NotALatticeWarning)
    n = meet.universe.size
    x, y, z = numpy.indices((n, n, n))
    m, j = meet.values, join.values
    return OperationTable(meet.universe, 3, j[j[m[x, y], m[x, z]], m[y, z]])


def ring_majority_term(add, sub, mul, n):
    """Returns the table of x - (x-y)(x-z)^(n-1) for a ring with x^n = x

    Only the law x^n = x is checked; it is the one the majority identities
    rest on.

    arguments
    add        --    binary addition table
    sub        --    binary subtraction table
    mul        --    binary multiplication table
    n        --    the exponent, at least 2

    returns
    p        --    a ternary OperationTable
    """

    for op in [add, sub, mul]:
        if op.arity != 2 or op.universe.size != add.universe.size:
            raise SignatureError(
                "Error in algebra.ring_majority_term: add, sub and mul should be binary tables on one universe")
    if n < 2:
        raise PreconditionError("Error in algebra.ring_majority_term: exponent should be at least 2, not {}".format(n))
    size = add.universe.size
    elements = numpy.arange(size)
    power = elements.copy()
    for _ in range(n - 1):
        power = mul.values[power, elements]
    bad = numpy.flatnonzero(power != elements)
    if len(bad):
        e = int(bad[0])
        raise PreconditionError(
            "Error in algebra.ring_majority_term: x^{} = x fails at x = {} (gives {})".format(
                n, add.universe.label(e), add.universe.label(int(power[e]))))
    x, y, z = numpy.indices((size, size, size))
    s, m = sub.values, mul.values
    d = s[x, z]
    factor = d
    for _ in range(n - 2):
        factor = m[factor, d]
    return OperationTable(add.universe, 3, s[x, m[s[x, y], factor]])


# # # # #
# term clone

class TermClone:

    """The ternary term operations of an algebra, in order of discovery"""

    def __init__(self, tables, complete):

        self.tables = tuple(tables)
        self.complete = complete

    def __len__(self):

        return len(self.tables)

    def __iter__(self):

        return iter(self.tables)

    def __contains__(self, table):

        return table in self.tables

    def __repr__(self):

        return "TermClone({} tables, complete={})".format(len(self.tables), self.complete)


def ternary_term_clone(A, budget=None, until=None):
    """Closes the three ternary projections under the operations of A

    Every basic operation is applied pointwise to every tuple of tables found
    so far, round by round, until nothing new appears.

    arguments
    A        --    a FiniteAlgebra

    keyword arguments
    budget        --    maximum number of distinct tables, at least 3
                (default = settings.CLONEBUDGET)
    until        --    optional predicate on OperationTables; generation
                stops at the first table satisfying it (default = None)

    returns
    clone        --    a TermClone; complete is False when the budget ran
                out or `until` stopped the generation early
    """

    if budget is None:
        budget = settings.CLONEBUDGET
    if budget < 3:
        raise ValueError("Error in algebra.ternary_term_clone: budget should be at least 3, not {}".format(budget))
    n = A.universe.size
    grids = numpy.indices((n, n, n)).astype(numpy.int64)
    arrays = []
    seen = set()
    tables = []

    def add(arr):
        arr = numpy.ascontiguousarray(arr, dtype=numpy.int64)
        key = arr.tobytes()
        if key in seen:
            return "old"
        if len(tables) >= budget:
            return "full"
        seen.add(key)
        arrays.append(arr)
        table = OperationTable(A.universe, 3, arr)
        tables.append(table)
        if until is not None and until(table):
            return "stop"
        return "new"

    for i in range(3):
        if add(grids[i]) == "stop":
            return TermClone(tables, False)

    done = 0
    while True:
        current = len(arrays)
        grew = False
        for name, op in A.operations.items():
            if op.arity == 0:
                if done:
                    continue
                combos = [()]
            else:
                combos = itertools.product(range(current), repeat=op.arity)
            for combo in combos:
                # combinations of old tables were tried in an earlier round
                if done and max(combo) < done:
                    continue
                if op.arity == 0:
                    arr = numpy.full((n, n, n), op.values[()])
                else:
                    arr = op.values[tuple(arrays[i] for i in combo)]
                status = add(arr)
                if status == "new":
                    grew = True
                elif status == "stop":
                    return TermClone(tables, False)
                elif status == "full":
                    log.debug("ternary_term_clone: budget of %d tables exhausted", budget)
                    return TermClone(tables, False)
        done = current
        log.debug("ternary_term_clone: %d tables", len(tables))
        if not grew:
            return TermClone(tables, True)


def _has_term(A, budget, verify, where):

    clone = ternary_term_clone(A, budget=budget, until=lambda t: verify(t)[0])
    if clone.tables and verify(clone.tables[-1])[0]:
        table = clone.tables[-1]
        holds, _ = verify(table)
        if not holds:
            raise PreconditionError("Error in algebra.{}: found table fails its identities".format(where))
        return SearchOutcome(YES, table=table, nodes=len(clone), complete=True)
    if clone.complete:
        return SearchOutcome(NO, nodes=len(clone), complete=True)
    return SearchOutcome(UNDECIDED, nodes=len(clone), complete=False)


def has_majority_term(A, budget=None):
    """Decides whether A has a ternary term satisfying the majority identities

    arguments
    A        --    a FiniteAlgebra

    keyword arguments
    budget        --    clone budget (default = settings.CLONEBUDGET)

    returns
    outcome        --    a SearchOutcome with status "yes" (and the first
                such table), "no" (the clone is complete and has
                none) or "undecided"
    """

    return _has_term(A, budget, verify_majority, "has_majority_term")


def has_maltsev_term(A, budget=None):
    """Decides whether A has a ternary term satisfying the Mal'tsev identities"""

    return _has_term(A, budget, verify_maltsev, "has_maltsev_term")


# # # # #
# polymorphisms

def preserves(table, X):
    """Checks whether a ternary table is a polymorphism of a structure

    The table, read as a map from the cube of X to X, must be a homomorphism.

    arguments
    table        --    a ternary OperationTable on the universe of X
    X        --    a Structure

    returns
    (holds, witness)    --    witness is the least related triple of
                tuples whose image is not related
    """

    if table.arity != 3 or table.universe.size != X.universe.size:
        raise SignatureError("Error in algebra.preserves: table should be ternary over the universe of X")
    n = X.universe.size
    cube = product_power(X, 3)
    values = [table(*decode_power(e, n, 3)) for e in range(cube.universe.size)]
    return is_homomorphism(FiniteMap(cube.universe, X.universe, values), cube, X)


# # # # #
# commutative majority algebras

def lemma_rows(x, y):
    """Returns the rows (x,x,y), (x,y,y), (y,x,y) on which commutativity fails"""

    return ((x, x, y), (x, y, y), (y, x, y))


def _commutativity_witness(p, rows):

    lhs = p(p(*rows[0]), p(*rows[1]), p(*rows[2]))
    cols = list(zip(*rows))
    rhs = p(p(*cols[0]), p(*cols[1]), p(*cols[2]))
    if lhs == rhs:
        return None
    names = ["a1", "b1", "c1", "a2", "b2", "c2", "a3", "b3", "c3"]
    flat = [v for row in rows for v in row]
    return Witness(IDENTITY_VIOLATION, dict(zip(names, flat)), (lhs, rhs),
                   premises=rows, relation="commutativity")


def is_commutative_majority(p):
    """Checks whether a majority operation is a homomorphism from the cube

    That is, p(p(a1,b1,c1), p(a2,b2,c2), p(a3,b3,c3)) equals
    p(p(a1,a2,a3), p(b1,b2,b3), p(c1,c2,c3)) for all nine arguments.

    arguments
    p        --    a ternary OperationTable satisfying verify_majority

    returns
    (holds, witness)    --    the witness is the first failing instance of
                the rows (x,x,y), (x,y,y), (y,x,y) over pairs x != y,
                falling back to the least failing nine-tuple
    """

    holds, _ = verify_majority(p)
    if not holds:
        raise PreconditionError("Error in algebra.is_commutative_majority: input is not a majority table")
    n = p.universe.size
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            witness = _commutativity_witness(p, lemma_rows(x, y))
            if witness is not None:
                return False, witness
    v = p.values
    rest = numpy.indices((n,) * 6)
    a2, b2, c2, a3, b3, c3 = rest
    for a1, b1, c1 in itertools.product(range(n), repeat=3):
        lhs = v[v[a1, b1, c1], v[a2, b2, c2], v[a3, b3, c3]]
        rhs = v[v[a1, a2, a3], v[b1, b2, b3], v[c1, c2, c3]]
        bad = numpy.argwhere(lhs != rhs)
        if len(bad):
            tail = [int(t) for t in bad[0]]
            rows = ((a1, b1, c1), tuple(tail[:3]), tuple(tail[3:]))
            return False, _commutativity_witness(p, rows)
    return True, None


def commutative_witness_chain(p, x, y):
    """Evaluates the chain x = ... = y that commutativity would force

    arguments
    p        --    a ternary OperationTable satisfying verify_majority
    x        --    an element
    y        --    an element

    returns
    steps        --    a list of (expression, value) pairs; consecutive
                values differ exactly at the step that uses
                commutativity
    """

    steps = [
        ("p(x,x,y)", p(x, x, y)),
        ("p(p(x,x,y),p(x,y,x),p(y,y,y))", p(p(x, x, y), p(x, y, x), p(y, y, y))),
        ("p(p(x,x,y),p(x,y,y),p(y,x,y))", p(p(x, x, y), p(x, y, y), p(y, x, y))),
        ("p(x,y,y)", p(x, y, y)),
    ]
    return steps


def commutative_majority_search(n):
    """Searches every majority table on n elements for a commutative one

    arguments
    n        --    size of the universe, 1 <= n <= settings.COMMUTATIVECAP

    returns
    outcome        --    a SearchOutcome; status "found" with the table, or
                "none"; nodes is the number of candidate tables
    """

    if n < 1 or n > settings.COMMUTATIVECAP:
        raise UnsupportedError(
            "Error in algebra.commutative_majority_search: n = {} is outside 1..{}".format(
                n, settings.COMMUTATIVECAP))
    universe = FiniteSet(n)
    forced, free = majority_cells(n)
    candidates = 0
    for choice in itertools.product(range(n), repeat=len(free)):
        candidates += 1
        cells = dict(forced)
        cells.update(zip(free, choice))
        p = table_from_cells(universe, cells)
        holds, _ = is_commutative_majority(p)
        if holds:
            return SearchOutcome(FOUND, table=p, nodes=candidates)
    log.debug("commutative_majority_search: n=%d, %d candidates, none commutative", n, candidates)
    return SearchOutcome(NONE, nodes=candidates)
