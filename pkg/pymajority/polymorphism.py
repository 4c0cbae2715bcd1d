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
import logging as log

from pymajority import settings
from pymajority.algebra import majority_cells, maltsev_cells, preserves, table_from_cells, \
    verify_majority, verify_maltsev
from pymajority.errors import PreconditionError, PyMajorityError
from pymajority.relobjects import MAJORITY, MALTSEV
from pymajority.witness import FOUND, NONE, UNDECIDED, SearchOutcome


class _BudgetExhausted(Exception):
    pass


class PolymorphismSearch:

    """Backtracking search for a ternary polymorphism with fixed identities

    The identities pin some cells of the table; the free cells are filled in
    lexicographic order with values tried in increasing order. A constraint is
    a relation together with the k cells that three related tuples read
    column by column; it is checked as soon as all its cells are filled.
    """

    def __init__(self, X, kind, budget=None):

        """Initializes a PolymorphismSearch

        arguments
        X        --    a Structure
        kind        --    "majority" or "maltsev"

        keyword arguments
        budget        --    maximum number of search nodes (default =
                    settings.SEARCHBUDGET)
        """

        if kind not in [MAJORITY, MALTSEV]:
            raise ValueError(
                "Error in polymorphism.PolymorphismSearch.__init__: kind {} not recognized; use 'majority' or 'maltsev'".format(
                    kind))
        if budget is None:
            budget = settings.SEARCHBUDGET
        self.X = X
        self.kind = kind
        self.budget = budget
        self.nodes = 0
        n = X.universe.size
        if kind == MAJORITY:
            self.forced, self.free = majority_cells(n)
        else:
            self.forced, self.free = maltsev_cells(n)
        constraints = set()
        for name, rel in X.relations.items():
            for rows in itertools.product(rel.tuples, repeat=3):
                cells = tuple(zip(*rows))
                constraints.add((name, cells))
        self.constraints = sorted(constraints)
        # constraints indexed by the free cell that completes them
        position = {c: i for i, c in enumerate(self.free)}
        self.pending = {c: [] for c in self.free}
        self.ground = []
        for name, cells in self.constraints:
            last = max((position[c] for c in cells if c in position), default=None)
            if last is None:
                self.ground.append((name, cells))
            else:
                self.pending[self.free[last]].append((name, cells))
        self.cells = dict(self.forced)

    def _holds(self, name, cells):

        return tuple(self.cells[c] for c in cells) in self.X.relations[name]

    def _tick(self):

        self.nodes += 1
        if self.nodes > self.budget:
            raise _BudgetExhausted()

    def _extend(self, depth):

        if depth == len(self.free):
            return True
        cell = self.free[depth]
        for v in range(self.X.universe.size):
            self._tick()
            self.cells[cell] = v
            if all(self._holds(name, cells) for name, cells in self.pending[cell]):
                if self._extend(depth + 1):
                    return True
        del self.cells[cell]
        return False

    def run(self):

        """Runs the search

        returns
        outcome        --    a SearchOutcome with status "found" (and the
                    table), "none", or "undecided" when the node budget
                    ran out
        """

        self.nodes = 1
        try:
            found = all(self._holds(name, cells) for name, cells in self.ground) \
                and self._extend(0)
        except _BudgetExhausted:
            log.info("polymorphism_search: budget of %d nodes exhausted", self.budget)
            return SearchOutcome(UNDECIDED, nodes=self.budget, complete=False)
        if not found:
            return SearchOutcome(NONE, nodes=self.nodes)
        table = table_from_cells(self.X.universe, self.cells)
        verify = verify_majority if self.kind == MAJORITY else verify_maltsev
        if not verify(table)[0] or not preserves(table, self.X)[0]:
            raise PyMajorityError("Error in polymorphism.PolymorphismSearch.run: found table fails re-verification")
        return SearchOutcome(FOUND, table=table, nodes=self.nodes)


def polymorphism_search(X, kind, budget=None):
    """Searches for a majority or Mal'tsev polymorphism of a structure

    arguments
    X        --    a Structure
    kind        --    "majority" or "maltsev"

    keyword arguments
    budget        --    node budget (default = settings.SEARCHBUDGET)

    returns
    outcome        --    a SearchOutcome; "none" is only reported after the
                whole space was refuted
    """

    try:
        search = PolymorphismSearch(X, kind, budget=budget)
    except PreconditionError:
        return SearchOutcome(NONE, nodes=0)
    return search.run()
