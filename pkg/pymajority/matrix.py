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

import logging as log

from pymajority import settings
from pymajority._closure.baseclosure import BaseClosureChecker
from pymajority._misc.misc import copy_docstr
from pymajority.errors import MatrixError, SignatureError
from pymajority.structures import compose, converse
from pymajority.witness import CLOSURE_VIOLATION

# the constant symbol; evaluated at the basepoint of each component
ZERO = "0"

BUILTIN_MATRICES = {
    "majority": (
        ("a1", "a1", "a2", "a1"),
        ("b1", "b2", "b1", "b1"),
        ("c2", "c1", "c1", "c1"),
    ),
    "maltsev": (
        ("x1", "x1", "x2", "x2"),
        ("y2", "y1", "y1", "y2"),
    ),
    "unital": (
        ("x", ZERO, "x"),
        (ZERO, "x", "x"),
    ),
    "subtractive": (
        ("x", "x", ZERO),
        ("x", ZERO, "x"),
    ),
}


class ExtendedMatrix:

    """An extended matrix of variables and the constant 0

    Each row belongs to one component of a relation and has its own variable
    namespace. The last column is the conclusion, the others the premises.
    """

    def __init__(self, rows, name=None):

        """Initializes an ExtendedMatrix

        arguments
        rows        --    a sequence of rows, each a sequence of symbols;
                    the symbol "0" is the constant

        keyword arguments
        name        --    an optional name, e.g. "majority" (default = None)
        """

        rows = tuple(tuple(str(s) for s in row) for row in rows)
        if not rows:
            raise MatrixError("Error in matrix.ExtendedMatrix.__init__: a matrix needs at least one row")
        width = len(rows[0])
        if width < 2:
            raise MatrixError(
                "Error in matrix.ExtendedMatrix.__init__: a row needs a premise column and a conclusion column")
        for i, row in enumerate(rows):
            if len(row) != width:
                raise MatrixError(
                    "Error in matrix.ExtendedMatrix.__init__: row {} has {} entries, expected {}".format(
                        i, len(row), width))
            for s in row:
                if not s or s == "|" or any(ch.isspace() for ch in s):
                    raise MatrixError(
                        "Error in matrix.ExtendedMatrix.__init__: invalid symbol {!r} in row {}".format(s, i))
        self.rows = rows
        self.name = name

    @property
    def m(self):

        return len(self.rows)

    @property
    def w(self):

        return len(self.rows[0]) - 1

    def row_uses_zero(self, i):

        return ZERO in self.rows[i]

    @property
    def uses_zero(self):

        return any(self.row_uses_zero(i) for i in range(self.m))

    def variables(self, i):

        """Returns the variables of row i in order of first occurrence"""

        seen = []
        for s in self.rows[i]:
            if s != ZERO and s not in seen:
                seen.append(s)
        return seen

    def variable_key(self, i, name):

        """Returns the display name of variable `name` of row i

        Names are shared between rows only by coincidence, so a name that
        occurs in more than one row is qualified with its row.
        """

        rows = [r for r in range(self.m) if name in self.variables(r)]
        if len(rows) > 1:
            return "{}@{}".format(name, i)
        return name

    def __eq__(self, other):

        return isinstance(other, ExtendedMatrix) and self.rows == other.rows

    def __hash__(self):

        return hash(self.rows)

    def __repr__(self):

        return "ExtendedMatrix({})".format(
            "; ".join(" ".join(r[:-1]) + " | " + r[-1] for r in self.rows))


def builtin_matrix(name):
    """Returns one of the named matrices

    arguments
    name        --    "majority", "maltsev", "unital" or "subtractive"

    returns
    matrix        --    an ExtendedMatrix
    """

    if name not in BUILTIN_MATRICES:
        raise MatrixError(
            "Error in matrix.builtin_matrix: matrix {} not recognized; use one of {}".format(
                name, sorted(BUILTIN_MATRICES)))
    return ExtendedMatrix(BUILTIN_MATRICES[name], name=name)


def as_matrix(matrix):
    """Returns matrix itself, or the builtin matrix it names"""

    if isinstance(matrix, str):
        return builtin_matrix(matrix)
    return matrix


class ClosureChecker(BaseClosureChecker):

    # See BaseClosureChecker

    def __init__(self, strategy=None):

        """Initializes a ClosureChecker that morphs into a strategy

        keyword arguments
        strategy    --    "unify" or "assign" (default =
                    settings.CLOSURESTRATEGY)
        """

        if strategy is None:
            strategy = settings.CLOSURESTRATEGY
        if strategy == "unify":
            from pymajority._closure.unifyclosure import UnifyClosureChecker as Checker
        elif strategy == "assign":
            from pymajority._closure.assignclosure import AssignmentClosureChecker as Checker
        else:
            raise MatrixError(
                "Error in matrix.ClosureChecker.__init__: strategy {} not recognized; use 'unify' or 'assign'".format(
                    strategy))
        self.__class__ = Checker
        self.__class__.__init__(self)
        copy_docstr(BaseClosureChecker, ClosureChecker)


def is_strictly_closed(relation, matrix, strategy=None):
    """Checks whether a relation is strictly M-closed

    arguments
    relation    --    a Relation (components may differ)
    matrix        --    an ExtendedMatrix or the name of a builtin matrix

    keyword arguments
    strategy    --    "unify" or "assign" (default =
                settings.CLOSURESTRATEGY)

    returns
    (holds, witness)    --    witness is the least violation, or None
    """

    return ClosureChecker(strategy).check(relation, as_matrix(matrix))


def forced_conclusions(relation, matrix, strategy=None):
    """Returns the missing tuples one closure round would add, sorted"""

    return ClosureChecker(strategy).forced(relation, as_matrix(matrix))


def strict_closure(relation, matrix, strategy=None):
    """Returns the least strictly M-closed relation containing a relation

    arguments
    relation    --    a Relation
    matrix        --    an ExtendedMatrix or the name of a builtin matrix

    keyword arguments
    strategy    --    "unify" or "assign" (default =
                settings.CLOSURESTRATEGY)

    returns
    closure        --    a Relation with the same signature
    """

    matrix = as_matrix(matrix)
    checker = ClosureChecker(strategy)
    rounds = 0
    while True:
        missing = checker.forced(relation, matrix)
        if not missing:
            break
        rounds += 1
        log.debug("strict_closure: round %d adds %d tuples", rounds, len(missing))
        relation = relation.union(missing)
    return relation


def replay_witness(relation, matrix, witness):
    """Returns True when a closure witness really shows a violation

    The premises and conclusion are recomputed from the assignment, then the
    premises must all be related and the conclusion must not be.
    """

    matrix = as_matrix(matrix)
    if witness.kind != CLOSURE_VIOLATION:
        return False
    basepoints = [c.basepoint for c in relation.signature]

    def value(i, s):
        if s == ZERO:
            return basepoints[i]
        return witness.assignment[matrix.variable_key(i, s)]

    try:
        premises = tuple(
            tuple(value(i, matrix.rows[i][j]) for i in range(matrix.m))
            for j in range(matrix.w))
        concl = tuple(value(i, matrix.rows[i][matrix.w]) for i in range(matrix.m))
    except KeyError:
        return False
    return premises == witness.premises and concl == witness.conclusion \
        and all(p in relation for p in premises) and concl not in relation


def is_difunctional(relation, strategy=None):
    """Checks whether a binary relation is difunctional

    (x1,y2), (x1,y1), (x2,y1) related forces (x2,y2) related; this is strict
    closedness under the Mal'tsev matrix.

    arguments
    relation    --    a binary Relation

    returns
    (holds, witness)    --    witness is the least violation, or None
    """

    if relation.arity != 2:
        raise SignatureError(
            "Error in matrix.is_difunctional: relation should be binary, not of arity {}".format(relation.arity))
    return is_strictly_closed(relation, builtin_matrix("maltsev"), strategy=strategy)


def difunctional_oracle(relation):
    """Decides difunctionality through the composite R;R^op;R"""

    if relation.arity != 2:
        raise SignatureError("Error in matrix.difunctional_oracle: relation should be binary")
    return compose(compose(relation, converse(relation)), relation).issubset(relation)
