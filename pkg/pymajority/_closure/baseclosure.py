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

# The BaseClasses store the documentation on all methods of a class. This one
# also implements check() and forced() on top of violations(), which is the
# only method a strategy has to provide. The documentation is copied to the
# subclasses using pymajority._misc.misc.copy_docstr.

from pymajority.errors import MatrixError, SignatureError
from pymajority.witness import CLOSURE_VIOLATION, Witness


def component_label(signature, t):

    return "(" + ",".join(c.label(x) for c, x in zip(signature, t)) + ")"


class BaseClosureChecker:
    """
    desc: |
        Decides strict M-closedness of a finite relation under an extended
        matrix.
    """

    def __init__(self):
        """
        desc:
            Initializes the checker. Strategies keep no state between calls.
        """

        pass

    def prepare(self, relation, matrix):
        """
        desc: |
            Validates a relation against a matrix and returns the basepoint
            of every component (None where a component has none).

        arguments:
            relation:
                desc:    The relation to check.
                type:    Relation
            matrix:
                desc:    The extended matrix.
                type:    ExtendedMatrix

        returns:
            desc:    A tuple of basepoints, one per component.
            type:    tuple
        """

        if matrix.m != relation.arity:
            raise SignatureError(
                "Error in matrix.is_strictly_closed: matrix has {} rows but the relation has arity {}".format(
                    matrix.m, relation.arity))
        basepoints = tuple(c.basepoint for c in relation.signature)
        for i in range(matrix.m):
            if matrix.row_uses_zero(i) and basepoints[i] is None:
                raise MatrixError(
                    "Error in matrix.is_strictly_closed: row {} uses 0 but component {} has no basepoint".format(
                        i, i))
        return basepoints

    def violations(self, relation, matrix):
        """
        desc: |
            Yields every violation of strict M-closedness, least first. A
            violation is a list of premise tuples, all in the relation,
            whose forced conclusion is not in the relation.

        arguments:
            relation:
                desc:    The relation to check.
                type:    Relation
            matrix:
                desc:    The extended matrix.
                type:    ExtendedMatrix

        returns:
            desc: |
                A generator of (premises, conclusion, binding) triples,
                ordered by (premises, conclusion); binding maps each
                (row, variable) pair to its value.
            type:    generator
        """

        raise NotImplementedError()

    def check(self, relation, matrix):
        """
        desc:
            Checks whether a relation is strictly M-closed.

        arguments:
            relation:
                desc:    The relation to check.
                type:    Relation
            matrix:
                desc:    The extended matrix.
                type:    ExtendedMatrix

        returns:
            desc: |
                (holds, witness); witness is None when holds is True and the
                least violation otherwise.
            type:    tuple
        """

        for premises, conclusion, binding in self.violations(relation, matrix):
            return False, self.witness(relation, matrix, premises, conclusion, binding)
        return True, None

    def forced(self, relation, matrix):
        """
        desc:
            Returns every conclusion the matrix forces that the relation lacks.

        returns:
            desc:    The missing tuples, sorted.
            type:    tuple
        """

        return tuple(sorted({c for _, c, _ in self.violations(relation, matrix)}))

    def witness(self, relation, matrix, premises, conclusion, binding):

        assignment = {}
        for (i, name), value in sorted(binding.items()):
            assignment[matrix.variable_key(i, name)] = value
        sig = relation.signature
        return Witness(
            CLOSURE_VIOLATION, assignment, conclusion, premises=premises,
            premise_labels=[component_label(sig, p) for p in premises],
            conclusion_labels=component_label(sig, conclusion))
