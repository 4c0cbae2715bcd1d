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

from pymajority._closure.baseclosure import BaseClosureChecker
from pymajority._misc.misc import copy_docstr
from pymajority.matrix import ZERO


class AssignmentClosureChecker(BaseClosureChecker):

    """Enumerates every assignment of the matrix variables (oracle)"""

    def __init__(self):

        copy_docstr(BaseClosureChecker, AssignmentClosureChecker)

    def violations(self, relation, matrix):

        basepoints = self.prepare(relation, matrix)
        keys = [(i, s) for i in range(matrix.m) for s in matrix.variables(i)]
        ranges = [range(relation.signature[i].size) for i, _ in keys]

        def value(binding, i, s):
            return basepoints[i] if s == ZERO else binding[(i, s)]

        found = []
        for choice in itertools.product(*ranges):
            binding = dict(zip(keys, choice))
            premises = tuple(
                tuple(value(binding, i, matrix.rows[i][j]) for i in range(matrix.m))
                for j in range(matrix.w))
            if not all(p in relation for p in premises):
                continue
            concl = tuple(value(binding, i, matrix.rows[i][matrix.w]) for i in range(matrix.m))
            if concl not in relation:
                found.append((premises, concl, binding))
        found.sort(key=lambda v: (v[0], v[1]))
        return iter(found)
