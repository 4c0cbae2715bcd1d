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


class UnifyClosureChecker(BaseClosureChecker):

    """Walks w-tuples of related tuples and unifies them with the matrix"""

    def __init__(self):

        copy_docstr(BaseClosureChecker, UnifyClosureChecker)

    def violations(self, relation, matrix):

        basepoints = self.prepare(relation, matrix)
        m, w = matrix.m, matrix.w
        tuples = relation.tuples
        binding = {}
        premises = []

        def unify(j, t):
            # returns the keys bound here, or None on a clash
            bound = []
            for i in range(m):
                s = matrix.rows[i][j]
                if s == ZERO:
                    if t[i] != basepoints[i]:
                        break
                    continue
                key = (i, s)
                if key in binding:
                    if binding[key] != t[i]:
                        break
                else:
                    binding[key] = t[i]
                    bound.append(key)
            else:
                return bound
            for key in bound:
                del binding[key]
            return None

        def conclusions():
            fixed = []
            free = []
            for i in range(m):
                s = matrix.rows[i][w]
                if s == ZERO:
                    fixed.append(basepoints[i])
                elif (i, s) in binding:
                    fixed.append(binding[(i, s)])
                else:
                    fixed.append(None)
                    free.append(i)
            ranges = [range(relation.signature[i].size) for i in free]
            for choice in itertools.product(*ranges):
                concl = list(fixed)
                extra = {}
                for i, v in zip(free, choice):
                    concl[i] = v
                    extra[(i, matrix.rows[i][w])] = v
                yield tuple(concl), extra

        def walk(j):
            if j == w:
                for concl, extra in conclusions():
                    if concl not in relation:
                        full = dict(binding)
                        full.update(extra)
                        yield tuple(premises), concl, full
                return
            for t in tuples:
                bound = unify(j, t)
                if bound is None:
                    continue
                premises.append(t)
                yield from walk(j + 1)
                premises.pop()
                for key in bound:
                    del binding[key]

        return walk(0)
