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
from pymajority._congruence.basecongruence import BaseCongruenceFinder
from pymajority._misc.misc import copy_docstr
from pymajority.congruence import Congruence, check_cap, cong_join, principal_congruence


class PrincipalCongruenceFinder(BaseCongruenceFinder):

    """Closes the principal congruences under joins"""

    def __init__(self):

        copy_docstr(BaseCongruenceFinder, PrincipalCongruenceFinder)

    def candidates(self, algebra):

        check_cap(algebra, settings.MAXUNIVERSE, "congruences")
        n = algebra.universe.size
        found = {Congruence(algebra, range(n))}
        for a in range(n):
            for b in range(a + 1, n):
                found.add(principal_congruence(algebra, a, b))
        log.debug("congruences: %d principal congruences", len(found) - 1)
        frontier = set(found)
        while frontier:
            new = set()
            for alpha in frontier:
                for beta in list(found):
                    gamma = cong_join(alpha, beta)
                    if gamma not in found:
                        new.add(gamma)
            found |= new
            frontier = new
        return iter(found)
