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

from pymajority import settings
from pymajority._congruence.basecongruence import BaseCongruenceFinder
from pymajority._misc.misc import copy_docstr
from pymajority.congruence import Congruence, check_cap, is_compatible


def restricted_growth_strings(n):
    """Yields every set partition of n elements as a restricted growth string

    A string s has s[0] = 0 and s[i] at most one more than max(s[:i]).
    """

    if n == 0:
        yield ()
        return
    s = [0] * n

    def grow(i, top):
        if i == n:
            yield tuple(s)
            return
        for b in range(top + 2):
            s[i] = b
            yield from grow(i + 1, max(top, b))

    yield from grow(1, 0)


class ExhaustiveCongruenceFinder(BaseCongruenceFinder):

    """Filters every partition of the universe for compatibility"""

    def __init__(self):

        copy_docstr(BaseCongruenceFinder, ExhaustiveCongruenceFinder)

    def candidates(self, algebra):

        check_cap(algebra, settings.EXHAUSTIVECONGRUENCE, "congruences")
        for s in restricted_growth_strings(algebra.universe.size):
            if is_compatible(algebra, s):
                yield Congruence(algebra, s)
