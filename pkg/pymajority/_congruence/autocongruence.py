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
from pymajority._congruence.exhaustivecongruence import ExhaustiveCongruenceFinder
from pymajority._congruence.principalcongruence import PrincipalCongruenceFinder
from pymajority._misc.misc import copy_docstr


class AutoCongruenceFinder(BaseCongruenceFinder):

    """Filters partitions on small universes, joins principals on larger ones"""

    def __init__(self):

        copy_docstr(BaseCongruenceFinder, AutoCongruenceFinder)

    def candidates(self, algebra):

        if algebra.universe.size <= settings.EXHAUSTIVECONGRUENCE:
            return ExhaustiveCongruenceFinder().candidates(algebra)
        return PrincipalCongruenceFinder().candidates(algebra)
