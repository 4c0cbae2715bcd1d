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
# also implements find() on top of candidates(), which is the only method a
# strategy has to provide. The documentation is copied to the subclasses using
# pymajority._misc.misc.copy_docstr.


class BaseCongruenceFinder:
    """
    desc: |
        Lists the congruences of a finite algebra.
    """

    def __init__(self):
        """
        desc:
            Initializes the finder. Strategies keep no state between calls.
        """

        pass

    def candidates(self, algebra):
        """
        desc: |
            Yields every congruence of the algebra at least once, in any
            order.

        arguments:
            algebra:
                desc:    The algebra.
                type:    FiniteAlgebra

        returns:
            desc:    A generator of Congruences.
            type:    generator
        """

        raise NotImplementedError()

    def find(self, algebra):
        """
        desc:
            Lists the congruences of an algebra, finest first.

        arguments:
            algebra:
                desc:    The algebra.
                type:    FiniteAlgebra

        returns:
            desc: |
                A list of distinct Congruences sorted by decreasing number of
                blocks, then by partition; the diagonal comes first and the
                full congruence last.
            type:    list
        """

        return sorted(set(self.candidates(algebra)), key=lambda c: c.sort_key())
