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


class PyMajorityError(Exception):
    """Base class for every error raised by PyMajority"""


class SignatureError(PyMajorityError):
    """Relation names, arities, domains or codomains do not match"""


class ElementError(PyMajorityError):
    """An element index is out of range or occurs twice"""


class UniverseCapError(PyMajorityError):
    """A constructed universe would exceed settings.MAXUNIVERSE"""


class MatrixError(PyMajorityError):
    """A malformed or unknown extended matrix"""


class PreconditionError(PyMajorityError):
    """The input does not satisfy the law an operation relies on"""


class UnsupportedError(PyMajorityError):
    """The request lies beyond an exhaustive-search cap"""


class ParseError(PyMajorityError):

    """A syntax error in a structure, matrix or algebra file"""

    def __init__(self, msg, line=0, column=0):

        """Initializes a ParseError

        arguments
        msg        --    description of the problem

        keyword arguments
        line        --    1-based line number (default = 0, unknown)
        column        --    1-based column number (default = 0, unknown)
        """

        self.line = line
        self.column = column
        PyMajorityError.__init__(
            self, "line {}, column {}: {}".format(line, column, msg))


class NotALatticeWarning(UserWarning):
    """Meet and join tables that fail the absorption laws"""
