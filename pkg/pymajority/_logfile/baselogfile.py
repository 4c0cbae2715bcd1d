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

# The BaseClasses are meant to store the documentation on all methods of a
# class, but not to contain any functionality whatsoever. BaseLogfile is
# inherited by all of the back-ends, and the documentation is copied using
# pymajority._misc.misc.copy_docstr.


class BaseLogfile:
    """Logfile object for saving run records"""

    def __init__(self):
        """Initiates logfile object

        arguments

        None

        keyword arguments

        filename    --    name (possibly including path) for the logfile;
                    WITHOUT extension! (default = settings.LOGFILENAME)
        header        --    list of column names, written first; None to
                    skip it (default = None)

        returns

        None        --    sets filename and logfile properties
        """

        pass

    def write(self, vallist):
        """
        Writes one record to the logfile

        arguments

        vallist    --    list of values to be written to logfile

        keyword arguments

        None

        returns

        None        --    writes the record and syncs the file to disk
        """

        pass

    def close(self):
        """
        Closes logfile (do this after writing everything to the file!)

        arguments

        None

        keyword arguments

        None

        returns

        None        --    closes logfile; calling write method after calling
                    close method will result in an error!
        """

        pass
