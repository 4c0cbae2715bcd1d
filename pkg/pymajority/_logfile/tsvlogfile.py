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

import os

from pymajority import settings
from pymajority._logfile.baselogfile import BaseLogfile
from pymajority._misc.misc import copy_docstr


class TSVLogfile(BaseLogfile):

    # See _logfile.baselogfile.BaseLogfile

    def __init__(self, filename=None, header=None):

        # See _logfile.baselogfile.BaseLogfile

        copy_docstr(BaseLogfile, TSVLogfile)

        if filename is None:
            filename = settings.LOGFILENAME
        self.filename = filename + ".tsv"
        self.logfile = open(self.filename, "w", encoding="utf8")
        if header is not None:
            self.write(header)

    def write(self, vallist):

        # See _logfile.baselogfile.BaseLogfile

        # tabs between values, newline at the end
        line = "\t".join(map(str, vallist)) + "\n"

        self.logfile.write(line)  # write to internal buffer
        self.logfile.flush()  # internal buffer to RAM
        os.fsync(self.logfile.fileno())  # RAM file cache to disk

    def close(self):

        # See _logfile.baselogfile.BaseLogfile

        self.logfile.close()
