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
from pymajority._misc.misc import copy_docstr, stable_json


class JSONLogfile(BaseLogfile):

    """Writes one JSON object per line, keyed by the header"""

    def __init__(self, filename=None, header=None):

        copy_docstr(BaseLogfile, JSONLogfile)

        if filename is None:
            filename = settings.LOGFILENAME
        self.filename = filename + ".jsonl"
        self.header = None if header is None else list(header)
        self.logfile = open(self.filename, "w", encoding="utf8")

    def write(self, vallist):

        vallist = list(vallist)
        if self.header is None:
            record = vallist
        else:
            record = dict(zip(self.header, vallist))
        self.logfile.write(stable_json(record) + "\n")
        self.logfile.flush()
        os.fsync(self.logfile.fileno())

    def close(self):

        self.logfile.close()
