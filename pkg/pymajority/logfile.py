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
from pymajority._logfile.baselogfile import BaseLogfile
from pymajority._misc.misc import copy_docstr


class Logfile(BaseLogfile):

    # See BaseLogfile

    def __init__(self, logtype=None, **args):

        # See BaseLogfile

        if logtype is None:
            logtype = settings.LOGTYPE
        if logtype == "tsv":
            from pymajority._logfile.tsvlogfile import TSVLogfile as Backend
        elif logtype == "json":
            from pymajority._logfile.jsonlogfile import JSONLogfile as Backend
        else:
            raise ValueError(
                "Error in logfile.Logfile.__init__: logtype {} not recognized; use 'tsv' or 'json'".format(logtype))
        self.__class__ = Backend
        self.__class__.__init__(self, **args)
        copy_docstr(BaseLogfile, Logfile)
