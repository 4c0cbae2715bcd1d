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

import hashlib
import json
from inspect import isfunction


# # # # #
# helper functions

def copy_docstr(src, target):
    """
    Copies docstrings from the methods of a source class to the methods of a
    target class, for every method the target does not document itself.

    arguments:
    src        --    source class (e.g. BaseClosureChecker)
    target    --    target class (e.g. UnifyClosureChecker)
    """

    for attr_name in dir(target):
        if attr_name.startswith("__"):
            continue
        srcattr = getattr(src, attr_name, None)
        tgtattr = getattr(target, attr_name, None)
        if not isfunction(srcattr) or not isfunction(tgtattr):
            continue
        if tgtattr.__doc__ is None:
            tgtattr.__doc__ = srcattr.__doc__


def stable_json(obj, indent=None):
    """Returns obj as JSON text with sorted keys, identical on every run

    arguments
    obj        --    any JSON-serializable value

    keyword arguments
    indent        --    indentation passed on to json.dumps (default = None)

    returns
    text        --    a str
    """

    if indent is None:
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return json.dumps(obj, sort_keys=True, indent=indent)


def digest(text):
    """Returns the sha256 hex digest of a canonical text"""

    return hashlib.sha256(text.encode("utf-8")).hexdigest()
