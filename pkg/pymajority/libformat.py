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

# Text and JSON codecs for structures, matrices and algebras.
#
# structure:                    matrix:                 algebra:
#   universe 2                    matrix 2 4              universe 2
#   labels a b      (optional)    x1 x1 x2 | x2           op meet 2
#   basepoint 0     (optional)    y2 y1 y1 | y2           0 0
#   rel R 3                                               0 1
#   1 1 0
#   end
#
# Tuples and table values are element indices. A '#' starts a comment. The
# format_* functions write the canonical form, which parses back to an equal
# object and formats to the same bytes.

import json
import os

from pymajority._misc.misc import digest, stable_json
from pymajority.algebra import FiniteAlgebra, OperationTable
from pymajority.errors import ElementError, MatrixError, ParseError, PyMajorityError
from pymajority.matrix import BUILTIN_MATRICES, ExtendedMatrix, builtin_matrix
from pymajority.structures import FiniteSet, Relation, Structure


# # # # #
# tokenizer

def _lines(text):

    # yields (line number, [(token, column), ...]) for non-empty lines
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        tokens = []
        col = 0
        for part in line.split():
            col = line.index(part, col)
            tokens.append((part, col + 1))
            col += len(part)
        if tokens:
            yield lineno, tokens


def _int(token, lineno, what):

    tok, col = token
    try:
        return int(tok)
    except ValueError:
        raise ParseError("{} should be an integer, not {!r}".format(what, tok), lineno, col)


def _expect(tokens, lineno, keyword, count):

    if tokens[0][0] != keyword:
        raise ParseError("expected '{}', found {!r}".format(keyword, tokens[0][0]), lineno, tokens[0][1])
    if count is not None and len(tokens) != count + 1:
        raise ParseError("'{}' takes {} argument(s)".format(keyword, count), lineno, tokens[0][1])


def _header(lines):

    # parses universe/labels/basepoint; returns (FiniteSet, next line)
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError("empty input", 1, 1)
    _expect(tokens, lineno, "universe", 1)
    size = _int(tokens[1], lineno, "universe size")
    if size < 0:
        raise ParseError("universe size should be non-negative", lineno, tokens[1][1])
    labels = None
    basepoint = None
    nxt = next(lines, None)
    if nxt is not None and nxt[1][0][0] == "labels":
        lineno, tokens = nxt
        labels = [tok for tok, _ in tokens[1:]]
        if len(labels) != size:
            raise ParseError("{} labels given for {} elements".format(len(labels), size), lineno, tokens[0][1])
        nxt = next(lines, None)
    if nxt is not None and nxt[1][0][0] == "basepoint":
        lineno, tokens = nxt
        _expect(tokens, lineno, "basepoint", 1)
        basepoint = _int(tokens[1], lineno, "basepoint")
        nxt = next(lines, None)
    try:
        universe = FiniteSet(size, labels=labels, basepoint=basepoint)
    except ElementError as e:
        raise ParseError(str(e), lineno, 1)
    return universe, nxt


def _element(token, lineno, universe):

    x = _int(token, lineno, "element")
    if not 0 <= x < universe.size:
        raise ParseError("element {} is outside the universe of size {}".format(x, universe.size),
                         lineno, token[1])
    return x


# # # # #
# structures

def parse_structure(text):
    """Parses the text form of a structure

    arguments
    text        --    a str

    returns
    structure    --    a Structure

    raises ParseError with the line and column of the first problem
    """

    lines = _lines(text)
    universe, nxt = _header(lines)
    relations = {}
    while nxt is not None:
        lineno, tokens = nxt
        _expect(tokens, lineno, "rel", 2)
        name = tokens[1][0]
        if name in relations:
            raise ParseError("relation {} is defined twice".format(name), lineno, tokens[1][1])
        arity = _int(tokens[2], lineno, "arity")
        if arity < 1:
            raise ParseError("arity should be at least 1", lineno, tokens[2][1])
        tuples = []
        while True:
            row = next(lines, None)
            if row is None:
                raise ParseError("relation {} lacks 'end'".format(name), lineno, tokens[0][1])
            rlineno, rtokens = row
            if rtokens[0][0] == "end":
                _expect(rtokens, rlineno, "end", 0)
                break
            if len(rtokens) != arity:
                raise ParseError("tuple has {} entries, expected {}".format(len(rtokens), arity),
                                 rlineno, rtokens[0][1])
            tuples.append(tuple(_element(t, rlineno, universe) for t in rtokens))
        relations[name] = Relation((universe,) * arity, tuples)
        nxt = next(lines, None)
    return Structure(universe, relations)


def _format_header(universe):

    out = ["universe {}".format(universe.size)]
    if universe.labels is not None:
        out.append("labels " + " ".join(universe.labels))
    if universe.basepoint is not None:
        out.append("basepoint {}".format(universe.basepoint))
    return out


def format_structure(X):
    """Returns the canonical text form of a structure"""

    out = _format_header(X.universe)
    for name, rel in X.relations.items():
        out.append("rel {} {}".format(name, rel.arity))
        out.extend(" ".join(str(x) for x in t) for t in rel)
        out.append("end")
    return "\n".join(out) + "\n"


def _header_to_json(universe):

    d = {"universe": universe.size}
    if universe.labels is not None:
        d["labels"] = list(universe.labels)
    if universe.basepoint is not None:
        d["basepoint"] = universe.basepoint
    return d


def _header_from_json(d):

    try:
        return FiniteSet(d["universe"], labels=d.get("labels"), basepoint=d.get("basepoint"))
    except (KeyError, TypeError, ElementError) as e:
        raise ParseError("bad universe: {}".format(e))


def structure_to_json(X):

    d = _header_to_json(X.universe)
    d["relations"] = {
        name: {"arity": rel.arity, "tuples": [list(t) for t in rel]}
        for name, rel in X.relations.items()
    }
    return d


def structure_from_json(d):

    universe = _header_from_json(d)
    try:
        return Structure(universe, {
            name: Relation((universe,) * r["arity"], [tuple(t) for t in r["tuples"]])
            for name, r in d.get("relations", {}).items()
        })
    except (KeyError, TypeError, PyMajorityError) as e:
        raise ParseError("bad relations: {}".format(e))


# # # # #
# matrices

def parse_matrix(text):
    """Parses the text form of an extended matrix, or a builtin matrix name"""

    lines = list(_lines(text))
    if len(lines) == 1 and len(lines[0][1]) == 1 and lines[0][1][0][0] in BUILTIN_MATRICES:
        return builtin_matrix(lines[0][1][0][0])
    if not lines:
        raise ParseError("empty input", 1, 1)
    lineno, tokens = lines[0]
    _expect(tokens, lineno, "matrix", 2)
    m = _int(tokens[1], lineno, "row count")
    width = _int(tokens[2], lineno, "column count")
    if len(lines) - 1 != m:
        raise ParseError("{} rows given, expected {}".format(len(lines) - 1, m), lineno, tokens[1][1])
    rows = []
    for rlineno, rtokens in lines[1:]:
        symbols = [tok for tok, _ in rtokens]
        if len(symbols) < 2 or symbols[-2] != "|" or symbols.count("|") != 1:
            raise ParseError("a row reads 'premises | conclusion'", rlineno, rtokens[0][1])
        row = symbols[:-2] + symbols[-1:]
        if len(row) != width:
            raise ParseError("row has {} entries, expected {}".format(len(row), width), rlineno, rtokens[0][1])
        rows.append(row)
    try:
        return ExtendedMatrix(rows)
    except MatrixError as e:
        raise ParseError(str(e), lineno, 1)


def format_matrix(M):

    out = ["matrix {} {}".format(M.m, M.w + 1)]
    out.extend(" ".join(row[:-1]) + " | " + row[-1] for row in M.rows)
    return "\n".join(out) + "\n"


def matrix_to_json(M):

    d = {"rows": [list(r) for r in M.rows]}
    if M.name is not None:
        d["name"] = M.name
    return d


def matrix_from_json(d):

    try:
        return ExtendedMatrix(d["rows"], name=d.get("name"))
    except (KeyError, TypeError, MatrixError) as e:
        raise ParseError("bad matrix: {}".format(e))


# # # # #
# algebras

def parse_algebra(text):
    """Parses the text form of a finite algebra

    Each `op <name> <arity>` line is followed by the n**arity values of the
    table in row-major order, spread over any number of lines.
    """

    lines = _lines(text)
    universe, nxt = _header(lines)
    n = universe.size
    operations = {}
    while nxt is not None:
        lineno, tokens = nxt
        _expect(tokens, lineno, "op", 2)
        name = tokens[1][0]
        if name in operations:
            raise ParseError("operation {} is defined twice".format(name), lineno, tokens[1][1])
        arity = _int(tokens[2], lineno, "arity")
        if arity < 0:
            raise ParseError("arity should be non-negative", lineno, tokens[2][1])
        values = []
        while len(values) < n ** arity:
            row = next(lines, None)
            if row is None:
                raise ParseError("operation {} has {} of {} values".format(name, len(values), n ** arity),
                                 lineno, tokens[0][1])
            rlineno, rtokens = row
            if len(values) + len(rtokens) > n ** arity:
                raise ParseError("operation {} has too many values".format(name), rlineno, rtokens[0][1])
            values.extend(_element(t, rlineno, universe) for t in rtokens)
        operations[name] = OperationTable(universe, arity, values)
        nxt = next(lines, None)
    return FiniteAlgebra(universe, operations)


def format_algebra(A):
    """Returns the canonical text form of an algebra, one table row per line"""

    out = _format_header(A.universe)
    n = A.universe.size
    for name, op in A.operations.items():
        out.append("op {} {}".format(name, op.arity))
        flat = op.flat()
        step = n if op.arity > 0 else 1
        for i in range(0, len(flat), max(step, 1)):
            out.append(" ".join(str(v) for v in flat[i:i + step]))
    return "\n".join(out) + "\n"


def format_table(table, name="p"):
    """Returns the text form of a single operation table"""

    return format_algebra(FiniteAlgebra(table.universe, {name: table}))


def algebra_to_json(A):

    d = _header_to_json(A.universe)
    d["operations"] = {
        name: {"arity": op.arity, "values": list(op.flat())}
        for name, op in A.operations.items()
    }
    return d


def algebra_from_json(d):

    universe = _header_from_json(d)
    try:
        return FiniteAlgebra(universe, {
            name: OperationTable(universe, o["arity"], o["values"])
            for name, o in d.get("operations", {}).items()
        })
    except (KeyError, TypeError, PyMajorityError) as e:
        raise ParseError("bad operations: {}".format(e))


# # # # #
# files

def _loads(text, parse, from_json):

    if text.lstrip().startswith("{"):
        try:
            d = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(e.msg, e.lineno, e.colno)
        return from_json(d)
    return parse(text)


def _read(path):

    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise ParseError("cannot read {}: {}".format(path, e.strerror))


def load_structure(path):
    """Reads a structure from a text or JSON file"""

    return _loads(_read(path), parse_structure, structure_from_json)


def load_algebra(path):
    """Reads an algebra from a text or JSON file"""

    return _loads(_read(path), parse_algebra, algebra_from_json)


def load_matrix(path_or_name):
    """Returns the builtin matrix of that name, or reads a matrix file"""

    if path_or_name in BUILTIN_MATRICES and not os.path.exists(path_or_name):
        return builtin_matrix(path_or_name)
    return _loads(_read(path_or_name), parse_matrix, matrix_from_json)


def save_structure(X, path):

    with open(path, "w", encoding="utf-8") as f:
        f.write(format_structure(X))


def input_digest(obj):
    """Returns the sha256 digest of the canonical text of a parsed input"""

    if isinstance(obj, Structure):
        return digest(format_structure(obj))
    if isinstance(obj, FiniteAlgebra):
        return digest(format_algebra(obj))
    if isinstance(obj, ExtendedMatrix):
        return digest(format_matrix(obj))
    return digest(stable_json(obj))
