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

# Mal'tsev and majority objects in the dual of Rel_k. A structure S is such an
# object when the pattern map from a subspace of the cube S^3 back to S is a
# homomorphism. Which subspace and which pattern map is fixed by the tables
# below; the arity k is always read from S.

import logging as log

import numpy

from pymajority.errors import PyMajorityError
from pymajority.structures import FiniteMap, decode_power, homomorphism_violations, \
    is_homomorphism, product_power, restrict

MALTSEV = "maltsev"
MAJORITY = "majority"

# pattern clauses (name, test, value) tried in the order xxY, xYx, Yxx
PATTERNS = {
    MALTSEV: [
        ("xxY", lambda a, b, c: a == b, lambda a, b, c: c),
        ("Yxx", lambda a, b, c: b == c, lambda a, b, c: a),
    ],
    MAJORITY: [
        ("xxY", lambda a, b, c: a == b, lambda a, b, c: a),
        ("xYx", lambda a, b, c: a == c, lambda a, b, c: a),
        ("Yxx", lambda a, b, c: b == c, lambda a, b, c: b),
    ],
}


def pattern_value(triple, kind):
    """Returns the value of the pattern map on a triple

    arguments
    triple        --    an (a,b,c) tuple of elements
    kind        --    MALTSEV or MAJORITY

    returns
    value        --    the element, or None when no clause matches
    """

    values = [value(*triple) for _, test, value in PATTERNS[kind] if test(*triple)]
    if not values:
        return None
    # overlapping clauses (constant triples) must agree
    if any(v != values[0] for v in values):
        raise PyMajorityError(
            "Error in relobjects.pattern_value: clauses disagree on {}".format(triple))
    return values[0]


def _domain(S, kind):

    S.relation_of()
    size = S.universe.size
    cube = product_power(S, 3)
    subset = []
    values = []
    for e in range(cube.universe.size):
        v = pattern_value(decode_power(e, size, 3), kind)
        if v is not None:
            subset.append(e)
            values.append(v)
    domain = restrict(cube, subset)
    return domain, FiniteMap(domain.universe, S.universe, values)


def maltsev_domain(S):
    """Returns the Mal'tsev subspace of the cube of S and its pattern map

    The subspace holds the triples (x,x,y) and (y,x,x); the map sends both to
    y, the value at the position that is not repeated.

    arguments
    S        --    a Structure with exactly one relation

    returns
    (domain, f)    --    a Structure and a FiniteMap into S.universe
    """

    return _domain(S, MALTSEV)


def majority_domain(S):
    """Returns the majority subspace of the cube of S and its pattern map

    The subspace holds the triples with a repeated value; the map sends each
    to the repeated value.
    """

    return _domain(S, MAJORITY)


def is_maltsev_object(S):
    """Checks whether S is a Mal'tsev object in the dual of Rel_k

    returns
    (holds, witness)    --    witness is the least related tuple of the
                Mal'tsev subspace whose image is not related
    """

    domain, f = maltsev_domain(S)
    return is_homomorphism(f, domain, S)


def is_majority_object(S):
    """Checks whether S is a majority object in the dual of Rel_k"""

    domain, f = majority_domain(S)
    return is_homomorphism(f, domain, S)


def maltsev_coreflection(S, mode="chaotic"):
    """Returns S with the least larger relation that makes it a Mal'tsev object

    arguments
    S        --    a Structure with exactly one relation

    keyword arguments
    mode        --    "chaotic" adds every missing image per round,
                "single" adds only the least one (default = "chaotic")

    returns
    closed        --    a Structure on the same universe
    """

    if mode not in ["chaotic", "single"]:
        raise ValueError(
            "Error in relobjects.maltsev_coreflection: mode {} not recognized; use 'chaotic' or 'single'".format(mode))
    name, rel = S.relation_of()
    rounds = 0
    while True:
        domain, f = maltsev_domain(S)
        missing = set()
        for _, _, image in homomorphism_violations(f, domain, S):
            missing.add(image)
            if mode == "single":
                break
        if not missing:
            break
        rounds += 1
        rel = rel.union(missing)
        S = S.with_relation(name, rel)
    log.debug("maltsev_coreflection: %d rounds, %d tuples", rounds, len(rel))
    return S


class ObjectVerdict:

    """The Mal'tsev and majority verdicts for one structure"""

    def __init__(self, maltsev, majority):

        """Initializes an ObjectVerdict

        arguments
        maltsev        --    the (holds, witness) pair of is_maltsev_object
        majority    --    the (holds, witness) pair of is_majority_object
        """

        self.is_maltsev_object, maltsev_witness = maltsev
        self.is_majority_object, majority_witness = majority
        self.witnesses = {}
        if maltsev_witness is not None:
            self.witnesses[MALTSEV] = maltsev_witness
        if majority_witness is not None:
            self.witnesses[MAJORITY] = majority_witness

    def to_dict(self):

        return {
            "maltsev": self.is_maltsev_object,
            "majority": self.is_majority_object,
            "witnesses": {k: w.to_dict() for k, w in sorted(self.witnesses.items())},
        }

    def __repr__(self):

        return "ObjectVerdict(maltsev={}, majority={})".format(
            self.is_maltsev_object, self.is_majority_object)


def classify(S):
    """Returns the ObjectVerdict of a Rel_k structure"""

    return ObjectVerdict(is_maltsev_object(S), is_majority_object(S))


def object_check_array(S, kind):
    """Decides is_maltsev_object or is_majority_object with numpy, no witness

    Every triple of related tuples is stacked into one array; the pattern
    map is applied column by column and the images are looked up by their
    base-n codes. Used for sweeps over many structures.

    arguments
    S        --    a Structure with exactly one relation
    kind        --    MALTSEV or MAJORITY

    returns
    holds        --    a bool
    """

    _, rel = S.relation_of()
    n = S.universe.size
    m = len(rel)
    if m == 0:
        return True
    T = numpy.array(rel.tuples, dtype=numpy.int64)
    a, b, c = (i.ravel() for i in numpy.indices((m, m, m)))
    A, B, C = T[a], T[b], T[c]
    if kind == MAJORITY:
        value = numpy.where(A == B, A, numpy.where(A == C, A, numpy.where(B == C, B, -1)))
    elif kind == MALTSEV:
        value = numpy.where(A == B, C, numpy.where(B == C, A, -1))
    else:
        raise ValueError("Error in relobjects.object_check_array: kind {} not recognized".format(kind))
    defined = (value >= 0).all(axis=1)
    weights = n ** numpy.arange(rel.arity, dtype=numpy.int64)
    codes = (value[defined] * weights).sum(axis=1)
    related = (T * weights).sum(axis=1)
    return bool(numpy.isin(codes, related).all())
