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

# Finite sets, relations between them and relational structures. Elements are
# always the indices 0..size-1 of their set; labels are for display only.
# Every value defined here is immutable once constructed.

import itertools
import logging as log
from types import MappingProxyType

from pymajority import settings
from pymajority.errors import ElementError, SignatureError, UniverseCapError
from pymajority.witness import HOMOMORPHISM_VIOLATION, Witness


def tuple_label(fset, tup):
    """Returns a tuple of elements written with the labels of fset"""

    return "(" + ",".join(fset.label(x) for x in tup) + ")"


def encode_power(coords, size):
    """Returns the index of a tuple of coordinates in the power of a set

    Coordinate 0 is the least significant digit, so (a,b,c) over a set of
    size n has index a + n*b + n*n*c.

    arguments
    coords        --    a sequence of element indices
    size        --    the size of the base set

    returns
    index        --    an int
    """

    index = 0
    for c in reversed(coords):
        index = index * size + c
    return index


def decode_power(index, size, n):
    """Returns the n coordinates of an element of the n-th power of a set

    arguments
    index        --    the element index in the power
    size        --    the size of the base set
    n        --    the exponent

    returns
    coords        --    a tuple of n element indices
    """

    coords = []
    for _ in range(n):
        coords.append(index % size)
        index //= size
    return tuple(coords)


class FiniteSet:

    """A finite set {0, ..., size-1} with optional labels and basepoint"""

    def __init__(self, size, labels=None, basepoint=None):

        """Initializes a FiniteSet

        arguments
        size        --    number of elements (a non-negative int)

        keyword arguments
        labels        --    a list of distinct display strings, one per
                    element, or None for the indices themselves
                    (default = None)
        basepoint    --    index of the designated element used for the
                    constant ZERO, or None (default = None)
        """

        if isinstance(size, bool) or not isinstance(size, int) or size < 0:
            raise ElementError(
                "Error in structures.FiniteSet.__init__: size should be a non-negative integer, not {!r}".format(size))
        self.size = size

        if labels is not None:
            labels = tuple(str(l) for l in labels)
            if len(labels) != size:
                raise ElementError(
                    "Error in structures.FiniteSet.__init__: {} labels given for {} elements".format(
                        len(labels), size))
            if len(set(labels)) != size:
                raise ElementError(
                    "Error in structures.FiniteSet.__init__: labels are not distinct")
            # default labels are not stored, so equal sets compare equal
            if labels == tuple(str(i) for i in range(size)):
                labels = None
        self.labels = labels

        if basepoint is not None:
            if not 0 <= basepoint < size:
                raise ElementError(
                    "Error in structures.FiniteSet.__init__: basepoint {} is not an element of a set of size {}".format(
                        basepoint, size))
            basepoint = int(basepoint)
        self.basepoint = basepoint

    def label(self, i):

        return self.labels[i] if self.labels is not None else str(i)

    def index(self, label):

        """Returns the element carrying a label"""

        if self.labels is None:
            i = int(label)
            self.check(i)
            return i
        try:
            return self.labels.index(label)
        except ValueError:
            raise ElementError(
                "Error in structures.FiniteSet.index: no element is labelled {!r}".format(label))

    def check(self, i):

        if isinstance(i, bool) or not 0 <= i < self.size:
            raise ElementError(
                "Error in structures.FiniteSet.check: {!r} is not an element of a set of size {}".format(
                    i, self.size))

    def with_basepoint(self, basepoint):

        return FiniteSet(self.size, labels=self.labels, basepoint=basepoint)

    def _key(self):

        return (self.size, self.labels, self.basepoint)

    def __len__(self):

        return self.size

    def __iter__(self):

        return iter(range(self.size))

    def __eq__(self, other):

        return isinstance(other, FiniteSet) and self._key() == other._key()

    def __hash__(self):

        return hash(self._key())

    def __repr__(self):

        return "FiniteSet({}{}{})".format(
            self.size,
            "" if self.labels is None else ", labels={}".format(list(self.labels)),
            "" if self.basepoint is None else ", basepoint={}".format(self.basepoint))


class Relation:

    """A finite relation: a set of tuples over a list of component sets"""

    def __init__(self, signature, tuples=()):

        """Initializes a Relation

        arguments
        signature    --    a sequence of FiniteSets, one per component

        keyword arguments
        tuples        --    an iterable of tuples of element indices
                    (default = ())
        """

        self.signature = tuple(signature)
        for component in self.signature:
            if not isinstance(component, FiniteSet):
                raise SignatureError(
                    "Error in structures.Relation.__init__: components should be FiniteSets, not {!r}".format(
                        component))
        arity = len(self.signature)
        tset = set()
        for t in tuples:
            t = tuple(int(x) for x in t)
            if len(t) != arity:
                raise SignatureError(
                    "Error in structures.Relation.__init__: tuple {} does not have arity {}".format(t, arity))
            for x, component in zip(t, self.signature):
                if not 0 <= x < component.size:
                    raise ElementError(
                        "Error in structures.Relation.__init__: tuple {} leaves its component sets".format(t))
            tset.add(t)
        self.tuples = tuple(sorted(tset))
        self._set = frozenset(self.tuples)

    @property
    def arity(self):

        return len(self.signature)

    @classmethod
    def full(cls, signature):

        return cls(signature, itertools.product(*[range(c.size) for c in signature]))

    @classmethod
    def diagonal(cls, fset):

        return cls((fset, fset), ((x, x) for x in fset))

    def union(self, extra):

        return Relation(self.signature, self.tuples + tuple(tuple(t) for t in extra))

    def issubset(self, other):

        return self._set <= other._set

    def __contains__(self, t):

        return tuple(t) in self._set

    def __iter__(self):

        return iter(self.tuples)

    def __len__(self):

        return len(self.tuples)

    def __eq__(self, other):

        return isinstance(other, Relation) and self.signature == other.signature \
            and self.tuples == other.tuples

    def __hash__(self):

        return hash((self.signature, self.tuples))

    def __repr__(self):

        return "Relation(arity={}, tuples={})".format(self.arity, list(self.tuples))


def compose(r, s):
    """Returns the composite of two binary relations, r first

    arguments
    r        --    a binary Relation between A and B
    s        --    a binary Relation between B and C

    returns
    rel        --    {(a,c) : (a,b) in r and (b,c) in s for some b}
    """

    if r.arity != 2 or s.arity != 2:
        raise SignatureError("Error in structures.compose: both relations should be binary")
    if r.signature[1].size != s.signature[0].size:
        raise SignatureError("Error in structures.compose: middle components differ in size")
    successors = {}
    for b, c in s:
        successors.setdefault(b, []).append(c)
    pairs = [(a, c) for a, b in r for c in successors.get(b, ())]
    return Relation((r.signature[0], s.signature[1]), pairs)


def converse(r):
    """Returns the converse {(b,a) : (a,b) in r} of a binary relation"""

    if r.arity != 2:
        raise SignatureError("Error in structures.converse: relation should be binary")
    return Relation((r.signature[1], r.signature[0]), ((b, a) for a, b in r))


class Structure:

    """A finite universe with named homogeneous relations"""

    def __init__(self, universe, relations=None):

        """Initializes a Structure

        arguments
        universe    --    a FiniteSet

        keyword arguments
        relations    --    a dict mapping names to Relations whose
                    components all equal the universe (default = None,
                    no relations)
        """

        if relations is None:
            relations = {}
        for name, rel in relations.items():
            if not name or any(ch.isspace() for ch in name):
                raise SignatureError(
                    "Error in structures.Structure.__init__: invalid relation name {!r}".format(name))
            if any(component != universe for component in rel.signature):
                raise SignatureError(
                    "Error in structures.Structure.__init__: relation {} is not over the universe".format(name))
        self.universe = universe
        self.relations = MappingProxyType(dict(sorted(relations.items())))

    @classmethod
    def build(cls, universe, contents):

        """Builds a Structure from plain data

        arguments
        universe    --    a FiniteSet, or an int for an unlabelled set
        contents    --    a dict mapping names to (arity, tuples) pairs

        returns
        structure    --    a Structure
        """

        if isinstance(universe, int):
            universe = FiniteSet(universe)
        relations = {
            name: Relation((universe,) * arity, tuples)
            for name, (arity, tuples) in contents.items()
        }
        return cls(universe, relations)

    @classmethod
    def discrete(cls, universe, arities):

        """Returns the structure whose relations contain every tuple"""

        return cls(universe, {
            name: Relation.full((universe,) * arity)
            for name, arity in arities.items()
        })

    def signature(self):

        return tuple((name, rel.arity) for name, rel in self.relations.items())

    def relation(self, name):

        try:
            return self.relations[name]
        except KeyError:
            raise SignatureError(
                "Error in structures.Structure.relation: no relation named {}".format(name))

    def relation_of(self):

        """Returns (name, relation) of a structure with exactly one relation"""

        if len(self.relations) != 1:
            raise SignatureError(
                "Error in structures.Structure.relation_of: a Rel_k structure has exactly one relation, not {}".format(
                    len(self.relations)))
        return next(iter(self.relations.items()))

    def with_relation(self, name, rel):

        relations = dict(self.relations)
        relations[name] = rel
        return Structure(self.universe, relations)

    def relabel(self, permutation):

        """Returns the isomorphic copy in which element i becomes permutation[i]

        arguments
        permutation    --    a sequence holding each element index once

        returns
        structure    --    a Structure
        """

        n = self.universe.size
        if sorted(permutation) != list(range(n)):
            raise ElementError("Error in structures.Structure.relabel: not a permutation of the universe")
        labels = None
        if self.universe.labels is not None:
            labels = [None] * n
            for i, j in enumerate(permutation):
                labels[j] = self.universe.labels[i]
        bp = self.universe.basepoint
        universe = FiniteSet(n, labels=labels,
                             basepoint=None if bp is None else permutation[bp])
        return Structure(universe, {
            name: Relation((universe,) * rel.arity,
                           (tuple(permutation[x] for x in t) for t in rel))
            for name, rel in self.relations.items()
        })

    def __eq__(self, other):

        return isinstance(other, Structure) and self.universe == other.universe \
            and dict(self.relations) == dict(other.relations)

    def __hash__(self):

        return hash((self.universe, tuple(self.relations.items())))

    def __repr__(self):

        return "Structure({!r}, {})".format(
            self.universe, {name: len(rel) for name, rel in self.relations.items()})


class FiniteMap:

    """A total function between two FiniteSets"""

    def __init__(self, domain, codomain, values):

        """Initializes a FiniteMap

        arguments
        domain        --    a FiniteSet
        codomain    --    a FiniteSet
        values        --    a sequence with the image of each domain element
        """

        values = tuple(int(v) for v in values)
        if len(values) != domain.size:
            raise ElementError(
                "Error in structures.FiniteMap.__init__: {} values given for a domain of size {}".format(
                    len(values), domain.size))
        for v in values:
            if not 0 <= v < codomain.size:
                raise ElementError(
                    "Error in structures.FiniteMap.__init__: value {} is not in the codomain".format(v))
        self.domain = domain
        self.codomain = codomain
        self.values = values

    @classmethod
    def identity(cls, fset):

        return cls(fset, fset, range(fset.size))

    def compose(self, other):

        """Returns self after other, i.e. x -> self(other(x))"""

        if other.codomain != self.domain:
            raise SignatureError(
                "Error in structures.FiniteMap.compose: codomain of the first map is not the domain of the second")
        return FiniteMap(other.domain, self.codomain, (self.values[v] for v in other.values))

    def __call__(self, x):

        return self.values[x]

    def __eq__(self, other):

        return isinstance(other, FiniteMap) and self.domain == other.domain \
            and self.codomain == other.codomain and self.values == other.values

    def __hash__(self):

        return hash((self.domain, self.codomain, self.values))

    def __repr__(self):

        return "FiniteMap({})".format(list(self.values))


def _check_map(f, X, Y, where):

    if X.signature() != Y.signature():
        raise SignatureError(
            "Error in structures.{}: relation signatures differ ({} vs {})".format(
                where, X.signature(), Y.signature()))
    if f.domain != X.universe or f.codomain != Y.universe:
        raise SignatureError(
            "Error in structures.{}: map does not run between the two universes".format(where))


def homomorphism_violations(f, X, Y):
    """Yields every tuple of X that f does not send into Y

    Relations are visited by name and tuples in lexicographic order, so the
    first item is the least violation.

    arguments
    f        --    a FiniteMap from X.universe to Y.universe
    X        --    the source Structure
    Y        --    the target Structure

    returns
    generator    --    (name, tuple, image) triples
    """

    _check_map(f, X, Y, "homomorphism_violations")
    for name, rel in X.relations.items():
        target = Y.relations[name]
        values = f.values
        for t in rel:
            image = tuple(values[x] for x in t)
            if image not in target:
                yield name, t, image


def _homomorphism_witness(f, X, Y, name, t, image):

    assignment = {X.universe.label(x): f(x) for x in t}
    return Witness(
        HOMOMORPHISM_VIOLATION, assignment, image, premises=(t,), relation=name,
        premise_labels=[tuple_label(X.universe, t)],
        conclusion_labels=tuple_label(Y.universe, image))


def is_homomorphism(f, X, Y):
    """Checks whether a map sends related tuples to related tuples

    arguments
    f        --    a FiniteMap from X.universe to Y.universe
    X        --    the source Structure
    Y        --    the target Structure, with the same relation names and
                arities as X

    returns
    (holds, witness)    --    holds is a bool; witness is None, or the least
                violating tuple as a Witness
    """

    for name, t, image in homomorphism_violations(f, X, Y):
        return False, _homomorphism_witness(f, X, Y, name, t, image)
    return True, None


def replay_homomorphism_witness(f, X, Y, witness):
    """Returns True when a homomorphism witness really is a violation"""

    if witness.kind != HOMOMORPHISM_VIOLATION or len(witness.premises) != 1:
        return False
    t = witness.premises[0]
    image = tuple(f(x) for x in t)
    return t in X.relation(witness.relation) and image == witness.conclusion \
        and image not in Y.relation(witness.relation)


def is_relation_reflecting(m, X, Y):
    """Checks whether a map is a homomorphism that also reflects relations

    A tuple of X must be related exactly when its image is related in Y.

    arguments
    m        --    a FiniteMap from X.universe to Y.universe
    X        --    the source Structure
    Y        --    the target Structure

    returns
    (holds, witness)    --    witness lists a tuple of Y that is related,
                lies in the image of m, but has no related preimage
    """

    holds, witness = is_homomorphism(m, X, Y)
    if not holds:
        return holds, witness
    preimages = {}
    for x, y in enumerate(m.values):
        preimages.setdefault(y, []).append(x)
    for name, rel in Y.relations.items():
        source = X.relations[name]
        for t in rel:
            if not all(y in preimages for y in t):
                continue
            for pre in itertools.product(*[preimages[y] for y in t]):
                if pre not in source:
                    return False, Witness(
                        HOMOMORPHISM_VIOLATION,
                        {X.universe.label(x): m(x) for x in pre}, t,
                        premises=(pre,), relation=name,
                        premise_labels=[tuple_label(X.universe, pre)],
                        conclusion_labels=tuple_label(Y.universe, t))
    return True, None


def _check_cap(size, max_universe, where):

    if max_universe is None:
        max_universe = settings.MAXUNIVERSE
    if size > max_universe:
        raise UniverseCapError(
            "Error in structures.{}: universe of size {} exceeds the cap of {}".format(
                where, size, max_universe))


def product_power(X, n, max_universe=None):
    """Returns the n-fold cartesian power of a structure

    A k-tuple of n-tuples is related when each of its n coordinate k-tuples
    is related in X, the largest relation making every projection a
    homomorphism.

    arguments
    X        --    a Structure
    n        --    the exponent (a positive int)

    keyword arguments
    max_universe    --    cap on the size of the power (default =
                settings.MAXUNIVERSE)

    returns
    power        --    a Structure whose elements are encoded with
                encode_power
    """

    if n < 1:
        raise ElementError("Error in structures.product_power: exponent should be at least 1, not {}".format(n))
    size = X.universe.size
    total = size ** n
    _check_cap(total, max_universe, "product_power")

    labels = [tuple_label(X.universe, decode_power(i, size, n)) for i in range(total)]
    bp = X.universe.basepoint
    universe = FiniteSet(total, labels=labels,
                         basepoint=None if bp is None else encode_power((bp,) * n, size))
    relations = {}
    for name, rel in X.relations.items():
        k = rel.arity
        tuples = []
        for choice in itertools.product(rel.tuples, repeat=n):
            tuples.append(tuple(
                encode_power([r[j] for r in choice], size) for j in range(k)))
        relations[name] = Relation((universe,) * k, tuples)
    log.debug("product_power: |U|=%d n=%d -> %d elements", size, n, total)
    return Structure(universe, relations)


def projection(X, n, i, power=None):
    """Returns the i-th projection from product_power(X, n) onto X"""

    if power is None:
        power = product_power(X, n)
    size = X.universe.size
    return FiniteMap(power.universe, X.universe,
                     (decode_power(e, size, n)[i] for e in power.universe))


def restrict(X, subset):
    """Returns the substructure on a subset of the universe

    arguments
    X        --    a Structure
    subset        --    a list of distinct elements; element subset[i]
                becomes element i of the result

    returns
    sub        --    a Structure keeping exactly the tuples that lie
                inside the subset
    """

    subset = [int(e) for e in subset]
    position = {}
    for e in subset:
        X.universe.check(e)
        if e in position:
            raise ElementError("Error in structures.restrict: element {} occurs twice".format(e))
        position[e] = len(position)
    bp = X.universe.basepoint
    universe = FiniteSet(len(subset), labels=[X.universe.label(e) for e in subset],
                         basepoint=position.get(bp) if bp is not None else None)
    relations = {}
    for name, rel in X.relations.items():
        relations[name] = Relation(
            (universe,) * rel.arity,
            (tuple(position[x] for x in t) for t in rel if all(x in position for x in t)))
    return Structure(universe, relations)


def inclusion(sub, X, subset):
    """Returns the inclusion map of restrict(X, subset) into X"""

    return FiniteMap(sub.universe, X.universe, subset)


def coproduct(X, Y, max_universe=None):
    """Returns the disjoint union of two structures

    The elements of X come first, then those of Y; the relation is the
    smallest one making both inclusions homomorphisms.

    arguments
    X        --    a Structure
    Y        --    a Structure with the same signature as X

    keyword arguments
    max_universe    --    cap on the size of the result (default =
                settings.MAXUNIVERSE)

    returns
    sum        --    a Structure
    """

    if X.signature() != Y.signature():
        raise SignatureError("Error in structures.coproduct: relation signatures differ")
    nx = X.universe.size
    _check_cap(nx + Y.universe.size, max_universe, "coproduct")
    labels = ["0:" + X.universe.label(x) for x in X.universe] + \
        ["1:" + Y.universe.label(y) for y in Y.universe]
    universe = FiniteSet(len(labels), labels=labels)
    relations = {}
    for name, rel in X.relations.items():
        tuples = list(rel) + [tuple(y + nx for y in t) for t in Y.relations[name]]
        relations[name] = Relation((universe,) * rel.arity, tuples)
    return Structure(universe, relations)
