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

# Congruences of finite algebras, stored as partitions: partition[x] is the
# number of the block holding x, blocks numbered in order of first occurrence.

import itertools
import logging as log

import numpy

from pymajority import settings
from pymajority._congruence.basecongruence import BaseCongruenceFinder
from pymajority._misc.misc import copy_docstr
from pymajority.algebra import has_maltsev_term
from pymajority.errors import SignatureError, UniverseCapError
from pymajority.structures import Relation, compose
from pymajority.witness import IDENTITY_VIOLATION, YES, Witness


def normalize(labels):
    """Renumbers block labels in order of first occurrence"""

    seen = {}
    return tuple(seen.setdefault(b, len(seen)) for b in labels)


class _UnionFind:

    def __init__(self, n):

        self.parent = list(range(n))

    def find(self, x):

        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):

        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        # the smaller element stays the root
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True

    def partition(self):

        return normalize(self.find(x) for x in range(len(self.parent)))


def _translations(algebra, c, d):

    # pairs (t(c), t(d)) for every basic translation t: one argument
    # position varies, the others range over the whole universe
    for op in algebra.operations.values():
        for pos in range(op.arity):
            left = numpy.take(op.values, c, axis=pos).ravel()
            right = numpy.take(op.values, d, axis=pos).ravel()
            yield left, right


def is_compatible(algebra, partition):
    """Checks whether an equivalence relation is preserved by every operation"""

    blocks = numpy.asarray(partition)
    first = {}
    for x, b in enumerate(partition):
        c = first.setdefault(b, x)
        if c == x:
            continue
        for left, right in _translations(algebra, c, x):
            if not numpy.array_equal(blocks[left], blocks[right]):
                return False
    return True


def _close(algebra, uf):

    changed = True
    n = algebra.universe.size
    while changed:
        changed = False
        for x in range(n):
            c = uf.find(x)
            if c == x:
                continue
            for left, right in _translations(algebra, c, x):
                for u, v in zip(left.tolist(), right.tolist()):
                    if uf.union(u, v):
                        changed = True
    return uf


class Congruence:

    """A congruence of a FiniteAlgebra"""

    def __init__(self, algebra, partition):

        """Initializes a Congruence

        arguments
        algebra        --    the FiniteAlgebra
        partition    --    a block label for every element
        """

        if len(partition) != algebra.universe.size:
            raise SignatureError("Error in congruence.Congruence.__init__: partition does not cover the universe")
        self.algebra = algebra
        self.partition = normalize(partition)

    @property
    def num_blocks(self):

        return max(self.partition, default=-1) + 1

    def blocks(self):

        out = [[] for _ in range(self.num_blocks)]
        for x, b in enumerate(self.partition):
            out[b].append(x)
        return out

    def related(self, a, b):

        return self.partition[a] == self.partition[b]

    def as_relation(self):

        U = self.algebra.universe
        return Relation((U, U), [(a, b) for a in range(U.size) for b in range(U.size)
                                 if self.partition[a] == self.partition[b]])

    def __le__(self, other):

        _check_same(self, other, "Congruence.__le__")
        return all(other.related(a, b) for blk in self.blocks() for a in blk for b in blk)

    def __eq__(self, other):

        return isinstance(other, Congruence) and self.partition == other.partition \
            and self.algebra == other.algebra

    def __hash__(self):

        return hash(self.partition)

    def __str__(self):

        U = self.algebra.universe
        return "".join("{" + ",".join(U.label(x) for x in blk) + "}" for blk in self.blocks())

    def __repr__(self):

        return "Congruence({})".format(str(self))

    def sort_key(self):

        return (-self.num_blocks, self.partition)


def _check_same(a, b, where):

    if not (a.algebra is b.algebra or a.algebra == b.algebra):
        raise SignatureError("Error in congruence.{}: congruences of different algebras".format(where))


def principal_congruence(A, a, b):
    """Returns the least congruence of A relating a and b"""

    A.universe.check(a)
    A.universe.check(b)
    uf = _UnionFind(A.universe.size)
    uf.union(a, b)
    return Congruence(A, _close(A, uf).partition())


class CongruenceFinder(BaseCongruenceFinder):

    # See BaseCongruenceFinder

    def __init__(self, strategy=None):

        """Initializes a CongruenceFinder that morphs into a strategy

        keyword arguments
        strategy    --    "exhaustive", "principal" or "auto" (default =
                    settings.CONGRUENCESTRATEGY)
        """

        if strategy is None:
            strategy = settings.CONGRUENCESTRATEGY
        if strategy == "exhaustive":
            from pymajority._congruence.exhaustivecongruence import ExhaustiveCongruenceFinder as Finder
        elif strategy == "principal":
            from pymajority._congruence.principalcongruence import PrincipalCongruenceFinder as Finder
        elif strategy == "auto":
            from pymajority._congruence.autocongruence import AutoCongruenceFinder as Finder
        else:
            raise ValueError(
                "Error in congruence.CongruenceFinder.__init__: strategy {} not recognized; use 'exhaustive', 'principal' or 'auto'".format(
                    strategy))
        self.__class__ = Finder
        self.__class__.__init__(self)
        copy_docstr(BaseCongruenceFinder, CongruenceFinder)


def congruences(A, strategy=None):
    """Lists every congruence of a finite algebra

    arguments
    A        --    a FiniteAlgebra

    keyword arguments
    strategy    --    "exhaustive", "principal" or "auto" (default =
                settings.CONGRUENCESTRATEGY)

    returns
    congs        --    a list of Congruences, finest first: sorted by
                decreasing number of blocks, then by partition
    """

    return CongruenceFinder(strategy).find(A)


def cong_compose(alpha, beta):
    """Returns the relational composite alpha;beta as a Relation"""

    _check_same(alpha, beta, "cong_compose")
    return compose(alpha.as_relation(), beta.as_relation())


def cong_meet(alpha, beta):

    _check_same(alpha, beta, "cong_meet")
    return Congruence(alpha.algebra, list(zip(alpha.partition, beta.partition)))


def cong_join(alpha, beta):
    """Returns the least congruence containing alpha and beta

    The join of two congruences is their equivalence join; it is a
    congruence without further closing.
    """

    _check_same(alpha, beta, "cong_join")
    uf = _UnionFind(alpha.algebra.universe.size)
    for part in [alpha.partition, beta.partition]:
        first = {}
        for x, b in enumerate(part):
            uf.union(first.setdefault(b, x), x)
    return Congruence(alpha.algebra, uf.partition())


def _least_difference(r, s):

    diff = sorted(set(r.tuples) ^ set(s.tuples))
    return diff[0] if diff else None


class LatticeReport:

    """Distributivity and permutability of a list of congruences"""

    def __init__(self, distributive, permutable, witnesses):

        self.distributive = distributive
        self.permutable = permutable
        self.witnesses = witnesses

    def to_dict(self):

        return {
            "distributive": self.distributive,
            "permutable": self.permutable,
            "witnesses": {k: w.to_dict() for k, w in sorted(self.witnesses.items())},
        }

    def __repr__(self):

        return "LatticeReport(distributive={}, permutable={})".format(
            self.distributive, self.permutable)


def lattice_checks(congs):
    """Checks distributivity and permutability on a list of congruences

    arguments
    congs        --    Congruences of one algebra, e.g. from congruences()

    returns
    report        --    a LatticeReport; each failing property carries a
                witness naming the least failing indices into congs
                and the least pair on which the two sides differ
    """

    witnesses = {}
    for i, j, k in itertools.product(range(len(congs)), repeat=3):
        a, b, c = congs[i], congs[j], congs[k]
        left = cong_meet(a, cong_join(b, c))
        right = cong_join(cong_meet(a, b), cong_meet(a, c))
        if left != right:
            pair = _least_difference(left.as_relation(), right.as_relation())
            witnesses["distributive"] = Witness(
                IDENTITY_VIOLATION, {"alpha": i, "beta": j, "gamma": k}, pair,
                relation="a^(bvc) = (a^b)v(a^c)")
            break
    for i, j in itertools.product(range(len(congs)), repeat=2):
        ab = cong_compose(congs[i], congs[j])
        ba = cong_compose(congs[j], congs[i])
        if ab != ba:
            witnesses["permutable"] = Witness(
                IDENTITY_VIOLATION, {"alpha": i, "beta": j}, _least_difference(ab, ba),
                relation="a;b = b;a")
            break
    return LatticeReport("distributive" not in witnesses, "permutable" not in witnesses, witnesses)


def distributivity_identity_check(KA, KB, KC):
    """Checks KB ^ (KA;KC) = (KB^KA);(KB^KC) as relations

    returns
    (holds, witness)    --    witness holds the least pair on which the two
                sides differ
    """

    _check_same(KA, KB, "distributivity_identity_check")
    _check_same(KA, KC, "distributivity_identity_check")
    composite = compose(KA.as_relation(), KC.as_relation())
    b = KB.as_relation()
    left = Relation(b.signature, set(b.tuples) & set(composite.tuples))
    right = cong_compose(cong_meet(KB, KA), cong_meet(KB, KC))
    if left == right:
        return True, None
    pair = _least_difference(left, right)
    return False, Witness(IDENTITY_VIOLATION, {"in_left": int(pair in left)}, pair,
                          relation="b^(a;c) = (b^a);(b^c)")


def is_arithmetical(A, budget=None):
    """Checks whether A has a Mal'tsev term and a distributive congruence lattice

    returns
    (holds, report)    --    report is a dict with the keys "maltsev" (the
                term status) and "lattice" (a LatticeReport)
    """

    outcome = has_maltsev_term(A, budget=budget)
    report = lattice_checks(congruences(A))
    log.debug("is_arithmetical: maltsev %s, %r", outcome.status, report)
    holds = outcome.status == YES and report.distributive
    return holds, {"maltsev": outcome.status, "lattice": report}


def check_cap(A, cap, where):

    if A.universe.size > cap:
        raise UniverseCapError(
            "Error in congruence.{}: universe of {} elements exceeds the cap of {}".format(
                where, A.universe.size, cap))


def congruence_lattice_report(A, strategy=None):
    """Lists the congruences of A and checks their lattice

    returns
    (congs, report)    --    the sorted Congruences and their LatticeReport
    """

    congs = congruences(A, strategy=strategy)
    return congs, lattice_checks(congs)
