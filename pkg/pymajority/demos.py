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

# The demo suite: every finite construction the toolkit was built for, run
# against the bundled data files. A demo returns a short detail string or
# raises DemoFailure; details never contain timings, so the JSON report is
# identical from run to run.

import itertools
import logging as log
import os
import time

import numpy

from pymajority import DATADIR, settings
from pymajority.algebra import commutative_majority_search, commutative_witness_chain, \
    has_majority_term, has_maltsev_term, is_commutative_majority, lattice_majority_term, \
    majority_cells, ring_majority_term, table_from_cells, ternary_term_clone, \
    verify_majority
from pymajority.congruence import cong_compose, cong_join, congruences, \
    distributivity_identity_check, lattice_checks
from pymajority.errors import PreconditionError
from pymajority.libformat import load_algebra, load_structure
from pymajority.logfile import Logfile
from pymajority.matrix import builtin_matrix, difunctional_oracle, is_difunctional, \
    is_strictly_closed, strict_closure
from pymajority.polymorphism import polymorphism_search
from pymajority.relobjects import MAJORITY, MALTSEV, classify, is_majority_object, \
    maltsev_coreflection, object_check_array
from pymajority.structures import FiniteSet, Relation, Structure
from pymajority.witness import NO, NONE, YES

LOG_HEADER = ["name", "topic", "passed", "elapsed_ms", "detail"]


class DemoFailure(Exception):
    pass


def expect(condition, message):

    if not condition:
        raise DemoFailure(message)


class Demo:

    def __init__(self, name, topic, description, run):

        self.name = name
        self.topic = topic
        self.description = description
        self.run = run


DEMOS = []


def demo(name, topic, description):

    def register(fn):
        DEMOS.append(Demo(name, topic, description, fn))
        return fn
    return register


class DemoContext:

    """Where the demos read their data and how they sample"""

    def __init__(self, data_dir=None, seed=None, samples=None):

        self.data_dir = DATADIR if data_dir is None else data_dir
        self.seed = settings.SEED if seed is None else seed
        self.samples = settings.SAMPLES if samples is None else samples

    def structure(self, name):

        return load_structure(os.path.join(self.data_dir, name + ".txt"))

    def algebra(self, name):

        return load_algebra(os.path.join(self.data_dir, name + ".txt"))

    def rng(self, salt):

        return numpy.random.default_rng([self.seed, salt])


# # # # #
# relational objects

@demo("counterexample", "relational objects",
      "the three-tuple relation on {0,1} is a Mal'tsev object but not a majority object")
def _counterexample(ctx):

    S = ctx.structure("counterexample")
    verdict = classify(S)
    expect(verdict.is_maltsev_object, "S should be a Mal'tsev object")
    expect(not verdict.is_majority_object, "S should not be a majority object")
    w = verdict.witnesses[MAJORITY]
    expect(w.premise_labels == ["((1,0,0),(1,1,0),(0,1,0))"],
           "unexpected witness premises {}".format(w.premise_labels))
    expect(w.conclusion_labels == "(0,1,0)", "unexpected conclusion {}".format(w.conclusion_labels))
    poly = polymorphism_search(S, MAJORITY)
    expect(poly.status == NONE and poly.nodes == 1,
           "majority polymorphism search should refute its single candidate")
    return "majority fails at {} -> {}".format(w.premise_labels[0], w.conclusion_labels)


def binary_relation(universe, mask):
    """Returns the binary relation whose pairs are the set bits of mask"""

    n = universe.size
    return Relation((universe, universe),
                    [(i // n, i % n) for i in range(n * n) if mask >> i & 1])


@demo("binary-relations", "relational objects",
      "every binary relation is a majority object")
def _binary_relations(ctx):

    U = FiniteSet(4)
    for mask in range(1 << 16):
        S = Structure(U, {"R": binary_relation(U, mask)})
        expect(object_check_array(S, MAJORITY), "relation {} is not a majority object".format(mask))
    # the array check against the witness-producing check
    rng = ctx.rng(2)
    for mask in rng.integers(0, 1 << 16, size=64).tolist():
        S = Structure(U, {"R": binary_relation(U, mask)})
        expect(is_majority_object(S)[0], "relation {} is not a majority object".format(mask))
    for n in [5, 6]:
        U = FiniteSet(n)
        rng = ctx.rng(n)
        for _ in range(ctx.samples):
            bits = rng.integers(0, 2, size=n * n)
            rel = Relation((U, U), [(i // n, i % n) for i in numpy.flatnonzero(bits).tolist()])
            S = Structure(U, {"R": rel})
            expect(object_check_array(S, MAJORITY), "sampled relation {} fails".format(rel.tuples))
    return "65536 relations on 4 elements, {} samples on 5 and 6".format(ctx.samples)


# # # # #
# matrices

def ternary_relations(sizes):

    signature = [FiniteSet(s) for s in sizes]
    universe = list(itertools.product(*[range(s) for s in sizes]))
    for mask in range(1 << len(universe)):
        yield mask, Relation(signature, [t for i, t in enumerate(universe) if mask >> i & 1])


def relation_mask(rel, sizes):

    universe = list(itertools.product(*[range(s) for s in sizes]))
    return sum(1 << i for i, t in enumerate(universe) if t in rel)


@demo("matrix-oracle", "matrices",
      "tuple unification agrees with assignment enumeration, and strict_closure is least")
def _matrix_oracle(ctx):

    M = builtin_matrix("majority")
    sizes = (2, 2, 2)
    closed = []
    for mask, R in ternary_relations(sizes):
        fast = is_strictly_closed(R, M, strategy="unify")
        slow = is_strictly_closed(R, M, strategy="assign")
        expect(fast == slow, "strategies disagree on relation {}".format(mask))
        if fast[0]:
            closed.append(mask)
    full = (1 << 8) - 1
    for mask, R in ternary_relations(sizes):
        least = full
        for c in closed:
            if c & mask == mask:
                least &= c
        got = relation_mask(strict_closure(R, M), sizes)
        expect(got == least, "closure of relation {} is not least".format(mask))
    U = FiniteSet(3)
    for mask in range(1 << 9):
        R = binary_relation(U, mask)
        expect(is_difunctional(R)[0] == difunctional_oracle(R),
               "difunctional checks disagree on relation {}".format(mask))
    return "256 ternary relations, {} closed; 512 binary relations".format(len(closed))


@demo("closure-laws", "matrices",
      "strict_closure is extensive, idempotent and monotone")
def _closure_laws(ctx):

    M = builtin_matrix("majority")
    rng = ctx.rng(8)
    for _ in range(500):
        sizes = [2, 2, int(rng.integers(1, 4))]
        signature = [FiniteSet(s) for s in sizes]
        universe = list(itertools.product(*[range(s) for s in sizes]))
        keep = rng.random(len(universe)) < 0.3
        extra = rng.random(len(universe)) < 0.1
        R = Relation(signature, [t for t, k in zip(universe, keep) if k])
        R2 = R.union(t for t, e in zip(universe, extra) if e)
        closure = strict_closure(R, M)
        expect(R.issubset(closure), "closure is not extensive")
        expect(strict_closure(closure, M) == closure, "closure is not idempotent")
        expect(closure.issubset(strict_closure(R2, M)), "closure is not monotone")
    return "500 sampled relations"


def rel_structure(universe, arity, tuples):

    return Structure(universe, {"R": Relation((universe,) * arity, tuples)})


@demo("coreflection-laws", "relational objects",
      "maltsev_coreflection is extensive, idempotent, monotone, least and order independent")
def _coreflection_laws(ctx):

    U = FiniteSet(2)
    sizes = (2, 2, 2)
    full = (1 << 8) - 1
    structures = [rel_structure(U, 3, R.tuples) for _, R in ternary_relations(sizes)]
    objects = [mask for mask, S in enumerate(structures) if object_check_array(S, MALTSEV)]
    for mask, S in enumerate(structures):
        least = full
        for c in objects:
            if c & mask == mask:
                least &= c
        closed = maltsev_coreflection(S)
        got = relation_mask(closed.relation("R"), sizes)
        expect(got == least, "coreflection of relation {} is not least".format(mask))
        expect(maltsev_coreflection(S, mode="single") == closed,
               "chaotic and single rounds disagree on relation {}".format(mask))
    rng = ctx.rng(9)
    for _ in range(500):
        n = int(rng.integers(1, 4))
        k = int(rng.integers(1, 4 if n < 3 else 3))
        U = FiniteSet(n)
        universe = list(itertools.product(range(n), repeat=k))
        keep = rng.random(len(universe)) < 0.3
        extra = rng.random(len(universe)) < 0.1
        S = rel_structure(U, k, [t for t, b in zip(universe, keep) if b])
        S2 = rel_structure(U, k, [t for t, a, b in zip(universe, keep, extra) if a or b])
        closed = maltsev_coreflection(S)
        R, C = S.relation("R"), closed.relation("R")
        expect(R.issubset(C), "coreflection is not extensive")
        expect(object_check_array(closed, MALTSEV), "coreflection is not a Mal'tsev object")
        expect(maltsev_coreflection(closed) == closed, "coreflection is not idempotent")
        expect(C.issubset(maltsev_coreflection(S2).relation("R")), "coreflection is not monotone")
        expect(maltsev_coreflection(S, mode="single") == closed,
               "chaotic and single rounds disagree on {}".format(R.tuples))
    return "256 ternary relations on 2 elements ({} objects), 500 sampled structures".format(
        len(objects))


# # # # #
# algebras

@demo("term-builders", "algebras",
      "lattice and ring majority terms, and the ring exponent law")
def _term_builders(ctx):

    for name in ["lattice2", "m3", "n5"]:
        A = ctx.algebra(name)
        p = lattice_majority_term(A.operations["meet"], A.operations["join"])
        expect(verify_majority(p)[0], "lattice term fails on {}".format(name))
    for name, n in [("gf2", 2), ("z6ring", 3)]:
        A = ctx.algebra(name)
        ops = A.operations
        p = ring_majority_term(ops["add"], ops["sub"], ops["mul"], n)
        expect(verify_majority(p)[0], "ring term fails on {}".format(name))
    A = ctx.algebra("z4ring")
    ops = A.operations
    try:
        ring_majority_term(ops["add"], ops["sub"], ops["mul"], 2)
    except PreconditionError as e:
        expect("x = 2" in str(e), "exponent law should fail at 2: {}".format(e))
    else:
        raise DemoFailure("integers mod 4 should fail x^2 = x")
    return "lattice term on 2-chain, M3, N5; ring term on GF(2), Z6; Z4 rejected at 2"


@demo("term-separation", "algebras",
      "majority terms separate lattices from semilattices and groups")
def _term_separation(ctx):

    lattice = has_majority_term(ctx.algebra("lattice2"))
    expect(lattice.status == YES, "the 2-element lattice should have a majority term")
    semilattice = ctx.algebra("semilattice2")
    clone = ternary_term_clone(semilattice)
    expect(clone.complete and len(clone) == 7, "semilattice clone should have 7 tables")
    expect(has_majority_term(semilattice).status == NO, "the semilattice should have no majority term")
    z2 = ctx.algebra("z2")
    expect(has_majority_term(z2).status == NO, "Z2 should have no majority term")
    maltsev = has_maltsev_term(z2)
    expect(maltsev.status == YES, "Z2 should have a Mal'tsev term")
    expect(maltsev.table.flat() == tuple((x + y + z) % 2 for x, y, z in itertools.product(range(2), repeat=3)),
           "Z2 Mal'tsev term should be x+y+z")
    return "lattice yes; semilattice no (7 tables); Z2 no, Mal'tsev x+y+z"


@demo("congruence-calculus", "congruences",
      "congruences of Mal'tsev algebras permute and form distributive lattices")
def _congruence_calculus(ctx):

    counts = []
    for name in ["z4", "z6", "boolean4"]:
        A = ctx.algebra(name)
        expect(has_maltsev_term(A).status == YES, "{} should have a Mal'tsev term".format(name))
        congs = congruences(A)
        counts.append("{} {}".format(name, len(congs)))
        for a, b in itertools.product(congs, repeat=2):
            expect(cong_compose(a, b) == cong_join(a, b).as_relation(),
                   "join is not composition in {}".format(name))
        report = lattice_checks(congs)
        expect(report.distributive and report.permutable,
               "congruence lattice of {} fails {}".format(name, sorted(report.witnesses)))
        for a, b, c in itertools.product(congs, repeat=3):
            expect(distributivity_identity_check(a, b, c)[0],
                   "distributivity identity fails in {}".format(name))
    return ", ".join(counts)


@demo("commutative-majority", "algebras",
      "no commutative majority operation on 2 or 3 elements")
def _commutative_majority(ctx):

    two = commutative_majority_search(2)
    expect(two.status == NONE and two.nodes == 1, "n=2 should refute 1 candidate")
    three = commutative_majority_search(3)
    expect(three.status == NONE and three.nodes == 729, "n=3 should refute 729 candidates")
    forced, _ = majority_cells(2)
    p = table_from_cells(FiniteSet(2), forced)
    holds, witness = is_commutative_majority(p)
    expect(not holds, "Boolean majority should not be commutative")
    lhs, rhs = witness.conclusion
    expect(lhs != rhs, "witness should show two different values")
    steps = [v for _, v in commutative_witness_chain(p, 0, 1)]
    expect(steps[0] == 0 and steps[-1] == 1 and steps[0] == steps[1] and steps[2] == steps[3],
           "witness chain should break exactly at the commutativity step")
    return "n=2: 1 candidate, n=3: 729 candidates; Boolean majority fails at {}".format(witness.premises)


def list_demos():

    return [{"name": d.name, "topic": d.topic, "description": d.description} for d in DEMOS]


def run_demos(ctx=None, names=None, logfile=None):
    """Runs the demos in order

    keyword arguments
    ctx        --    a DemoContext (default = None, the bundled data)
    names        --    names of the demos to run (default = None, all)
    logfile        --    name of a run-record file, without extension
                (default = None, no run record)

    returns
    results        --    a list of dicts with the keys name, topic,
                passed and detail
    """

    if ctx is None:
        ctx = DemoContext()
    selected = [d for d in DEMOS if names is None or d.name in names]
    log_ = None if logfile is None else Logfile(filename=logfile, header=LOG_HEADER)
    results = []
    for d in selected:
        t0 = time.perf_counter()
        try:
            detail = d.run(ctx)
            passed = True
        except DemoFailure as e:
            detail = str(e)
            passed = False
        elapsed = int(round(1000 * (time.perf_counter() - t0)))
        log.info("demo %s: %s (%d ms)", d.name, "pass" if passed else "FAIL", elapsed)
        if log_ is not None:
            log_.write([d.name, d.topic, passed, elapsed, detail])
        results.append({"name": d.name, "topic": d.topic, "passed": passed, "detail": detail})
    if log_ is not None:
        log_.close()
    return results
