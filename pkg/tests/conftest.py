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

import itertools
import os

import pytest
from hypothesis import strategies as st

from pymajority import DATADIR, settings
from pymajority.libformat import load_algebra, load_structure
from pymajority.structures import FiniteSet, Relation, Structure


@pytest.fixture(autouse=True)
def restore_settings():

    saved = dict(settings.config)
    yield
    settings.config.clear()
    settings.config.update(saved)


@pytest.fixture
def data_dir():

    return DATADIR


@pytest.fixture
def structure():

    def load(name):
        return load_structure(os.path.join(DATADIR, name + ".txt"))
    return load


@pytest.fixture
def algebra():

    def load(name):
        return load_algebra(os.path.join(DATADIR, name + ".txt"))
    return load


@pytest.fixture
def counterexample():

    return Structure.build(2, {"R": (3, [(1, 1, 0), (0, 1, 1), (0, 0, 0)])})


# # # # #
# hypothesis strategies

@st.composite
def relations(draw, sizes=st.lists(st.integers(1, 3), min_size=1, max_size=3)):
    """Draws a relation whose components have the drawn sizes"""

    sizes = draw(sizes)
    signature = [FiniteSet(s) for s in sizes]
    universe = list(itertools.product(*[range(s) for s in sizes]))
    keep = draw(st.lists(st.booleans(), min_size=len(universe), max_size=len(universe)))
    return Relation(signature, [t for t, k in zip(universe, keep) if k])


@st.composite
def rel_structures(draw, max_size=3, arity=None):
    """Draws a structure with exactly one relation"""

    n = draw(st.integers(1, max_size))
    k = draw(st.integers(1, 3)) if arity is None else arity
    U = FiniteSet(n)
    universe = list(itertools.product(range(n), repeat=k))
    keep = draw(st.lists(st.booleans(), min_size=len(universe), max_size=len(universe)))
    return Structure(U, {"R": Relation((U,) * k, [t for t, b in zip(universe, keep) if b])})


# # # # #
# exhaustive oracles

def all_relations(sizes):
    """Yields (mask, relation) for every relation with the given component sizes"""

    signature = [FiniteSet(s) for s in sizes]
    universe = list(itertools.product(*[range(s) for s in sizes]))
    for mask in range(1 << len(universe)):
        yield mask, Relation(signature, [t for i, t in enumerate(universe) if mask >> i & 1])


def relation_mask(rel, sizes):

    universe = list(itertools.product(*[range(s) for s in sizes]))
    return sum(1 << i for i, t in enumerate(universe) if t in rel)


def least_superset(mask, closed):
    """Returns the intersection of the masks in closed that contain mask"""

    least = -1
    for c in closed:
        if c & mask == mask:
            least &= c
    return least
