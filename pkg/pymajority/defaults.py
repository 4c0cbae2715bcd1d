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

# STRUCTURES
# Maximum number of elements in a universe built by product_power or
# coproduct. Exceeding it raises UniverseCapError.
MAXUNIVERSE = 4096

# MATRIX
# Strategy for deciding strict M-closedness. Choose either "unify" (walk
# w-tuples of related tuples and unify them with the matrix) or "assign"
# (enumerate every assignment of the matrix variables; slow, used as an
# oracle).
CLOSURESTRATEGY = "unify"

# SEARCH
# Node budget for polymorphism searches. When it runs out the outcome is
# "undecided", never "none".
SEARCHBUDGET = 10 ** 7
# Maximum number of distinct ternary tables generated when closing the
# projections under the basic operations of an algebra.
CLONEBUDGET = 10000
# Largest universe for which the commutative majority search enumerates all
# candidate tables.
COMMUTATIVECAP = 3

# CONGRUENCES
# Strategy for listing congruences. Choose from "exhaustive" (filter every
# partition), "principal" (join principal congruences) or "auto" (exhaustive
# up to EXHAUSTIVECONGRUENCE elements, principal above).
CONGRUENCESTRATEGY = "auto"
# Largest universe on which "auto" filters all partitions.
EXHAUSTIVECONGRUENCE = 6

# SAMPLING
# Seed for every sampled property sweep.
SEED = 0
# Number of random structures drawn per universe size in sampled sweeps.
SAMPLES = 10000

# LOGGING
# Level for the standard logging module; one of "DEBUG", "INFO", "WARNING",
# "ERROR".
LOGLEVEL = "WARNING"
# Back-end for run records written by Logfile. Choose either "tsv" (tab
# separated values) or "json" (one object per line).
LOGTYPE = "tsv"
# Name of the run-record file, without extension.
LOGFILENAME = "pymajority"
