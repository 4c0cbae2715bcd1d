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

CLOSURE_VIOLATION = "closure-violation"
HOMOMORPHISM_VIOLATION = "homomorphism-violation"
IDENTITY_VIOLATION = "identity-violation"
SEARCH_CERTIFICATE = "search-certificate"

KINDS = [CLOSURE_VIOLATION, HOMOMORPHISM_VIOLATION, IDENTITY_VIOLATION,
         SEARCH_CERTIFICATE]

FOUND = "found"
NONE = "none"
YES = "yes"
NO = "no"
UNDECIDED = "undecided"


class Witness:

    """A concrete assignment that shows why a check failed or succeeded"""

    def __init__(self, kind, assignment, conclusion, premises=(),
                 relation=None, premise_labels=None, conclusion_labels=None):

        """Initializes a Witness

        arguments
        kind        --    one of KINDS
        assignment    --    a dict mapping variable or slot names to element
                    indices
        conclusion    --    the tuple that failed or was produced

        keyword arguments
        premises    --    tuple of premise tuples (default = ())
        relation    --    name of the relation involved, if any
                    (default = None)
        premise_labels    --    premises written with element labels
                    (default = None)
        conclusion_labels    --    conclusion written with element
                    labels (default = None)
        """

        if kind not in KINDS:
            raise ValueError(
                "Error in witness.Witness.__init__: kind {} not recognized; use one of {}".format(
                    kind, KINDS))
        self.kind = kind
        self.assignment = dict(assignment)
        self.conclusion = tuple(conclusion)
        self.premises = tuple(tuple(p) for p in premises)
        self.relation = relation
        self.premise_labels = premise_labels
        self.conclusion_labels = conclusion_labels

    def __eq__(self, other):

        return isinstance(other, Witness) and self.to_dict() == other.to_dict()

    def __repr__(self):

        return "Witness({!r}, premises={}, conclusion={})".format(
            self.kind, self.premises, self.conclusion)

    def to_dict(self):

        d = {
            "kind": self.kind,
            "assignment": dict(self.assignment),
            "premises": [list(p) for p in self.premises],
            "conclusion": list(self.conclusion),
        }
        if self.relation is not None:
            d["relation"] = self.relation
        if self.premise_labels is not None:
            d["premise_labels"] = list(self.premise_labels)
        if self.conclusion_labels is not None:
            d["conclusion_labels"] = self.conclusion_labels
        return d

    def describe(self):

        """Returns a one-line human readable account of the witness"""

        if self.premise_labels is not None:
            prem = ", ".join(self.premise_labels)
        else:
            prem = ", ".join(str(p) for p in self.premises)
        if self.conclusion_labels is not None:
            concl = self.conclusion_labels
        else:
            concl = str(self.conclusion)
        rel = "" if self.relation is None else " [{}]".format(self.relation)
        return "{}{}: {} => {}".format(self.kind, rel, prem, concl)


class SearchOutcome:

    """Result of a table search or a term decision"""

    def __init__(self, status, table=None, nodes=0, complete=True):

        """Initializes a SearchOutcome

        arguments
        status        --    "found", "none" or "undecided" for table
                    searches; "yes", "no" or "undecided" for term
                    decisions

        keyword arguments
        table        --    the OperationTable found, if any (default = None)
        nodes        --    number of search nodes or candidates examined
                    (default = 0)
        complete    --    False when the answer rests on an unfinished
                    enumeration (default = True)
        """

        if status not in [FOUND, NONE, YES, NO, UNDECIDED]:
            raise ValueError(
                "Error in witness.SearchOutcome.__init__: unknown status {}".format(status))
        self.status = status
        self.table = table
        self.nodes = nodes
        self.complete = complete

    @property
    def succeeded(self):

        return self.status in [FOUND, YES]

    def __repr__(self):

        return "SearchOutcome({!r}, nodes={})".format(self.status, self.nodes)

    def certificate(self):

        """Returns the search certificate as a Witness"""

        values = () if self.table is None else tuple(self.table.flat())
        return Witness(
            SEARCH_CERTIFICATE,
            {"nodes": self.nodes, "complete": int(self.complete)},
            values)

    def to_dict(self):

        d = {"status": self.status, "nodes": self.nodes,
             "complete": self.complete}
        if self.table is not None:
            d["table"] = {"arity": self.table.arity,
                          "values": list(self.table.flat())}
        return d
