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

# Command-line surface. Exit codes: 0 the property holds or a table was
# found, 1 it fails or nothing was found, 2 undecided within the budget,
# 3 bad input.

import argparse
import logging as log
import sys

from pymajority import settings, version
from pymajority._misc.misc import stable_json
from pymajority.algebra import commutative_majority_search, has_majority_term, \
    has_maltsev_term, preserves, verify_majority, verify_maltsev
from pymajority.congruence import congruences, lattice_checks
from pymajority.demos import DemoContext, list_demos, run_demos
from pymajority.errors import PyMajorityError
from pymajority.libformat import format_table, input_digest, load_algebra, load_matrix, \
    load_structure, save_structure
from pymajority.matrix import is_strictly_closed, replay_witness
from pymajority.polymorphism import polymorphism_search
from pymajority.relobjects import MAJORITY, MALTSEV, classify, majority_domain, \
    maltsev_coreflection, maltsev_domain
from pymajority.structures import replay_homomorphism_witness
from pymajority.witness import FOUND, NO, NONE, UNDECIDED, YES

HOLDS = 0
FAILS = 1
UNDECIDED_EXIT = 2
INPUT_ERROR = 3

STATUS_EXIT = {FOUND: HOLDS, YES: HOLDS, NONE: FAILS, NO: FAILS, UNDECIDED: UNDECIDED_EXIT}


class RunReport:

    """What one command found, in a form that prints the same every run"""

    def __init__(self, command, inputs=None, verdict=None, witnesses=None, exit_code=HOLDS):

        """Initializes a RunReport

        arguments
        command        --    name of the subcommand

        keyword arguments
        inputs        --    dict mapping input roles to sha256 digests of
                    their canonical text (default = None)
        verdict        --    dict with the command's result (default = None)
        witnesses    --    list of (name, Witness) pairs (default = None)
        exit_code    --    0, 1, 2 or 3 (default = 0)
        """

        self.command = command
        self.inputs = {} if inputs is None else inputs
        self.verdict = {} if verdict is None else verdict
        self.witnesses = [] if witnesses is None else witnesses
        self.exit_code = exit_code

    def to_dict(self):

        return {
            "command": self.command,
            "inputs": self.inputs,
            "verdict": self.verdict,
            "witnesses": [{"name": name, "witness": w.to_dict()} for name, w in self.witnesses],
            "exit_code": self.exit_code,
        }

    def render(self):

        """Returns the human readable report"""

        out = ["{}: exit {}".format(self.command, self.exit_code)]
        for role, dig in sorted(self.inputs.items()):
            out.append("  input {} sha256:{}".format(role, dig))
        for key, value in sorted(self.verdict.items()):
            if isinstance(value, str) and "\n" in value:
                out.append("  {}:".format(key))
                out.extend("    " + line for line in value.rstrip("\n").split("\n"))
            elif isinstance(value, list):
                out.append("  {}:".format(key))
                out.extend("    {}".format(_render_item(v)) for v in value)
            else:
                out.append("  {}: {}".format(key, _render_item(value)))
        for name, w in self.witnesses:
            out.append("  witness {}: {}".format(name, w.describe()))
        return "\n".join(out) + "\n"


def _render_item(value):

    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, dict):
        return " ".join("{}={}".format(k, _render_item(v)) for k, v in sorted(value.items()))
    return str(value)


# # # # #
# commands

def cmd_check_closed(args):

    X = load_structure(args.structure)
    M = load_matrix(args.matrix)
    if args.relation is None:
        name, rel = X.relation_of()
    else:
        name, rel = args.relation, X.relation(args.relation)
    holds, witness = is_strictly_closed(rel, M, strategy=args.strategy)
    verdict = {"relation": name, "strictly_closed": holds}
    if witness is not None and args.verify_witness:
        verdict["witness_verified"] = replay_witness(rel, M, witness)
    return RunReport(
        "check-closed",
        inputs={"structure": input_digest(X), "matrix": input_digest(M)},
        verdict=verdict,
        witnesses=[] if witness is None else [("closure", witness)],
        exit_code=HOLDS if holds else FAILS)


def cmd_classify(args):

    S = load_structure(args.structure)
    verdict = classify(S)
    out = {"maltsev": verdict.is_maltsev_object, "majority": verdict.is_majority_object}
    if args.verify_witness and verdict.witnesses:
        domains = {MALTSEV: maltsev_domain, MAJORITY: majority_domain}
        replayed = []
        for kind, w in sorted(verdict.witnesses.items()):
            domain, f = domains[kind](S)
            replayed.append(replay_homomorphism_witness(f, domain, S, w))
        out["witness_verified"] = all(replayed)
    holds = verdict.is_maltsev_object and verdict.is_majority_object
    return RunReport(
        "classify", inputs={"structure": input_digest(S)}, verdict=out,
        witnesses=sorted(verdict.witnesses.items()),
        exit_code=HOLDS if holds else FAILS)


def cmd_coreflect(args):

    S = load_structure(args.structure)
    closed = maltsev_coreflection(S, mode=args.mode)
    save_structure(closed, args.output)
    _, before = S.relation_of()
    _, after = closed.relation_of()
    return RunReport(
        "coreflect", inputs={"structure": input_digest(S)},
        verdict={"added": len(after) - len(before), "output": input_digest(closed)})


def cmd_poly(args):

    X = load_structure(args.structure)
    outcome = polymorphism_search(X, args.kind, budget=args.budget)
    verdict = outcome.to_dict()
    if outcome.table is not None:
        verdict["table"] = format_table(outcome.table)
        if args.verify_witness:
            verify = verify_majority if args.kind == MAJORITY else verify_maltsev
            verdict["witness_verified"] = verify(outcome.table)[0] and preserves(outcome.table, X)[0]
    return RunReport(
        "poly", inputs={"structure": input_digest(X)}, verdict=verdict,
        exit_code=STATUS_EXIT[outcome.status])


def cmd_terms(args):

    A = load_algebra(args.algebra)
    if args.kind == MAJORITY:
        outcome = has_majority_term(A, budget=args.budget)
    else:
        outcome = has_maltsev_term(A, budget=args.budget)
    verdict = outcome.to_dict()
    if outcome.table is not None:
        verdict["table"] = format_table(outcome.table)
    return RunReport(
        "terms", inputs={"algebra": input_digest(A)}, verdict=verdict,
        exit_code=STATUS_EXIT[outcome.status])


def cmd_congruences(args):

    A = load_algebra(args.algebra)
    congs = congruences(A, strategy=args.strategy)
    verdict = {"congruences": [str(c) for c in congs]}
    witnesses = []
    exit_code = HOLDS
    if args.checks:
        report = lattice_checks(congs)
        verdict["distributive"] = report.distributive
        verdict["permutable"] = report.permutable
        witnesses = sorted(report.witnesses.items())
        if not (report.distributive and report.permutable):
            exit_code = FAILS
    return RunReport(
        "congruences", inputs={"algebra": input_digest(A)}, verdict=verdict,
        witnesses=witnesses, exit_code=exit_code)


def cmd_commutative_majority(args):

    outcome = commutative_majority_search(args.n)
    verdict = outcome.to_dict()
    verdict["candidates"] = verdict.pop("nodes")
    return RunReport(
        "commutative-majority", verdict=verdict, exit_code=STATUS_EXIT[outcome.status])


def cmd_paper_demos(args):

    if args.list:
        return RunReport("paper-demos", verdict={"demos": list_demos()})
    ctx = DemoContext(data_dir=args.data_dir, seed=args.seed)
    results = run_demos(ctx, names=args.only, logfile=args.logfile)
    failed = [r["name"] for r in results if not r["passed"]]
    return RunReport(
        "paper-demos",
        verdict={"demos": results, "passed": len(results) - len(failed), "failed": failed},
        exit_code=FAILS if failed else HOLDS)


# # # # #
# argument parsing

class CommandParser(argparse.ArgumentParser):

    """An ArgumentParser whose usage errors exit with INPUT_ERROR"""

    def error(self, message):

        self.print_usage(sys.stderr)
        self.exit(INPUT_ERROR, "{}: error: {}\n".format(self.prog, message))


def build_parser():

    common = CommandParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the stable JSON report")
    common.add_argument("--max-universe", type=int, default=None,
                        help="cap on constructed universes (default settings.MAXUNIVERSE)")
    common.add_argument("--verify-witness", action="store_true",
                        help="replay every reported witness through the library")
    common.add_argument("--seed", type=int, default=None, help="seed for sampled sweeps")
    common.add_argument("--verbose", "-v", action="store_true", help="log debug messages")

    searching = CommandParser(add_help=False)
    searching.add_argument("--budget", type=int, default=None,
                           help="node budget for searches, table budget for term clones")

    parser = CommandParser(
        prog="pymajority", description="Finite models for majority and Mal'tsev conditions")
    parser.add_argument("--version", action="version", version="%(prog)s " + version)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-closed", parents=[common], help="is a relation strictly M-closed")
    p.add_argument("structure")
    p.add_argument("matrix", help="matrix file, or majority/maltsev/unital/subtractive")
    p.add_argument("--relation", default=None, help="relation name (default: the only one)")
    p.add_argument("--strategy", choices=["unify", "assign"], default=None)
    p.set_defaults(func=cmd_check_closed)

    p = sub.add_parser("classify", parents=[common], help="Mal'tsev and majority object verdicts")
    p.add_argument("structure")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("coreflect", parents=[common], help="write the Mal'tsev coreflection")
    p.add_argument("structure")
    p.add_argument("output")
    p.add_argument("--mode", choices=["chaotic", "single"], default="chaotic")
    p.set_defaults(func=cmd_coreflect)

    p = sub.add_parser("poly", parents=[common, searching], help="search a ternary polymorphism")
    p.add_argument("structure")
    p.add_argument("kind", choices=[MAJORITY, MALTSEV])
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("terms", parents=[common, searching], help="decide a majority or Mal'tsev term")
    p.add_argument("algebra")
    p.add_argument("kind", choices=[MAJORITY, MALTSEV])
    p.set_defaults(func=cmd_terms)

    p = sub.add_parser("congruences", parents=[common], help="list congruences")
    p.add_argument("algebra")
    p.add_argument("--checks", action="store_true", help="check distributivity and permutability")
    p.add_argument("--strategy", choices=["exhaustive", "principal", "auto"], default=None)
    p.set_defaults(func=cmd_congruences)

    p = sub.add_parser("commutative-majority", parents=[common],
                       help="search commutative majority tables")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_commutative_majority)

    p = sub.add_parser("paper-demos", parents=[common], help="run the demo suite")
    p.add_argument("--list", action="store_true", help="list the demos without running them")
    p.add_argument("--only", nargs="+", default=None, help="run only the named demos")
    p.add_argument("--data-dir", default=None, help="read the data files from here")
    p.add_argument("--logfile", default=None, help="write a run record (name without extension)")
    p.set_defaults(func=cmd_paper_demos)

    return parser


def main(argv=None):

    args = build_parser().parse_args(argv)
    log.basicConfig(
        level=log.DEBUG if args.verbose else settings.LOGLEVEL,
        format="%(levelname)s %(name)s: %(message)s")
    overrides = {"MAXUNIVERSE": args.max_universe, "SEED": args.seed}
    overrides = {key: value for key, value in overrides.items() if value is not None}
    saved = {key: getattr(settings, key) for key in overrides}
    try:
        for key, value in overrides.items():
            setattr(settings, key, value)
        report = args.func(args)
    except PyMajorityError as e:
        log.error("%s", e)
        report = RunReport(args.command, verdict={"error": str(e)}, exit_code=INPUT_ERROR)
    finally:
        for key, value in saved.items():
            setattr(settings, key, value)
    if args.json:
        sys.stdout.write(stable_json(report.to_dict(), indent=2) + "\n")
    else:
        sys.stdout.write(report.render())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
