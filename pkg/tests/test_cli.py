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

import json
import os
import shutil

import pytest

from pymajority import settings
from pymajority.cli import FAILS, HOLDS, INPUT_ERROR, UNDECIDED_EXIT, main
from pymajority.logfile import Logfile


@pytest.fixture
def run(capsys):

    def run(*argv):
        code = main([str(a) for a in argv] + ["--json"])
        report = json.loads(capsys.readouterr().out)
        assert report["exit_code"] == code
        return code, report
    return run


@pytest.fixture
def data(data_dir):

    def path(name):
        return os.path.join(data_dir, name + ".txt")
    return path


def test_classify(run, data):

    code, report = run("classify", data("counterexample"), "--verify-witness")
    assert code == FAILS
    assert report["verdict"] == {"maltsev": True, "majority": False, "witness_verified": True}
    (entry,) = report["witnesses"]
    assert entry["name"] == "majority"
    assert entry["witness"]["premise_labels"] == ["((1,0,0),(1,1,0),(0,1,0))"]
    assert entry["witness"]["conclusion_labels"] == "(0,1,0)"
    assert len(report["inputs"]["structure"]) == 64


def test_classify_text(capsys, data):

    assert main(["classify", data("counterexample")]) == FAILS
    out = capsys.readouterr().out
    assert out.startswith("classify: exit 1\n")
    assert "  majority: false\n" in out
    assert "witness majority: homomorphism-violation [R]: ((1,0,0),(1,1,0),(0,1,0)) => (0,1,0)" in out


def test_check_closed(run, data):

    code, report = run("check-closed", data("counterexample"), "majority", "--verify-witness")
    assert code == FAILS
    assert report["verdict"] == {"relation": "R", "strictly_closed": False, "witness_verified": True}
    assert report["witnesses"][0]["witness"]["conclusion"] == [0, 1, 0]
    code, report = run("check-closed", data("diagonal"), "maltsev", "--strategy", "assign")
    assert code == HOLDS
    assert report["witnesses"] == []


def test_check_closed_with_matrix_file(run, data, tmp_path):

    path = tmp_path / "maltsev.txt"
    path.write_text("matrix 2 4\nx1 x1 x2 | x2\ny2 y1 y1 | y2\n")
    code, _ = run("check-closed", data("diagonal"), path)
    assert code == HOLDS


def test_bad_input(run, data, tmp_path):

    code, report = run("check-closed", data("counterexample"), "maltsev")
    assert code == INPUT_ERROR
    assert "error" in report["verdict"]
    code, _ = run("classify", tmp_path / "missing.txt")
    assert code == INPUT_ERROR
    bad = tmp_path / "bad.txt"
    bad.write_text("universe 2\nrel R 3\n0 0 5\nend\n")
    code, report = run("classify", bad)
    assert code == INPUT_ERROR
    assert report["verdict"]["error"].startswith("line 3, column 5")


def test_max_universe(run, data):

    code, _ = run("classify", data("counterexample"), "--max-universe", 4)
    assert code == INPUT_ERROR


def test_coreflect(run, tmp_path):

    source = tmp_path / "r.txt"
    source.write_text("universe 2\nrel R 2\n0 0\n0 1\n1 0\nend\n")
    output = tmp_path / "closed.txt"
    code, report = run("coreflect", source, output)
    assert code == HOLDS
    assert report["verdict"]["added"] == 1
    assert output.read_text() == "universe 2\nrel R 2\n0 0\n0 1\n1 0\n1 1\nend\n"


def test_poly(run, data):

    code, report = run("poly", data("diagonal"), "majority", "--verify-witness")
    assert code == HOLDS
    assert report["verdict"]["status"] == "found"
    assert report["verdict"]["witness_verified"]
    assert report["verdict"]["table"].startswith("universe 2\nop p 3\n")
    code, report = run("poly", data("counterexample"), "majority")
    assert (code, report["verdict"]["status"]) == (FAILS, "none")
    code, report = run("poly", data("diagonal"), "maltsev", "--budget", 1)
    assert (code, report["verdict"]["status"]) == (UNDECIDED_EXIT, "undecided")


def test_terms(run, data):

    code, report = run("terms", data("z2"), "maltsev")
    assert code == HOLDS
    assert report["verdict"]["table"] == "universe 2\nop p 3\n0 1\n1 0\n1 0\n0 1\n"
    code, report = run("terms", data("z2"), "majority")
    assert code == FAILS
    assert report["verdict"]["nodes"] == 8
    code, _ = run("terms", data("lattice2"), "majority", "--budget", 3)
    assert code == UNDECIDED_EXIT


def test_congruences(run, data):

    code, report = run("congruences", data("z4"), "--checks")
    assert code == HOLDS
    assert report["verdict"] == {
        "congruences": ["{0}{1}{2}{3}", "{0,2}{1,3}", "{0,1,2,3}"],
        "distributive": True, "permutable": True}


def test_commutative_majority(run):

    code, report = run("commutative-majority", 3)
    assert code == FAILS
    assert report["verdict"]["candidates"] == 729
    code, _ = run("commutative-majority", 4)
    assert code == INPUT_ERROR


def test_demo_list(run):

    code, report = run("paper-demos", "--list")
    assert code == HOLDS
    names = [d["name"] for d in report["verdict"]["demos"]]
    assert names[0] == "counterexample"
    assert "commutative-majority" in names


def test_demos_are_deterministic(capsys):

    argv = ["paper-demos", "--json", "--only", "counterexample", "term-separation",
            "commutative-majority"]
    outputs = []
    for _ in range(2):
        assert main(argv) == HOLDS
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    assert json.loads(outputs[0])["verdict"]["failed"] == []


def test_demos_notice_edited_data(run, data_dir, tmp_path):

    copy = tmp_path / "data"
    shutil.copytree(data_dir, str(copy))
    path = copy / "counterexample.txt"
    path.write_text(path.read_text().replace("0 0 0\n", "0 0 0\n0 1 0\n"))
    code, report = run("paper-demos", "--only", "counterexample", "--data-dir", copy)
    assert code == FAILS
    assert report["verdict"]["failed"] == ["counterexample"]


def test_demo_logfile(run, tmp_path):

    name = str(tmp_path / "run")
    code, _ = run("paper-demos", "--only", "counterexample", "--logfile", name)
    assert code == HOLDS
    with open(name + ".tsv") as f:
        lines = f.read().splitlines()
    assert lines[0] == "name\ttopic\tpassed\telapsed_ms\tdetail"
    assert lines[1].startswith("counterexample\trelational objects\tTrue\t")


def test_json_logfile(tmp_path):

    settings.LOGTYPE = "json"
    log_ = Logfile(filename=str(tmp_path / "run"), header=["name", "passed"])
    log_.write(["z4", True])
    log_.close()
    with open(str(tmp_path / "run.jsonl")) as f:
        assert f.read() == "{\"name\":\"z4\",\"passed\":true}\n"
    with pytest.raises(ValueError):
        Logfile(logtype="xml")


def test_settings():

    settings.SEARCHBUDGET = 5
    assert settings.SEARCHBUDGET == 5
    with pytest.raises(AttributeError):
        settings.SEARCHBUGDET = 5
    with pytest.raises(AttributeError):
        settings.NOSUCHSETTING


@pytest.mark.parametrize("argv", [
    ["commutative-majority", "three"],
    ["classify"],
    ["check-closed", "s.txt", "majority", "--strategy", "guess"],
    ["paper-demos", "--budget", "10"],
    ["no-such-command"],
])
def test_usage_errors_are_input_errors(argv, capsys):

    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == INPUT_ERROR
    assert "error:" in capsys.readouterr().err


def test_flags_do_not_outlive_the_command(run, data):

    before = (settings.MAXUNIVERSE, settings.SEED)
    code, _ = run("classify", data("counterexample"), "--max-universe", 4, "--seed", 9)
    assert code == INPUT_ERROR
    assert (settings.MAXUNIVERSE, settings.SEED) == before
    code, _ = run("classify", data("counterexample"))
    assert code == FAILS
