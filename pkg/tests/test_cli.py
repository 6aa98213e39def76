# -*- encoding: utf-8 -*-
#
# The MIT License (MIT)
#
# Copyright (c) 2026 The ecc-spectra authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.
#

import json

import pytest

from eccspectra.cli import (
    EXIT_ERROR, EXIT_OK, EXIT_SCOPE, EXIT_USAGE, main
)

def test_spectrum_json(capsys):
    assert main(["spectrum", "-f", "json", "1,2,1,2"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)

    assert data["sequence"] == [1, 2, 1, 2]
    assert data["inertia"] == [3, 0, 3]
    assert len(data["verdicts"]) == 13
    assert all(v["verdict"] == "PASS" for v in data["verdicts"])
#end function

def test_spectrum_fails_when_a_checker_fails(capsys, monkeypatch):
    from eccspectra import theorems

    monkeypatch.setattr(
        theorems, "predicted_multiplicities", lambda seq: (-1, -1)
    )

    assert main(["spectrum", "-f", "json", "1,2,1,2"]) == EXIT_ERROR
    data = json.loads(capsys.readouterr().out)

    failed = [v["theorem"] for v in data["verdicts"] if v["verdict"] == "FAIL"]
    assert "exact-multiplicities" in failed
#end function

def test_spectrum_of_complete_split_graph(capsys):
    assert main(["spectrum", "1,1"]) == EXIT_OK
    assert "k1-closed-form" in capsys.readouterr().out

def test_odd_length_needs_no_checks(capsys):
    assert main(["spectrum", "1,2,1"]) == EXIT_SCOPE
    assert "--no-checks" in capsys.readouterr().err

    assert main(["spectrum", "--no-checks", "1,2,1"]) == EXIT_OK
#end function

@pytest.mark.parametrize("argv", [
    ["spectrum", "1,x,2"],
    ["spectrum", "-f", "yaml", "1,2"],
    ["verify", "--trials", "0"],
    ["verify", "--seed", "abc"],
    ["matrix", "--which", "laplacian", "1,1"],
    ["dot", "--which", "tree", "1,1"],
    ["frobnicate"],
    [],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == EXIT_USAGE

def test_command_help_exits_cleanly(capsys):
    with pytest.raises(SystemExit) as e:
        main(["spectrum", "-h"])
    assert e.value.code == EXIT_OK
    assert "Usage: ecc-spectra spectrum" in capsys.readouterr().out
#end function

def test_missing_argument_exits_with_usage(capsys):
    with pytest.raises(SystemExit) as e:
        main(["matrix"])
    assert e.value.code == EXIT_USAGE

def test_matrix_csv(capsys):
    assert main(["matrix", "1,1"]) == EXIT_OK
    assert capsys.readouterr().out == "0,1\n1,0\n"

def test_matrix_outside_main_scope(capsys):
    assert main(["matrix", "-w", "q2k", "1,1"]) == EXIT_SCOPE

def test_dot_eccentric_graph(capsys):
    assert main(["dot", "--which", "eccentric", "1,1,1,2"]) == EXIT_OK
    out = capsys.readouterr().out

    assert out.startswith('graph "C(1,1,1,2)" {\n')
    assert "    p1_1 -- p3_1;\n" in out
    assert "    p4_1 -- p4_2;\n" in out
#end function

def test_table(capsys):
    assert main(["table"]) == EXIT_OK
    out = capsys.readouterr().out

    assert "11 of 11 rows match" in out
    assert "6.1723" in out
    assert "note: erratum" in out
#end function

def test_verify_is_reproducible(capsys):
    argv = ["verify", "-n", "2", "--max-k", "3", "--max-alpha", "3",
            "-s", "7", "-j", "1"]

    assert main(argv) == EXIT_OK
    first = capsys.readouterr().out
    assert main(argv) == EXIT_OK
    second = capsys.readouterr().out

    assert first == second
    assert "verify: 2 trials, seed 7" in first
#end function

def test_verify_reports_first_failure(capsys, monkeypatch):
    from eccspectra import theorems

    monkeypatch.setattr(
        theorems, "predicted_multiplicities", lambda seq: (-1, -1)
    )
    argv = ["verify", "-n", "1", "--max-k", "2", "--max-alpha", "2", "-j", "1"]

    assert main(argv) == EXIT_ERROR
    out = capsys.readouterr().out
    assert "first failure:" in out
    assert '"verdict": "FAIL"' in out
#end function

def test_bad_log_level_environment(capsys, monkeypatch):
    monkeypatch.setenv("ECC_SPECTRA_LOG_LEVEL", "loud")
    assert main(["spectrum", "1,1"]) == EXIT_ERROR
    assert "ECC_SPECTRA_LOG_LEVEL" in capsys.readouterr().err
#end function
